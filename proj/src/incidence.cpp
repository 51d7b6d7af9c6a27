#include "tangency/incidence.hpp"

#include "tangency/deformation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <set>
#include <thread>

namespace tangency {

namespace {

using u64 = std::uint64_t;

u64 pow_mod(u64 a, u64 e, u64 q) {
    u64 r = 1 % q;
    a %= q;
    while (e) {
        if (e & 1) r = r * a % q;
        a = a * a % q;
        e >>= 1;
    }
    return r;
}

u64 modulus_of(const HyperForm<Fp>& f) {
    for (const auto& [e, c] : f.terms())
        if (c.is_typed()) return c.modulus();
    throw PreconditionError("cannot infer the field: form has no typed F_q coefficient");
}

// Dense-ish view of a form with coefficients reduced mod q.
struct ModForm {
    int n = 0;
    int d = 0;
    u64 q = 0;
    std::vector<std::vector<int>> exps;
    std::vector<u64> coeffs;

    explicit ModForm(const HyperForm<Fp>& f, u64 modulus) : n(f.ambient()), d(f.degree()), q(modulus) {
        for (const auto& [e, c] : f.terms()) {
            exps.push_back(e);
            coeffs.push_back((c + Fp(0, q)).value());
        }
    }

    // powers[i][e] = x_i^e
    void powers(const std::vector<u64>& x, std::vector<std::vector<u64>>& pw) const {
        pw.assign(static_cast<std::size_t>(n + 1), std::vector<u64>(static_cast<std::size_t>(d + 1), 1));
        for (int i = 0; i <= n; ++i)
            for (int e = 1; e <= d; ++e)
                pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] =
                    pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(e - 1)] * x[static_cast<std::size_t>(i)] % q;
    }

    u64 evaluate(const std::vector<u64>& x) const {
        std::vector<std::vector<u64>> pw;
        powers(x, pw);
        u64 acc = 0;
        for (std::size_t t = 0; t < coeffs.size(); ++t) {
            u64 m = coeffs[t];
            for (int i = 0; i <= n; ++i) {
                const int e = exps[t][static_cast<std::size_t>(i)];
                if (e) m = m * pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] % q;
            }
            acc += m;
            if (acc >= q) acc -= q;
        }
        return acc;
    }
};

// Calls fn(x) for every normalized point of P^n(F_q) (first nonzero entry 1).
template <class Fn>
void for_each_projective_point(int n, u64 q, Fn&& fn) {
    std::vector<u64> x(static_cast<std::size_t>(n + 1), 0);
    for (int lead = 0; lead <= n; ++lead) {
        std::fill(x.begin(), x.end(), 0);
        x[static_cast<std::size_t>(lead)] = 1;
        // odometer over coordinates lead+1..n
        for (;;) {
            fn(x);
            int pos = n;
            while (pos > lead) {
                auto& c = x[static_cast<std::size_t>(pos)];
                if (++c < q) break;
                c = 0;
                --pos;
            }
            if (pos == lead) break;
        }
    }
}

Vec<Fp> to_vec(const std::vector<u64>& x, u64 q) {
    Vec<Fp> v(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) v(static_cast<Eigen::Index>(i)) = Fp(static_cast<std::int64_t>(x[i]), q);
    return v;
}

// Every line of P^n(F_q) as an RREF pair (u, w): u has its leading 1 in
// column c1, w in column c2 > c1, and u is zero in column c2.
template <class Fn>
void for_each_line(int n, u64 q, Fn&& fn) {
    const auto size = static_cast<std::size_t>(n + 1);
    for (int c1 = 0; c1 <= n; ++c1)
        for (int c2 = c1 + 1; c2 <= n; ++c2) {
            std::vector<int> u_free;
            std::vector<int> w_free;
            for (int j = c1 + 1; j <= n; ++j)
                if (j != c2) u_free.push_back(j);
            for (int j = c2 + 1; j <= n; ++j) w_free.push_back(j);
            const std::size_t nfree = u_free.size() + w_free.size();
            std::vector<u64> digits(nfree, 0);
            for (;;) {
                std::vector<u64> u(size, 0);
                std::vector<u64> w(size, 0);
                u[static_cast<std::size_t>(c1)] = 1;
                w[static_cast<std::size_t>(c2)] = 1;
                for (std::size_t i = 0; i < u_free.size(); ++i) u[static_cast<std::size_t>(u_free[i])] = digits[i];
                for (std::size_t i = 0; i < w_free.size(); ++i)
                    w[static_cast<std::size_t>(w_free[i])] = digits[u_free.size() + i];
                fn(u, w);
                std::size_t pos = 0;
                while (pos < nfree) {
                    if (++digits[pos] < q) break;
                    digits[pos] = 0;
                    ++pos;
                }
                if (pos == nfree) break;
            }
        }
}

// Taylor coefficients of F(p + t v): G_r(v) = sum_beta coeff(beta, p) v^beta.
struct PolarTerm {
    std::vector<std::pair<int, int>> beta;  // sparse (coordinate, exponent)
    // contributions: (term index, multiplier, exponent vector m - beta)
    std::vector<std::pair<std::size_t, u64>> sources;
    std::vector<std::vector<int>> residual;
};

struct PolarStructure {
    int max_order = 0;                            // highest r needed
    std::vector<std::vector<PolarTerm>> by_order;  // index r

    PolarStructure(const ModForm& f, int r_max) : max_order(r_max), by_order(static_cast<std::size_t>(r_max + 1)) {
        // binomials up to d
        std::vector<std::vector<u64>> binom(static_cast<std::size_t>(f.d + 1));
        for (int a = 0; a <= f.d; ++a) {
            binom[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(a + 1), 1);
            for (int b = 1; b < a; ++b)
                binom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    (binom[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
                     binom[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)]) % f.q;
        }
        for (int r = 1; r <= r_max; ++r) {
            for (const auto& beta : monomials(f.n, r)) {
                PolarTerm pt;
                for (int i = 0; i <= f.n; ++i)
                    if (beta[static_cast<std::size_t>(i)]) pt.beta.emplace_back(i, beta[static_cast<std::size_t>(i)]);
                for (std::size_t t = 0; t < f.coeffs.size(); ++t) {
                    const auto& m = f.exps[t];
                    u64 mult = f.coeffs[t];
                    bool fits = true;
                    std::vector<int> res(m.size());
                    for (std::size_t i = 0; i < m.size(); ++i) {
                        if (m[i] < beta[i]) {
                            fits = false;
                            break;
                        }
                        res[i] = m[i] - beta[i];
                        mult = mult * binom[static_cast<std::size_t>(m[i])][static_cast<std::size_t>(beta[i])] % f.q;
                    }
                    if (!fits || mult == 0) continue;
                    pt.sources.emplace_back(t, mult);
                    pt.residual.push_back(std::move(res));
                }
                if (!pt.sources.empty()) by_order[static_cast<std::size_t>(r)].push_back(std::move(pt));
            }
        }
    }
};

class DirectionCounter {
   public:
    DirectionCounter(const ModForm& f, const PolarStructure& polar, const std::vector<u64>& inverses)
        : f_(f), polar_(polar), inv_(inverses), q_(f.q) {}

    u64 count(const std::vector<u64>& p) {
        const int n = f_.n;
        int pivot = 0;
        while (p[static_cast<std::size_t>(pivot)] == 0) ++pivot;
        free_.clear();
        for (int i = 0; i <= n; ++i)
            if (i != pivot) free_.push_back(i);

        // Coefficients of G_r at p.
        f_.powers(p, ppow_);
        coeffs_.assign(polar_.by_order.size(), {});
        for (std::size_t r = 1; r < polar_.by_order.size(); ++r) {
            for (const auto& pt : polar_.by_order[r]) {
                u64 acc = 0;
                for (std::size_t s = 0; s < pt.sources.size(); ++s) {
                    u64 m = pt.sources[s].second;
                    const auto& res = pt.residual[s];
                    for (std::size_t i = 0; i < res.size(); ++i)
                        if (res[i]) m = m * ppow_[i][static_cast<std::size_t>(res[i])] % q_;
                    acc = (acc + m) % q_;
                }
                coeffs_[r].push_back(acc);
            }
        }
        g1_.assign(static_cast<std::size_t>(n + 1), 0);
        if (polar_.max_order >= 1) {
            for (std::size_t b = 0; b < polar_.by_order[1].size(); ++b)
                g1_[static_cast<std::size_t>(polar_.by_order[1][b].beta[0].first)] = coeffs_[1][b];
        }

        v_.assign(static_cast<std::size_t>(n + 1), 0);
        u64 total = 0;
        const int nf = static_cast<int>(free_.size());
        for (int lead = 0; lead < nf; ++lead) {
            for (int i = 0; i < nf; ++i) v_[static_cast<std::size_t>(free_[static_cast<std::size_t>(i)])] = 0;
            v_[static_cast<std::size_t>(free_[static_cast<std::size_t>(lead)])] = 1;
            total += recurse(lead + 1, g1_[static_cast<std::size_t>(free_[static_cast<std::size_t>(lead)])]);
        }
        return total;
    }

   private:
    // Directions with free_[lead] = 1 and free_[idx..] still open; `sum` is
    // G_1 over the coordinates fixed so far.
    u64 recurse(int idx, u64 sum) {
        const int nf = static_cast<int>(free_.size());
        if (idx == nf) return sum == 0 && higher_vanish() ? 1 : 0;
        const auto c = static_cast<std::size_t>(free_[static_cast<std::size_t>(idx)]);
        const u64 a = g1_[c];
        if (idx == nf - 1) {
            // G_1 is linear in the last coordinate.
            if (a != 0) {
                v_[c] = (q_ - sum) % q_ * inverse(a) % q_;
                return higher_vanish() ? 1 : 0;
            }
            if (sum != 0) return 0;
            if (polar_.max_order < 2) return q_;
            u64 hits = 0;
            for (u64 x = 0; x < q_; ++x) {
                v_[c] = x;
                hits += higher_vanish() ? 1 : 0;
            }
            return hits;
        }
        u64 total = 0;
        for (u64 x = 0; x < q_; ++x) {
            v_[c] = x;
            total += recurse(idx + 1, (sum + a * x) % q_);
        }
        return total;
    }

    u64 inverse(u64 a) const { return inv_.empty() ? pow_mod(a, q_ - 2, q_) : inv_[a]; }

    bool higher_vanish() {
        if (polar_.max_order < 2) return true;
        const int top = polar_.max_order;
        vpow_.assign(v_.size(), std::vector<u64>(static_cast<std::size_t>(top + 1), 1));
        for (std::size_t i = 0; i < v_.size(); ++i)
            for (int e = 1; e <= top; ++e)
                vpow_[i][static_cast<std::size_t>(e)] = vpow_[i][static_cast<std::size_t>(e - 1)] * v_[i] % q_;
        for (int r = 2; r <= top; ++r) {
            const auto& terms = polar_.by_order[static_cast<std::size_t>(r)];
            u64 acc = 0;
            for (std::size_t b = 0; b < terms.size(); ++b) {
                u64 m = coeffs_[static_cast<std::size_t>(r)][b];
                if (m == 0) continue;
                for (const auto& [i, e] : terms[b].beta) m = m * vpow_[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] % q_;
                acc = (acc + m) % q_;
            }
            if (acc != 0) return false;
        }
        return true;
    }

    const ModForm& f_;
    const PolarStructure& polar_;
    const std::vector<u64>& inv_;
    u64 q_;
    std::vector<int> free_;
    std::vector<std::vector<u64>> ppow_;
    std::vector<std::vector<u64>> coeffs_;
    std::vector<std::vector<u64>> vpow_;
    std::vector<u64> g1_;
    std::vector<u64> v_;
};

}  // namespace

std::uint64_t projective_size(int m, std::uint64_t q) {
    u64 total = 0;
    u64 pw = 1;
    for (int i = 0; i <= m; ++i) {
        total += pw;
        pw *= q;
    }
    return total;
}

std::uint64_t count_points(const HyperForm<Fp>& f) {
    const u64 q = modulus_of(f);
    const ModForm mf(f, q);
    u64 count = 0;
    for_each_projective_point(f.ambient(), q, [&](const std::vector<u64>& x) {
        if (mf.evaluate(x) == 0) ++count;
    });
    return count;
}

CountRecord count_vk(const HyperForm<Fp>& f, int k, unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    const u64 q = modulus_of(f);
    if (q <= static_cast<u64>(f.degree())) throw PreconditionError("characteristic too small for contact order d");
    if (q >= (1ULL << 31)) throw PreconditionError("count_vk needs q < 2^31");
    if (k < 1) throw PreconditionError("contact order k must be >= 1");
    const ModForm mf(f, q);
    const int n = f.ambient();

    std::vector<std::vector<u64>> points;
    for_each_projective_point(n, q, [&](const std::vector<u64>& x) {
        if (mf.evaluate(x) == 0) points.push_back(x);
    });

    CountRecord rec;
    rec.q = q;
    rec.k = k;
    rec.n = n;
    rec.d = f.degree();

    if (k == 1) {
        // Every line through a point of X meets X there.
        rec.count = static_cast<u64>(points.size()) * projective_size(n - 1, q);
    } else {
        // Contact >= k means Taylor coefficients 1..k-1 vanish; past degree d
        // there is nothing left to check.
        const PolarStructure polar(mf, std::min(k - 1, f.degree()));
        std::vector<u64> inverses;
        if (q <= (1ULL << 22)) {
            inverses.assign(q, 0);
            for (u64 a = 1; a < q; ++a) inverses[a] = pow_mod(a, q - 2, q);
        }
        constexpr std::size_t chunk = 64;
        const std::size_t chunks = (points.size() + chunk - 1) / chunk;
        std::vector<u64> per_chunk(chunks, 0);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            DirectionCounter counter(mf, polar, inverses);
            for (;;) {
                const std::size_t c = next.fetch_add(1);
                if (c >= chunks) return;
                u64 sum = 0;
                const std::size_t end = std::min(points.size(), (c + 1) * chunk);
                for (std::size_t i = c * chunk; i < end; ++i) sum += counter.count(points[i]);
                per_chunk[c] = sum;
            }
        };
        const unsigned nthreads = std::max(1u, threads);
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        for (u64 c : per_chunk) rec.count += c;
    }
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::uint64_t count_vk_bruteforce(const HyperForm<Fp>& f, int k) {
    const u64 q = modulus_of(f);
    const int n = f.ambient();
    u64 total = 0;
    for_each_line(n, q, [&](const std::vector<u64>& u, const std::vector<u64>& w) {
        // Points on the line: u, and w + lambda*u.
        std::vector<std::vector<u64>> pts{u};
        for (u64 lambda = 0; lambda < q; ++lambda) {
            std::vector<u64> x(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) x[i] = (w[i] + lambda * u[i]) % q;
            pts.push_back(std::move(x));
        }
        for (std::size_t idx = 0; idx < pts.size(); ++idx) {
            const auto& x = pts[idx];
            const auto& y = idx == 0 ? w : u;
            const LineParam<Fp> line = LineParam<Fp>::through(to_vec(x, q), to_vec(y, q));
            const ContactOrder c = contact_order(f, line);
            if (c.contained() || *c.order >= k) ++total;
        }
    });
    return total;
}

std::vector<std::pair<Vec<Fp>, Vec<Fp>>> lines_on_hypersurface(const HyperForm<Fp>& f) {
    const u64 q = modulus_of(f);
    std::vector<std::pair<Vec<Fp>, Vec<Fp>>> out;
    for_each_line(f.ambient(), q, [&](const std::vector<u64>& u, const std::vector<u64>& w) {
        const LineParam<Fp> line = LineParam<Fp>::through(to_vec(u, q), to_vec(w, q));
        if (f.pullback(line.rows()).is_zero()) out.emplace_back(to_vec(u, q), to_vec(w, q));
    });
    return out;
}

SmoothnessCheck probably_smooth(const HyperForm<Fp>& f, std::uint64_t samples, std::mt19937_64& rng,
                                std::uint64_t exhaustive_limit) {
    const u64 q = modulus_of(f);
    const int n = f.ambient();
    const ModForm mf(f, q);
    std::vector<ModForm> grad;
    for (int i = 0; i <= n; ++i) {
        HyperForm<Fp> g = f.partial(i);
        grad.emplace_back(g, q);
    }
    auto singular_at = [&](const std::vector<u64>& x) {
        if (mf.evaluate(x) != 0) return false;
        for (const auto& g : grad)
            if (g.evaluate(x) != 0) return false;
        return true;
    };
    SmoothnessCheck check{true, 0, false};
    if (projective_size(n, q) <= exhaustive_limit) {
        check.exhaustive = true;
        for_each_projective_point(n, q, [&](const std::vector<u64>& x) {
            ++check.points_checked;
            if (singular_at(x)) check.no_singular_point_found = false;
        });
        return check;
    }
    std::uniform_int_distribution<u64> dist(0, q - 1);
    std::vector<u64> x(static_cast<std::size_t>(n + 1));
    const u64 attempts = samples * q * 4 + 16;
    for (u64 a = 0; a < attempts && check.points_checked < samples; ++a) {
        bool nonzero = false;
        for (auto& c : x) {
            c = dist(rng);
            nonzero = nonzero || c != 0;
        }
        if (!nonzero || mf.evaluate(x) != 0) continue;
        ++check.points_checked;
        if (singular_at(x)) check.no_singular_point_found = false;
    }
    return check;
}

SlopeReport dimension_slope(std::vector<CountRecord> records) {
    SlopeReport report;
    std::vector<CountRecord> used;
    for (const auto& r : records) {
        if (r.count == 0) {
            report.warnings.push_back("q=" + std::to_string(r.q) +
                                      ": zero count excluded (dimension may be < 0 or components not defined over F_q)");
            continue;
        }
        used.push_back(r);
    }
    std::sort(used.begin(), used.end(), [](const CountRecord& a, const CountRecord& b) { return a.q < b.q; });
    for (std::size_t i = 1; i < used.size(); ++i)
        if (used[i].q == used[i - 1].q) throw PreconditionError("dimension_slope needs distinct q values");
    if (used.size() < 3) throw PreconditionError("dimension_slope needs at least 3 records with nonzero counts");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(used.size());
    for (const auto& r : used) {
        const double x = std::log(static_cast<double>(r.q));
        const double y = std::log(static_cast<double>(r.count));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        report.q_used.push_back(r.q);
    }
    report.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    for (std::size_t i = 1; i < used.size(); ++i) {
        const double num = std::log(static_cast<double>(used[i].count) / static_cast<double>(used[i - 1].count));
        const double den = std::log(static_cast<double>(used[i].q) / static_cast<double>(used[i - 1].q));
        report.step_ratios.push_back(num / den);
    }
    return report;
}

HyperForm<Fp> fermat_form(int n, int d, std::uint64_t q) {
    HyperForm<Fp> f(n, d);
    for (int i = 0; i <= n; ++i) {
        Exponent e(static_cast<std::size_t>(n + 1), 0);
        e[static_cast<std::size_t>(i)] = d;
        f.add_term(e, Fp(1, q));
    }
    return f;
}

std::array<Vec<Cyclotomic>, 3> FermatPlane::spanning_points(int d) const {
    std::array<Vec<Cyclotomic>, 3> pts;
    for (std::size_t r = 0; r < 3; ++r) {
        Vec<Cyclotomic> v(6);
        for (int i = 0; i < 6; ++i) v(i) = Cyclotomic(d, {0});
        v(pairing[r].first) = Cyclotomic(d, {1});
        v(pairing[r].second) = Cyclotomic::root_of_minus_one(d, roots[r]);
        pts[r] = std::move(v);
    }
    return pts;
}

std::vector<FermatPlane> fermat_planes(int d) {
    if (d < 1) throw PreconditionError("fermat_planes needs d >= 1");
    HyperForm<Cyclotomic> fermat(5, d);
    for (int i = 0; i < 6; ++i) {
        Exponent e(6, 0);
        e[static_cast<std::size_t>(i)] = d;
        fermat.add_term(e, Cyclotomic(d, {1}));
    }

    // The 15 perfect matchings of {0..5}: pair 0 with j, then match the rest.
    std::vector<std::array<std::pair<int, int>, 3>> pairings;
    for (int j = 1; j < 6; ++j) {
        std::vector<int> rest;
        for (int i = 1; i < 6; ++i)
            if (i != j) rest.push_back(i);
        const int a = rest[0];
        for (int idx = 1; idx < 4; ++idx) {
            std::vector<int> last;
            for (int r = 1; r < 4; ++r)
                if (r != idx) last.push_back(rest[static_cast<std::size_t>(r)]);
            std::array<std::pair<int, int>, 3> pr{std::pair{0, j}, std::pair{a, rest[static_cast<std::size_t>(idx)]},
                                                  std::pair{last[0], last[1]}};
            std::sort(pr.begin(), pr.end());
            pairings.push_back(pr);
        }
    }

    std::vector<FermatPlane> planes;
    std::set<FermatPlane> seen;
    for (const auto& pr : pairings)
        for (int e0 = 0; e0 < d; ++e0)
            for (int e1 = 0; e1 < d; ++e1)
                for (int e2 = 0; e2 < d; ++e2) {
                    FermatPlane plane{pr, {e0, e1, e2}};
                    if (!verify_plane(fermat, plane.spanning_points(d)))
                        throw AssertionFailure("Fermat plane failed verification");
                    if (!seen.insert(plane).second) throw AssertionFailure("duplicate Fermat plane");
                    planes.push_back(plane);
                }
    if (planes.size() != static_cast<std::size_t>(15 * d * d * d))
        throw AssertionFailure("expected 15 d^3 Fermat planes");
    return planes;
}

}  // namespace tangency
