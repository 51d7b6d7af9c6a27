#include "tangency/deformation.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace tangency {

namespace {

Fp random_element(std::uint64_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    return Fp(static_cast<std::int64_t>(dist(rng)), p);
}

Vec<Fp> random_vector(int size, std::uint64_t p, std::mt19937_64& rng) {
    Vec<Fp> v(size);
    for (int i = 0; i < size; ++i) v(i) = random_element(p, rng);
    return v;
}

}  // namespace

ContactInstance random_contact_instance(int n, int d, int k, std::uint64_t p, std::mt19937_64& rng) {
    if (!is_prime(p) || p <= static_cast<std::uint64_t>(d))
        throw PreconditionError("need a prime p > d");
    if (k < 1 || k > d) throw PreconditionError("contact order must lie in [1, d]");
    const int size = n + 1;
    for (;;) {
        // Random basis [p, v, w...] of F_p^(n+1); rows 0 and 1 of its inverse
        // are the linear forms restricting to t and s on the line t*p + s*v.
        Mat<Fp> basis(size, size);
        for (int c = 0; c < size; ++c) basis.col(c) = random_vector(size, p, rng);
        Mat<Fp> inv;
        try {
            inv = inverse(basis);
        } catch (const PreconditionError&) {
            continue;
        }
        const LineParam<Fp> line = LineParam<Fp>::through(basis.col(0), basis.col(1));
        const HyperForm<Fp> lt = HyperForm<Fp>::linear(inv.row(0).transpose());
        const HyperForm<Fp> ls = HyperForm<Fp>::linear(inv.row(1).transpose());

        HyperForm<Fp> f(n, d);
        for (const auto& e : monomials(n, d)) f.add_term(e, random_element(p, rng));
        const BinaryForm<Fp> g = f.pullback(line.rows());
        if (g.coeffs[k].is_zero()) continue;
        for (int i = 0; i < k; ++i) {
            if (g.coeffs[i].is_zero()) continue;
            HyperForm<Fp> correction = ls.pow(i) * lt.pow(d - i);
            f -= correction.scale(g.coeffs[i]);
        }
        // Smooth at the contact point.
        bool singular = true;
        const Vec<Fp> base = line.base_point();
        for (int i = 0; i <= n && singular; ++i)
            if (!f.partial(i).evaluate(base).is_zero()) singular = false;
        if (singular) continue;
        return ContactInstance{std::move(f), line};
    }
}

TrialResult run_deformation_trial(std::uint64_t seed, int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    TrialResult t;
    t.index = index;
    t.n = std::uniform_int_distribution<int>(3, 5)(rng);
    t.d = std::uniform_int_distribution<int>(t.n, t.n + 2)(rng);
    t.k = std::uniform_int_distribution<int>(1, std::min(4, t.d))(rng);
    std::uniform_int_distribution<std::uint64_t> pick(41, 997);
    do t.p = pick(rng);
    while (!is_prime(t.p));

    const ContactInstance inst = random_contact_instance(t.n, t.d, t.k, t.p, rng);
    const auto trunc = log_sections(inst.form, inst.line, t.k, SectionRoute::Truncated);
    const auto full = log_sections(inst.form, inst.line, t.k, SectionRoute::Full);
    t.h0 = trunc.h0;
    t.euler_in_kernel = contains(trunc, euler_tuple(inst.line)) && contains(full, euler_tuple(inst.line));
    t.congruence_pass = congruence_check(inst.form, inst.line, t.k).all_pass();
    t.routes_agree = trunc.raw_dim == full.raw_dim && same_column_space(trunc.basis_matrix(), full.basis_matrix());
    return t;
}

int ExperimentSummary::h0_matches() const {
    return static_cast<int>(std::count_if(trials.begin(), trials.end(), [](const TrialResult& t) { return t.h0_match(); }));
}

bool ExperimentSummary::exact_checks_pass() const {
    return std::all_of(trials.begin(), trials.end(), [](const TrialResult& t) {
        return t.euler_in_kernel && t.congruence_pass && t.routes_agree;
    });
}

ExperimentSummary run_deformation_experiment(int trials, std::uint64_t seed, unsigned threads) {
    if (trials < 0) throw PreconditionError("trial count must be >= 0");
    ExperimentSummary summary;
    summary.seed = seed;
    summary.trials.resize(static_cast<std::size_t>(trials));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1))
            summary.trials[static_cast<std::size_t>(i)] = run_deformation_trial(seed, i);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return summary;
}

}  // namespace tangency
