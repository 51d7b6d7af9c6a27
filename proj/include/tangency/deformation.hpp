#ifndef TANGENCY_DEFORMATION_HPP
#define TANGENCY_DEFORMATION_HPP

#include "tangency/hyperform.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

// First-order deformations of a line x_i = a_i(s,t) that keep its contact
// with a hypersurface at [0:1]. Tuples (b_0..b_n) of linear forms represent
// deformations modulo the Euler tuple (a_0..a_n).

namespace tangency {

/// Row i holds (coefficient of s, coefficient of t) of a linear form.
template <class S>
using LinearForms = Eigen::Matrix<S, Eigen::Dynamic, 2>;

template <class S>
using DeformationTuple = LinearForms<S>;

/// Linear embedding of P^1 into P^n.
template <class S>
class LineParam {
   public:
    explicit LineParam(LinearForms<S> rows) : rows_(std::move(rows)) {
        Mat<S> m = rows_;
        if (rank(m) != 2) throw PreconditionError("line parametrization is degenerate (rank < 2)");
    }

    /// Line [s:t] -> t*p + s*v, so [0:1] maps to p.
    static LineParam through(const Vec<S>& p, const Vec<S>& v) {
        LinearForms<S> rows(p.size(), 2);
        rows.col(0) = v;
        rows.col(1) = p;
        return LineParam(rows);
    }

    int ambient() const noexcept { return static_cast<int>(rows_.rows()) - 1; }
    const LinearForms<S>& rows() const noexcept { return rows_; }
    /// Image of [0:1].
    Vec<S> base_point() const { return rows_.col(1); }

   private:
    LinearForms<S> rows_;
};

/// s-adic valuation of F(a) at [0:1]; nullopt when the line lies on X.
struct ContactOrder {
    std::optional<int> order;
    bool contained() const noexcept { return !order.has_value(); }
    std::string to_string() const { return order ? std::to_string(*order) : "contained"; }
};

template <class S>
ContactOrder contact_order(const HyperForm<S>& f, const LineParam<S>& line) {
    if (f.ambient() != line.ambient()) throw PreconditionError("line and hypersurface in different P^n");
    return ContactOrder{f.pullback(line.rows()).s_valuation()};
}

/// Coordinate change placing a point at e_0: x = M y with M e_0 = p. The
/// remaining columns are the standard basis vectors other than the first
/// nonzero coordinate of p.
template <class S>
struct Frame {
    Mat<S> to_original;    // M
    Mat<S> from_original;  // M^{-1}
    int pivot;
};

template <class S>
Frame<S> frame_at(const Vec<S>& p) {
    const auto size = p.size();
    int pivot = -1;
    for (Eigen::Index i = 0; i < size; ++i)
        if (!ScalarOps<S>::is_zero(p(i))) {
            pivot = static_cast<int>(i);
            break;
        }
    if (pivot < 0) throw PreconditionError("point has no nonzero coordinate");
    Mat<S> m(size, size);
    for (Eigen::Index r = 0; r < size; ++r)
        for (Eigen::Index c = 0; c < size; ++c) m(r, c) = S(0);
    m.col(0) = p;
    Eigen::Index col = 1;
    for (Eigen::Index j = 0; j < size; ++j) {
        if (j == pivot) continue;
        m(j, col++) = S(1);
    }
    return Frame<S>{m, inverse(m), pivot};
}

template <class S>
struct Truncation {
    HyperForm<S> fk;           // F_k in frame coordinates
    HyperForm<S> transformed;  // F in frame coordinates
    Frame<S> frame;
    int k;
    bool smooth_at_point;  // f_1 != 0
};

/// F_k = sum_{j=1..k} y_0^(k-j) f_j(y_1..y_n), where f_j is the degree-j
/// part of F in the affine chart y_0 = 1 around p = e_0 after the frame
/// change.
template <class S>
Truncation<S> truncate(const HyperForm<S>& f, const Vec<S>& p, int k) {
    if (p.size() != f.ambient() + 1) throw PreconditionError("point has the wrong number of coordinates");
    if (k < 1 || k > f.degree())
        throw PreconditionError("truncation order k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(f.degree()) + "]");
    if (!ScalarOps<S>::is_zero(f.evaluate(p))) throw PreconditionError("F(p) != 0: point is not on X");
    Frame<S> frame = frame_at(p);
    HyperForm<S> g = f.substitute(frame.to_original);
    HyperForm<S> fk(f.ambient(), k);
    bool linear_part = false;
    for (const auto& [e, c] : g.terms()) {
        const int j = f.degree() - e[0];  // degree of this term in y_1..y_n
        if (j < 1 || j > k) continue;
        if (j == 1) linear_part = true;
        Exponent shifted = e;
        shifted[0] = k - j;
        fk.add_term(shifted, c);
    }
    return Truncation<S>{std::move(fk), std::move(g), std::move(frame), k, linear_part};
}

/// Line rows expressed in a frame: a' = M^{-1} a.
template <class S>
LinearForms<S> to_frame(const Frame<S>& frame, const LinearForms<S>& rows) {
    Mat<S> a = rows;
    Mat<S> out = multiply(frame.from_original, a);
    return out;
}

template <class S>
struct CongruenceReport {
    int k;
    std::vector<bool> per_index;  // one entry per coordinate i = 0..n
    bool all_pass() const {
        for (bool b : per_index)
            if (!b) return false;
        return true;
    }
};

namespace detail {

template <class S>
void require_contact(const HyperForm<S>& f, const LineParam<S>& line, int k) {
    const ContactOrder c = contact_order(f, line);
    if (!c.contained() && *c.order < k)
        throw PreconditionError("contact order " + std::to_string(*c.order) + " at [0:1] is below k=" +
                                std::to_string(k));
}

template <class S>
std::vector<BinaryForm<S>> gradient_on_line(const HyperForm<S>& f, const LinearForms<S>& rows) {
    std::vector<BinaryForm<S>> out;
    for (int i = 0; i <= f.ambient(); ++i) out.push_back(f.partial(i).pullback(rows));
    return out;
}

// Conditions "coefficient of s^r in sum_i b_i G_i vanishes" for r < count.
// Unknowns ordered (b_0^s, b_0^t, b_1^s, ...).
template <class S>
Mat<S> condition_matrix(const std::vector<BinaryForm<S>>& grads, int count) {
    const auto unknowns = static_cast<Eigen::Index>(2 * grads.size());
    Mat<S> m(count, unknowns);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < unknowns; ++c) m(r, c) = S(0);
    for (std::size_t i = 0; i < grads.size(); ++i) {
        const auto& g = grads[i];
        for (int r = 0; r < count; ++r) {
            if (r >= 1 && r - 1 <= g.degree) m(r, static_cast<Eigen::Index>(2 * i)) = g.coeffs[r - 1];
            if (r <= g.degree) m(r, static_cast<Eigen::Index>(2 * i + 1)) = g.coeffs[r];
        }
    }
    return m;
}

template <class S>
DeformationTuple<S> tuple_from_vector(const Vec<S>& v) {
    DeformationTuple<S> t(v.size() / 2, 2);
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
        t(i, 0) = v(2 * i);
        t(i, 1) = v(2 * i + 1);
    }
    return t;
}

template <class S>
Vec<S> vector_from_tuple(const DeformationTuple<S>& t) {
    Vec<S> v(2 * t.rows());
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
        v(2 * i) = t(i, 0);
        v(2 * i + 1) = t(i, 1);
    }
    return v;
}

}  // namespace detail

/// Checks dF/dx_i(a) == a_0^(d-k) dF_k/dx_i(a) mod s^k for every i, in the
/// frame where p = e_0 (so a_0 is not a multiple of s and a_i, i >= 1, are).
/// `corrupt` adds y_0^(k-1) y_1 to F_k as a negative control.
template <class S>
CongruenceReport<S> congruence_check(const HyperForm<S>& f, const LineParam<S>& line, int k, bool corrupt = false) {
    if (k < 1) throw PreconditionError("congruence needs k >= 1");
    detail::require_contact(f, line, k);
    Truncation<S> tr = truncate(f, line.base_point(), k);
    const LinearForms<S> a = to_frame(tr.frame, line.rows());
    if (ScalarOps<S>::is_zero(a(0, 1))) throw PreconditionError("normalization failed: a_0 is a multiple of s");
    for (Eigen::Index i = 1; i < a.rows(); ++i)
        if (!ScalarOps<S>::is_zero(a(i, 1)))
            throw PreconditionError("normalization failed: a_" + std::to_string(i) + " is not a multiple of s");
    HyperForm<S> fk = tr.fk;
    if (corrupt) {
        Exponent e(static_cast<std::size_t>(f.ambient() + 1), 0);
        e[0] = k - 1;
        e[1] += 1;
        fk.add_term(e, S(1));
    }
    BinaryForm<S> a0pow = binary_one<S>();
    const auto a0 = BinaryForm<S>::linear(a(0, 0), a(0, 1));
    for (int i = 0; i < f.degree() - k; ++i) a0pow = a0pow * a0;

    CongruenceReport<S> report{k, {}};
    const auto full = detail::gradient_on_line(tr.transformed, a);
    const auto trunc = detail::gradient_on_line(fk, a);
    for (std::size_t i = 0; i < full.size(); ++i) {
        const BinaryForm<S> rhs = a0pow * trunc[i];
        bool ok = true;
        for (int r = 0; r < k; ++r) {
            const S lhs_c = r <= full[i].degree ? full[i].coeffs[r] : S(0);
            const S rhs_c = r <= rhs.degree ? rhs.coeffs[r] : S(0);
            if (!ScalarOps<S>::is_zero(lhs_c - rhs_c)) ok = false;
        }
        report.per_index.push_back(ok);
    }
    return report;
}

enum class SectionRoute {
    Truncated,  // sum b_i dF_k/dx_i(a) == 0 mod s^k, solved in the frame
    Full        // sum b_i dF/dx_i(a) == 0 mod s^k, original coordinates
};

template <class S>
struct DeformationSpace {
    int raw_dim = 0;
    int h0 = 0;  // raw_dim - 1: quotient by the Euler tuple
    std::vector<DeformationTuple<S>> basis;
    ContactOrder contact;
    bool log_variant = false;  // line contained in X: condition mod F(a) = 0
    int conditions = 0;        // rank of the linear system

    /// Basis as the columns of a 2(n+1) x raw_dim matrix.
    Mat<S> basis_matrix() const {
        const Eigen::Index rows = basis.empty() ? 0 : 2 * basis.front().rows();
        Mat<S> m(rows, static_cast<Eigen::Index>(basis.size()));
        for (std::size_t c = 0; c < basis.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = detail::vector_from_tuple(basis[c]);
        return m;
    }
};

/// Tuples b with sum b_i dF_k/dx_i(a) divisible by s^k (lines of finite
/// contact >= k), or with sum b_i dF/dx_i(a) == 0 (lines on X). Tuples are
/// returned in the original coordinates.
template <class S>
DeformationSpace<S> log_sections(const HyperForm<S>& f, const LineParam<S>& line, int k,
                                 SectionRoute route = SectionRoute::Truncated) {
    if (k < 0) throw PreconditionError("contact order k must be >= 0");
    const ContactOrder c = contact_order(f, line);
    DeformationSpace<S> space;
    space.contact = c;
    const int n = f.ambient();
    Mat<S> system;
    Mat<S> to_original;  // maps frame tuples back; empty means identity
    if (c.contained()) {
        space.log_variant = true;
        system = detail::condition_matrix(detail::gradient_on_line(f, line.rows()), f.degree() + 1);
    } else if (*c.order < k) {
        throw PreconditionError("contact order " + std::to_string(*c.order) + " at [0:1] is below k=" +
                                std::to_string(k));
    } else if (k == 0) {
        system = Mat<S>(0, 2 * (n + 1));
    } else if (route == SectionRoute::Full) {
        system = detail::condition_matrix(detail::gradient_on_line(f, line.rows()), k);
    } else {
        Truncation<S> tr = truncate(f, line.base_point(), k);
        const LinearForms<S> a = to_frame(tr.frame, line.rows());
        system = detail::condition_matrix(detail::gradient_on_line(tr.fk, a), k);
        to_original = tr.frame.to_original;
    }
    space.conditions = static_cast<int>(rank(system));
    const Mat<S> ker = kernel(system);
    space.raw_dim = static_cast<int>(ker.cols());
    space.h0 = space.raw_dim - 1;
    for (Eigen::Index col = 0; col < ker.cols(); ++col) {
        DeformationTuple<S> t = detail::tuple_from_vector<S>(ker.col(col));
        if (to_original.size() != 0) {
            Mat<S> tm = t;
            t = multiply(to_original, tm);
        }
        space.basis.push_back(std::move(t));
    }
    return space;
}

/// The tuple (a_0..a_n) itself.
template <class S>
DeformationTuple<S> euler_tuple(const LineParam<S>& line) {
    return line.rows();
}

/// Whether a tuple lies in the span of the space's basis.
template <class S>
bool contains(const DeformationSpace<S>& space, const DeformationTuple<S>& t) {
    Mat<S> basis = space.basis_matrix();
    const Vec<S> v = detail::vector_from_tuple(t);
    if (basis.cols() == 0) {
        for (Eigen::Index i = 0; i < v.size(); ++i)
            if (!ScalarOps<S>::is_zero(v(i))) return false;
        return true;
    }
    Mat<S> aug(basis.rows(), basis.cols() + 1);
    aug.leftCols(basis.cols()) = basis;
    aug.col(basis.cols()) = v;
    return rank(aug) == rank(basis);
}

/// 2n - k + 1, the dimension when the restricted log tangent sheaf is
/// globally generated.
inline int expected_h0(int n, int k) { return 2 * n - k + 1; }

/// Random form over F_p and a line meeting it with contact exactly k at
/// [0:1]. The form is a uniformly random dense form corrected by
/// -sum_{i<k} g_i l1^i l2^(d-i), where g = F(a) and l1, l2 restrict to s, t on
/// the line.
struct ContactInstance {
    HyperForm<Fp> form;
    LineParam<Fp> line;
};

ContactInstance random_contact_instance(int n, int d, int k, std::uint64_t p, std::mt19937_64& rng);

/// One randomized trial: n in {3,4,5}, d in {n..n+2}, k in {1..min(4,d)},
/// p a random prime in [41, 997].
struct TrialResult {
    int index = 0;
    int n = 0;
    int d = 0;
    int k = 0;
    std::uint64_t p = 0;
    int h0 = 0;
    bool euler_in_kernel = false;
    bool congruence_pass = false;
    bool routes_agree = false;  // truncated and full systems give the same kernel

    bool h0_match() const { return h0 == expected_h0(n, k); }
};

struct ExperimentSummary {
    std::uint64_t seed = 0;
    std::vector<TrialResult> trials;

    int h0_matches() const;
    bool exact_checks_pass() const;  // Euler membership, congruence, route agreement
};

/// Trial i draws from its own generator seeded with (seed, i), so results do
/// not depend on the thread count.
TrialResult run_deformation_trial(std::uint64_t seed, int index);
ExperimentSummary run_deformation_experiment(int trials, std::uint64_t seed, unsigned threads = 1);

}  // namespace tangency

#endif
