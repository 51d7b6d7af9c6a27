#include "tangency/deformation.hpp"

#include <doctest.h>

#include <random>

using namespace tangency;

namespace {

template <class S>
typename ScalarOps<S>::Context context();

template <>
ScalarOps<Rational>::Context context<Rational>() {
    return {};
}

template <>
ScalarOps<Fp>::Context context<Fp>() {
    return {101};
}

template <class S>
S num(std::int64_t v) {
    return ScalarOps<S>::from_int(v, context<S>());
}

struct Term {
    std::int64_t c;
    Exponent e;
};

template <class S>
HyperForm<S> form(int n, int d, const std::vector<Term>& terms) {
    HyperForm<S> f(n, d);
    for (const auto& t : terms) f.add_term(t.e, num<S>(t.c));
    return f;
}

template <class S>
LineParam<S> line(const std::vector<std::pair<int, int>>& rows) {
    LinearForms<S> m(static_cast<Eigen::Index>(rows.size()), 2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        m(static_cast<Eigen::Index>(i), 0) = num<S>(rows[i].first);
        m(static_cast<Eigen::Index>(i), 1) = num<S>(rows[i].second);
    }
    return LineParam<S>(m);
}

template <class S>
Vec<S> point(const std::vector<int>& xs) {
    Vec<S> v(static_cast<Eigen::Index>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = num<S>(xs[i]);
    return v;
}

// x0 x2 - x1^2
template <class S>
HyperForm<S> conic() {
    return form<S>(2, 2, {{1, {1, 0, 1}}, {-1, {0, 2, 0}}});
}

// Cubic surface meeting x0 = t, x1 = s, x2 = x3 = 0 in s^3 at [0:1];
// smooth there because dF/dx3 = x0^2.
template <class S>
HyperForm<S> flex_cubic() {
    return form<S>(3, 3,
                   {{1, {2, 0, 0, 1}}, {1, {0, 3, 0, 0}}, {2, {1, 1, 1, 0}}, {1, {0, 0, 3, 0}},
                    {-1, {0, 1, 0, 2}}, {3, {0, 0, 1, 2}}});
}

// Quadric surface x0 x3 - x1 x2 containing x2 = x3 = 0.
template <class S>
HyperForm<S> quadric_surface() {
    return form<S>(3, 2, {{1, {1, 0, 0, 1}}, {-1, {0, 1, 1, 0}}});
}

}  // namespace

TEST_CASE_TEMPLATE("contact order at [0:1]", S, Rational, Fp) {
    const auto f = conic<S>();
    CHECK(contact_order(f, line<S>({{0, 1}, {1, 0}, {0, 0}})).order == 2);
    // Secant through [1:0:0] and [1:1:1].
    CHECK(contact_order(f, line<S>({{1, 1}, {1, 0}, {1, 0}})).order == 1);
    // Line not through a point of X at [0:1].
    CHECK(contact_order(f, line<S>({{0, 1}, {1, 0}, {0, 1}})).order == 0);
    const auto c = contact_order(quadric_surface<S>(), line<S>({{0, 1}, {1, 0}, {0, 0}, {0, 0}}));
    CHECK(c.contained());
    CHECK(c.to_string() == "contained");
    CHECK(contact_order(flex_cubic<S>(), line<S>({{0, 1}, {1, 0}, {0, 0}, {0, 0}})).order == 3);
}

TEST_CASE_TEMPLATE("degenerate and mismatched lines are rejected", S, Rational, Fp) {
    CHECK_THROWS_AS(line<S>({{1, 0}, {2, 0}, {3, 0}}), PreconditionError);
    CHECK_THROWS_AS(contact_order(conic<S>(), line<S>({{0, 1}, {1, 0}, {0, 0}, {0, 0}})), PreconditionError);
}

TEST_CASE_TEMPLATE("truncation of the conic at [1:0:0]", S, Rational, Fp) {
    const auto f = conic<S>();
    const auto p = point<S>({1, 0, 0});
    const auto t1 = truncate(f, p, 1);
    CHECK(t1.fk == form<S>(2, 1, {{1, {0, 0, 1}}}));
    CHECK(t1.smooth_at_point);
    // p = e_0 needs no coordinate change, and k = d gives back F.
    CHECK(truncate(f, p, 2).fk == f);
}

TEST_CASE_TEMPLATE("truncation with k = d reproduces F in the frame", S, Rational, Fp) {
    const auto f = flex_cubic<S>();
    const auto p = point<S>({1, 0, 0, 0});
    const auto tr = truncate(f, p, 3);
    CHECK(tr.fk == tr.transformed);
    // Away from e_0 the frame moves the point.
    const auto g = conic<S>();
    const auto q = point<S>({1, 1, 1});
    const auto tq = truncate(g, q, 2);
    CHECK(tq.fk == tq.transformed);
    CHECK(tq.frame.pivot == 0);
}

TEST_CASE_TEMPLATE("truncation errors", S, Rational, Fp) {
    const auto f = conic<S>();
    CHECK_THROWS_AS(truncate(f, point<S>({1, 0, 0}), 0), PreconditionError);
    CHECK_THROWS_AS(truncate(f, point<S>({1, 0, 0}), 3), PreconditionError);
    CHECK_THROWS_AS(truncate(f, point<S>({1, 0, 1}), 1), PreconditionError);
    CHECK_THROWS_AS(truncate(f, point<S>({1, 0}), 1), PreconditionError);
}

TEST_CASE_TEMPLATE("a singular point is flagged", S, Rational, Fp) {
    // Nodal cubic x0 x1 x2 has a node at [1:0:0]; f_1 = 0 there.
    const auto f = form<S>(2, 3, {{1, {1, 1, 1}}});
    const auto tr = truncate(f, point<S>({1, 0, 0}), 2);
    CHECK_FALSE(tr.smooth_at_point);
}

TEST_CASE_TEMPLATE("congruence between F and F_k", S, Rational, Fp) {
    const auto f = flex_cubic<S>();
    const auto l = line<S>({{0, 1}, {1, 0}, {0, 0}, {0, 0}});
    for (int k = 1; k <= 3; ++k) {
        const auto r = congruence_check(f, l, k);
        CHECK(r.per_index.size() == 4);
        CHECK(r.all_pass());
    }
    CHECK_FALSE(congruence_check(f, l, 2, true).all_pass());
    CHECK_THROWS_AS(congruence_check(f, l, 4), PreconditionError);
    CHECK_THROWS_AS(congruence_check(f, l, 0), PreconditionError);
}

TEST_CASE_TEMPLATE("section counts on the tangent line of a conic", S, Rational, Fp) {
    const auto f = conic<S>();
    const auto l = line<S>({{0, 1}, {1, 0}, {0, 0}});
    // n = 2: 2n - k + 1.
    CHECK(log_sections(f, l, 2).h0 == 3);
    CHECK(log_sections(f, l, 1).h0 == 4);
    CHECK(log_sections(f, l, 0).h0 == 5);
    CHECK(log_sections(f, l, 2, SectionRoute::Full).h0 == 3);
    CHECK_THROWS_AS(log_sections(f, l, 3), PreconditionError);
    CHECK_THROWS_AS(log_sections(f, l, -1), PreconditionError);
}

TEST_CASE_TEMPLATE("flex line on a cubic surface", S, Rational, Fp) {
    const auto f = flex_cubic<S>();
    const auto l = line<S>({{0, 1}, {1, 0}, {0, 0}, {0, 0}});
    for (int k = 1; k <= 3; ++k) {
        const auto tr = log_sections(f, l, k, SectionRoute::Truncated);
        const auto full = log_sections(f, l, k, SectionRoute::Full);
        CHECK(tr.h0 == expected_h0(3, k));
        CHECK(tr.conditions == k);
        CHECK(contains(tr, euler_tuple(l)));
        CHECK(contains(full, euler_tuple(l)));
        CHECK(same_column_space(tr.basis_matrix(), full.basis_matrix()));
        CHECK_FALSE(tr.log_variant);
    }
}

TEST_CASE_TEMPLATE("a line on a quadric surface uses the log variant", S, Rational, Fp) {
    const auto f = quadric_surface<S>();
    const auto l = line<S>({{0, 1}, {1, 0}, {0, 0}, {0, 0}});
    const auto space = log_sections(f, l, 2);
    CHECK(space.log_variant);
    CHECK(space.contact.contained());
    // One-dimensional family of lines plus the 3 reparametrizations.
    CHECK(space.h0 == 4);
    CHECK(contains(space, euler_tuple(l)));
}

TEST_CASE("a tuple outside the kernel is not contained") {
    const auto f = conic<Rational>();
    const auto l = line<Rational>({{0, 1}, {1, 0}, {0, 0}});
    const auto space = log_sections(f, l, 2);
    // Moving x2 by t breaks the tangency at [0:1].
    DeformationTuple<Rational> b = DeformationTuple<Rational>::Zero(3, 2);
    b(2, 1) = 1;
    CHECK_FALSE(contains(space, b));
    // s in x2 paired with t/2 in x1 keeps it.
    b(2, 1) = 0;
    b(2, 0) = 1;
    b(1, 1) = Rational(1, 2);
    CHECK(contains(space, b));
}

TEST_CASE("random contact instances have the requested order") {
    std::mt19937_64 rng(7);
    for (int n = 3; n <= 5; ++n)
        for (int d = n; d <= n + 2; ++d)
            for (int k = 1; k <= std::min(4, d); ++k) {
                const auto inst = random_contact_instance(n, d, k, 101, rng);
                CHECK(contact_order(inst.form, inst.line).order == k);
                CHECK(inst.form.degree() == d);
            }
    CHECK_THROWS_AS(random_contact_instance(3, 3, 1, 100, rng), PreconditionError);
    CHECK_THROWS_AS(random_contact_instance(3, 3, 4, 101, rng), PreconditionError);
    CHECK_THROWS_AS(random_contact_instance(3, 5, 1, 5, rng), PreconditionError);
}

TEST_CASE("trials satisfy the exact checks") {
    for (int i = 0; i < 30; ++i) {
        const TrialResult t = run_deformation_trial(12345, i);
        CAPTURE(i);
        CHECK(t.euler_in_kernel);
        CHECK(t.congruence_pass);
        CHECK(t.routes_agree);
        CHECK(t.n >= 3);
        CHECK(t.n <= 5);
        CHECK(t.d >= t.n);
        CHECK(t.d <= t.n + 2);
        CHECK(t.k >= 1);
        CHECK(t.k <= std::min(4, t.d));
        CHECK(is_prime(t.p));
        CHECK(t.p > 40);
    }
}

TEST_CASE("experiment results do not depend on the thread count") {
    const auto a = run_deformation_experiment(16, 99, 1);
    const auto b = run_deformation_experiment(16, 99, 4);
    REQUIRE(a.trials.size() == b.trials.size());
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        CHECK(a.trials[i].index == static_cast<int>(i));
        CHECK(a.trials[i].p == b.trials[i].p);
        CHECK(a.trials[i].n == b.trials[i].n);
        CHECK(a.trials[i].d == b.trials[i].d);
        CHECK(a.trials[i].k == b.trials[i].k);
        CHECK(a.trials[i].h0 == b.trials[i].h0);
    }
    CHECK(a.h0_matches() == b.h0_matches());
    CHECK(a.exact_checks_pass());
    CHECK_THROWS_AS(run_deformation_experiment(-1, 0), PreconditionError);
}
