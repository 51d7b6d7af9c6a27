#include "tangency/incidence.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

using namespace tangency;

namespace {

HyperForm<Fp> random_form(int n, int d, std::uint64_t q, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(0, static_cast<std::int64_t>(q) - 1);
    HyperForm<Fp> f(n, d);
    for (const auto& e : monomials(n, d)) f.add_term(e, Fp(dist(rng), q));
    return f;
}

// Affine points of F_q^(n+1) \ 0 on X, divided by q - 1.
std::uint64_t naive_point_count(const HyperForm<Fp>& f, std::uint64_t q) {
    const int size = f.ambient() + 1;
    std::uint64_t total = 1;
    for (int i = 0; i < size; ++i) total *= q;
    std::uint64_t zeros = 0;
    Vec<Fp> x(size);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (int i = 0; i < size; ++i) {
            x(i) = Fp(static_cast<std::int64_t>(r % q), q);
            r /= q;
        }
        if (f.evaluate(x).is_zero()) ++zeros;
    }
    return zeros / (q - 1);
}

CountRecord record(std::uint64_t q, std::uint64_t count) {
    CountRecord r;
    r.q = q;
    r.k = 5;
    r.count = count;
    return r;
}

}  // namespace

TEST_CASE("projective sizes") {
    CHECK(projective_size(0, 7) == 1);
    CHECK(projective_size(1, 7) == 8);
    CHECK(projective_size(2, 3) == 13);
    CHECK(projective_size(4, 13) == 30941);
}

TEST_CASE("point counts agree with affine enumeration") {
    std::mt19937_64 rng(1);
    for (std::uint64_t q : {3u, 5u, 7u})
        for (int d = 1; d <= 3; ++d) {
            const auto f = random_form(2, d, q, rng);
            CHECK(count_points(f) == naive_point_count(f, q));
        }
    const auto g = random_form(3, 3, 5, rng);
    CHECK(count_points(g) == naive_point_count(g, 5));
    // Smooth conic: q + 1 points.
    CHECK(count_points(fermat_form(2, 2, 7)) == 8);
}

TEST_CASE("fast count matches the line enumerator") {
    std::mt19937_64 rng(2);
    struct Case {
        int n;
        int d;
        std::uint64_t q;
    };
    for (const Case c : {Case{2, 2, 3}, Case{3, 2, 3}, Case{2, 3, 5}, Case{3, 3, 5}, Case{2, 4, 5}, Case{3, 2, 5},
                         Case{2, 3, 7}})
        for (int rep = 0; rep < 3; ++rep) {
            const auto f = random_form(c.n, c.d, c.q, rng);
            for (int k = 1; k <= c.d + 1; ++k) {
                CAPTURE(c.n);
                CAPTURE(c.d);
                CAPTURE(c.q);
                CAPTURE(k);
                CHECK(count_vk(f, k).count == count_vk_bruteforce(f, k));
            }
        }
}

TEST_CASE("fast count matches on special forms") {
    // Fermat cubic surface and a cone x0^2 - x1 x2 in P^3.
    const auto fermat = fermat_form(3, 3, 7);
    for (int k = 1; k <= 4; ++k) CHECK(count_vk(fermat, k).count == count_vk_bruteforce(fermat, k));
    HyperForm<Fp> cone(3, 2);
    cone.add_term({2, 0, 0, 0}, Fp(1, 5));
    cone.add_term({0, 1, 1, 0}, Fp(-1, 5));
    for (int k = 1; k <= 3; ++k) CHECK(count_vk(cone, k).count == count_vk_bruteforce(cone, k));
}

TEST_CASE("closed forms for k = 1 and k = 2 on a smooth form") {
    for (std::uint64_t q : {7u, 11u}) {
        const auto f = fermat_form(4, 5, q);
        const std::uint64_t points = count_points(f);
        CHECK(count_vk(f, 1).count == points * projective_size(3, q));
        CHECK(count_vk(f, 2).count == points * projective_size(2, q));
    }
}

TEST_CASE("contained lines are counted once per point") {
    const auto f = fermat_form(3, 3, 7);
    const auto lines = lines_on_hypersurface(f);
    // Fermat cubic surface: all 27 lines are defined over F_7.
    CHECK(lines.size() == 27);
    CHECK(count_vk(f, 4).count == 27 * 8);
    for (const auto& [u, w] : lines)
        for (std::int64_t s = 0; s < 7; ++s) {
            Vec<Fp> x = u;
            for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = u(i) * Fp(s, 7) + w(i);
            CHECK(f.evaluate(x).is_zero());
        }
}

TEST_CASE("counts decrease in k") {
    std::mt19937_64 rng(3);
    const auto f = random_form(3, 4, 7, rng);
    std::uint64_t prev = count_vk(f, 1).count;
    for (int k = 2; k <= 5; ++k) {
        const std::uint64_t c = count_vk(f, k).count;
        CHECK(c <= prev);
        prev = c;
    }
}

TEST_CASE("thread count does not change the result") {
    const auto f = fermat_form(4, 5, 7);
    const auto one = count_vk(f, 4, 1);
    const auto many = count_vk(f, 4, 8);
    CHECK(one.count == many.count);
    CHECK(one.n == 4);
    CHECK(one.d == 5);
    CHECK(one.q == 7);
    CHECK(one.k == 4);
}

TEST_CASE("count_vk preconditions") {
    CHECK_THROWS_AS(count_vk(fermat_form(3, 5, 5), 2), PreconditionError);
    CHECK_THROWS_AS(count_vk(fermat_form(3, 3, 7), 0), PreconditionError);
}

TEST_CASE("smoothness probe") {
    std::mt19937_64 rng(4);
    const auto smooth = probably_smooth(fermat_form(3, 3, 7), 50, rng);
    CHECK(smooth.no_singular_point_found);
    CHECK(smooth.exhaustive);
    CHECK(smooth.points_checked == projective_size(3, 7));
    HyperForm<Fp> cone(3, 2);
    cone.add_term({2, 0, 0, 0}, Fp(1, 7));
    cone.add_term({0, 1, 1, 0}, Fp(-1, 7));
    CHECK_FALSE(probably_smooth(cone, 50, rng).no_singular_point_found);
    const auto sampled = probably_smooth(fermat_form(4, 5, 13), 200, rng, 1000);
    CHECK_FALSE(sampled.exhaustive);
    CHECK(sampled.no_singular_point_found);
    CHECK(sampled.points_checked == 200);
}

TEST_CASE("slope of exact powers") {
    const auto r = dimension_slope({record(7, 343), record(11, 1331), record(13, 2197)});
    CHECK(r.slope == doctest::Approx(3.0));
    REQUIRE(r.step_ratios.size() == 2);
    CHECK(r.step_ratios[0] == doctest::Approx(3.0));
    CHECK(r.q_used == std::vector<std::uint64_t>{7, 11, 13});
    CHECK(r.warnings.empty());
}

TEST_CASE("slope input order does not matter") {
    const auto a = dimension_slope({record(13, 28561), record(7, 2401), record(11, 14641)});
    CHECK(a.slope == doctest::Approx(4.0));
    CHECK(a.q_used.front() == 7);
}

TEST_CASE("slope warnings and errors") {
    const auto r = dimension_slope({record(5, 0), record(7, 49), record(11, 121), record(13, 169)});
    CHECK(r.warnings.size() == 1);
    CHECK(r.slope == doctest::Approx(2.0));
    CHECK_THROWS_AS(dimension_slope({record(7, 1), record(11, 2)}), PreconditionError);
    CHECK_THROWS_AS(dimension_slope({record(7, 0), record(11, 2), record(13, 3)}), PreconditionError);
    CHECK_THROWS_AS(dimension_slope({record(7, 1), record(7, 2), record(13, 3)}), PreconditionError);
}

TEST_CASE("slope for k = 1 on a quintic threefold is 2n - 2") {
    std::vector<CountRecord> records;
    for (std::uint64_t q : {7u, 11u, 13u}) records.push_back(count_vk(fermat_form(4, 5, q), 1));
    // |X| ~ q^3 and |P^3| ~ q^3.
    CHECK(dimension_slope(records).slope == doctest::Approx(6.0).epsilon(0.05));
}

TEST_CASE("Fermat planes: 15 d^3 distinct verified planes") {
    for (int d = 1; d <= 8; ++d) {
        const auto planes = fermat_planes(d);
        CHECK(planes.size() == static_cast<std::size_t>(15 * d * d * d));
        std::set<FermatPlane> distinct(planes.begin(), planes.end());
        CHECK(distinct.size() == planes.size());
    }
    CHECK_THROWS_AS(fermat_planes(0), PreconditionError);
}

TEST_CASE("Fermat plane data is canonical") {
    for (const auto& p : fermat_planes(3)) {
        std::set<int> used;
        for (const auto& [i, j] : p.pairing) {
            CHECK(i < j);
            used.insert(i);
            used.insert(j);
        }
        CHECK(used.size() == 6);
        CHECK(p.pairing[0] < p.pairing[1]);
        CHECK(p.pairing[1] < p.pairing[2]);
        for (int r : p.roots) {
            CHECK(r >= 0);
            CHECK(r < 3);
        }
    }
}

TEST_CASE("verify_plane rejects planes off X and dependent spans") {
    const int d = 3;
    HyperForm<Cyclotomic> f(5, d);
    for (int i = 0; i < 6; ++i) {
        Exponent e(6, 0);
        e[static_cast<std::size_t>(i)] = d;
        f.add_term(e, Cyclotomic(d, {1}));
    }
    const auto good = fermat_planes(d).front().spanning_points(d);
    CHECK(verify_plane(f, good));
    // Coordinate plane x3 = x4 = x5 = 0 is not on X.
    std::array<Vec<Cyclotomic>, 3> coord;
    for (int r = 0; r < 3; ++r) {
        coord[static_cast<std::size_t>(r)] = Vec<Cyclotomic>(6);
        for (int i = 0; i < 6; ++i) coord[static_cast<std::size_t>(r)](i) = Cyclotomic(d, {i == r ? 1 : 0});
    }
    CHECK_FALSE(verify_plane(f, coord));
    CHECK(verify_plane(HyperForm<Cyclotomic>(5, d), coord));
    auto dependent = good;
    dependent[2] = good[0] + good[1];
    CHECK_THROWS_AS(verify_plane(f, dependent), PreconditionError);
}

TEST_CASE("Fermat planes reduce to planes over F_q") {
    // F_13 holds a primitive 6th root of unity (zeta = 4: 4^3 = 64 = -1), so
    // the d = 3 planes can be checked by direct substitution.
    const std::uint64_t q = 13;
    const auto f = fermat_form(5, 3, q);
    const std::int64_t zeta = 4;
    for (const auto& plane : fermat_planes(3)) {
        Mat<Fp> m(6, 3);
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 3; ++c) m(r, c) = Fp(0, q);
        for (int c = 0; c < 3; ++c) {
            const auto [i, j] = plane.pairing[static_cast<std::size_t>(c)];
            std::int64_t w = 1;
            for (int e = 0; e < 2 * plane.roots[static_cast<std::size_t>(c)] + 1; ++e) w = w * zeta % 13;
            m(i, c) = Fp(1, q);
            m(j, c) = Fp(w, q);
        }
        CHECK(f.substitute(m).is_zero());
    }
}
