#ifndef TANGENCY_INCIDENCE_HPP
#define TANGENCY_INCIDENCE_HPP

#include "tangency/cyclotomic.hpp"
#include "tangency/hyperform.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

// Finite-field experiments on V_k(X) = {(p, l) : p in X, contact of l at p
// >= k}. Dimension statements about V_k hold over algebraically closed
// fields of characteristic 0; point counts over F_q are a plausibility probe
// only, and a slope off target is not evidence against them.

namespace tangency {

struct CountRecord {
    std::uint64_t q = 0;
    int k = 0;
    std::uint64_t count = 0;
    int n = 0;
    int d = 0;
    double elapsed_ms = 0.0;
    std::string source;  // free-form provenance (input file, family name)
    std::optional<std::uint64_t> seed;
};

/// |P^m(F_q)|.
std::uint64_t projective_size(int m, std::uint64_t q);

/// Number of F_q-points of X.
std::uint64_t count_points(const HyperForm<Fp>& f);

/// Exact number of F_q-rational pairs (p, l), p in X, l a line through p with
/// contact >= k at p. Points are normalized (first nonzero coordinate 1) and
/// directions live in the complementary coordinates of that chart, so each
/// projective pair is visited once. Work is split into chunks of points and
/// summed in chunk order.
CountRecord count_vk(const HyperForm<Fp>& f, int k, unsigned threads = 1);

/// Oracle for count_vk: enumerates every line of P^n(F_q) and every point on
/// it. Only practical for tiny q and n.
std::uint64_t count_vk_bruteforce(const HyperForm<Fp>& f, int k);

/// Lines of P^n(F_q) lying on X, each given by two spanning points.
std::vector<std::pair<Vec<Fp>, Vec<Fp>>> lines_on_hypersurface(const HyperForm<Fp>& f);

struct SmoothnessCheck {
    bool no_singular_point_found;
    std::uint64_t points_checked;
    bool exhaustive;
};

/// Looks for F_q-rational singular points: exhaustively when P^n(F_q) has
/// at most `exhaustive_limit` points, otherwise by sampling `samples` random
/// points of X found by rejection.
SmoothnessCheck probably_smooth(const HyperForm<Fp>& f, std::uint64_t samples, std::mt19937_64& rng,
                                std::uint64_t exhaustive_limit = 200000);

struct SlopeReport {
    double slope = 0.0;
    std::vector<double> step_ratios;  // log(c_{i+1}/c_i) / log(q_{i+1}/q_i)
    std::vector<std::uint64_t> q_used;
    std::vector<std::string> warnings;
};

/// Least-squares slope of log(count) against log(q). Zero counts are
/// dropped with a warning; needs >= 3 remaining records with distinct q.
SlopeReport dimension_slope(std::vector<CountRecord> records);

/// Sum of x_i^d over F_q (or any scalar type).
HyperForm<Fp> fermat_form(int n, int d, std::uint64_t q);

/// Plane {x_j = w_r x_i for each pair (i, j)} on the Fermat 4-fold in P^5,
/// w_r = zeta^(2 e_r + 1) a d-th root of -1. Pairs are stored with i < j
/// and sorted, which makes the data canonical.
struct FermatPlane {
    std::array<std::pair<int, int>, 3> pairing;
    std::array<int, 3> roots;

    friend auto operator<=>(const FermatPlane&, const FermatPlane&) = default;
    /// Spanning points e_i + w e_j.
    std::array<Vec<Cyclotomic>, 3> spanning_points(int d) const;
};

/// All 15 d^3 planes, each verified on sum x_i^d over Z[zeta]/(zeta^d+1).
/// Throws AssertionFailure if a plane fails or the planes are not distinct.
std::vector<FermatPlane> fermat_planes(int d);

/// Whether the plane spanned by three points lies on X: substitutes
/// x = u_0 P_0 + u_1 P_1 + u_2 P_2 and tests the result for zero. Throws if
/// every 3x3 minor of the spanning matrix vanishes.
template <class R>
bool verify_plane(const HyperForm<R>& f, const std::array<Vec<R>, 3>& points) {
    const int n = f.ambient();
    Mat<R> m(n + 1, 3);
    for (int c = 0; c < 3; ++c) {
        if (points[static_cast<std::size_t>(c)].size() != n + 1)
            throw PreconditionError("spanning point has the wrong number of coordinates");
        m.col(c) = points[static_cast<std::size_t>(c)];
    }
    bool independent = false;
    for (int r0 = 0; r0 <= n && !independent; ++r0)
        for (int r1 = r0 + 1; r1 <= n && !independent; ++r1)
            for (int r2 = r1 + 1; r2 <= n && !independent; ++r2) {
                auto e = [&](int r, int c) { return m(r, c); };
                const R det = e(r0, 0) * (e(r1, 1) * e(r2, 2) - e(r1, 2) * e(r2, 1)) -
                              e(r0, 1) * (e(r1, 0) * e(r2, 2) - e(r1, 2) * e(r2, 0)) +
                              e(r0, 2) * (e(r1, 0) * e(r2, 1) - e(r1, 1) * e(r2, 0));
                if (!ScalarOps<R>::is_zero(det)) independent = true;
            }
    if (!independent) throw PreconditionError("spanning points are linearly dependent");
    return f.substitute(m).is_zero();
}

}  // namespace tangency

#endif
