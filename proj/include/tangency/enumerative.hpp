#ifndef TANGENCY_ENUMERATIVE_HPP
#define TANGENCY_ENUMERATIVE_HPP

#include "tangency/flag_ring.hpp"

#include <string>
#include <vector>

namespace tangency {

/// Principal parts of order m of O(d) along the fibers of P(S) -> G(1,n).
struct ContactClassSpec {
    int n;
    int m;
};

/// A symbolic count together with the range of d where the geometric
/// statement holds and a trace of how it was computed.
struct BoundResult {
    DPoly polynomial;
    int valid_from_d;
    std::string validity;
    std::vector<std::string> pipeline;

    bool in_range(long long d) const { return d >= valid_from_d; }
};

/// Top Chern class of the relative principal parts bundle,
/// prod_{j=0}^{m} ((d - 2j) H + j sigma_1), reduced. The relative canonical
/// class of P(S) -> G(1,n) is -2H + sigma_1, which gives the j-th factor.
/// Arity 0 means "smallest arity holding the chosen factor".
FlagElt principal_parts_class(const ContactClassSpec& spec, HFactor factor = HFactor::H1, int arity = 0);

/// Upper bound on the number of 2-planes on a smooth 4-fold in P^5:
/// integral of sigma_{1,1} H1 H2 c_5(P^4(O(d))) d H2 over P(S) x_G P(S).
BoundResult plane_bound();

/// The same argument with order-6 contact, assuming Z_6 has expected
/// dimension 3: integral of sigma_{1,1} H1 c_6(P^5(O(d))) over P(S).
BoundResult z6_conditional_bound();

/// Degree of the flecnodal curve of a surface of degree d in P^3.
BoundResult flecnodal_degree();

/// Number of flexes of a plane curve of degree d.
BoundResult flex_count();

/// Number of lines on a general hypersurface of degree d in P^n when
/// d + 1 = 2(n - 1): degree of c_top(Sym^d S^dual) via Chern roots.
BigInt fano_line_count(int n, int d);

/// Two-variable symmetric polynomial in the Chern roots (alpha, beta) of
/// S^dual, as coefficients of alpha^i beta^(w-i), converted to the Schubert
/// basis through s_{(a,b)} = sum_{b<=i<=a} alpha^i beta^(a+b-i). Throws
/// AssertionFailure if the input is not symmetric.
SchubertElt chern_roots_to_schubert(int n, const std::vector<BigInt>& coeffs_by_alpha_power);

}  // namespace tangency

#endif
