#include "tangency/enumerative.hpp"

namespace tangency {

namespace {

FlagElt linear(int n, int arity, HFactor h, const DPoly& h_coeff, const DPoly& s1_coeff) {
    FlagElt out(n, arity);
    if (h == HFactor::H1)
        out.add_term(1, 0, SchubertElt(n, Partition{0, 0}, h_coeff));
    else
        out.add_term(0, 1, SchubertElt(n, Partition{0, 0}, h_coeff));
    out.add_term(0, 0, SchubertElt(n, Partition{1, 0}, s1_coeff));
    return out;
}

FlagElt base_class(int n, int arity, Partition p) { return FlagElt(SchubertElt(n, p), arity); }

}  // namespace

FlagElt principal_parts_class(const ContactClassSpec& spec, HFactor factor, int arity) {
    if (spec.n < 2) throw PreconditionError("principal parts class needs n >= 2");
    if (spec.m < 0) throw PreconditionError("principal parts order must be >= 0");
    if (arity == 0) arity = factor == HFactor::H2 ? 2 : 1;
    FlagElt out = FlagElt::one(spec.n, arity);
    const DPoly d = DPoly::d();
    for (int j = 0; j <= spec.m; ++j)
        out = mult_flag(out, linear(spec.n, arity, factor, d - DPoly(2 * j), DPoly(j)));
    return out;
}

BoundResult plane_bound() {
    constexpr int n = 5;
    FlagElt integrand = base_class(n, 2, {1, 1});
    integrand = mult_flag(integrand, FlagElt::h(n, 2, HFactor::H1));
    integrand = mult_flag(integrand, FlagElt::h(n, 2, HFactor::H2));
    integrand = mult_flag(integrand, principal_parts_class({n, 4}, HFactor::H1, 2));
    integrand = mult_flag(integrand, linear(n, 2, HFactor::H2, DPoly::d(), DPoly()));
    return {integrate(integrand),
            5,
            "upper bound on 2-planes in a smooth degree-d 4-fold in P^5, valid for d >= 5",
            {"ambient G(1,5), fiber square P(S) x_G P(S)",
             "Z_{5,1} = c_5(P^4(O(d))) in H1 times d*H2",
             "multiply by sigma_{1,1} (restrict to G(1,4)) and H1*H2",
             "reduce by H_i^2 = sigma_1 H_i - sigma_{1,1}",
             "push forward (coefficient of H1*H2) and take degree on G(1,5)"}};
}

BoundResult z6_conditional_bound() {
    constexpr int n = 5;
    FlagElt integrand = base_class(n, 1, {1, 1});
    integrand = mult_flag(integrand, FlagElt::h(n, 1, HFactor::H1));
    integrand = mult_flag(integrand, principal_parts_class({n, 5}, HFactor::H1, 1));
    return {integrate(integrand),
            6,
            "conditional: assumes Z6 of expected dimension 3; d >= 6",
            {"ambient G(1,5), universal line P(S)",
             "Z_6 = c_6(P^5(O(d))) in H1",
             "multiply by sigma_{1,1} and H1",
             "reduce by H1^2 = sigma_1 H1 - sigma_{1,1}",
             "push forward (coefficient of H1) and take degree on G(1,5)"}};
}

BoundResult flecnodal_degree() {
    constexpr int n = 3;
    FlagElt integrand = mult_flag(FlagElt::h(n, 1, HFactor::H1), principal_parts_class({n, 3}, HFactor::H1, 1));
    return {integrate(integrand),
            3,
            "degree of the flecnodal curve of a smooth surface in P^3, valid for d >= 3",
            {"ambient G(1,3), universal line P(S)",
             "order-4 contact locus = c_4(P^3(O(d))) in H1",
             "multiply by H1 (hyperplane section of the swept curve)",
             "reduce, push forward, take degree on G(1,3)"}};
}

BoundResult flex_count() {
    constexpr int n = 2;
    // The contact-3 locus is already finite on the 3-dimensional P(S), so no
    // extra hyperplane factor.
    FlagElt integrand = principal_parts_class({n, 2}, HFactor::H1, 1);
    return {integrate(integrand),
            3,
            "number of flexes of a smooth plane curve, valid for d >= 3",
            {"ambient G(1,2), universal line P(S)",
             "order-3 contact locus = c_3(P^2(O(d))) in H1",
             "reduce, push forward, take degree on G(1,2)"}};
}

SchubertElt chern_roots_to_schubert(int n, const std::vector<BigInt>& coeffs_by_alpha_power) {
    std::vector<BigInt> rem = coeffs_by_alpha_power;
    const int w = static_cast<int>(rem.size()) - 1;
    SchubertElt out(n);
    if (w < 0) return out;
    // Peel off the lexicographically largest monomial alpha^a beta^b.
    for (int a = w; a >= 0; --a) {
        if (rem[a] == 0) continue;
        const int b = w - a;
        if (a < b) throw AssertionFailure("Chern-root polynomial is not symmetric");
        const BigInt c = rem[a];
        for (int i = b; i <= a; ++i) rem[i] -= c;
        out.add_term(Partition{a, b}, DPoly(c));
    }
    for (const auto& c : rem)
        if (c != 0) throw AssertionFailure("nonzero remainder in Schur conversion");
    return out;
}

BigInt fano_line_count(int n, int d) {
    if (n < 2 || d < 1) throw PreconditionError("fano_line_count needs n >= 2 and d >= 1");
    if (d + 1 != 2 * (n - 1))
        throw PreconditionError("expected dimension of the Fano scheme is 2(n-1) - (d+1) = " +
                                std::to_string(2 * (n - 1) - (d + 1)) + ", not 0; need d + 1 = 2(n - 1)");
    // prod_j (j alpha + (d-j) beta), stored by alpha exponent.
    std::vector<BigInt> poly{1};
    for (int j = 0; j <= d; ++j) {
        std::vector<BigInt> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i] * j;
            next[i] += poly[i] * (d - j);
        }
        poly = std::move(next);
    }
    const DPoly deg = degree(chern_roots_to_schubert(n, poly));
    return deg.coeff(0);
}

}  // namespace tangency
