#ifndef TANGENCY_FLAG_RING_HPP
#define TANGENCY_FLAG_RING_HPP

#include "tangency/schubert.hpp"

#include <map>
#include <string>
#include <utility>

namespace tangency {

enum class HFactor { H1, H2 };

/// Element of A(P(S)) (arity 1) or A(P(S) x_G P(S)) (arity 2) over G(1,n):
/// a polynomial in H1, H2 with Schubert coefficients. With arity 1 the H2
/// exponent is always 0.
class FlagElt {
   public:
    using Exponents = std::pair<int, int>;
    // Descending exponent order for printing and iteration.
    using Terms = std::map<Exponents, SchubertElt, std::greater<>>;

    FlagElt(int n, int arity);
    FlagElt(const SchubertElt& coeff, int arity, int i = 0, int j = 0);

    static FlagElt one(int n, int arity) { return FlagElt(SchubertElt::one(n), arity); }
    static FlagElt h(int n, int arity, HFactor which);

    int ambient() const noexcept { return n_; }
    int arity() const noexcept { return arity_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Every H exponent is at most 1.
    bool is_reduced() const noexcept;
    SchubertElt coeff(int i, int j) const;

    void add_term(int i, int j, const SchubertElt& c);

    FlagElt& operator+=(const FlagElt& rhs);
    FlagElt& operator-=(const FlagElt& rhs);
    FlagElt operator-() const;
    /// Multiplies every coefficient by a base class.
    FlagElt& scale(const SchubertElt& c);

    friend FlagElt operator+(FlagElt lhs, const FlagElt& rhs) { return lhs += rhs; }
    friend FlagElt operator-(FlagElt lhs, const FlagElt& rhs) { return lhs -= rhs; }
    friend bool operator==(const FlagElt&, const FlagElt&) = default;

    /// Sum of "<SchubertElt>*H1^i*H2^j"; multi-term coefficients are
    /// parenthesized and unit H powers are omitted.
    std::string to_string() const;

   private:
    void check_compatible(const FlagElt& rhs) const;

    int n_;
    int arity_;
    Terms terms_;
};

/// Rewrites H^2 -> sigma_1 H - sigma_{1,1} in each factor until every
/// exponent is <= 1. Highest H1 exponent goes first, then H2.
FlagElt reduce(const FlagElt& x);

/// Distributive product, no reduction.
FlagElt multiply_raw(const FlagElt& x, const FlagElt& y);

/// reduce(multiply_raw(x, y)).
FlagElt mult_flag(const FlagElt& x, const FlagElt& y);

/// Reduced power.
FlagElt power(const FlagElt& x, int e);

/// Same element viewed in the ring of higher arity (arity 1 -> 2).
FlagElt lift(const FlagElt& x, int arity);

/// Drops every term whose exponent of `which` is >= bound.
FlagElt drop_h_degree(const FlagElt& x, HFactor which, int bound);

/// Pushforward to G(1,n): coefficient of H1*H2 (arity 2) or H1 (arity 1)
/// after reduction.
SchubertElt pushforward(const FlagElt& x);

/// degree(pushforward(x)).
DPoly integrate(const FlagElt& x);

/// Closed form H^m = sigma_{m-1} H - sigma_{m-1,1} (m >= 1) on P(S).
FlagElt h_power_closed_form(int n, int m);

}  // namespace tangency

#endif
