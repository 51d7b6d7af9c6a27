#ifndef TANGENCY_BINARY_FORM_HPP
#define TANGENCY_BINARY_FORM_HPP

#include "tangency/scalar.hpp"

#include <optional>
#include <vector>

namespace tangency {

/// Homogeneous form of degree e in (s, t); `coeffs[i]` multiplies s^i t^(e-i).
template <class S>
struct BinaryForm {
    int degree = 0;
    std::vector<S> coeffs;

    BinaryForm() : coeffs(1, S(0)) {}
    BinaryForm(int e, const S& zero) : degree(e), coeffs(static_cast<std::size_t>(e + 1), zero) {}

    /// c_s * s + c_t * t.
    static BinaryForm linear(const S& cs, const S& ct) {
        BinaryForm out(1, S(0));
        out.coeffs[0] = ct;
        out.coeffs[1] = cs;
        return out;
    }

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!ScalarOps<S>::is_zero(c)) return false;
        return true;
    }

    /// s-adic valuation (order of vanishing at [0:1]); nullopt for zero.
    std::optional<int> s_valuation() const {
        for (int i = 0; i <= degree; ++i)
            if (!ScalarOps<S>::is_zero(coeffs[i])) return i;
        return std::nullopt;
    }

    /// Divisible by s^k: the coefficients of s^0..s^(k-1) vanish.
    bool divisible_by_s_power(int k) const {
        for (int i = 0; i < k && i <= degree; ++i)
            if (!ScalarOps<S>::is_zero(coeffs[i])) return false;
        return true;
    }

    BinaryForm& operator+=(const BinaryForm& rhs) {
        if (is_zero()) return *this = rhs;
        if (rhs.is_zero()) return *this;
        if (degree != rhs.degree) throw PreconditionError("adding binary forms of different degree");
        for (int i = 0; i <= degree; ++i) coeffs[i] += rhs.coeffs[i];
        return *this;
    }
    BinaryForm& operator-=(const BinaryForm& rhs) {
        BinaryForm neg = rhs;
        for (auto& c : neg.coeffs) c = -c;
        return *this += neg;
    }
    BinaryForm& scale(const S& c) {
        for (auto& x : coeffs) x *= c;
        return *this;
    }

    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm out(a.degree + b.degree, S(0));
        for (int i = 0; i <= a.degree; ++i) {
            if (ScalarOps<S>::is_zero(a.coeffs[i])) continue;
            for (int j = 0; j <= b.degree; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        }
        return out;
    }
};

/// Constant 1 as a degree-0 form.
template <class S>
BinaryForm<S> binary_one() {
    BinaryForm<S> out(0, S(0));
    out.coeffs[0] = S(1);
    return out;
}

}  // namespace tangency

#endif
