#ifndef TANGENCY_DPOLY_HPP
#define TANGENCY_DPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace tangency {

using BigInt = boost::multiprecision::cpp_int;

enum class TermOrder { Descending, Ascending };

/// Univariate polynomial in the formal degree variable d with integer
/// coefficients. `coeffs()[i]` is the coefficient of d^i; trailing zeros are
/// never stored, so the zero polynomial has no coefficients.
class DPoly {
   public:
    DPoly() = default;
    DPoly(long long c);  // NOLINT: constants convert implicitly
    DPoly(BigInt c);     // NOLINT
    DPoly(std::initializer_list<long long> ascending);
    explicit DPoly(std::vector<BigInt> ascending);

    /// The monomial c*d^k.
    static DPoly monomial(BigInt c, std::size_t k);
    /// The variable d.
    static DPoly d() { return monomial(1, 1); }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// Degree in d; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
    std::size_t term_count() const;

    BigInt evaluate(const BigInt& x) const;

    DPoly& operator+=(const DPoly& rhs);
    DPoly& operator-=(const DPoly& rhs);
    DPoly& operator*=(const DPoly& rhs);
    DPoly operator-() const;

    friend DPoly operator+(DPoly lhs, const DPoly& rhs) { return lhs += rhs; }
    friend DPoly operator-(DPoly lhs, const DPoly& rhs) { return lhs -= rhs; }
    friend DPoly operator*(const DPoly& lhs, const DPoly& rhs);
    friend bool operator==(const DPoly&, const DPoly&) = default;

    /// Canonical text. Descending: "35*d^4 - 150*d^3 + 120*d^2".
    /// Ascending reproduces the spacing of a Mathematica-style printout:
    /// "120 d^2 - 150 d^3 + 35 d^4".
    std::string to_string(TermOrder order = TermOrder::Descending) const;

   private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const DPoly& p);

}  // namespace tangency

#endif
