#ifndef TANGENCY_CYCLOTOMIC_HPP
#define TANGENCY_CYCLOTOMIC_HPP

#include "tangency/scalar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tangency {

/// Element of Z[zeta]/(zeta^d + 1), so zeta is a primitive 2d-th root of
/// unity and zeta^(2e+1), 0 <= e < d, are the d-th roots of -1.
/// `coeffs[i]` multiplies zeta^i. As with Fp, d = 0 marks an untyped integer.
class Cyclotomic {
   public:
    Cyclotomic() = default;
    Cyclotomic(int c) : coeffs_{c} {}  // NOLINT
    Cyclotomic(int d, std::vector<std::int64_t> coeffs);

    /// zeta^m, reduced with zeta^d = -1.
    static Cyclotomic zeta_power(int d, long long m);
    /// zeta^(2e+1), the e-th d-th root of -1.
    static Cyclotomic root_of_minus_one(int d, int e) { return zeta_power(d, 2LL * e + 1); }

    int order() const noexcept { return d_; }
    bool is_zero() const noexcept;

    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic operator-() const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string to_string() const;

   private:
    void adopt(int d);

    int d_ = 0;
    std::vector<std::int64_t> coeffs_{0};
};

template <>
struct ScalarOps<Cyclotomic> {
    struct Context {
        int d;
    };
    static Cyclotomic from_int(std::int64_t v, const Context& ctx) { return Cyclotomic(ctx.d, {v}); }
    static bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
    static std::string to_string(const Cyclotomic& x) { return x.to_string(); }
};

}  // namespace tangency

namespace Eigen {

template <>
struct NumTraits<tangency::Cyclotomic> : GenericNumTraits<tangency::Cyclotomic> {
    using Real = tangency::Cyclotomic;
    using NonInteger = tangency::Cyclotomic;
    using Literal = tangency::Cyclotomic;
    using Nested = tangency::Cyclotomic;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 8,
        MulCost = 32
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif
