#ifndef TANGENCY_SCALAR_HPP
#define TANGENCY_SCALAR_HPP

#include "tangency/error.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace tangency {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

bool is_prime(std::uint64_t p);

/// Element of the prime field F_p. The modulus travels with the value; a
/// modulus of 0 marks an untyped integer constant (what Eigen produces for
/// Scalar(0) / Scalar(1)) that adopts the modulus of the other operand.
class Fp {
   public:
    Fp() = default;
    Fp(int c) : constant_(c) {}  // NOLINT: Eigen builds Scalar(0), Scalar(1)
    Fp(std::int64_t value, std::uint64_t p);

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool is_typed() const noexcept { return p_ != 0; }
    bool is_zero() const noexcept { return p_ ? value_ == 0 : constant_ == 0; }

    Fp& operator+=(const Fp& rhs);
    Fp& operator-=(const Fp& rhs);
    Fp& operator*=(const Fp& rhs);
    Fp& operator/=(const Fp& rhs);
    Fp operator-() const;
    Fp inverse() const;

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b);
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string to_string() const;

   private:
    // Resolves both operands to a common modulus.
    static void unify(Fp& a, Fp b);
    void adopt(std::uint64_t p);

    std::uint64_t value_ = 0;
    std::uint64_t p_ = 0;
    std::int64_t constant_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

/// Uniform access to the exact scalars used by the deformation lab.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    struct Context {};
    static Rational from_int(std::int64_t v, const Context&) { return Rational(v); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static std::string to_string(const Rational& x) { return x.str(); }
    /// Integer or "a/b".
    static Rational parse(std::string_view text, const Context&);
};

template <>
struct ScalarOps<Fp> {
    struct Context {
        std::uint64_t p;
    };
    static Fp from_int(std::int64_t v, const Context& ctx) { return Fp(v, ctx.p); }
    static bool is_zero(const Fp& x) { return x.is_zero(); }
    static std::string to_string(const Fp& x) { return x.to_string(); }
    /// Integer or "a/b", reduced mod p.
    static Fp parse(std::string_view text, const Context& ctx);
};

}  // namespace tangency

namespace Eigen {

template <>
struct NumTraits<tangency::Fp> : GenericNumTraits<tangency::Fp> {
    using Real = tangency::Fp;
    using NonInteger = tangency::Fp;
    using Literal = tangency::Fp;
    using Nested = tangency::Fp;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<tangency::Rational> : GenericNumTraits<tangency::Rational> {
    using Real = tangency::Rational;
    using NonInteger = tangency::Rational;
    using Literal = tangency::Rational;
    using Nested = tangency::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif
