#include "tangency/scalar.hpp"

#include <charconv>

namespace tangency {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

namespace {

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
    const auto sp = static_cast<std::int64_t>(p);
    std::int64_t r = v % sp;
    if (r < 0) r += sp;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

Fp::Fp(std::int64_t value, std::uint64_t p) : p_(p) {
    if (p < 2) throw PreconditionError("F_p modulus must be a prime >= 2");
    value_ = reduce_signed(value, p);
}

void Fp::adopt(std::uint64_t p) {
    if (p_ != 0 || p == 0) return;
    value_ = reduce_signed(constant_, p);
    p_ = p;
    constant_ = 0;
}

void Fp::unify(Fp& a, Fp b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) throw IncompatibleRings("F_p elements with different moduli");
}

Fp& Fp::operator+=(const Fp& rhs) {
    Fp b = rhs;
    unify(*this, b);
    if (!p_ && !b.p_) {
        constant_ += b.constant_;
        return *this;
    }
    adopt(b.p_);
    b.adopt(p_);
    value_ += b.value_;
    if (value_ >= p_) value_ -= p_;
    return *this;
}

Fp& Fp::operator-=(const Fp& rhs) { return *this += -rhs; }

Fp& Fp::operator*=(const Fp& rhs) {
    Fp b = rhs;
    unify(*this, b);
    if (!p_ && !b.p_) {
        constant_ *= b.constant_;
        return *this;
    }
    adopt(b.p_);
    b.adopt(p_);
    value_ = mul_mod(value_, b.value_, p_);
    return *this;
}

Fp Fp::inverse() const {
    if (is_zero()) throw PreconditionError("division by zero in F_p");
    if (!p_) {
        if (constant_ == 1 || constant_ == -1) return *this;
        throw PreconditionError("cannot invert an untyped integer constant");
    }
    Fp out = *this;
    out.value_ = pow_mod(value_, p_ - 2, p_);
    return out;
}

Fp& Fp::operator/=(const Fp& rhs) {
    Fp b = rhs;
    unify(*this, b);
    b.adopt(p_);
    return *this *= b.inverse();
}

Fp Fp::operator-() const {
    Fp out = *this;
    if (!p_)
        out.constant_ = -constant_;
    else if (value_ != 0)
        out.value_ = p_ - value_;
    return out;
}

bool operator==(const Fp& a, const Fp& b) {
    if (!a.p_ && !b.p_) return a.constant_ == b.constant_;
    Fp x = a;
    Fp y = b;
    Fp::unify(x, y);
    x.adopt(y.p_);
    y.adopt(x.p_);
    return x.value_ == y.value_;
}

std::string Fp::to_string() const { return p_ ? std::to_string(value_) : std::to_string(constant_); }

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.to_string(); }

namespace {

std::pair<std::string_view, std::string_view> split_fraction(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return {text, {}};
    return {text.substr(0, slash), text.substr(slash + 1)};
}

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rational ScalarOps<Rational>::parse(std::string_view text, const Context&) {
    auto [num, den] = split_fraction(text);
    if (!is_integer_literal(num) || (!den.empty() && !is_integer_literal(den)))
        throw PreconditionError("not a rational literal: '" + std::string(text) + "'");
    auto strip = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
    boost::multiprecision::cpp_int n(strip(num));
    boost::multiprecision::cpp_int d = den.empty() ? 1 : boost::multiprecision::cpp_int(strip(den));
    if (d == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
    return Rational(n) / Rational(d);
}

Fp ScalarOps<Fp>::parse(std::string_view text, const Context& ctx) {
    auto [num, den] = split_fraction(text);
    auto parse_int = [&](std::string_view s) {
        if (!is_integer_literal(s)) throw PreconditionError("not an integer literal: '" + std::string(s) + "'");
        boost::multiprecision::cpp_int v(std::string(s[0] == '+' ? s.substr(1) : s));
        boost::multiprecision::cpp_int r = v % ctx.p;
        if (r < 0) r += ctx.p;
        return Fp(r.convert_to<std::int64_t>(), ctx.p);
    };
    Fp value = parse_int(num);
    if (!den.empty()) value /= parse_int(den);
    return value;
}

}  // namespace tangency
