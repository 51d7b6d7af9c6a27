#include "tangency/cyclotomic.hpp"

#include <sstream>

namespace tangency {

Cyclotomic::Cyclotomic(int d, std::vector<std::int64_t> coeffs) : d_(d), coeffs_(std::move(coeffs)) {
    if (d < 1) throw PreconditionError("Z[zeta]/(zeta^d+1) needs d >= 1");
    // Fold higher powers with zeta^d = -1.
    std::vector<std::int64_t> folded(static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const std::size_t wraps = i / static_cast<std::size_t>(d);
        const std::int64_t sign = wraps % 2 == 0 ? 1 : -1;
        folded[i % static_cast<std::size_t>(d)] += sign * coeffs_[i];
    }
    coeffs_ = std::move(folded);
}

Cyclotomic Cyclotomic::zeta_power(int d, long long m) {
    if (d < 1) throw PreconditionError("Z[zeta]/(zeta^d+1) needs d >= 1");
    const long long period = 2LL * d;
    long long r = m % period;
    if (r < 0) r += period;
    std::vector<std::int64_t> c(static_cast<std::size_t>(d), 0);
    if (r < d)
        c[static_cast<std::size_t>(r)] = 1;
    else
        c[static_cast<std::size_t>(r - d)] = -1;
    return Cyclotomic(d, std::move(c));
}

bool Cyclotomic::is_zero() const noexcept {
    for (auto c : coeffs_)
        if (c != 0) return false;
    return true;
}

void Cyclotomic::adopt(int d) {
    if (d_ != 0 || d == 0) return;
    std::vector<std::int64_t> c(static_cast<std::size_t>(d), 0);
    c[0] = coeffs_.empty() ? 0 : coeffs_[0];
    coeffs_ = std::move(c);
    d_ = d;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (d_ && rhs.d_ && d_ != rhs.d_) throw IncompatibleRings("cyclotomic elements of different order");
    Cyclotomic b = rhs;
    adopt(b.d_);
    b.adopt(d_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    if (d_ && rhs.d_ && d_ != rhs.d_) throw IncompatibleRings("cyclotomic elements of different order");
    Cyclotomic b = rhs;
    adopt(b.d_);
    b.adopt(d_);
    if (d_ == 0) {
        coeffs_[0] *= b.coeffs_[0];
        return *this;
    }
    const auto d = static_cast<std::size_t>(d_);
    std::vector<std::int64_t> out(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t k = i + j;
            if (k < d)
                out[k] += coeffs_[i] * b.coeffs_[j];
            else
                out[k - d] -= coeffs_[i] * b.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[i];
        if (i > 0) os << "*z^" << i;
    }
    return os.str();
}

}  // namespace tangency
