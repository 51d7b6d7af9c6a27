#include "tangency/dpoly.hpp"

#include <algorithm>
#include <sstream>

namespace tangency {

DPoly::DPoly(long long c) : coeffs_{BigInt(c)} { normalize(); }

DPoly::DPoly(BigInt c) : coeffs_{std::move(c)} { normalize(); }

DPoly::DPoly(std::initializer_list<long long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long long c : ascending) coeffs_.emplace_back(c);
    normalize();
}

DPoly::DPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { normalize(); }

DPoly DPoly::monomial(BigInt c, std::size_t k) {
    std::vector<BigInt> v(k + 1);
    v[k] = std::move(c);
    return DPoly(std::move(v));
}

void DPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t DPoly::term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
}

BigInt DPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

DPoly& DPoly::operator+=(const DPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

DPoly& DPoly::operator-=(const DPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

DPoly operator*(const DPoly& lhs, const DPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return DPoly(std::move(out));
}

DPoly& DPoly::operator*=(const DPoly& rhs) { return *this = *this * rhs; }

DPoly DPoly::operator-() const {
    DPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

namespace {

// "*d^k" for descending, " d^k" for ascending; the unit coefficient is elided.
void write_term(std::ostringstream& os, BigInt magnitude, std::size_t k, TermOrder order) {
    const char* join = order == TermOrder::Descending ? "*" : " ";
    if (k == 0) {
        os << magnitude;
        return;
    }
    if (magnitude != 1) os << magnitude << join;
    os << 'd';
    if (k > 1) os << '^' << k;
}

}  // namespace

std::string DPoly::to_string(TermOrder order) const {
    if (is_zero()) return "0";
    std::vector<std::size_t> exps;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) exps.push_back(k);
    if (order == TermOrder::Descending) std::reverse(exps.begin(), exps.end());

    std::ostringstream os;
    bool first = true;
    for (std::size_t k : exps) {
        const BigInt& c = coeffs_[k];
        bool negative = c < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        write_term(os, negative ? BigInt(-c) : c, k, order);
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const DPoly& p) { return os << p.to_string(); }

}  // namespace tangency
