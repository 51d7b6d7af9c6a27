#include "tangency/schubert.hpp"

#include <algorithm>
#include <sstream>

namespace tangency {

SchubertElt::SchubertElt(int n) : n_(n) {
    if (n < 1) throw PreconditionError("G(1,n) needs n >= 1, got " + std::to_string(n));
}

SchubertElt::SchubertElt(int n, Partition p, DPoly c) : SchubertElt(n) { add_term(p, c); }

DPoly SchubertElt::coeff(Partition p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? DPoly() : it->second;
}

SchubertElt::Codim SchubertElt::codim() const {
    if (terms_.empty()) return {Grading::Zero, 0};
    const int w = terms_.begin()->first.weight();
    for (const auto& [p, c] : terms_)
        if (p.weight() != w) return {Grading::Inhomogeneous, 0};
    return {Grading::Homogeneous, w};
}

void SchubertElt::add_term(Partition p, const DPoly& c) {
    if (c.is_zero() || !p.fits(n_)) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SchubertElt::check_compatible(const SchubertElt& rhs) const {
    if (n_ != rhs.n_)
        throw IncompatibleRings("Schubert classes on G(1," + std::to_string(n_) + ") and G(1," +
                                std::to_string(rhs.n_) + ") live in different rings");
}

SchubertElt& SchubertElt::operator+=(const SchubertElt& rhs) {
    check_compatible(rhs);
    for (const auto& [p, c] : rhs.terms_) add_term(p, c);
    return *this;
}

SchubertElt& SchubertElt::operator-=(const SchubertElt& rhs) {
    check_compatible(rhs);
    for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
    return *this;
}

SchubertElt SchubertElt::operator-() const {
    SchubertElt out = *this;
    for (auto& [p, c] : out.terms_) c = -c;
    return out;
}

SchubertElt& SchubertElt::scale(const DPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, coeff] : terms_) coeff *= c;
    return *this;
}

std::string SchubertElt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c.term_count() > 1)
            os << '(' << c.to_string() << ')';
        else
            os << c.to_string();
        os << "*s[" << p.a << ',' << p.b << ']';
    }
    return os.str();
}

SchubertElt pieri(Partition p, int a, int n) {
    SchubertElt out(n);
    if (!p.fits(n) || a < 0) return out;
    const int total = p.weight() + a;
    // mu = (a', b') with b <= b' <= a (horizontal strip) and a' >= a.
    for (int b2 = p.b; b2 <= p.a; ++b2) {
        const int a2 = total - b2;
        if (a2 < p.a) continue;
        out.add_term(Partition{a2, b2}, DPoly(1));
    }
    return out;
}

namespace {

// sigma_c * x, applying Pieri termwise.
SchubertElt special_times(int c, const SchubertElt& x) {
    SchubertElt out(x.ambient());
    if (c < 0) return out;
    for (const auto& [p, coeff] : x.terms()) {
        const SchubertElt strip = pieri(p, c, x.ambient());
        for (const auto& [mu, one] : strip.terms()) out.add_term(mu, coeff);
    }
    return out;
}

// sigma_{a,b} * x via Giambelli, recursing on b.
SchubertElt basis_times(Partition p, const SchubertElt& x) {
    if (p.b == 0) return special_times(p.a, x);
    SchubertElt lhs = special_times(p.a, special_times(p.b, x));
    SchubertElt rhs = special_times(p.a + 1, basis_times(Partition{p.b - 1, 0}, x));
    return lhs - rhs;
}

}  // namespace

SchubertElt mult(const SchubertElt& x, const SchubertElt& y) {
    if (x.ambient() != y.ambient())
        throw IncompatibleRings("cannot multiply classes on G(1," + std::to_string(x.ambient()) +
                                ") and G(1," + std::to_string(y.ambient()) + ")");
    // Iterate over the shorter operand.
    const SchubertElt& small = x.terms().size() <= y.terms().size() ? x : y;
    const SchubertElt& large = &small == &x ? y : x;
    SchubertElt out(x.ambient());
    for (const auto& [p, c] : small.terms()) {
        SchubertElt prod = basis_times(p, large);
        out += prod.scale(c);
    }
    return out;
}

SchubertElt operator*(const SchubertElt& x, const SchubertElt& y) { return mult(x, y); }

SchubertElt power(const SchubertElt& x, int e) {
    if (e < 0) throw PreconditionError("negative exponent");
    SchubertElt out = SchubertElt::one(x.ambient());
    for (int i = 0; i < e; ++i) out = out * x;
    return out;
}

DPoly degree(const SchubertElt& x) {
    const int top = 2 * (x.ambient() - 1);
    const auto cd = x.codim();
    switch (cd.grading) {
        case SchubertElt::Grading::Zero:
            return {};
        case SchubertElt::Grading::Inhomogeneous:
            throw NotTopCodimension("not top codimension: class is inhomogeneous");
        case SchubertElt::Grading::Homogeneous:
            if (cd.value != top)
                throw NotTopCodimension("not top codimension: codim " + std::to_string(cd.value) +
                                        " but dim G(1," + std::to_string(x.ambient()) + ") is " +
                                        std::to_string(top));
            break;
    }
    return x.coeff(Partition{x.ambient() - 1, x.ambient() - 1});
}

}  // namespace tangency
