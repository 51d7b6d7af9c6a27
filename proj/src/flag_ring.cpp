#include "tangency/flag_ring.hpp"

#include <sstream>

namespace tangency {

FlagElt::FlagElt(int n, int arity) : n_(n), arity_(arity) {
    if (arity != 1 && arity != 2) throw PreconditionError("flag ring arity must be 1 or 2");
    if (n < 1) throw PreconditionError("G(1,n) needs n >= 1");
}

FlagElt::FlagElt(const SchubertElt& coeff, int arity, int i, int j) : FlagElt(coeff.ambient(), arity) {
    add_term(i, j, coeff);
}

FlagElt FlagElt::h(int n, int arity, HFactor which) {
    if (which == HFactor::H2 && arity != 2) throw PreconditionError("H2 only exists in arity 2");
    return which == HFactor::H1 ? FlagElt(SchubertElt::one(n), arity, 1, 0)
                                : FlagElt(SchubertElt::one(n), arity, 0, 1);
}

bool FlagElt::is_reduced() const noexcept {
    for (const auto& [e, c] : terms_)
        if (e.first > 1 || e.second > 1) return false;
    return true;
}

SchubertElt FlagElt::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? SchubertElt(n_) : it->second;
}

void FlagElt::add_term(int i, int j, const SchubertElt& c) {
    if (c.ambient() != n_) throw IncompatibleRings("coefficient lives on a different Grassmannian");
    if (i < 0 || j < 0) throw PreconditionError("negative H exponent");
    if (arity_ == 1 && j != 0) throw PreconditionError("H2 term in an arity-1 element");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FlagElt::check_compatible(const FlagElt& rhs) const {
    if (n_ != rhs.n_ || arity_ != rhs.arity_)
        throw IncompatibleRings("flag ring elements differ in ambient n or arity");
}

FlagElt& FlagElt::operator+=(const FlagElt& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
    return *this;
}

FlagElt& FlagElt::operator-=(const FlagElt& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, -c);
    return *this;
}

FlagElt FlagElt::operator-() const {
    FlagElt out(n_, arity_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

FlagElt& FlagElt::scale(const SchubertElt& c) {
    Terms scaled;
    for (const auto& [e, coeff] : terms_) {
        SchubertElt prod = coeff * c;
        if (!prod.is_zero()) scaled.emplace(e, std::move(prod));
    }
    terms_ = std::move(scaled);
    return *this;
}

std::string FlagElt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool bare = e.first == 0 && e.second == 0;
        if (c.terms().size() > 1 && !bare)
            os << '(' << c.to_string() << ')';
        else
            os << c.to_string();
        auto factor = [&](const char* name, int exp) {
            if (exp == 0) return;
            os << '*' << name;
            if (exp > 1) os << '^' << exp;
        };
        factor("H1", e.first);
        factor("H2", e.second);
    }
    return os.str();
}

FlagElt reduce(const FlagElt& x) {
    const int n = x.ambient();
    const SchubertElt s1 = SchubertElt::sigma(n, 1);
    const SchubertElt s11 = SchubertElt::sigma(n, 1, 1);
    FlagElt cur = x;
    // H1 first, highest exponent first, then the same for H2. The relations
    // involve disjoint variables so the order does not change the result.
    for (int factor = 0; factor < 2; ++factor) {
        for (;;) {
            int top = -1;
            for (const auto& [e, c] : cur.terms()) top = std::max(top, factor == 0 ? e.first : e.second);
            if (top <= 1) break;
            FlagElt next(n, x.arity());
            for (const auto& [e, c] : cur.terms()) {
                const int exp = factor == 0 ? e.first : e.second;
                if (exp != top) {
                    next.add_term(e.first, e.second, c);
                    continue;
                }
                const int di = factor == 0 ? 1 : 0;
                const int dj = factor == 0 ? 0 : 1;
                next.add_term(e.first - di, e.second - dj, c * s1);
                next.add_term(e.first - 2 * di, e.second - 2 * dj, -(c * s11));
            }
            cur = std::move(next);
        }
    }
    return cur;
}

FlagElt multiply_raw(const FlagElt& x, const FlagElt& y) {
    if (x.ambient() != y.ambient() || x.arity() != y.arity())
        throw IncompatibleRings("flag ring elements differ in ambient n or arity");
    FlagElt out(x.ambient(), x.arity());
    for (const auto& [ex, cx] : x.terms())
        for (const auto& [ey, cy] : y.terms())
            out.add_term(ex.first + ey.first, ex.second + ey.second, cx * cy);
    return out;
}

FlagElt mult_flag(const FlagElt& x, const FlagElt& y) { return reduce(multiply_raw(x, y)); }

FlagElt power(const FlagElt& x, int e) {
    if (e < 0) throw PreconditionError("negative exponent");
    FlagElt out = FlagElt::one(x.ambient(), x.arity());
    for (int i = 0; i < e; ++i) out = mult_flag(out, x);
    return out;
}

FlagElt lift(const FlagElt& x, int arity) {
    if (arity < x.arity()) throw PreconditionError("cannot lower arity");
    FlagElt out(x.ambient(), arity);
    for (const auto& [e, c] : x.terms()) out.add_term(e.first, e.second, c);
    return out;
}

FlagElt drop_h_degree(const FlagElt& x, HFactor which, int bound) {
    FlagElt out(x.ambient(), x.arity());
    for (const auto& [e, c] : x.terms()) {
        const int exp = which == HFactor::H1 ? e.first : e.second;
        if (exp < bound) out.add_term(e.first, e.second, c);
    }
    return out;
}

SchubertElt pushforward(const FlagElt& x) {
    const FlagElt r = x.is_reduced() ? x : reduce(x);
    return x.arity() == 2 ? r.coeff(1, 1) : r.coeff(1, 0);
}

DPoly integrate(const FlagElt& x) { return degree(pushforward(x)); }

FlagElt h_power_closed_form(int n, int m) {
    if (m < 1) throw PreconditionError("closed form needs m >= 1");
    FlagElt out(n, 1);
    out.add_term(1, 0, SchubertElt::sigma(n, m - 1));
    if (m >= 2) out.add_term(0, 0, -SchubertElt::sigma(n, m - 1, 1));
    return out;
}

}  // namespace tangency
