#ifndef TANGENCY_HYPERFORM_HPP
#define TANGENCY_HYPERFORM_HPP

#include "tangency/binary_form.hpp"
#include "tangency/linalg.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace tangency {

using Exponent = std::vector<int>;

/// Homogeneous polynomial of degree d in x_0..x_n with exact coefficients.
template <class S>
class HyperForm {
   public:
    using Terms = std::map<Exponent, S>;

    HyperForm(int n, int d) : n_(n), d_(d) {
        if (n < 1) throw PreconditionError("hypersurface needs n >= 1");
        if (d < 0) throw PreconditionError("negative degree");
    }

    /// The coordinate x_i.
    static HyperForm variable(int n, int i) {
        HyperForm out(n, 1);
        Exponent e(static_cast<std::size_t>(n + 1), 0);
        e[static_cast<std::size_t>(i)] = 1;
        out.add_term(e, S(1));
        return out;
    }

    static HyperForm constant(int n, const S& c) {
        HyperForm out(n, 0);
        out.add_term(Exponent(static_cast<std::size_t>(n + 1), 0), c);
        return out;
    }

    /// Sum of c_i x_i.
    static HyperForm linear(const Vec<S>& c) {
        const int n = static_cast<int>(c.size()) - 1;
        HyperForm out(n, 1);
        for (int i = 0; i <= n; ++i) {
            Exponent e(static_cast<std::size_t>(n + 1), 0);
            e[static_cast<std::size_t>(i)] = 1;
            out.add_term(e, c(i));
        }
        return out;
    }

    int ambient() const noexcept { return n_; }
    int degree() const noexcept { return d_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    S coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? S(0) : it->second;
    }

    void add_term(const Exponent& e, const S& c) {
        if (static_cast<int>(e.size()) != n_ + 1)
            throw PreconditionError("exponent vector has " + std::to_string(e.size()) + " entries, expected " +
                                    std::to_string(n_ + 1));
        int sum = 0;
        for (int x : e) {
            if (x < 0) throw PreconditionError("negative exponent");
            sum += x;
        }
        if (sum != d_)
            throw PreconditionError("monomial of degree " + std::to_string(sum) + " in a form of degree " +
                                    std::to_string(d_));
        if (ScalarOps<S>::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (ScalarOps<S>::is_zero(it->second)) terms_.erase(it);
        }
    }

    HyperForm& operator+=(const HyperForm& rhs) {
        check_same_space(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }
    HyperForm& operator-=(const HyperForm& rhs) {
        check_same_space(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }
    HyperForm& scale(const S& c) {
        if (ScalarOps<S>::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, x] : terms_) x *= c;
        return *this;
    }

    friend HyperForm operator+(HyperForm a, const HyperForm& b) { return a += b; }
    friend HyperForm operator-(HyperForm a, const HyperForm& b) { return a -= b; }
    friend HyperForm operator*(const HyperForm& a, const HyperForm& b) {
        if (a.n_ != b.n_) throw IncompatibleRings("forms in different numbers of variables");
        HyperForm out(a.n_, a.d_ + b.d_);
        Exponent e(static_cast<std::size_t>(a.n_ + 1));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    friend bool operator==(const HyperForm& a, const HyperForm& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
    }

    HyperForm pow(int e) const {
        HyperForm out = constant(n_, S(1));
        for (int i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    /// d/dx_i.
    HyperForm partial(int i) const {
        if (d_ == 0) return HyperForm(n_, 0);
        HyperForm out(n_, d_ - 1);
        const auto idx = static_cast<std::size_t>(i);
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exponent f = e;
            --f[idx];
            out.add_term(f, c * S(e[idx]));
        }
        return out;
    }

    S evaluate(const Vec<S>& x) const {
        S acc(0);
        for (const auto& [e, c] : terms_) {
            S m = c;
            for (int i = 0; i <= n_; ++i)
                for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) m *= x(i);
            acc += m;
        }
        return acc;
    }

    /// Pullback along x_i = a_i(s,t), where row i of `line` holds
    /// (coefficient of s, coefficient of t).
    BinaryForm<S> pullback(const Eigen::Matrix<S, Eigen::Dynamic, 2>& line) const {
        if (line.rows() != n_ + 1) throw PreconditionError("line has the wrong number of coordinates");
        // powers[i][k] = a_i^k
        std::vector<std::vector<BinaryForm<S>>> powers(static_cast<std::size_t>(n_ + 1));
        for (int i = 0; i <= n_; ++i) {
            auto& pw = powers[static_cast<std::size_t>(i)];
            pw.push_back(binary_one<S>());
            const auto a = BinaryForm<S>::linear(line(i, 0), line(i, 1));
            for (int k = 1; k <= d_; ++k) pw.push_back(pw.back() * a);
        }
        BinaryForm<S> out(d_, S(0));
        for (const auto& [e, c] : terms_) {
            BinaryForm<S> m = binary_one<S>();
            m.scale(c);
            for (int i = 0; i <= n_; ++i) {
                const int k = e[static_cast<std::size_t>(i)];
                if (k) m = m * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            }
            for (int i = 0; i <= d_; ++i) out.coeffs[i] += m.coeffs[i];
        }
        return out;
    }

    /// G(y) = F(M y), i.e. x_j = sum_i M(j,i) y_i. M is (n+1) x (m+1); the
    /// result is a form in y_0..y_m.
    HyperForm substitute(const Mat<S>& m) const {
        if (m.rows() != n_ + 1 || m.cols() < 1) throw PreconditionError("substitution matrix shape");
        const int target = static_cast<int>(m.cols()) - 1;
        std::vector<std::vector<HyperForm>> powers(static_cast<std::size_t>(n_ + 1));
        for (int j = 0; j <= n_; ++j) {
            auto& pw = powers[static_cast<std::size_t>(j)];
            pw.push_back(constant(target, S(1)));
            Vec<S> row = m.row(j).transpose();
            const HyperForm lin = linear(row);
            for (int k = 1; k <= d_; ++k) pw.push_back(pw.back() * lin);
        }
        HyperForm out(target, d_);
        for (const auto& [e, c] : terms_) {
            HyperForm term = constant(target, c);
            for (int j = 0; j <= n_; ++j) {
                const int k = e[static_cast<std::size_t>(j)];
                if (k) term = term * powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            }
            out += term;
        }
        return out;
    }

    /// Terms joined by " + ", e.g. "1*x0*x2 + -1*x1^2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << ScalarOps<S>::to_string(it->second);
            for (int i = 0; i <= n_; ++i) {
                const int k = it->first[static_cast<std::size_t>(i)];
                if (k == 0) continue;
                os << "*x" << i;
                if (k > 1) os << '^' << k;
            }
        }
        return os.str();
    }

   private:
    void check_same_space(const HyperForm& rhs) const {
        if (n_ != rhs.n_ || d_ != rhs.d_) throw IncompatibleRings("forms of different shape");
    }

    int n_;
    int d_;
    Terms terms_;
};

/// All exponent vectors of length n+1 summing to d, lexicographic.
inline std::vector<Exponent> monomials(int n, int d) {
    std::vector<Exponent> out;
    Exponent e(static_cast<std::size_t>(n + 1), 0);
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == n) {
            e[static_cast<std::size_t>(idx)] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<std::size_t>(idx)] = k;
            self(self, idx + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

}  // namespace tangency

#endif
