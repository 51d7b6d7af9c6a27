#ifndef TANGENCY_SCHUBERT_HPP
#define TANGENCY_SCHUBERT_HPP

#include "tangency/dpoly.hpp"
#include "tangency/error.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace tangency {

/// Two-row partition (a >= b >= 0) indexing sigma_{a,b} on G(1,n).
struct Partition {
    int a = 0;
    int b = 0;

    int weight() const noexcept { return a + b; }
    /// Fits in the 2 x (n-1) box of G(1,n).
    bool fits(int n) const noexcept { return a >= b && b >= 0 && a <= n - 1; }

    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Element of the Chow ring of G(1,n) = Gr(2, n+1) over Z[d], in the
/// Schubert basis. Terms are kept sorted (a, then b); no zero coefficients
/// and no partitions outside the box are ever stored.
class SchubertElt {
   public:
    using Terms = std::map<Partition, DPoly>;

    enum class Grading { Zero, Homogeneous, Inhomogeneous };
    struct Codim {
        Grading grading;
        int value;  // meaningful for Homogeneous only
    };

    explicit SchubertElt(int n);
    /// c * sigma_p; zero if p falls outside the box.
    SchubertElt(int n, Partition p, DPoly c = DPoly(1));

    static SchubertElt one(int n) { return SchubertElt(n, Partition{0, 0}); }
    static SchubertElt sigma(int n, int a, int b = 0) { return SchubertElt(n, Partition{a, b}); }
    static SchubertElt point(int n) { return SchubertElt(n, Partition{n - 1, n - 1}); }

    int ambient() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    DPoly coeff(Partition p) const;
    Codim codim() const;

    /// Adds c * sigma_p, dropping p when it is outside the box.
    void add_term(Partition p, const DPoly& c);

    SchubertElt& operator+=(const SchubertElt& rhs);
    SchubertElt& operator-=(const SchubertElt& rhs);
    SchubertElt operator-() const;
    SchubertElt& scale(const DPoly& c);

    friend SchubertElt operator+(SchubertElt lhs, const SchubertElt& rhs) { return lhs += rhs; }
    friend SchubertElt operator-(SchubertElt lhs, const SchubertElt& rhs) { return lhs -= rhs; }
    friend SchubertElt operator*(const DPoly& c, SchubertElt x) { return x.scale(c); }
    friend bool operator==(const SchubertElt&, const SchubertElt&) = default;

    /// "35*d^4*s[3,3]"; terms joined by " + ", multi-term coefficients
    /// parenthesized. Zero prints as "0".
    std::string to_string() const;

   private:
    void check_compatible(const SchubertElt& rhs) const;

    int n_;
    Terms terms_;
};

/// Pieri rule: sigma_p * sigma_a as a sum of sigma_mu with mu/p a horizontal
/// strip of size a inside the box.
SchubertElt pieri(Partition p, int a, int n);

/// Ring product. Basis products go through the two-row Giambelli identity
/// sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}.
SchubertElt mult(const SchubertElt& x, const SchubertElt& y);
SchubertElt operator*(const SchubertElt& x, const SchubertElt& y);

SchubertElt power(const SchubertElt& x, int e);

/// Coefficient of the point class. Throws NotTopCodimension unless x is
/// zero or homogeneous of codimension 2(n-1).
DPoly degree(const SchubertElt& x);

}  // namespace tangency

#endif
