#ifndef SAP_UPOLY_HPP
#define SAP_UPOLY_HPP

#include <string>
#include <vector>

#include "sap/numbers.hpp"
#include "sap/poly.hpp"

namespace sap {

// Dense univariate polynomial over Q; coefficients stored low to high
// with the leading coefficient nonzero (empty vector = zero).
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Q> coeffs);

    static UPoly x();
    static UPoly constant(const Q& c);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Q>& coeffs() const { return c_; }
    // Coefficient of X^i; zero beyond the degree.
    Q coeff(size_t i) const { return i < c_.size() ? c_[i] : Q(0); }
    const Q& lc() const;

    Q eval(const Q& x) const;
    UPoly derivative() const;

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Q& s) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    // Exact division with remainder over Q: a = q*b + r, deg r < deg b.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);

    // Scaled so coefficients are coprime integers with positive leading
    // coefficient; zero stays zero.
    UPoly normalized() const;
    // Same scaling but keeps the original sign (positive factor only),
    // so sign patterns at any point are unchanged.
    UPoly positive_normalized() const;

    std::string to_string(const std::string& var) const;

  private:
    std::vector<Q> c_;
    void trim();
};

// Normalized gcd (coprime integer coefficients, positive leading
// coefficient); gcd(0, b) = |b| normalized.
UPoly upoly_gcd(const UPoly& a, const UPoly& b);

// p / gcd(p, p'), normalized: same distinct roots, all simple.
UPoly squarefree_part(const UPoly& p);

// Bridges to the multivariate representation. to_upoly throws
// internal_error when p depends on a variable other than var.
UPoly to_upoly(const Poly& p, uint32_t var);
Poly from_upoly(const UPoly& p, uint32_t var, uint32_t nvars);

// Generalized Sturm chain p, q, -rem(p, q), ...; every element scaled
// by positive rationals only, so sign patterns are exact.
std::vector<UPoly> sturm_chain(const UPoly& p, const UPoly& q);
// Classic chain (p, p').
std::vector<UPoly> sturm_chain(const UPoly& p);

// Number of sign changes, zeros skipped.
int sign_variations(const std::vector<int>& signs);
int variations_at(const std::vector<UPoly>& chain, const Q& x);
int variations_at_neg_inf(const std::vector<UPoly>& chain);
int variations_at_pos_inf(const std::vector<UPoly>& chain);

// Distinct real roots of the chain's head in (a, b]; chain must be
// sturm_chain(p) (or of the squarefree part). Requires a <= b.
int count_roots_in(const std::vector<UPoly>& chain, const Q& a, const Q& b);
// Distinct real roots over the whole line.
int count_real_roots(const UPoly& p);

// Isolating interval for one real root: lo == hi names the root
// exactly; otherwise the root is interior and the reference polynomial
// changes sign between the endpoints.
struct RootInterval {
    Q lo, hi;
    bool exact() const { return lo == hi; }
    Q mid() const { return (lo + hi) / 2; }
    Q width() const { return hi - lo; }
};

struct IsolatedRoots {
    UPoly squarefree;                 // squarefree part actually isolated
    std::vector<RootInterval> roots;  // sorted; closed hulls pairwise disjoint
};

// Deterministic Sturm-bisection isolation of all real roots.
// Pre: p nonzero. Post: one interval per distinct real root, sorted
// increasing, closed hulls pairwise disjoint; non-exact intervals have
// squarefree(lo)*squarefree(hi) < 0.
IsolatedRoots isolate_real_roots(const UPoly& p);

// Halves the interval once, keeping the isolation invariant; collapses
// to an exact interval when the midpoint hits the root. No-op on exact
// intervals. sf must be the squarefree reference polynomial.
void refine_root(const UPoly& sf, RootInterval& r);
// Refines until width < limit (exact intervals already qualify).
void refine_root_below(const UPoly& sf, RootInterval& r, const Q& limit);

}  // namespace sap

#endif
