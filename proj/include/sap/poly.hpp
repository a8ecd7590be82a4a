#ifndef SAP_POLY_HPP
#define SAP_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sap/numbers.hpp"

namespace sap {

// Sparse multivariate polynomial over Q in a fixed ambient variable
// count. Variables are indices 0..nvars-1. Terms are kept sorted in
// descending graded-lex order (total degree first, then exponent vector
// lexicographically) with nonzero coefficients; this makes the
// representation canonical.
class Poly {
  public:
    using Exp = std::vector<uint32_t>;
    struct Term {
        Exp e;
        Q c;
    };

    Poly() : nvars_(0) {}
    explicit Poly(uint32_t nvars) : nvars_(nvars) {}
    Poly(uint32_t nvars, const Q& constant);

    static Poly variable(uint32_t var, uint32_t nvars);
    static Poly constant(uint32_t nvars, const Q& c);
    // Builds from unsorted term list; merges duplicates, drops zeros.
    static Poly from_terms(uint32_t nvars, std::vector<Term> terms);

    uint32_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Requires is_constant(); zero polynomial yields 0.
    Q constant_value() const;
    const std::vector<Term>& terms() const { return terms_; }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(uint32_t var) const;
    bool depends_on(uint32_t var) const { return degree_in(var) > 0; }
    // Largest variable index with positive degree; -1 if constant.
    int max_var() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Q& s) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // Total order consistent with the canonical form (for sorted sets).
    bool operator<(const Poly& o) const;

    Poly pow(unsigned e) const;
    Poly derivative(uint32_t var) const;

    // Coefficients with respect to var: result[j] = coefficient Poly of
    // var^j (same ambient nvars, degree 0 in var). Size degree_in+1;
    // empty for the zero polynomial.
    std::vector<Poly> coeffs_wrt(uint32_t var) const;
    // Leading coefficient with respect to var.
    Poly lc_wrt(uint32_t var) const;
    // Rebuilds from coefficients: sum coeffs[j] * var^j.
    static Poly from_coeffs(uint32_t var, uint32_t nvars,
                            const std::vector<Poly>& coeffs);

    // Full evaluation; point.size() == nvars.
    Q eval(const std::vector<Q>& point) const;
    // Substitutes var := value, producing a polynomial of the same
    // ambient arity with degree 0 in var.
    Poly substitute(uint32_t var, const Q& value) const;
    // Substitutes var := replacement (same ambient arity), via Horner.
    Poly substitute(uint32_t var, const Poly& replacement) const;
    // Renames variables: result has new_nvars variables and the term
    // exponent of old var i goes to position map[i]. All distinct.
    Poly rename_vars(const std::vector<uint32_t>& map,
                     uint32_t new_nvars) const;

    // Canonical integer normalization: scales by a positive rational so
    // coefficients are coprime integers, then flips sign so the leading
    // graded-lex coefficient is positive. Zero stays zero.
    Poly normalized() const;

    // Dense univariate coefficient vector (low to high) for a
    // polynomial depending on var only. Throws internal_error if any
    // other variable has positive degree.
    std::vector<Q> univariate_coeffs(uint32_t var) const;

    std::string to_string(const std::vector<std::string>& var_names) const;
    std::string to_string() const;

  private:
    uint32_t nvars_;
    std::vector<Term> terms_;  // canonical order, nonzero coefficients

    void normalize_terms();
    friend struct PolyHash;
};

struct PolyHash {
    size_t operator()(const Poly& p) const;
};

// Exact division; throws internal_error when b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);

// Multivariate gcd by primitive PRS recursion. Result is normalized
// (integer-primitive, positive leading coefficient); gcd(0, b) = |b|.
Poly poly_gcd(const Poly& a, const Poly& b);

// Content of a with respect to var: gcd of the coefficients wrt var.
Poly content_wrt(const Poly& a, uint32_t var);
// a / content_wrt(a, var).
Poly primitive_wrt(const Poly& a, uint32_t var);

// Squarefree part with respect to var: a / gcd(a, da/dvar), normalized.
Poly squarefree_wrt(const Poly& a, uint32_t var);

// Full squarefree part: a / gcd(a, all partial derivatives). Same zero
// set, every irreducible factor kept once, normalized.
Poly squarefree_part(const Poly& a);

// Pseudo-remainder of a by b with respect to var (lc(b)^k * a mod b).
Poly prem(const Poly& a, const Poly& b, uint32_t var);

// Parses a polynomial expression over named variables: integers,
// rationals (n/d), + - * ^, parentheses. Throws input_error.
Poly parse_poly(const std::string& text,
                const std::vector<std::string>& var_names);

}  // namespace sap

#endif
