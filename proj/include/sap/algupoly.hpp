#ifndef SAP_ALGUPOLY_HPP
#define SAP_ALGUPOLY_HPP

#include <memory>
#include <vector>

#include "sap/algebraic.hpp"
#include "sap/poly.hpp"

namespace sap {

// Univariate polynomial in X whose coefficients are polynomial
// expressions in one fixed real algebraic number (the base). All
// queries concern the real specialization h(x) = sum_i c_i(base) x^i
// and are answered exactly in rational arithmetic, via sign-corrected
// pseudo-remainder chains evaluated at the base.
class AlgUPoly {
  public:
    // coeffs[i](base) is the X^i coefficient. Coefficients are reduced
    // modulo the base's annihilator and trimmed so the leading one is
    // nonzero at the base.
    AlgUPoly(std::vector<UPoly> coeffs, RealAlgebraic base);
    // Views H as univariate in x_var; every other variable H depends on
    // must be base_var, which carries the base number.
    AlgUPoly(const Poly& H, uint32_t base_var, uint32_t x_var,
             RealAlgebraic base);

    const RealAlgebraic& base() const { return base_; }
    // Degree of the specialization; -1 when identically zero.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<UPoly>& coeffs() const { return c_; }
    AlgUPoly derivative() const;

    // Exact sign of the specialization at a rational point.
    int sign_at(const Q& x) const;
    // Exact sign of the specialization at num(base)/den(base);
    // den(base) must be nonzero.
    int sign_at_ratio(const UPoly& num, const UPoly& den) const;
    // Distinct real roots of the specialization in (a, b]; a <= b.
    int count_roots_in(const Q& a, const Q& b) const;
    int count_real_roots() const;

    // Isolating intervals for all distinct real roots: sorted, closed
    // hulls pairwise disjoint, exact intervals name rational roots.
    // Requires a nonzero specialization.
    const std::vector<RootInterval>& isolate_roots() const;
    // Halve an interval from isolate_roots (or a refinement of one),
    // keeping the isolation invariant; may collapse to exact.
    void refine(RootInterval& r) const;

    // Specialization of the gcd (up to nonzero constants) of the two
    // specializations. Both arguments must share the base number.
    static AlgUPoly gcd_at_base(const AlgUPoly& a, const AlgUPoly& b);

  private:
    struct Elem {
        std::vector<UPoly> c;  // trimmed: leading coefficient nonzero at base
        int eps;               // +1/-1, corrects the sign at the base
    };
    struct Cache {
        std::vector<UPoly> work;  // squarefree specialization, rational roots peeled
        std::vector<RootInterval> roots;
    };

    std::vector<UPoly> c_;
    RealAlgebraic base_;
    mutable std::shared_ptr<const Cache> cache_;
    mutable std::shared_ptr<const std::vector<Elem>> count_chain_;

    void reduce_all(std::vector<UPoly>& v) const;
    void trim_at_base(std::vector<UPoly>& v) const;
    std::vector<UPoly> derive(const std::vector<UPoly>& v) const;
    int sign_at_of(const std::vector<UPoly>& v, const Q& x) const;
    // Signed pseudo-remainder chain headed by a then b (deg a >= deg b,
    // both trimmed and nonzero).
    std::vector<Elem> build_chain(std::vector<UPoly> a,
                                  std::vector<UPoly> b) const;
    int variations(const std::vector<Elem>& chain, const Q& x) const;
    int variations_neg_inf(const std::vector<Elem>& chain) const;
    int variations_pos_inf(const std::vector<Elem>& chain) const;
    int count_via(const std::vector<Elem>& chain, const Q& a, const Q& b) const;
    std::vector<UPoly> pseudo_quotient(const std::vector<UPoly>& num,
                                       const std::vector<UPoly>& den) const;
    std::vector<UPoly> divide_linear(const std::vector<UPoly>& v,
                                     const Q& root) const;
    const Cache& ensure_cache() const;
    const std::vector<Elem>& ensure_count_chain() const;
};

}  // namespace sap

#endif
