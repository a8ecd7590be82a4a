#ifndef SAP_ALGEBRAIC_HPP
#define SAP_ALGEBRAIC_HPP

#include <vector>

#include "sap/upoly.hpp"

namespace sap {

// A real algebraic number: a squarefree annihilator together with an
// isolating interval. Value semantics; the interval only ever shrinks
// (refinement is semantically const, the number itself never changes).
class RealAlgebraic {
  public:
    // The rational number r (annihilator X - r, exact interval).
    explicit RealAlgebraic(const Q& r);
    // The unique root of f in iv. f is reduced to its normalized
    // squarefree part; iv must isolate per the RootInterval contract
    // (checked: endpoint sign change or exact root).
    RealAlgebraic(const UPoly& f, const RootInterval& iv);

    // All real roots of p, sorted increasing.
    static std::vector<RealAlgebraic> roots_of(const UPoly& p);

    bool is_rational() const { return iv_.exact(); }
    // Requires is_rational().
    Q rational_value() const;
    // Squarefree, primitive, positive leading coefficient; vanishes at
    // this number (not necessarily minimal).
    const UPoly& annihilator() const { return f_; }
    const RootInterval& interval() const { return iv_; }

    // Halve the isolating interval (may collapse to exact).
    void refine() const;
    void refine_below(const Q& width) const;

    // Exact sign of q at this number: an exact zero test first, then
    // interval refinement until the sign is forced.
    int sign_of(const UPoly& q) const;
    // Remainder of g modulo the annihilator: same value here, degree
    // below deg(annihilator). Collapses to a constant for rationals.
    UPoly reduce(const UPoly& g) const;

    // sign(*this - x).
    int compare(const Q& x) const;
    int compare(const RealAlgebraic& o) const;
    bool operator==(const RealAlgebraic& o) const { return compare(o) == 0; }
    bool operator<(const RealAlgebraic& o) const { return compare(o) < 0; }

  private:
    UPoly f_;
    mutable RootInterval iv_;
    // Collapses to exact when r lies inside and annihilates f.
    bool try_exact(const Q& r) const;
};

// Sign vector of (p, p', ..., p^(deg p)) at the number; first entry is
// 0 (the number must be a root of p). Distinct roots of the same p
// receive distinct vectors.
std::vector<int> thom_encoding(const UPoly& p, const RealAlgebraic& root);

}  // namespace sap

#endif
