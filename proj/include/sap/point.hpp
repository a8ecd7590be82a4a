#ifndef SAP_POINT_HPP
#define SAP_POINT_HPP

#include <utility>
#include <vector>

#include "sap/algupoly.hpp"

namespace sap {

// A point of R^k with real algebraic coordinates, carried by a single
// base number: coordinate i is numerator(i)/denominator evaluated at
// the base. Invariants: the denominator does not vanish at the base,
// its gcd with the base's annihilator is constant, and all numerators
// and the denominator are reduced modulo the annihilator.
class APoint {
  public:
    APoint();  // the unique point of R^0
    // Throws input_error when den vanishes at the base root.
    APoint(RealAlgebraic base, UPoly den, std::vector<UPoly> nums);
    static APoint from_rationals(const std::vector<Q>& coords);

    size_t dim() const { return g_.size(); }
    const RealAlgebraic& base() const { return tau_; }
    const UPoly& denominator() const { return g0_; }
    const UPoly& numerator(size_t i) const { return g_[i]; }
    bool is_rational() const { return tau_.is_rational(); }
    // Requires is_rational().
    std::vector<Q> rational_coords() const;

    // Exact sign of P at the point; requires P.nvars() == dim().
    int sign_at(const Poly& P) const;

    // The univariate polynomial X -> c * H(point, X), c some nonzero
    // constant, where H has dim()+1 variables and X is the last one.
    AlgUPoly fiber(const Poly& H) const;

    // Appends a rational coordinate.
    APoint extended(const Q& value) const;
    // Appends the root of H(point, .) isolated by r; r must originate
    // from fiber(H).isolate_roots() (possibly refined). The result's
    // base is a primitive element for the extended coordinate tuple,
    // and every recovery identity is verified exactly before use.
    APoint extended(const Poly& H, const RootInterval& r) const;
    // Appends the coordinate coeffs . x + shift (an affine combination
    // of the existing coordinates); coeffs.size() must equal dim().
    APoint extended_linear(const std::vector<Q>& coeffs, const Q& shift) const;

    // The point made of the first k coordinates (k <= dim()).
    APoint prefix(size_t k) const;
    // The point m . x, where m is a rational matrix given by rows of
    // length dim().
    APoint linear_image(const std::vector<std::vector<Q>>& m) const;

    // Sign of (coordinate i) - c.
    int compare_coord(size_t i, const Q& c) const;
    // Coordinate i as a standalone real algebraic number.
    RealAlgebraic coordinate(size_t i) const;

    // Rational enclosure of coordinate i narrower than width.
    std::pair<Q, Q> coordinate_bounds(size_t i, const Q& width) const;

  private:
    RealAlgebraic tau_;
    UPoly g0_;
    std::vector<UPoly> g_;

    // Numerator of P(coords) over the uniform denominator power
    // g0^clear_degree; requires clear_degree >= P.total_degree().
    UPoly numerator_of(const Poly& P, int clear_degree) const;
    std::vector<UPoly> fiber_coeffs(const Poly& H) const;
    APoint with_rational_base() const;
};

// Sign vector of (poly, poly', ..., poly^(deg poly)) at a root of
// poly; entry 0 is always 0. Distinguishes the real roots of poly.
struct ThomEncoding {
    UPoly poly;
    std::vector<int> signs;
};

// Transport form of an algebraic point: coordinate i has the value
// g[i]/g0 at the root of f selected by the Thom encoding sigma.
struct RurPoint {
    UPoly f;
    UPoly g0;
    std::vector<UPoly> g;
    ThomEncoding sigma;
};

RurPoint to_rur(const APoint& p);
// Throws input_error when the encoding is malformed, selects no real
// root of f, or g0 vanishes at the selected root.
APoint from_rur(const RurPoint& u);
// Sign of q at the point u describes; q.nvars() must equal u.g.size().
int rur_sign(const RurPoint& u, const Poly& q);

}  // namespace sap

#endif
