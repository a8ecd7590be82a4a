#ifndef SAP_SUBRES_HPP
#define SAP_SUBRES_HPP

#include <vector>

#include "sap/poly.hpp"

namespace sap {

// Exact determinant by fraction-free (Bareiss) elimination over the
// polynomial ring; m is consumed. Requires a square matrix.
Poly bareiss_det(std::vector<std::vector<Poly>> m);

// True signed resultant of a and b with respect to var (determinant of
// the Sylvester matrix built from the actual degrees). Conventions:
// zero if either input is zero; a^deg(b) when deg_var(a) = 0 and
// symmetrically. Vanishes exactly where a and b share a root in var
// (or a leading-coefficient degeneracy makes them do so at infinity's
// specialization — callers quantify over the true locus).
Poly resultant(const Poly& a, const Poly& b, uint32_t var);

// Determinant-defined subresultant polynomial S_j of (a, b) with
// respect to var, for 0 <= j < min(deg a, deg b). deg_var(S_j) <= j;
// S_0 = resultant. When both inputs are specialized so their leading
// coefficients survive, the first S_j with nonzero var^j coefficient
// is (a constant multiple of) their gcd.
Poly subresultant(const Poly& a, const Poly& b, uint32_t var, unsigned j);

// Principal subresultant coefficient: the coefficient of var^j in S_j.
Poly psc(const Poly& a, const Poly& b, uint32_t var, unsigned j);

}  // namespace sap

#endif
