#ifndef SAP_TRIANGULATE_HPP
#define SAP_TRIANGULATE_HPP

#include <map>

#include "sap/cad.hpp"
#include "sap/complex.hpp"
#include "sap/formula.hpp"

namespace sap {

// Simultaneous triangulation of regions cut out by sign formulas: one
// decomposition refines every region, each region keeps the cells
// where its formula holds, and the region's complex is the order
// complex of the closure relation among its kept cells (vertices are
// cell ids). Nested regions therefore yield nested complexes, and the
// inclusion is the identity on shared vertices.
struct Triangulation {
    Decomposition dec;  // in working coordinates
    // original coordinates = change * working coordinates (columns of
    // change are images of the working basis vectors)
    Mat change;
    std::vector<std::vector<int>> kept;  // kept top cell ids per region
    std::vector<SimplicialComplex> complexes;
};

// Builds the shared decomposition from the region polynomials plus any
// extra family members. When the plain build is not well-based the
// coordinates are sheared (a unimodular triangular change recorded in
// `change`) until it is; regions are evaluated in the new coordinates,
// which preserves all incidence and homotopy structure.
Triangulation triangulate(const std::vector<Formula>& regions, uint32_t nvars,
                          const std::vector<Poly>& extra = {});

// Triangular unimodular shear x_j -> x_j + c_j * x_{nvars-1} with
// c_j = k^{nvars-1-j}, applied to the last `nvars` variables of a
// polynomial or formula (leading variables, a parameter block, are
// left alone). Homotopy- and closure-order-preserving.
std::vector<Q> shear_coefficients(uint32_t nvars, int k);
Poly shear_poly(const Poly& p, const std::vector<Q>& coef, uint32_t nvars);
Formula shear_formula(const Formula& f, const std::vector<Q>& coef,
                      uint32_t nvars);
// Trial multipliers, identity first: 0, 1, -1, 2, -2, ...
const std::vector<int>& shear_schedule();

// The closure partial order among full-level cells: reflexive and
// transitive closure of the same-level incidence relation, returned as
// the strictly-below relation b -> {cells strictly below b}.
std::map<int, std::vector<int>> face_order(const Decomposition& d);

// Order complex of the kept cells within the closure order.
SimplicialComplex order_complex(const Decomposition& d,
                                const std::vector<int>& kept);

// Sum of (-1)^dim over the kept cells: the Euler characteristic of the
// region computed cell by cell (matches the complex on compact
// regions).
long cell_euler(const Decomposition& d, const std::vector<int>& kept);

// Identity vertex map of a subcomplex inclusion.
std::map<int, int> identity_vertex_map(const SimplicialComplex& k);

}  // namespace sap

#endif
