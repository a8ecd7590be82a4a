#ifndef SAP_CAD_INTERNAL_HPP
#define SAP_CAD_INTERNAL_HPP

#include <optional>

#include "sap/cad.hpp"

namespace sap {
namespace cad_detail {

// A section root of a stack: the root of fibers[def] isolated by iv.
// Intervals of distinct merged roots are strictly disjoint as closed
// hulls, so interval order is root order.
struct MergedRoot {
    size_t def;
    RootInterval iv;
};

// The root structure of the family's fibers over one base point.
struct Stack {
    std::vector<std::optional<AlgUPoly>> fibers;  // aligned with family
    std::vector<MergedRoot> roots;                // sorted, disjoint
    bool zero = false;  // some member specialized to the zero polynomial
};

// Decides whether the root of h1 isolated by I equals the root of h2
// isolated by J (same base number). When distinct, refines I and J
// until their closed hulls are strictly disjoint.
bool same_root(const AlgUPoly& h1, RootInterval& I, const AlgUPoly& h2,
               RootInterval& J);

Stack build_stack(const APoint& base, const std::vector<Poly>& fam);

// Sample points of the stack's cells in stack order: sector, section,
// sector, ..., section, sector (a single sector when there are no
// roots). Sector samples are rational extensions of the base.
std::vector<APoint> stack_samples(const APoint& base, const Stack& st,
                                  const std::vector<Poly>& fam);

// Sign of (coordinate idx of p) - (the root of h isolated by iv); h is
// over the base of p's prefix, iv may be refined.
int compare_coord_with_root(const APoint& p, size_t idx, const AlgUPoly& h,
                            RootInterval& iv);

// Narrows a polynomial to its first new_nvars variables; the trailing
// ones must not occur.
Poly narrow(const Poly& p, uint32_t new_nvars);

}  // namespace cad_detail
}  // namespace sap

#endif
