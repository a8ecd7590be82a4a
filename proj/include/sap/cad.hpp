#ifndef SAP_CAD_HPP
#define SAP_CAD_HPP

#include <memory>
#include <vector>

#include "sap/formula.hpp"

namespace sap {

// One projection step: eliminates variable var (which must be the last
// one, var == nvars-1 for every input) and returns a family in var
// variables whose sign-invariant regions are delineable bases for the
// root structure of the inputs. Collins-style operator: coefficients,
// subresultant coefficient chains of each truncation against its
// derivative, and of every truncation pair across distinct inputs.
std::vector<Poly> project(const std::vector<Poly>& polys, uint32_t var);

// Deduplicated, squarefree, pairwise-coprime family with the same
// union of zero sets; every input's sign is determined by the output
// signs on every sign-invariant region. Constants are dropped.
std::vector<Poly> coprime_basis(std::vector<Poly> polys);

// Per-level basis families of the full projection cascade: entry k-1
// holds the level-k family, polynomials in ground_dim + k variables
// with positive degree in the last one. These are exactly the families
// Decomposition::build uses when lifting stacks, so the level-k output
// is a valid decomposition family for the first k variables on its
// own. Members that lose their lead variable sink to lower levels.
std::vector<std::vector<Poly>> projection_cascade(std::vector<Poly> family,
                                                  uint32_t nvars,
                                                  uint32_t ground_dim = 0);

// Stack-position path of a point through the decomposition the given
// cascade levels induce (the index semantics of Cell: even = sector,
// odd = section), found by root isolation level by level. Equals the
// index vector of the cell Decomposition::build would assign the
// point, but touches only the stacks over the point itself, so it
// stays cheap when the full decomposition would be huge.
std::vector<int> stack_path(const std::vector<std::vector<Poly>>& levels,
                            const APoint& p);

// One cell of a cylindrical decomposition. Cells at lift level k are
// sectors (open root-free intervals) or sections (root graphs) of a
// stack over a level k-1 cell.
struct Cell {
    int id = -1;
    int parent = -1;
    // Per lifted level, the 0-based stack position: even = sector,
    // odd = section.
    std::vector<int> index;
    APoint sample;
    std::vector<int> children;  // ids one level up, in stack order
    // Signs of the decomposition's input family at the sample; filled
    // for full-level cells only.
    std::vector<int> signs;
    // Connected-component label of the sign-condition realization this
    // cell belongs to; -1 until label_components() runs.
    int component = -1;

    size_t level() const { return index.size(); }
    bool is_section(size_t lvl) const { return index[lvl] % 2 == 1; }
    // Cell dimension = number of sector positions in the index.
    int dim() const;
};

// Cylindrical algebraic decomposition of {ground} x R^nvars into cells
// sign-invariant for the input family. The ground point occupies the
// first ground.dim() variables of every input polynomial; an ordinary
// decomposition of R^nvars uses the default empty ground.
class Decomposition {
  public:
    static Decomposition build(std::vector<Poly> family, uint32_t nvars,
                               APoint ground = APoint());

    uint32_t nvars() const { return nvars_; }
    const APoint& ground() const { return ground_; }
    const std::vector<Poly>& family() const { return family_; }
    // Basis family used when lifting to level k (1 <= k <= nvars):
    // polynomials in ground.dim() + k variables, each of positive
    // degree in the last one.
    const std::vector<Poly>& level_family(uint32_t k) const;

    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(int id) const { return cells_[static_cast<size_t>(id)]; }
    // Ids of the full-level cells in cylindrical (stack) order.
    const std::vector<int>& tops() const { return tops_; }

    // Id of the full-level cell containing p. p must extend the ground
    // point (p.dim() == ground.dim() + nvars and the leading
    // coordinates agree; for algebraic grounds p must carry the same
    // base, as points produced by extending the ground always do).
    int locate(const APoint& p) const;

    // False when some level family member vanished identically over a
    // cell (its zero set contains a whole cylinder).
    bool well_based() const { return !zero_fiber_; }

    // Closure-incidence pairs (a, b) between same-level cells: cell a
    // meets the closure of cell b (and is contained in it when the
    // decomposition is well based). Includes in-stack vertical pairs
    // and pairs over adjacent bases, for every level. Requires
    // nvars <= 3, and well_based() when nvars == 3; throws cap_error
    // otherwise. Cached after the first call.
    const std::vector<std::pair<int, int>>& incidences() const;

    // Labels every full-level cell with the connected component of the
    // realization of its sign condition (union of equal-sign cells,
    // components joined through closure incidence). Labels are the
    // minimal cell id in each component, then renumbered 0,1,... by
    // first appearance in stack order. Requires incidences().
    void label_components();

  private:
    Decomposition() = default;

    uint32_t nvars_ = 0;
    APoint ground_;
    std::vector<Poly> family_;
    std::vector<std::vector<Poly>> level_fams_;  // [k-1] for level k
    std::vector<Cell> cells_;
    std::vector<int> tops_;
    bool zero_fiber_ = false;
    mutable std::shared_ptr<std::vector<std::pair<int, int>>> inc_;

    std::vector<int> level_ids(size_t lvl) const;
    friend struct AdjacencyEngine;
};

// Full decomposition of R^nvars with components labeled: the partition
// into connected sign-invariant regions, one designated sample each.
Decomposition cc_partition(const std::vector<Poly>& family, uint32_t nvars);

// Number of distinct component labels among full-level cells.
int component_count(const Decomposition& d);

}  // namespace sap

#endif
