#ifndef SAP_PERSIST_HPP
#define SAP_PERSIST_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sap/cad.hpp"
#include "sap/complex.hpp"
#include "sap/posetmod.hpp"
#include "sap/triangulate.hpp"

namespace sap {

// Size guards for the sublevel-set pipeline.
struct FiltrationCaps {
    uint32_t max_domain_vars = 2;  // region variables
    uint32_t max_parameters = 2;   // filtration functions
    size_t max_degree = 1;         // top tracked homology degree
};

// A filtered region: the subset of R^n cut out by `domain` (atoms are
// non-strict, so the set is closed; it must also be bounded), filtered
// by the sublevel sets of p polynomial functions, with homology
// tracked over `field` in degrees 0..degree_cap.
struct FiltrationInput {
    uint32_t domain_vars = 0;  // n
    uint32_t parameters = 0;   // p
    Formula domain = Formula::always_true();  // over x_1..x_n
    std::vector<Poly> functions;              // f_i, over x_1..x_n
    size_t degree_cap = 0;                    // ell
    Field field;
    FiltrationCaps caps;
    // Optional replacement for the derived parameter-space family
    // (trusted to be subordinate; over y_1..y_p). The pair-space
    // family is then its two copies plus the difference polynomials.
    std::vector<Poly> parameter_family;
};

// The region of R^(p+n) = {(y, x)} where x lies in the domain and
// f_i(x) <= y_i for every i: fibers over y are the filtration steps.
Formula thicken_formula(const FiltrationInput& in);

// The filtration step at parameter y as a region of R^n.
Formula fiber_formula(const FiltrationInput& in, const std::vector<Q>& y);

// True when the solution set of f in R^nvars is bounded. Decides one
// coordinate direction at a time by inspecting which cells of a
// decomposition ordered with that coordinate first satisfy f over the
// extreme, unbounded intervals of the first-level stack.
bool region_bounded(const Formula& f, uint32_t nvars);

// Reads the filtration functions off a graph formula over
// (y_1..y_p, x_1..x_n): a conjunction of p equations, each using
// exactly one parameter, linearly and with a constant coefficient.
// Anything else is rejected.
std::vector<Poly> functions_from_graph(const Formula& graph, uint32_t n,
                                       uint32_t p);

// Every simplicial complex the pipeline triangulates is also handed to
// this hook when set (used by the self-check suite). Not thread-safe;
// leave empty during threaded map materialization.
extern std::function<void(const SimplicialComplex&, const Field&)>
    complex_observer;

// The serializable description of a computed module: input echo,
// derived families and dimension data, plus whatever structure maps
// have been materialized. Decompositions are rebuilt on demand, so two
// states with equal content answer queries identically.
struct ModuleState {
    FiltrationInput input;
    int shear_k = 0;                     // domain-block change of coordinates
    std::vector<Poly> c_family;          // over y_1..y_p
    std::vector<Poly> d_family;          // over y_1..y_p, y'_1..y'_p
    std::vector<size_t> diagonal_index;  // positions of y'_i - y_i
    Z witness = Z(0);                    // family size * max degree
    size_t frame = 0;                    // common padding size K
    // Homology dimensions per parameter-partition top cell (aligned
    // with tops() order), degrees 0..degree_cap.
    std::vector<std::vector<size_t>> cell_dims;
    bool eager = false;
    // Materialized structure maps per pair-partition cell, keyed by
    // the cell's stack-position path: one frame x frame matrix per
    // degree. Filled lazily by queries, hence mutable; its content
    // never changes an already-computed answer.
    mutable std::map<std::vector<int>, std::vector<Mat>> map_cache;
};

// Dimension vector together with the parameter-partition cell carrying
// it.
struct LocatedDims {
    int cell = -1;
    std::vector<size_t> dims;
};

// Persistent homology of a filtered region as a constructible module:
// a partition of parameter space into cells with constant homology
// dimensions, and a partition of parameter-pair space into cells with
// constant structure maps, evaluated exactly at algebraic points.
class ConstructibleModule {
  public:
    // Runs the full pipeline; eager_maps materializes every pair
    // cell's structure maps (optionally across threads).
    static ConstructibleModule build(const FiltrationInput& in,
                                     bool eager_maps = false,
                                     unsigned threads = 1);
    static ConstructibleModule from_state(ModuleState s);

    const ModuleState& state() const { return st_; }
    uint32_t parameters() const { return st_.input.parameters; }
    uint32_t domain_vars() const { return st_.input.domain_vars; }
    size_t degree_cap() const { return st_.input.degree_cap; }
    const Field& field() const { return st_.input.field; }
    const Z& witness() const { return st_.witness; }
    size_t frame() const { return st_.frame; }

    // Parameter-space partition (first call builds it).
    const Decomposition& parameter_partition() const;
    // Pair-space partition (first call builds it).
    const Decomposition& pair_partition() const;

    // Cell and homology dimensions at a parameter point (dim p).
    LocatedDims locate(const APoint& y) const;
    std::vector<size_t> dims_at(const std::vector<Q>& y) const;

    // Whether pair.prefix(p) <= the second block, coordinatewise.
    bool comparable(const APoint& pair) const;
    // Structure maps (one frame x frame matrix per degree) for a
    // comparable pair point of dimension 2p; input_error otherwise.
    // Locates the pair's cell by root isolation along its own stacks,
    // so the full pair partition is never enumerated.
    const std::vector<Mat>& maps(const APoint& pair) const;

    // Computes and caches the maps of every comparable pair cell.
    // Enumerates the whole pair partition, which can be large for
    // derived pair families.
    void materialize_maps(unsigned threads = 1);

    // Restriction to a finite list of distinct parameter points: the
    // index poset ordered by coordinatewise dominance, the located
    // dimensions, and the structure maps cut to their exact shapes.
    FinitePosetModule restrict_to(const std::vector<std::vector<Q>>& points) const;
    // Same, for N points packed in one algebraic tuple of dimension
    // N*p (coordinates of point i at positions i*p..i*p+p-1).
    FinitePosetModule restrict_tuple(const APoint& tuple, size_t count) const;

  private:
    ConstructibleModule() = default;

    // Shared map computation: `key` is the pair cell's stack path,
    // `ground` any point of that cell, `diag_signs` the diagonal signs
    // there (constant on the cell).
    const std::vector<Mat>& maps_for_ground(const std::vector<int>& key,
                                            const APoint& ground,
                                            const std::vector<int>& diag_signs) const;
    FinitePosetModule restrict_core(
        size_t count, const std::function<APoint(size_t)>& point_at,
        const std::function<APoint(size_t, size_t)>& pair_at) const;

    ModuleState st_;
    mutable std::optional<Decomposition> c_part_;
    mutable std::optional<Decomposition> d_part_;
    mutable std::optional<std::vector<std::vector<Poly>>> d_levels_;
    mutable std::map<int, size_t> top_pos_;  // c top id -> tops() position
};

}  // namespace sap

#endif
