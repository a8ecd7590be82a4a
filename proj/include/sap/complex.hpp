#ifndef SAP_COMPLEX_HPP
#define SAP_COMPLEX_HPP

#include <map>
#include <set>
#include <vector>

#include "sap/linalg.hpp"

namespace sap {

// A finite abstract simplicial complex on integer vertices. Simplices
// are kept as strictly increasing vertex lists, grouped by dimension
// and ordered lexicographically within a dimension, which fixes the
// chain bases used everywhere downstream.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    // Closes the given simplices under taking faces. Vertex lists may
    // arrive unsorted but must not repeat a vertex.
    static SimplicialComplex from_simplices(
        const std::vector<std::vector<int>>& simps);

    // Dimension of the largest simplex; -1 when empty.
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    size_t count(int d) const;
    const std::vector<std::vector<int>>& simplices(int d) const;
    bool contains(const std::vector<int>& s) const;
    // Position of a simplex within its dimension.
    size_t index_of(const std::vector<int>& s) const;
    std::vector<int> vertices() const;
    long euler_characteristic() const;

    SimplicialComplex skeleton(int k) const;

    // Boundary matrix from d-chains to (d-1)-chains; columns follow
    // the d-simplex order, rows the (d-1)-simplex order.
    Mat boundary(int d) const;

    bool operator==(const SimplicialComplex& o) const {
        return by_dim_ == o.by_dim_;
    }

  private:
    std::vector<std::vector<std::vector<int>>> by_dim_;
};

// Homology of degree d with deterministic representatives: cycle and
// boundary bases are canonical echelon bases in the simplex order.
struct HomologyBasis {
    size_t betti = 0;
    Mat cycles;      // one representative cycle per class
    Mat boundaries;  // canonical basis of the boundary subspace
};

HomologyBasis homology(const SimplicialComplex& k, int d, const Field& f);

// Betti numbers in degrees 0..max(dim, 0).
std::vector<size_t> betti_numbers(const SimplicialComplex& k, const Field& f);

// Chain-level matrix of a simplicial vertex map in degree d: columns
// follow the d-simplices of the source, rows those of the target.
// Simplices whose image degenerates map to zero.
Mat chain_matrix(const SimplicialComplex& src, const SimplicialComplex& dst,
                 int d, const std::map<int, int>& vmap, const Field& f);

// Matrix of the induced map on degree-d homology with respect to the
// deterministic bases of homology().
Mat induced_homology_map(const SimplicialComplex& src,
                         const SimplicialComplex& dst, int d,
                         const std::map<int, int>& vmap, const Field& f);

// Nerve of a cover: one vertex per member, a simplex for every
// subfamily with a common element. Empty members contribute nothing.
// max_dim >= 0 builds only the skeleton up to that dimension (enough
// to read homology below it); -1 builds the whole nerve.
SimplicialComplex nerve(const std::vector<std::set<int>>& cover,
                        int max_dim = -1);

}  // namespace sap

#endif
