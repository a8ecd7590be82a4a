#ifndef SAP_POSETMOD_HPP
#define SAP_POSETMOD_HPP

#include <map>
#include <string>
#include <vector>

#include "sap/linalg.hpp"

namespace sap {

// Finite partial order on {0, ..., n-1}. Built from any generating
// relation; reflexivity and transitivity are completed, antisymmetry
// violations are rejected.
class FinitePoset {
  public:
    FinitePoset() = default;
    FinitePoset(size_t n, const std::vector<std::pair<int, int>>& rel);

    size_t size() const { return n_; }
    bool leq(int a, int b) const;
    // All ordered comparable pairs (a, b) with a != b and a <= b.
    std::vector<std::pair<int, int>> comparable_pairs() const;
    // Linear extension: every element appears after all its strict
    // predecessors.
    std::vector<int> topological_order() const;

    bool operator==(const FinitePoset& o) const {
        return n_ == o.n_ && leq_ == o.leq_;
    }
    bool operator!=(const FinitePoset& o) const { return !(*this == o); }

  private:
    size_t n_ = 0;
    std::vector<std::vector<char>> leq_;
};

// Functor from a finite poset to graded vector spaces: one dimension
// per element and degree, and for every strictly comparable pair a
// structure matrix per degree (column-major, dims[a][d] columns of
// height dims[b][d]). The identity on each element is implicit.
struct FinitePosetModule {
    FinitePoset poset;
    Field field;
    size_t degrees = 1;
    std::vector<std::vector<size_t>> dims;  // [element][degree]
    std::map<std::pair<int, int>, std::vector<Mat>> maps;

    // Structure map for any comparable pair, identity when a == b.
    Mat map_at(int a, int b, size_t degree) const;
    // Shape and completeness checks; throws input_error on violation.
    void validate() const;
    // M(a,c) == M(b,c) * M(a,b) for all chains a <= b <= c, all degrees.
    bool functorial() const;

    bool operator==(const FinitePosetModule& o) const;
    bool operator!=(const FinitePosetModule& o) const { return !(*this == o); }
};

// Necessary-condition fingerprint: dimensions plus the rank of every
// comparable-pair matrix. Equal invariants are required (not
// sufficient) for strong equivalence.
struct ModuleInvariants {
    std::vector<std::vector<size_t>> dims;
    std::map<std::pair<int, int>, std::vector<size_t>> ranks;

    bool operator==(const ModuleInvariants& o) const {
        return dims == o.dims && ranks == o.ranks;
    }
    bool operator!=(const ModuleInvariants& o) const { return !(*this == o); }
};

ModuleInvariants invariants(const FinitePosetModule& m);

// Three-valued verdict: searches over the rationals are budgeted, so
// a failed search is inconclusive rather than a refutation.
enum class Tri { False, True, Indeterminate };

struct EquivResult {
    Tri value = Tri::False;
    // When true: per-element, per-degree invertible base changes P with
    // P_b * M1(a,b) = M2(a,b) * P_a for every comparable pair.
    std::vector<std::vector<Mat>> witness;
    std::string note;
};

// Existence of a base change commuting with all structure maps, module
// by module over one shared poset and field. Invariant screening first,
// then exhaustive backtracking over finite fields (total dimension per
// degree capped at 8); over the rationals a bounded-height search that
// reports Indeterminate when it exhausts its grid without a witness.
EquivResult strong_equivalent(const FinitePosetModule& m1,
                              const FinitePosetModule& m2);

// Existence of a poset isomorphism making the modules strongly
// equivalent after relabeling; poset size capped at 8.
EquivResult weak_equivalent(const FinitePosetModule& m1,
                            const FinitePosetModule& m2);

// Relabels m along an order isomorphism phi (result element e carries
// m's data at phi[e]).
FinitePosetModule relabel(const FinitePosetModule& m,
                          const std::vector<int>& phi);

// The five-element star gadget: a two-dimensional apex over four
// one-dimensional sources mapping in by [1,0]^t, [0,1]^t, [1,1]^t and
// [a,b]^t. (a, b) must not reduce to (0, 0) in the field.
FinitePosetModule example_ab(const Q& a, const Q& b, const Field& f);

}  // namespace sap

#endif
