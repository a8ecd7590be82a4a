#include "sap/posetmod.hpp"

#include <functional>
#include <string>
#include <utility>

namespace sap {

namespace {

// Entry lookup tolerant of columns that lost their height (products
// with an empty factor come back as length-zero columns).
Q entry_at(const Vec& col, size_t r) { return r < col.size() ? col[r] : Q(0); }

// Equality of two matrices representing maps with `rows` output
// coordinates, entry by entry in the field.
bool maps_equal(const Field& F, const Mat& a, const Mat& b, size_t rows) {
    if (a.size() != b.size()) return false;
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t r = 0; r < rows; ++r)
            if (!F.is_zero(F.sub(entry_at(a[j], r), entry_at(b[j], r))))
                return false;
    return true;
}

Mat unflatten(const Field& F, const Vec& x, size_t t) {
    Mat m(t, Vec(t, Q(0)));
    for (size_t c = 0; c < t; ++c)
        for (size_t r = 0; r < t; ++r) m[c][r] = F.reduce(x[c * t + r]);
    return m;
}

// Backtracking search, one degree at a time, for invertible base
// changes commuting with every structure map. Elements are assigned in
// a linear extension of the order, so when an element comes up all the
// constraints binding it involve already-chosen predecessors and form
// a linear system in its matrix entries. The affine solution space is
// then enumerated: over GF(p) completely, over the rationals on a
// bounded coefficient grid (so a fruitless rational search is
// inconclusive rather than a refutation).
struct DegreeSearch {
    const FinitePosetModule& m1;
    const FinitePosetModule& m2;
    Field F;
    size_t deg;
    std::vector<int> order;
    std::vector<Mat> assigned;
    long long budget;
    bool out_of_budget = false;

    bool run(size_t pos) {
        if (pos == order.size()) return true;
        const int e = order[pos];
        const size_t t = m1.dims[e][deg];
        if (t == 0) {
            assigned[e] = Mat{};
            return run(pos + 1);
        }
        // P * A == C for every assigned strict predecessor.
        std::vector<std::pair<Mat, Mat>> blocks;
        size_t eqs = 0;
        for (size_t i = 0; i < pos; ++i) {
            const int a = order[i];
            if (!m1.poset.leq(a, e)) continue;
            Mat A = m1.map_at(a, e, deg);
            if (A.empty()) continue;
            Mat C = mat_mul(F, m2.map_at(a, e, deg), assigned[a]);
            eqs += A.size() * t;
            blocks.emplace_back(std::move(A), std::move(C));
        }
        Vec x0(t * t, Q(0));
        Mat kernel;
        const bool unconstrained = blocks.empty();
        if (unconstrained) {
            kernel.reserve(t * t);
            for (size_t k = 0; k < t * t; ++k) {
                Vec v(t * t, Q(0));
                v[k] = Q(1);
                kernel.push_back(std::move(v));
            }
        } else {
            // Unknown (row r, column m) of P lives at index m*t + r; the
            // equation block for predecessor a reads, for each column j
            // of A and output row r, sum_m P[m][r] * A[j][m] = C[j][r].
            Mat system(t * t, Vec(eqs, Q(0)));
            Vec rhs(eqs, Q(0));
            size_t off = 0;
            for (const auto& [A, C] : blocks) {
                for (size_t j = 0; j < A.size(); ++j)
                    for (size_t r = 0; r < t; ++r) {
                        const size_t q = off + j * t + r;
                        for (size_t m = 0; m < t; ++m)
                            system[m * t + r][q] = F.reduce(A[j][m]);
                        rhs[q] = F.reduce(entry_at(C[j], r));
                    }
                off += A.size() * t;
            }
            auto sol = solve(F, system, rhs);
            if (!sol) return false;
            x0 = std::move(*sol);
            kernel = kernel_basis(F, system);
        }
        return try_candidates(pos, e, t, x0, kernel, unconstrained);
    }

    bool attempt(size_t pos, int e, Mat P) {
        if (--budget < 0) {
            out_of_budget = true;
            return false;
        }
        if (!mat_inverse(F, P)) return false;
        assigned[e] = std::move(P);
        return run(pos + 1);
    }

    bool try_candidates(size_t pos, int e, size_t t, const Vec& x0,
                        const Mat& kernel, bool identity_first) {
        if (identity_first) {
            if (attempt(pos, e, identity_mat(t))) return true;
            if (out_of_budget) return false;
        }
        std::vector<Q> values;
        if (F.rational())
            values = {Q(0), Q(1), Q(-1), Q(2), Q(-2)};
        else
            for (int64_t v = 0; v < F.p; ++v) values.emplace_back(v);
        const size_t k = kernel.size();
        std::vector<size_t> idx(k, 0);
        while (true) {
            Vec x = x0;
            for (size_t i = 0; i < k; ++i) {
                if (idx[i] == 0) continue;
                const Q& c = values[idx[i]];
                for (size_t j = 0; j < x.size(); ++j)
                    x[j] = F.add(x[j], F.mul(c, kernel[i][j]));
            }
            if (attempt(pos, e, unflatten(F, x, t))) return true;
            if (out_of_budget) return false;
            size_t i = 0;
            for (; i < k; ++i) {
                if (++idx[i] < values.size()) break;
                idx[i] = 0;
            }
            if (i == k) break;
        }
        return false;
    }
};

constexpr long long kSearchBudget = 500000;

}  // namespace

FinitePoset::FinitePoset(size_t n, const std::vector<std::pair<int, int>>& rel)
    : n_(n), leq_(n, std::vector<char>(n, 0)) {
    for (size_t i = 0; i < n_; ++i) leq_[i][i] = 1;
    for (const auto& [a, b] : rel) {
        if (a < 0 || b < 0 || static_cast<size_t>(a) >= n_ ||
            static_cast<size_t>(b) >= n_)
            throw input_error("poset relation out of range");
        leq_[a][b] = 1;
    }
    for (size_t k = 0; k < n_; ++k)
        for (size_t i = 0; i < n_; ++i) {
            if (!leq_[i][k]) continue;
            for (size_t j = 0; j < n_; ++j)
                if (leq_[k][j]) leq_[i][j] = 1;
        }
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = i + 1; j < n_; ++j)
            if (leq_[i][j] && leq_[j][i])
                throw input_error("relation closes into a cycle, not a partial order");
}

bool FinitePoset::leq(int a, int b) const {
    if (a < 0 || b < 0 || static_cast<size_t>(a) >= n_ ||
        static_cast<size_t>(b) >= n_)
        throw input_error("poset element out of range");
    return leq_[a][b] != 0;
}

std::vector<std::pair<int, int>> FinitePoset::comparable_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (size_t a = 0; a < n_; ++a)
        for (size_t b = 0; b < n_; ++b)
            if (a != b && leq_[a][b])
                out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return out;
}

std::vector<int> FinitePoset::topological_order() const {
    std::vector<int> out;
    std::vector<char> placed(n_, 0);
    for (size_t step = 0; step < n_; ++step) {
        int pick = -1;
        for (size_t e = 0; e < n_ && pick < 0; ++e) {
            if (placed[e]) continue;
            bool ready = true;
            for (size_t a = 0; a < n_ && ready; ++a)
                if (a != e && leq_[a][e] && !placed[a]) ready = false;
            if (ready) pick = static_cast<int>(e);
        }
        if (pick < 0) throw internal_error("poset lost its partial order");
        placed[pick] = 1;
        out.push_back(pick);
    }
    return out;
}

Mat FinitePosetModule::map_at(int a, int b, size_t degree) const {
    if (degree >= degrees) throw input_error("degree out of range");
    if (a == b) return identity_mat(dims.at(a).at(degree));
    if (!poset.leq(a, b))
        throw input_error("structure maps exist only along the order");
    const auto it = maps.find({a, b});
    if (it == maps.end()) throw input_error("missing structure map");
    return it->second.at(degree);
}

void FinitePosetModule::validate() const {
    make_field(field.p);
    if (degrees == 0) throw input_error("a module needs at least one degree");
    const size_t n = poset.size();
    if (dims.size() != n)
        throw input_error("one dimension vector per poset element");
    for (const auto& dv : dims)
        if (dv.size() != degrees)
            throw input_error("one dimension per element and degree");
    const auto pairs = poset.comparable_pairs();
    for (const auto& [a, b] : pairs) {
        const auto it = maps.find({a, b});
        if (it == maps.end()) throw input_error("missing structure map");
        if (it->second.size() != degrees)
            throw input_error("one structure map per degree");
        for (size_t d = 0; d < degrees; ++d) {
            const Mat& M = it->second[d];
            if (M.size() != dims[a][d])
                throw input_error("structure map has the wrong number of columns");
            for (const auto& col : M)
                if (col.size() != dims[b][d])
                    throw input_error("structure map has the wrong column height");
        }
    }
    if (maps.size() != pairs.size())
        throw input_error("structure maps listed off the order");
}

bool FinitePosetModule::functorial() const {
    const int n = static_cast<int>(poset.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !poset.leq(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (b == c || !poset.leq(b, c)) continue;
                for (size_t d = 0; d < degrees; ++d) {
                    const Mat direct = map_at(a, c, d);
                    const Mat via = mat_mul(field, map_at(b, c, d), map_at(a, b, d));
                    if (!maps_equal(field, direct, via, dims[c][d])) return false;
                }
            }
        }
    return true;
}

bool FinitePosetModule::operator==(const FinitePosetModule& o) const {
    return poset == o.poset && field.p == o.field.p && degrees == o.degrees &&
           dims == o.dims && maps == o.maps;
}

ModuleInvariants invariants(const FinitePosetModule& m) {
    ModuleInvariants out;
    out.dims = m.dims;
    for (const auto& [a, b] : m.poset.comparable_pairs()) {
        std::vector<size_t> ranks(m.degrees, 0);
        for (size_t d = 0; d < m.degrees; ++d)
            ranks[d] = mat_rank(m.field, m.map_at(a, b, d));
        out.ranks[{a, b}] = std::move(ranks);
    }
    return out;
}

EquivResult strong_equivalent(const FinitePosetModule& m1,
                              const FinitePosetModule& m2) {
    m1.validate();
    m2.validate();
    if (m1.poset != m2.poset)
        throw input_error("strong equivalence needs one shared poset");
    if (m1.field.p != m2.field.p)
        throw input_error("strong equivalence needs one shared field");
    if (m1.degrees != m2.degrees)
        throw input_error("strong equivalence needs matching degree ranges");

    EquivResult res;
    if (invariants(m1) != invariants(m2)) {
        res.value = Tri::False;
        res.note = "dimension or rank invariants differ";
        return res;
    }
    const size_t n = m1.poset.size();
    for (size_t d = 0; d < m1.degrees; ++d) {
        size_t total = 0;
        for (size_t e = 0; e < n; ++e) total += m1.dims[e][d];
        if (total > 8)
            throw cap_error("strong equivalence capped at total dimension 8 per degree");
    }
    const Field F = m1.field;
    std::vector<std::vector<Mat>> witness(n, std::vector<Mat>(m1.degrees));
    for (size_t d = 0; d < m1.degrees; ++d) {
        DegreeSearch s{m1,
                       m2,
                       F,
                       d,
                       m1.poset.topological_order(),
                       std::vector<Mat>(n),
                       kSearchBudget};
        if (s.run(0)) {
            for (size_t e = 0; e < n; ++e) witness[e][d] = s.assigned[e];
            continue;
        }
        if (F.rational()) {
            res.value = Tri::Indeterminate;
            res.note = "invariants agree; the bounded rational search found no witness";
            return res;
        }
        if (s.out_of_budget)
            throw cap_error("equivalence search budget exceeded");
        res.value = Tri::False;
        res.note = "exhaustive search found no commuting base change in degree " +
                   std::to_string(d);
        return res;
    }
    res.value = Tri::True;
    res.witness = std::move(witness);
    res.note = "commuting base change found";
    return res;
}

FinitePosetModule relabel(const FinitePosetModule& m,
                          const std::vector<int>& phi) {
    const size_t n = m.poset.size();
    if (phi.size() != n) throw input_error("relabeling size mismatch");
    std::vector<char> seen(n, 0);
    for (const int v : phi) {
        if (v < 0 || static_cast<size_t>(v) >= n || seen[v])
            throw input_error("relabeling must be a permutation");
        seen[v] = 1;
    }
    std::vector<std::pair<int, int>> rel;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (m.poset.leq(phi[a], phi[b]))
                rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
    FinitePosetModule out;
    out.poset = FinitePoset(n, rel);
    out.field = m.field;
    out.degrees = m.degrees;
    out.dims.resize(n);
    for (size_t e = 0; e < n; ++e) out.dims[e] = m.dims[phi[e]];
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (a != b && out.poset.leq(static_cast<int>(a), static_cast<int>(b)))
                out.maps[{static_cast<int>(a), static_cast<int>(b)}] =
                    m.maps.at({phi[a], phi[b]});
    return out;
}

EquivResult weak_equivalent(const FinitePosetModule& m1,
                            const FinitePosetModule& m2) {
    m1.validate();
    m2.validate();
    if (m1.field.p != m2.field.p)
        throw input_error("weak equivalence needs one shared field");
    if (m1.degrees != m2.degrees)
        throw input_error("weak equivalence needs matching degree ranges");
    if (m1.poset.size() > 8 || m2.poset.size() > 8)
        throw cap_error("weak equivalence capped at posets of size 8");

    EquivResult res;
    const size_t n = m1.poset.size();
    if (m2.poset.size() != n) {
        res.value = Tri::False;
        res.note = "poset sizes differ";
        return res;
    }

    // Comparability degree of each element, used to prune relabelings.
    const auto signature = [](const FinitePosetModule& m, int e) {
        size_t below = 0, above = 0;
        for (size_t a = 0; a < m.poset.size(); ++a) {
            if (static_cast<int>(a) == e) continue;
            if (m.poset.leq(static_cast<int>(a), e)) ++below;
            if (m.poset.leq(e, static_cast<int>(a))) ++above;
        }
        return std::make_pair(below, above);
    };

    std::vector<int> phi(n, -1);
    std::vector<char> used(n, 0);
    bool saw_indeterminate = false;

    // Depth-first enumeration of order isomorphisms phi with
    // dims2[phi(e)] == dims1[e]; each complete phi is checked strongly.
    const std::function<bool(size_t)> search = [&](size_t e) -> bool {
        if (e == n) {
            const EquivResult r = strong_equivalent(m1, relabel(m2, phi));
            if (r.value == Tri::True) {
                res = r;
                std::string desc = "after relabeling";
                for (const int v : phi) desc += " " + std::to_string(v);
                res.note += "; " + desc;
                return true;
            }
            if (r.value == Tri::Indeterminate) saw_indeterminate = true;
            return false;
        }
        for (size_t cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            if (m1.dims[e] != m2.dims[cand]) continue;
            if (signature(m1, static_cast<int>(e)) !=
                signature(m2, static_cast<int>(cand)))
                continue;
            bool consistent = true;
            for (size_t prev = 0; prev < e && consistent; ++prev) {
                const int pe = static_cast<int>(prev);
                const int ce = static_cast<int>(e);
                if (m1.poset.leq(pe, ce) !=
                    m2.poset.leq(phi[prev], static_cast<int>(cand)))
                    consistent = false;
                if (m1.poset.leq(ce, pe) !=
                    m2.poset.leq(static_cast<int>(cand), phi[prev]))
                    consistent = false;
            }
            if (!consistent) continue;
            phi[e] = static_cast<int>(cand);
            used[cand] = 1;
            if (search(e + 1)) return true;
            used[cand] = 0;
            phi[e] = -1;
        }
        return false;
    };

    if (search(0)) return res;
    if (saw_indeterminate) {
        res.value = Tri::Indeterminate;
        res.note = "some relabelings were inconclusive over the rationals";
        return res;
    }
    res.value = Tri::False;
    res.note = "no order isomorphism aligns the modules";
    return res;
}

FinitePosetModule example_ab(const Q& a, const Q& b, const Field& f) {
    make_field(f.p);
    const Q ra = f.reduce(a);
    const Q rb = f.reduce(b);
    if (f.is_zero(ra) && f.is_zero(rb))
        throw input_error("the gadget parameters must not both vanish in the field");
    FinitePosetModule m;
    m.poset = FinitePoset(5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}});
    m.field = f;
    m.degrees = 1;
    m.dims = {{2}, {1}, {1}, {1}, {1}};
    m.maps[{1, 0}] = {Mat{{Q(1), Q(0)}}};
    m.maps[{2, 0}] = {Mat{{Q(0), Q(1)}}};
    m.maps[{3, 0}] = {Mat{{Q(1), Q(1)}}};
    m.maps[{4, 0}] = {Mat{{ra, rb}}};
    return m;
}

}  // namespace sap
