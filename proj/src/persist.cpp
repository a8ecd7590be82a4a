#include "sap/persist.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <utility>

namespace sap {

std::function<void(const SimplicialComplex&, const Field&)> complex_observer;

namespace {

void observe(const SimplicialComplex& k, const Field& f) {
    if (complex_observer) complex_observer(k, f);
}

// Same polynomial in a wider ambient variable count.
Poly widen(const Poly& q, uint32_t width) {
    if (q.nvars() == width) return q;
    if (q.nvars() > width)
        throw input_error("polynomial over too many variables");
    std::vector<uint32_t> map(q.nvars());
    for (uint32_t i = 0; i < q.nvars(); ++i) map[i] = i;
    return q.rename_vars(map, width);
}

// A region-variable polynomial moved to the trailing block of a wider
// tuple: x_j becomes variable offset+j.
Poly x_shifted(const Poly& f, uint32_t n, uint32_t offset, uint32_t width) {
    const Poly q = widen(f, n);
    std::vector<uint32_t> map(n);
    for (uint32_t j = 0; j < n; ++j) map[j] = offset + j;
    return q.rename_vars(map, width);
}

void validate_input(const FiltrationInput& in) {
    make_field(in.field.p);
    if (in.domain_vars == 0)
        throw input_error("the region needs at least one variable");
    if (in.parameters == 0)
        throw input_error("at least one filtration function is required");
    if (in.domain_vars > in.caps.max_domain_vars)
        throw cap_error("region variable count exceeds the cap");
    if (in.parameters > in.caps.max_parameters)
        throw cap_error("filtration function count exceeds the cap");
    if (in.degree_cap > in.caps.max_degree)
        throw cap_error("homology degree exceeds the cap");
    if (in.functions.size() != in.parameters)
        throw input_error("one filtration function per parameter");
    for (const Poly& f : in.functions)
        if (f.nvars() > in.domain_vars)
            throw input_error("filtration functions range over the region variables");
    if (in.domain.nvars() > in.domain_vars)
        throw input_error("the region formula ranges over the region variables");
    for (const Poly& g : in.parameter_family) {
        if (g.is_zero())
            throw input_error("zero polynomial in the parameter family");
        if (g.nvars() > in.parameters)
            throw input_error("the supplied parameter family ranges over the parameters");
    }
}

// Sorted deduplicated family of normalized polynomials, constants
// dropped.
std::vector<Poly> tidy_family(std::vector<Poly> polys) {
    std::vector<Poly> out;
    for (Poly& q : polys) {
        if (q.is_constant()) continue;
        out.push_back(q.normalized());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Both sublevel conditions over (y, y', x): the region with f <= y,
// and the region with f <= y'.
std::pair<Formula, Formula> pair_formulas(const FiltrationInput& in) {
    const uint32_t n = in.domain_vars, p = in.parameters;
    const uint32_t w = 2 * p + n;
    const Formula S = in.domain.embedded(2 * p, w);
    std::vector<Formula> a{S}, b{S};
    for (uint32_t i = 0; i < p; ++i) {
        const Poly fx = x_shifted(in.functions[i], n, 2 * p, w);
        a.push_back(Formula::atom(fx - Poly::variable(i, w), Rel::LE));
        b.push_back(Formula::atom(fx - Poly::variable(p + i, w), Rel::LE));
    }
    return {Formula::conj(std::move(a)), Formula::conj(std::move(b))};
}

// Difference polynomial y'_i - y_i over the pair block, oriented so a
// nonnegative sign means the second block dominates in coordinate i.
Poly diagonal_poly(uint32_t i, uint32_t p) {
    return Poly::variable(p + i, 2 * p) - Poly::variable(i, 2 * p);
}

Mat padded_frame(const Field& F, const Mat& m, size_t frame) {
    Mat out(frame, Vec(frame, Q(0)));
    for (size_t c = 0; c < m.size(); ++c) {
        if (c >= frame) throw internal_error("map wider than the common frame");
        for (size_t r = 0; r < m[c].size(); ++r) {
            if (r >= frame) throw internal_error("map taller than the common frame");
            out[c][r] = F.reduce(m[c][r]);
        }
    }
    return out;
}

Mat identity_block(size_t d, size_t frame) {
    Mat out(frame, Vec(frame, Q(0)));
    for (size_t i = 0; i < d; ++i) out[i][i] = Q(1);
    return out;
}

// Kept top cells of a fiber decomposition under a region formula.
std::vector<int> kept_cells(const Decomposition& dec, const Formula& region) {
    std::vector<int> kept;
    for (const int id : dec.tops())
        if (region.holds_at(dec.cell(id).sample)) kept.push_back(id);
    return kept;
}

std::vector<size_t> padded_betti(const SimplicialComplex& cx, const Field& F,
                                 size_t degrees) {
    std::vector<size_t> b = betti_numbers(cx, F);
    b.resize(degrees, 0);
    return b;
}

}  // namespace

Formula thicken_formula(const FiltrationInput& in) {
    const uint32_t n = in.domain_vars, p = in.parameters;
    const uint32_t w = p + n;
    std::vector<Formula> parts{in.domain.embedded(p, w)};
    for (uint32_t i = 0; i < p; ++i) {
        const Poly fx = x_shifted(in.functions[i], n, p, w);
        parts.push_back(Formula::atom(fx - Poly::variable(i, w), Rel::LE));
    }
    return Formula::conj(std::move(parts));
}

Formula fiber_formula(const FiltrationInput& in, const std::vector<Q>& y) {
    if (y.size() != in.parameters)
        throw input_error("one value per filtration function");
    return thicken_formula(in).specialize_prefix(in.parameters, y);
}

bool region_bounded(const Formula& f, uint32_t nvars) {
    if (nvars == 0) return true;
    const std::vector<Poly> polys = f.polys();
    if (polys.empty())
        return !f.holds_at(APoint::from_rationals(std::vector<Q>(nvars, Q(0))));
    for (uint32_t i = 0; i < nvars; ++i) {
        // Order the variables with coordinate i first; the first-level
        // stack then slices that coordinate.
        std::vector<uint32_t> map(nvars);
        map[i] = 0;
        for (uint32_t j = 0, next = 1; j < nvars; ++j)
            if (j != i) map[j] = next++;
        std::vector<Poly> renamed;
        renamed.reserve(polys.size());
        for (const Poly& q : polys)
            renamed.push_back(widen(q, nvars).rename_vars(map, nvars));
        const Decomposition dec = Decomposition::build(renamed, nvars);
        int maxpos = 0;
        for (const Cell& c : dec.cells())
            if (c.index.size() == 1) maxpos = std::max(maxpos, c.index[0]);
        for (const int id : dec.tops()) {
            const Cell& c = dec.cell(id);
            if (c.index[0] != 0 && c.index[0] != maxpos) continue;
            const bool holds = f.holds([&](const Poly& q) {
                return c.sample.sign_at(widen(q, nvars).rename_vars(map, nvars));
            });
            // The cell spans the whole unbounded interval in
            // coordinate i, so the region does too.
            if (holds) return false;
        }
    }
    return true;
}

std::vector<Poly> functions_from_graph(const Formula& graph, uint32_t n,
                                       uint32_t p) {
    const uint32_t w = p + n;
    std::vector<const Formula*> atoms;
    const std::function<void(const Formula&)> collect = [&](const Formula& f) {
        switch (f.kind()) {
            case Formula::Kind::Atom:
                atoms.push_back(&f);
                return;
            case Formula::Kind::And:
                for (const Formula& kid : f.children()) collect(kid);
                return;
            default:
                throw input_error(
                    "a graph formula is a conjunction of equations");
        }
    };
    collect(graph);
    if (atoms.size() != p)
        throw input_error("the graph formula needs one equation per parameter");
    std::vector<Poly> fs(p, Poly());
    std::vector<char> seen(p, 0);
    for (const Formula* atom : atoms) {
        if (atom->rel() != Rel::EQ)
            throw input_error("graph equations must be equalities");
        const Poly q = widen(atom->poly(), w);
        int param = -1;
        for (uint32_t i = 0; i < p; ++i) {
            const int d = q.degree_in(i);
            if (d == 0) continue;
            if (d > 1 || param >= 0)
                throw input_error(
                    "each graph equation must use exactly one parameter, linearly");
            param = static_cast<int>(i);
        }
        if (param < 0)
            throw input_error(
                "each graph equation must use exactly one parameter, linearly");
        const auto cs = q.coeffs_wrt(static_cast<uint32_t>(param));
        if (!cs[1].is_constant())
            throw input_error("the parameter coefficient must be constant");
        const Poly rest = cs[0];
        for (uint32_t i = 0; i < p; ++i)
            if (rest.depends_on(i))
                throw input_error(
                    "each graph equation must use exactly one parameter, linearly");
        if (seen[param])
            throw input_error("two graph equations use the same parameter");
        seen[param] = 1;
        std::vector<uint32_t> map(w, n);  // parameters guarded out of range
        for (uint32_t j = 0; j < n; ++j) map[p + j] = j;
        fs[param] =
            (rest * (Q(-1) / cs[1].constant_value())).rename_vars(map, n);
    }
    return fs;
}

ConstructibleModule ConstructibleModule::build(const FiltrationInput& in,
                                               bool eager_maps,
                                               unsigned threads) {
    validate_input(in);
    const uint32_t n = in.domain_vars, p = in.parameters;
    if (!region_bounded(in.domain, n))
        throw input_error("the region must be bounded");

    ConstructibleModule mod;
    mod.st_.input = in;

    const Formula thick_plain = thicken_formula(in);

    // One global change of region coordinates under which every fiber
    // decomposition is well based; the same change is reused for the
    // pair stage so bases stay consistent across all computations.
    bool found = false;
    for (const int k : shear_schedule()) {
        const std::vector<Q> coef = shear_coefficients(n, k);
        const Formula thick = shear_formula(thick_plain, coef, n);
        const std::vector<Poly> t_polys = thick.polys();

        std::vector<Poly> c_family;
        if (!in.parameter_family.empty()) {
            for (const Poly& q : in.parameter_family)
                c_family.push_back(widen(q, p));
        } else {
            const auto levels = projection_cascade(t_polys, p + n);
            for (uint32_t lvl = 1; lvl <= p; ++lvl)
                for (const Poly& q : levels[lvl - 1])
                    c_family.push_back(widen(q, p));
        }
        c_family = tidy_family(std::move(c_family));

        Decomposition c_part = Decomposition::build(c_family, p);
        std::vector<std::vector<size_t>> cell_dims;
        cell_dims.reserve(c_part.tops().size());
        bool ok = true;
        for (const int id : c_part.tops()) {
            const Decomposition fiber =
                Decomposition::build(t_polys, n, c_part.cell(id).sample);
            if (!fiber.well_based()) {
                ok = false;
                break;
            }
            const SimplicialComplex cx =
                order_complex(fiber, kept_cells(fiber, thick));
            observe(cx, in.field);
            cell_dims.push_back(padded_betti(cx, in.field, in.degree_cap + 1));
        }
        if (!ok) continue;
        mod.st_.shear_k = k;
        mod.st_.c_family = std::move(c_family);
        mod.st_.cell_dims = std::move(cell_dims);
        mod.c_part_ = std::move(c_part);
        found = true;
        break;
    }
    if (!found)
        throw cap_error("no admissible change of coordinates found");
    {
        const auto& tops = mod.c_part_->tops();
        for (size_t i = 0; i < tops.size(); ++i) mod.top_pos_[tops[i]] = i;
    }

    size_t frame = 0;
    for (const auto& dims : mod.st_.cell_dims)
        for (const size_t d : dims) frame = std::max(frame, d);
    mod.st_.frame = frame;

    // Pair-space family: derived from the two-block sublevel region,
    // or assembled from the supplied parameter family, plus the
    // difference polynomials kept in a fixed orientation.
    const std::vector<Q> coef = shear_coefficients(n, mod.st_.shear_k);
    std::vector<Poly> base;
    if (!in.parameter_family.empty()) {
        for (const Poly& q : in.parameter_family) {
            const Poly yq = widen(q, p);
            base.push_back(widen(yq, 2 * p));
            std::vector<uint32_t> mp(p);
            for (uint32_t j = 0; j < p; ++j) mp[j] = p + j;
            base.push_back(yq.rename_vars(mp, 2 * p));
        }
    } else {
        auto [t2a, t2b] = pair_formulas(in);
        t2a = shear_formula(t2a, coef, n);
        t2b = shear_formula(t2b, coef, n);
        const std::vector<Poly> p2 =
            Formula::conj({t2a, t2b}).polys();
        const auto levels = projection_cascade(p2, 2 * p + n);
        for (uint32_t lvl = 1; lvl <= 2 * p; ++lvl)
            for (const Poly& q : levels[lvl - 1])
                base.push_back(widen(q, 2 * p));
    }
    base = tidy_family(std::move(base));

    std::vector<Poly> diag_norm;
    for (uint32_t i = 0; i < p; ++i)
        diag_norm.push_back(diagonal_poly(i, p).normalized());
    base.erase(std::remove_if(base.begin(), base.end(),
                              [&](const Poly& q) {
                                  return std::find(diag_norm.begin(),
                                                   diag_norm.end(),
                                                   q) != diag_norm.end();
                              }),
               base.end());
    mod.st_.d_family = std::move(base);
    for (uint32_t i = 0; i < p; ++i) {
        mod.st_.diagonal_index.push_back(mod.st_.d_family.size());
        mod.st_.d_family.push_back(diagonal_poly(i, p));
    }

    int maxdeg = 0;
    for (const Poly& q : mod.st_.d_family)
        maxdeg = std::max(maxdeg, q.total_degree());
    mod.st_.witness = Z(mod.st_.d_family.size()) * Z(maxdeg);

    if (eager_maps) mod.materialize_maps(threads);
    return mod;
}

ConstructibleModule ConstructibleModule::from_state(ModuleState s) {
    validate_input(s.input);
    ConstructibleModule mod;
    mod.st_ = std::move(s);
    return mod;
}

const Decomposition& ConstructibleModule::parameter_partition() const {
    if (!c_part_) {
        c_part_ = Decomposition::build(st_.c_family, parameters());
        const auto& tops = c_part_->tops();
        if (tops.size() != st_.cell_dims.size())
            throw internal_error("stored dimensions do not match the partition");
        top_pos_.clear();
        for (size_t i = 0; i < tops.size(); ++i) top_pos_[tops[i]] = i;
    }
    return *c_part_;
}

const Decomposition& ConstructibleModule::pair_partition() const {
    if (!d_part_)
        d_part_ = Decomposition::build(st_.d_family, 2 * parameters());
    return *d_part_;
}

LocatedDims ConstructibleModule::locate(const APoint& y) const {
    if (y.dim() != parameters())
        throw input_error("parameter point dimension mismatch");
    const Decomposition& c = parameter_partition();
    LocatedDims out;
    out.cell = c.locate(y);
    out.dims = st_.cell_dims[top_pos_.at(out.cell)];
    return out;
}

std::vector<size_t> ConstructibleModule::dims_at(const std::vector<Q>& y) const {
    return locate(APoint::from_rationals(y)).dims;
}

bool ConstructibleModule::comparable(const APoint& pair) const {
    const uint32_t p = parameters();
    if (pair.dim() != 2 * static_cast<size_t>(p))
        throw input_error("pair point dimension mismatch");
    for (uint32_t i = 0; i < p; ++i)
        if (pair.sign_at(diagonal_poly(i, p)) < 0) return false;
    return true;
}

const std::vector<Mat>& ConstructibleModule::maps(const APoint& pair) const {
    const uint32_t p = parameters();
    if (pair.dim() != 2 * static_cast<size_t>(p))
        throw input_error("pair point dimension mismatch");
    std::vector<int> diag_signs(p);
    for (uint32_t i = 0; i < p; ++i) {
        diag_signs[i] = pair.sign_at(diagonal_poly(i, p));
        if (diag_signs[i] < 0)
            throw input_error("the pair is not comparable");
    }
    if (!d_levels_)
        d_levels_ = projection_cascade(st_.d_family, 2 * p);
    return maps_for_ground(stack_path(*d_levels_, pair), pair, diag_signs);
}

const std::vector<Mat>& ConstructibleModule::maps_for_ground(
    const std::vector<int>& key, const APoint& g,
    const std::vector<int>& diag_signs) const {
    const auto hit = st_.map_cache.find(key);
    if (hit != st_.map_cache.end()) return hit->second;

    const uint32_t p = parameters(), n = domain_vars();
    const size_t degrees = degree_cap() + 1;
    const Field& F = field();

    bool diagonal = true;
    for (const int s : diag_signs) {
        if (s < 0) throw input_error("the pair cell is not comparable");
        if (s != 0) diagonal = false;
    }
    const int c_src = parameter_partition().locate(g.prefix(p));
    const std::vector<size_t>& src_dims = st_.cell_dims[top_pos_.at(c_src)];

    std::vector<Mat> out(degrees);
    if (diagonal) {
        for (size_t d = 0; d < degrees; ++d)
            out[d] = identity_block(src_dims[d], st_.frame);
        return st_.map_cache.emplace(key, std::move(out)).first->second;
    }

    std::vector<std::vector<Q>> sel(p, std::vector<Q>(2 * p, Q(0)));
    for (uint32_t i = 0; i < p; ++i) sel[i][p + i] = Q(1);
    const int c_dst = parameter_partition().locate(g.linear_image(sel));
    const std::vector<size_t>& dst_dims = st_.cell_dims[top_pos_.at(c_dst)];

    const std::vector<Q> coef = shear_coefficients(n, st_.shear_k);
    auto [t2a, t2b] = pair_formulas(st_.input);
    t2a = shear_formula(t2a, coef, n);
    t2b = shear_formula(t2b, coef, n);

    const Decomposition refined =
        Decomposition::build(Formula::conj({t2a, t2b}).polys(), n, g);
    const Decomposition own_a = Decomposition::build(t2a.polys(), n, g);
    const Decomposition own_b = Decomposition::build(t2b.polys(), n, g);
    if (!refined.well_based() || !own_a.well_based() || !own_b.well_based())
        throw cap_error("pair fibers lost well-basedness");

    const std::vector<int> kept_a = kept_cells(refined, t2a);
    const std::vector<int> kept_b = kept_cells(refined, t2b);
    {
        const std::set<int> kb(kept_b.begin(), kept_b.end());
        for (const int v : kept_a)
            if (!kb.count(v))
                throw internal_error("sublevel regions stopped nesting");
    }

    const SimplicialComplex cx_a = order_complex(refined, kept_a);
    const SimplicialComplex cx_b = order_complex(refined, kept_b);
    const SimplicialComplex cxo_a = order_complex(own_a, kept_cells(own_a, t2a));
    const SimplicialComplex cxo_b = order_complex(own_b, kept_cells(own_b, t2b));
    observe(cx_a, F);
    observe(cx_b, F);
    observe(cxo_a, F);
    observe(cxo_b, F);

    if (padded_betti(cxo_a, F, degrees) != src_dims ||
        padded_betti(cxo_b, F, degrees) != dst_dims)
        throw internal_error("stored dimensions drifted");

    std::map<int, int> vmap_a, vmap_b;
    for (const int v : kept_a)
        vmap_a[v] = own_a.locate(refined.cell(v).sample);
    for (const int v : kept_b)
        vmap_b[v] = own_b.locate(refined.cell(v).sample);
    const std::map<int, int> vmap_ab = identity_vertex_map(cx_a);

    for (size_t d = 0; d < degrees; ++d) {
        const int dd = static_cast<int>(d);
        const Mat A = induced_homology_map(cx_a, cxo_a, dd, vmap_a, F);
        const Mat B = induced_homology_map(cx_a, cx_b, dd, vmap_ab, F);
        const Mat C = induced_homology_map(cx_b, cxo_b, dd, vmap_b, F);
        const auto A_inv = mat_inverse(F, A);
        if (!A_inv)
            throw internal_error("refinement comparison failed to invert");
        const Mat M = mat_mul(F, C, mat_mul(F, B, *A_inv));
        if (M.size() != src_dims[d])
            throw internal_error("structure map has the wrong source size");
        out[d] = padded_frame(F, M, st_.frame);
    }
    return st_.map_cache.emplace(key, std::move(out)).first->second;
}

void ConstructibleModule::materialize_maps(unsigned threads) {
    const Decomposition& d = pair_partition();
    struct Job {
        std::vector<int> key;
        APoint ground;
        std::vector<int> signs;
    };
    std::vector<Job> todo;
    for (const int id : d.tops()) {
        const Cell& c = d.cell(id);
        std::vector<int> signs;
        signs.reserve(st_.diagonal_index.size());
        bool ok = true;
        for (const size_t di : st_.diagonal_index) {
            if (c.signs[di] < 0) {
                ok = false;
                break;
            }
            signs.push_back(c.signs[di]);
        }
        if (ok && !st_.map_cache.count(c.index))
            todo.push_back({c.index, c.sample, std::move(signs)});
    }
    if (threads <= 1 || todo.size() < 2) {
        for (const Job& j : todo) maps_for_ground(j.key, j.ground, j.signs);
    } else {
        const unsigned workers =
            static_cast<unsigned>(std::min<size_t>(threads, todo.size()));
        std::vector<std::map<std::vector<int>, std::vector<Mat>>> results(
            workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([this, &results, &todo, w, workers]() {
                // Fully private runtime per worker: decompositions and
                // algebraic numbers are rebuilt, never shared; each
                // job's copied data is touched by exactly one worker.
                ModuleState s = st_;
                s.map_cache.clear();
                const ConstructibleModule priv = from_state(std::move(s));
                for (size_t i = w; i < todo.size(); i += workers) {
                    const Job& j = todo[i];
                    results[w][j.key] =
                        priv.maps_for_ground(j.key, j.ground, j.signs);
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& r : results)
            for (auto& [keyv, mats] : r) st_.map_cache[keyv] = std::move(mats);
    }
    st_.eager = true;
}

FinitePosetModule ConstructibleModule::restrict_core(
    size_t count, const std::function<APoint(size_t)>& point_at,
    const std::function<APoint(size_t, size_t)>& pair_at) const {
    if (count == 0) throw input_error("restriction needs at least one point");
    const size_t degrees = degree_cap() + 1;

    std::vector<std::vector<char>> le(count, std::vector<char>(count, 0));
    for (size_t i = 0; i < count; ++i) le[i][i] = 1;
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j) {
            if (i == j) continue;
            le[i][j] = comparable(pair_at(i, j)) ? 1 : 0;
        }
    std::vector<std::pair<int, int>> rel;
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j) {
            if (i == j) continue;
            if (le[i][j] && le[j][i])
                throw input_error("restriction points must be distinct");
            if (le[i][j])
                rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }

    FinitePosetModule m;
    m.poset = FinitePoset(count, rel);
    m.field = field();
    m.degrees = degrees;
    m.dims.resize(count);
    for (size_t i = 0; i < count; ++i) m.dims[i] = locate(point_at(i)).dims;
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j) {
            if (i == j || !le[i][j]) continue;
            const std::vector<Mat>& padded = maps(pair_at(i, j));
            std::vector<Mat> cut(degrees);
            for (size_t d = 0; d < degrees; ++d) {
                Mat block(m.dims[i][d], Vec(m.dims[j][d], Q(0)));
                for (size_t c = 0; c < block.size(); ++c)
                    for (size_t r = 0; r < block[c].size(); ++r)
                        block[c][r] = padded[d][c][r];
                cut[d] = std::move(block);
            }
            m.maps[{static_cast<int>(i), static_cast<int>(j)}] = std::move(cut);
        }
    m.validate();
    return m;
}

FinitePosetModule ConstructibleModule::restrict_to(
    const std::vector<std::vector<Q>>& points) const {
    const uint32_t p = parameters();
    for (const auto& pt : points)
        if (pt.size() != p)
            throw input_error("restriction points live in parameter space");
    return restrict_core(
        points.size(),
        [&](size_t i) { return APoint::from_rationals(points[i]); },
        [&](size_t i, size_t j) {
            std::vector<Q> both = points[i];
            both.insert(both.end(), points[j].begin(), points[j].end());
            return APoint::from_rationals(both);
        });
}

FinitePosetModule ConstructibleModule::restrict_tuple(const APoint& tuple,
                                                      size_t count) const {
    const uint32_t p = parameters();
    if (tuple.dim() != count * p)
        throw input_error("the tuple packs count points of parameter space");
    const auto select = [&](std::initializer_list<size_t> blocks) {
        std::vector<std::vector<Q>> rows;
        for (const size_t b : blocks)
            for (uint32_t k = 0; k < p; ++k) {
                std::vector<Q> row(tuple.dim(), Q(0));
                row[b * p + k] = Q(1);
                rows.push_back(std::move(row));
            }
        return rows;
    };
    return restrict_core(
        count,
        [&](size_t i) { return tuple.linear_image(select({i})); },
        [&](size_t i, size_t j) { return tuple.linear_image(select({i, j})); });
}

}  // namespace sap
