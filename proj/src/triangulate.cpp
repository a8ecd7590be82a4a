#include "sap/triangulate.hpp"

#include <algorithm>
#include <set>

namespace sap {

std::vector<Q> shear_coefficients(uint32_t nvars, int k) {
    if (nvars == 0) throw input_error("shear needs at least one variable");
    std::vector<Q> coef(nvars, Q(0));
    Q c(k);
    for (uint32_t j = nvars - 1; j-- > 0;) {
        coef[j] = c;
        c = c * Q(k);
    }
    return coef;
}

const std::vector<int>& shear_schedule() {
    static const std::vector<int> ks{0, 1, -1, 2, -2, 3, -3, 4, -4};
    return ks;
}

// x_j  ->  x_j + c_j * x_{last} on the trailing nvars-variable block.
Poly shear_poly(const Poly& p, const std::vector<Q>& coef, uint32_t nvars) {
    if (p.nvars() < nvars) throw input_error("shear wider than the polynomial");
    const uint32_t off = p.nvars() - nvars;
    const uint32_t w = p.nvars();
    Poly out = p;
    for (uint32_t j = 0; j + 1 < nvars; ++j) {
        if (coef[j].is_zero()) continue;
        Poly repl = Poly::variable(off + j, w) +
                    Poly::constant(w, coef[j]) * Poly::variable(w - 1, w);
        out = out.substitute(off + j, repl);
    }
    return out;
}

Formula shear_formula(const Formula& f, const std::vector<Q>& coef,
                      uint32_t nvars) {
    switch (f.kind()) {
        case Formula::Kind::True:
            return Formula::always_true();
        case Formula::Kind::False:
            return Formula::always_false();
        case Formula::Kind::Atom:
            return Formula::atom(shear_poly(f.poly(), coef, nvars), f.rel());
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            std::vector<Formula> kids;
            kids.reserve(f.children().size());
            for (const Formula& c : f.children())
                kids.push_back(shear_formula(c, coef, nvars));
            return f.kind() == Formula::Kind::And ? Formula::conj(std::move(kids))
                                                  : Formula::disj(std::move(kids));
        }
    }
    throw internal_error("unreachable formula kind");
}

namespace {

std::vector<Poly> region_family(const std::vector<Formula>& regions,
                                const std::vector<Poly>& extra,
                                uint32_t nvars) {
    std::vector<Poly> fam;
    auto add = [&](const Poly& p) {
        if (p.nvars() != nvars)
            throw input_error("region polynomial arity mismatch");
        if (p.is_constant()) return;
        if (std::find(fam.begin(), fam.end(), p) == fam.end()) fam.push_back(p);
    };
    for (const Formula& f : regions)
        for (const Poly& p : f.polys()) add(p);
    for (const Poly& p : extra) add(p);
    return fam;
}

}  // namespace

std::map<int, std::vector<int>> face_order(const Decomposition& d) {
    // strictly-below digraph among full-level cells
    std::map<int, std::set<int>> below;
    for (const auto& [a, b] : d.incidences()) {
        if (d.cell(a).index.size() != d.cell(b).index.size()) continue;
        if (static_cast<uint32_t>(d.cell(a).index.size()) != d.nvars()) continue;
        if (a != b) below[b].insert(a);
    }
    // transitive closure by repeated expansion (posets here are tiny)
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& [b, under] : below) {
            std::set<int> add;
            for (int a : under) {
                const auto it = below.find(a);
                if (it == below.end()) continue;
                for (int c : it->second)
                    if (!under.count(c)) add.insert(c);
            }
            if (!add.empty()) {
                under.insert(add.begin(), add.end());
                grew = true;
            }
        }
    }
    std::map<int, std::vector<int>> out;
    for (auto& [b, under] : below)
        out.emplace(b, std::vector<int>(under.begin(), under.end()));
    return out;
}

SimplicialComplex order_complex(const Decomposition& d,
                                const std::vector<int>& kept) {
    const std::map<int, std::vector<int>> order = face_order(d);
    const std::set<int> keep(kept.begin(), kept.end());
    // chains of the restricted poset, built upward from each cell
    std::vector<std::vector<int>> chains;
    for (int v : kept) chains.push_back({v});
    // above[v]: kept cells strictly above v
    std::map<int, std::vector<int>> above;
    for (const auto& [b, under] : order) {
        if (!keep.count(b)) continue;
        for (int a : under)
            if (keep.count(a)) above[a].push_back(b);
    }
    std::vector<std::vector<int>> frontier = chains;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const std::vector<int>& c : frontier) {
            const auto it = above.find(c.back());
            if (it == above.end()) continue;
            for (int b : it->second) {
                // extend only through comparable continuations: b must
                // be above every element, which transitivity grants
                // via the chain's top element
                std::vector<int> longer = c;
                longer.push_back(b);
                chains.push_back(longer);
                next.push_back(std::move(longer));
            }
        }
        frontier = std::move(next);
    }
    if (chains.empty()) return SimplicialComplex();
    return SimplicialComplex::from_simplices(chains);
}

long cell_euler(const Decomposition& d, const std::vector<int>& kept) {
    long chi = 0;
    for (int id : kept) chi += d.cell(id).dim() % 2 == 0 ? 1 : -1;
    return chi;
}

std::map<int, int> identity_vertex_map(const SimplicialComplex& k) {
    std::map<int, int> out;
    for (int v : k.vertices()) out.emplace(v, v);
    return out;
}

Triangulation triangulate(const std::vector<Formula>& regions, uint32_t nvars,
                          const std::vector<Poly>& extra) {
    if (nvars == 0) throw input_error("triangulation needs at least one variable");
    // shear schedule: identity first, then growing triangular shears
    for (const int k : shear_schedule()) {
        const std::vector<Q> coef = shear_coefficients(nvars, k);
        std::vector<Formula> sheared;
        sheared.reserve(regions.size());
        for (const Formula& f : regions)
            sheared.push_back(k == 0 ? f : shear_formula(f, coef, nvars));
        std::vector<Poly> fam;
        if (k == 0) {
            fam = region_family(regions, extra, nvars);
        } else {
            std::vector<Poly> ex;
            ex.reserve(extra.size());
            for (const Poly& p : extra) ex.push_back(shear_poly(p, coef, nvars));
            fam = region_family(sheared, ex, nvars);
        }
        Decomposition dec = Decomposition::build(fam, nvars);
        if (!dec.well_based() && nvars >= 2) continue;
        Triangulation out{std::move(dec), identity_mat(nvars), {}, {}};
        for (uint32_t j = 0; j + 1 < nvars; ++j) out.change[nvars - 1][j] = coef[j];
        for (const Formula& f : sheared) {
            std::vector<int> kept;
            for (int id : out.dec.tops())
                if (f.holds_at(out.dec.cell(id).sample)) kept.push_back(id);
            out.complexes.push_back(order_complex(out.dec, kept));
            out.kept.push_back(std::move(kept));
        }
        return out;
    }
    throw cap_error("no sheared coordinates gave a well-based decomposition");
}

}  // namespace sap
