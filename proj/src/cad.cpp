#include "sap/cad.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "cad_internal.hpp"
#include "sap/subres.hpp"

namespace sap {

namespace cad_detail {

Poly narrow(const Poly& p, uint32_t new_nvars) {
    std::vector<Poly::Term> terms;
    terms.reserve(p.terms().size());
    for (const Poly::Term& t : p.terms()) {
        for (size_t i = new_nvars; i < t.e.size(); ++i)
            if (t.e[i] != 0) throw internal_error("narrow: variable in use");
        terms.push_back({Poly::Exp(t.e.begin(), t.e.begin() + new_nvars), t.c});
    }
    return Poly::from_terms(new_nvars, std::move(terms));
}

bool same_root(const AlgUPoly& h1, RootInterval& I, const AlgUPoly& h2,
               RootInterval& J) {
    auto overlap = [](const RootInterval& a, const RootInterval& b) {
        return !(a.hi < b.lo || b.hi < a.lo);
    };
    if (!overlap(I, J)) return false;
    if (I.exact() && J.exact()) return I.lo == J.lo;
    if (I.exact()) {
        if (h2.sign_at(I.lo) == 0) return true;
        while (overlap(I, J)) h2.refine(J);
        return false;
    }
    if (J.exact()) {
        if (h1.sign_at(J.lo) == 0) return true;
        while (overlap(I, J)) h1.refine(I);
        return false;
    }
    AlgUPoly g = AlgUPoly::gcd_at_base(h1, h2);
    if (g.degree() >= 1) {
        // The hull intersection's left end is a non-root of one of the
        // inputs, hence of the gcd, so the half-open count is decisive.
        const Q a = std::max(I.lo, J.lo);
        const Q b = std::min(I.hi, J.hi);
        if (g.count_roots_in(a, b) > 0) return true;
    }
    bool flip = false;
    while (overlap(I, J)) {
        if (flip)
            h1.refine(I);
        else
            h2.refine(J);
        flip = !flip;
    }
    return false;
}

Stack build_stack(const APoint& base, const std::vector<Poly>& fam) {
    Stack st;
    st.fibers.reserve(fam.size());
    for (const Poly& p : fam) {
        AlgUPoly h = base.fiber(p);
        if (h.is_zero()) {
            st.zero = true;
            st.fibers.emplace_back(std::nullopt);
        } else {
            st.fibers.emplace_back(std::move(h));
        }
    }
    for (size_t pi = 0; pi < st.fibers.size(); ++pi) {
        if (!st.fibers[pi] || st.fibers[pi]->degree() < 1) continue;
        const AlgUPoly& hp = *st.fibers[pi];
        for (RootInterval J : hp.isolate_roots()) {
            bool dup = false;
            for (MergedRoot& mr : st.roots) {
                if (same_root(*st.fibers[mr.def], mr.iv, hp, J)) {
                    mr.iv.lo = std::max(mr.iv.lo, J.lo);
                    mr.iv.hi = std::min(mr.iv.hi, J.hi);
                    dup = true;
                    break;
                }
            }
            if (!dup) st.roots.push_back({pi, J});
        }
    }
    std::sort(st.roots.begin(), st.roots.end(),
              [](const MergedRoot& a, const MergedRoot& b) {
                  return a.iv.lo < b.iv.lo || (a.iv.lo == b.iv.lo && a.iv.hi < b.iv.hi);
              });
    return st;
}

std::vector<APoint> stack_samples(const APoint& base, const Stack& st,
                                  const std::vector<Poly>& fam) {
    std::vector<APoint> out;
    const size_t m = st.roots.size();
    out.reserve(2 * m + 1);
    if (m == 0) {
        out.push_back(base.extended(Q(0)));
        return out;
    }
    out.push_back(base.extended(floor_q(st.roots[0].iv.lo) - 1));
    for (size_t i = 0; i < m; ++i) {
        out.push_back(base.extended(fam[st.roots[i].def], st.roots[i].iv));
        if (i + 1 < m) {
            const Q a = st.roots[i].iv.hi;
            const Q b = st.roots[i + 1].iv.lo;
            Q c = simplest_between(a, b);
            const bool bad_lo = st.roots[i].iv.exact() && c == a;
            const bool bad_hi = st.roots[i + 1].iv.exact() && c == b;
            if (bad_lo || bad_hi) c = (a + b) / 2;
            out.push_back(base.extended(c));
        }
    }
    out.push_back(base.extended(ceil_q(st.roots[m - 1].iv.hi) + 1));
    return out;
}

int compare_coord_with_root(const APoint& p, size_t idx, const AlgUPoly& h,
                            RootInterval& iv) {
    for (;;) {
        if (iv.exact()) return p.compare_coord(idx, iv.lo);
        // lo and hi are non-roots of h, so the root is strictly inside.
        const int lo = p.compare_coord(idx, iv.lo);
        if (lo <= 0) return -1;
        const int hi = p.compare_coord(idx, iv.hi);
        if (hi >= 0) return 1;
        if (h.sign_at_ratio(p.numerator(idx), p.denominator()) == 0) return 0;
        h.refine(iv);
    }
}

}  // namespace cad_detail

using cad_detail::MergedRoot;
using cad_detail::Stack;

int Cell::dim() const {
    int d = 0;
    for (int i : index)
        if (i % 2 == 0) ++d;
    return d;
}

namespace {

// Prefix truncations of p by descending degree in var, skipping
// vanished formal leaders; the full polynomial comes first.
std::vector<Poly> truncations(const Poly& p, uint32_t var) {
    std::vector<Poly> out;
    const std::vector<Poly> cs = p.coeffs_wrt(var);
    for (int k = static_cast<int>(cs.size()) - 1; k >= 1; --k) {
        if (cs[k].is_zero()) continue;
        out.push_back(Poly::from_coeffs(
            var, p.nvars(), std::vector<Poly>(cs.begin(), cs.begin() + k + 1)));
    }
    return out;
}

void push_projected(std::vector<Poly>& out, const Poly& p, uint32_t var) {
    if (p.is_zero() || p.is_constant()) return;
    out.push_back(cad_detail::narrow(p, var));
}

}  // namespace

std::vector<Poly> project(const std::vector<Poly>& polys, uint32_t var) {
    std::vector<Poly> out;
    std::vector<std::vector<Poly>> truncs;
    for (const Poly& p : polys) {
        if (p.nvars() != var + 1)
            throw internal_error("project: eliminated variable must be last");
        if (p.degree_in(var) <= 0) {
            push_projected(out, p, var);
            continue;
        }
        for (const Poly& c : p.coeffs_wrt(var)) push_projected(out, c, var);
        truncs.push_back(truncations(p, var));
    }
    for (const auto& ts : truncs) {
        for (const Poly& t : ts) {
            const int d = t.degree_in(var);
            if (d < 2) continue;
            const Poly dt = t.derivative(var);
            for (int j = 0; j + 2 <= d; ++j)
                push_projected(out, psc(t, dt, var, static_cast<unsigned>(j)), var);
        }
    }
    for (size_t i = 0; i < truncs.size(); ++i) {
        for (size_t j = i + 1; j < truncs.size(); ++j) {
            for (const Poly& a : truncs[i]) {
                for (const Poly& b : truncs[j]) {
                    const int m = std::min(a.degree_in(var), b.degree_in(var));
                    for (int k = 0; k < m; ++k)
                        push_projected(out, psc(a, b, var, static_cast<unsigned>(k)),
                                       var);
                }
            }
        }
    }
    return out;
}

std::vector<Poly> coprime_basis(std::vector<Poly> polys) {
    std::vector<Poly> basis;
    std::vector<Poly> queue;
    for (Poly& p : polys) {
        Poly s = squarefree_part(p);
        if (!s.is_constant()) queue.push_back(std::move(s));
    }
    while (!queue.empty()) {
        Poly q = std::move(queue.back());
        queue.pop_back();
        if (q.is_constant()) continue;
        bool absorbed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (q == basis[i]) {
                absorbed = true;
                break;
            }
            Poly g = poly_gcd(q, basis[i]);
            if (g.is_constant()) continue;
            Poly b_rest = exact_divide(basis[i], g.normalized()).normalized();
            Poly q_rest = exact_divide(q, g.normalized()).normalized();
            basis.erase(basis.begin() + static_cast<long>(i));
            queue.push_back(g.normalized());
            if (!b_rest.is_constant()) queue.push_back(b_rest);
            if (!q_rest.is_constant()) queue.push_back(q_rest);
            absorbed = true;
            break;
        }
        if (!absorbed) basis.push_back(std::move(q));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

const std::vector<Poly>& Decomposition::level_family(uint32_t k) const {
    if (k < 1 || k > nvars_) throw internal_error("level_family: bad level");
    return level_fams_[k - 1];
}

std::vector<int> Decomposition::level_ids(size_t lvl) const {
    std::vector<int> out;
    for (const Cell& c : cells_)
        if (c.index.size() == lvl) out.push_back(c.id);
    return out;
}

std::vector<std::vector<Poly>> projection_cascade(std::vector<Poly> family,
                                                  uint32_t nvars,
                                                  uint32_t ground_dim) {
    for (const Poly& p : family) {
        if (p.nvars() != ground_dim + nvars)
            throw input_error("decomposition family has the wrong arity");
        if (p.is_zero())
            throw input_error("zero polynomial in decomposition family");
    }
    std::vector<std::vector<Poly>> fams(nvars);
    std::vector<Poly> cur = std::move(family);
    for (uint32_t k = nvars; k >= 1; --k) {
        const uint32_t v = ground_dim + k - 1;
        std::vector<Poly> down;
        for (Poly& p : coprime_basis(std::move(cur))) {
            if (p.degree_in(v) > 0)
                fams[k - 1].push_back(std::move(p));
            else
                down.push_back(cad_detail::narrow(p, v));
        }
        if (k == 1) break;
        cur = project(fams[k - 1], v);
        for (Poly& p : down) cur.push_back(std::move(p));
    }
    return fams;
}

Decomposition Decomposition::build(std::vector<Poly> family, uint32_t nvars,
                                   APoint ground) {
    const uint32_t G = static_cast<uint32_t>(ground.dim());
    Decomposition d;
    d.nvars_ = nvars;
    d.ground_ = std::move(ground);
    d.family_ = std::move(family);
    d.level_fams_ = projection_cascade(d.family_, nvars, G);

    Cell root;
    root.id = 0;
    root.sample = d.ground_;
    d.cells_.push_back(std::move(root));
    std::vector<int> frontier{0};
    for (uint32_t k = 1; k <= nvars; ++k) {
        const std::vector<Poly>& fam = d.level_fams_[k - 1];
        std::vector<int> next;
        for (int cid : frontier) {
            const APoint s = d.cells_[static_cast<size_t>(cid)].sample;
            Stack st = cad_detail::build_stack(s, fam);
            if (st.zero) d.zero_fiber_ = true;
            std::vector<APoint> smp = cad_detail::stack_samples(s, st, fam);
            for (size_t pos = 0; pos < smp.size(); ++pos) {
                Cell c;
                c.id = static_cast<int>(d.cells_.size());
                c.parent = cid;
                c.index = d.cells_[static_cast<size_t>(cid)].index;
                c.index.push_back(static_cast<int>(pos));
                c.sample = std::move(smp[pos]);
                d.cells_[static_cast<size_t>(cid)].children.push_back(c.id);
                next.push_back(c.id);
                d.cells_.push_back(std::move(c));
            }
        }
        frontier = std::move(next);
    }
    d.tops_ = std::move(frontier);
    for (int id : d.tops_) {
        Cell& c = d.cells_[static_cast<size_t>(id)];
        c.signs.reserve(d.family_.size());
        for (const Poly& p : d.family_) c.signs.push_back(c.sample.sign_at(p));
    }
    return d;
}

int Decomposition::locate(const APoint& p) const {
    const uint32_t G = static_cast<uint32_t>(ground_.dim());
    if (p.dim() != G + nvars_) throw internal_error("locate: arity mismatch");
    int cur = 0;
    for (uint32_t k = 1; k <= nvars_; ++k) {
        const size_t idx = G + k - 1;
        const APoint base = p.prefix(idx);
        Stack st = cad_detail::build_stack(base, level_fams_[k - 1]);
        int pos = -1;
        for (size_t i = 0; i < st.roots.size(); ++i) {
            MergedRoot& mr = st.roots[i];
            const int c = cad_detail::compare_coord_with_root(
                p, idx, *st.fibers[mr.def], mr.iv);
            if (c < 0) {
                pos = 2 * static_cast<int>(i);
                break;
            }
            if (c == 0) {
                pos = 2 * static_cast<int>(i) + 1;
                break;
            }
        }
        if (pos < 0) pos = 2 * static_cast<int>(st.roots.size());
        const Cell& cc = cells_[static_cast<size_t>(cur)];
        if (pos >= static_cast<int>(cc.children.size()))
            throw internal_error("locate: stack shape mismatch");
        cur = cc.children[static_cast<size_t>(pos)];
    }
    return cur;
}

std::vector<int> stack_path(const std::vector<std::vector<Poly>>& levels,
                            const APoint& p) {
    if (p.dim() != levels.size())
        throw internal_error("stack_path: arity mismatch");
    std::vector<int> path;
    path.reserve(levels.size());
    for (size_t k = 0; k < levels.size(); ++k) {
        const APoint base = p.prefix(k);
        Stack st = cad_detail::build_stack(base, levels[k]);
        int pos = -1;
        for (size_t i = 0; i < st.roots.size(); ++i) {
            MergedRoot& mr = st.roots[i];
            const int c = cad_detail::compare_coord_with_root(
                p, k, *st.fibers[mr.def], mr.iv);
            if (c < 0) {
                pos = 2 * static_cast<int>(i);
                break;
            }
            if (c == 0) {
                pos = 2 * static_cast<int>(i) + 1;
                break;
            }
        }
        if (pos < 0) pos = 2 * static_cast<int>(st.roots.size());
        path.push_back(pos);
    }
    return path;
}

Decomposition cc_partition(const std::vector<Poly>& family, uint32_t nvars) {
    Decomposition d = Decomposition::build(family, nvars);
    d.incidences();
    d.label_components();
    return d;
}

int component_count(const Decomposition& d) {
    std::set<int> labels;
    for (int id : d.tops()) labels.insert(d.cell(id).component);
    labels.erase(-1);
    return static_cast<int>(labels.size());
}

}  // namespace sap
