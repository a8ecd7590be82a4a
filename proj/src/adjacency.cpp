// Closure incidences between cells of a decomposition, computed per
// level: cells of a stack interleave along the line (sections touch
// the neighbouring sectors), and for two incident base cells the cells
// of the upper stack attach to the lower stack according to where
// their boundaries land over the lower base point. The landing spots
// are read off by counting fiber roots between rational separators at
// a nearby approach point that is connected to the lower base point by
// a region free of root/separator crossings.
#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cad_internal.hpp"
#include "sap/cad.hpp"
#include "sap/subres.hpp"

namespace sap {

using cad_detail::build_stack;
using cad_detail::MergedRoot;
using cad_detail::narrow;
using cad_detail::same_root;
using cad_detail::Stack;

namespace {

constexpr int kNegInf = -1;
constexpr int kPosInf = -2;

// The root of *h isolated by iv, over some shared base point.
struct RootRef {
    const AlgUPoly* h;
    RootInterval iv;
};

// Sign of (root of h isolated by iv) - c. Interval endpoints of an
// inexact interval are non-roots, so the root is strictly inside.
int cmp_root_q(const AlgUPoly& h, RootInterval& iv, const Q& c) {
    for (;;) {
        if (iv.exact()) return iv.lo == c ? 0 : (iv.lo < c ? -1 : 1);
        if (!(iv.lo < c)) return 1;
        if (!(c < iv.hi)) return -1;
        if (h.sign_at(c) == 0) {
            iv.lo = c;
            iv.hi = c;
            return 0;
        }
        h.refine(iv);
    }
}

// Orders two isolated roots over the same base; refines the intervals
// until their closed hulls are strictly disjoint when distinct.
int cmp_roots(const AlgUPoly& ha, RootInterval& ia, const AlgUPoly& hb,
              RootInterval& ib) {
    if (same_root(ha, ia, hb, ib)) return 0;
    return ia.hi < ib.lo ? -1 : 1;
}

// A strict rational bound: either a plain rational or an isolated root.
struct Bnd {
    bool root = false;
    Q q;
    const AlgUPoly* h = nullptr;
    RootInterval iv;
};

Bnd exact_bnd(const Q& q) {
    Bnd b;
    b.q = q;
    return b;
}

Bnd root_bnd(const AlgUPoly& h, const RootInterval& iv) {
    Bnd b;
    b.root = true;
    b.h = &h;
    b.iv = iv;
    return b;
}

// A rational strictly between two strictly ordered bounds.
Q between(Bnd lo, Bnd hi) {
    if (lo.root && hi.root) {
        if (cmp_roots(*lo.h, lo.iv, *hi.h, hi.iv) >= 0)
            throw internal_error("between: bounds out of order");
    } else if (lo.root && !hi.root) {
        while (!lo.iv.exact() && !(lo.iv.hi < hi.q)) lo.h->refine(lo.iv);
        if (lo.iv.exact() && !(lo.iv.lo < hi.q))
            throw internal_error("between: bounds out of order");
    } else if (!lo.root && hi.root) {
        while (!hi.iv.exact() && !(lo.q < hi.iv.lo)) hi.h->refine(hi.iv);
        if (hi.iv.exact() && !(lo.q < hi.iv.lo))
            throw internal_error("between: bounds out of order");
    } else if (!(lo.q < hi.q)) {
        throw internal_error("between: bounds out of order");
    }
    const Q a = lo.root ? (lo.iv.exact() ? lo.iv.lo : lo.iv.hi) : lo.q;
    const Q b = hi.root ? hi.iv.lo : hi.q;
    const bool ax = lo.root ? lo.iv.exact() : true;
    const bool bx = hi.root ? hi.iv.exact() : true;
    Q c = simplest_between(a, b);
    if ((ax && c == a) || (bx && c == b)) c = (a + b) / 2;
    return c;
}

// A rational strictly beyond the root (h0, iv0) on side dir, and
// strictly before the nearest distinct root among the listed fibers
// and the optional extra root. Falls back to an integer step when the
// side is unbounded.
Q step_off(const AlgUPoly& h0, RootInterval iv0,
           const std::vector<const AlgUPoly*>& hs, std::optional<RootRef> extra,
           int dir) {
    std::optional<RootRef> best;
    auto consider = [&](const AlgUPoly& h, RootInterval J) {
        if (same_root(h0, iv0, h, J)) return;
        const bool above = iv0.hi < J.lo;
        if ((dir > 0) != above) return;
        if (!best) {
            best = RootRef{&h, J};
            return;
        }
        const int c = cmp_roots(*best->h, best->iv, h, J);
        if (c == 0) return;
        if (dir > 0 ? c > 0 : c < 0) best = RootRef{&h, J};
    };
    for (const AlgUPoly* h : hs)
        for (const RootInterval& J : h->isolate_roots()) consider(*h, J);
    if (extra) consider(*extra->h, extra->iv);
    if (!best) return dir > 0 ? ceil_q(iv0.hi) + 1 : floor_q(iv0.lo) - 1;
    if (dir > 0) return between(root_bnd(h0, iv0), root_bnd(*best->h, best->iv));
    return between(root_bnd(*best->h, best->iv), root_bnd(h0, iv0));
}

// A rational strictly inside the sector of st above root index `below`
// (-1 for the bottom sector).
Q sector_rational(const Stack& st, int below) {
    const auto& rs = st.roots;
    if (rs.empty()) return Q(0);
    if (below < 0) return floor_q(rs[0].iv.lo) - 1;
    if (below + 1 >= static_cast<int>(rs.size()))
        return ceil_q(rs.back().iv.hi) + 1;
    const auto& a = rs[static_cast<size_t>(below)].iv;
    const auto& b = rs[static_cast<size_t>(below) + 1].iv;
    Q c = simplest_between(a.hi, b.lo);
    if ((a.exact() && c == a.hi) || (b.exact() && c == b.lo)) c = (a.hi + b.lo) / 2;
    return c;
}

// Rational separators interleaving the stack roots (one more than
// there are roots), each chosen so no family member becomes the zero
// polynomial when the stack variable is pinned to it.
std::vector<Q> separators(const Stack& st, const std::vector<Poly>& f,
                          uint32_t var) {
    int D = 0;
    for (const Poly& p : f) D += std::max(p.degree_in(var), 0);
    auto bad = [&](const Q& c) {
        for (const Poly& p : f)
            if (p.substitute(var, c).is_zero()) return true;
        return false;
    };
    const size_t m = st.roots.size();
    std::vector<Q> out;
    out.reserve(m + 1);
    if (m == 0) {
        for (int t = 0;; ++t) {
            Q c = (t % 2 == 0) ? Q(t / 2) : Q(-(t + 1) / 2);
            if (!bad(c)) {
                out.push_back(c);
                return out;
            }
        }
    }
    for (Q c = floor_q(st.roots[0].iv.lo) - 1;; c -= 1) {
        if (!bad(c)) {
            out.push_back(c);
            break;
        }
    }
    for (size_t i = 0; i + 1 < m; ++i) {
        const Q a = st.roots[i].iv.hi;
        const Q b = st.roots[i + 1].iv.lo;
        bool done = false;
        for (int t = 1; t <= D + 1 && !done; ++t) {
            Q c = a + (b - a) * Q(t, D + 2);
            if (!bad(c)) {
                out.push_back(c);
                done = true;
            }
        }
        if (!done) throw internal_error("adjacency: no separator found");
    }
    for (Q c = ceil_q(st.roots[m - 1].iv.hi) + 1;; c += 1) {
        if (!bad(c)) {
            out.push_back(c);
            break;
        }
    }
    return out;
}

// The family members with the stack variable pinned to each separator;
// their zero sets are where a fiber root crosses a separator height.
std::vector<Poly> crossings(const std::vector<Poly>& f, uint32_t var,
                            const std::vector<Q>& seps) {
    std::vector<Poly> out;
    for (const Poly& p : f) {
        for (const Q& c : seps) {
            Poly x = narrow(p.substitute(var, c), var);
            if (x.is_zero())
                throw internal_error("adjacency: zero crossing slice");
            if (!x.is_constant()) out.push_back(std::move(x));
        }
    }
    return out;
}

}  // namespace

struct AdjacencyEngine {
    const Decomposition& d;
    const uint32_t G;
    std::vector<std::pair<int, int>> out;
    // (section cell, lower base cell) -> root index of the section's
    // limit in the stack over the lower base point, or an infinity code
    std::map<std::pair<int, int>, int> limits;

    explicit AdjacencyEngine(const Decomposition& dd)
        : d(dd), G(static_cast<uint32_t>(dd.ground_.dim())) {}

    const Cell& cell(int id) const { return d.cells_[static_cast<size_t>(id)]; }
    const std::vector<Poly>& fam(uint32_t lvl) const {
        return d.level_fams_[lvl - 1];
    }

    std::vector<std::pair<int, int>> run() {
        std::vector<std::pair<int, int>> prev;
        for (uint32_t lvl = 1; lvl <= d.nvars_; ++lvl) {
            std::vector<std::pair<int, int>> cur;
            for (int bb : d.level_ids(lvl - 1)) {
                const auto& ch = cell(bb).children;
                for (size_t s = 1; s < ch.size(); s += 2) {
                    cur.push_back({ch[s], ch[s - 1]});
                    cur.push_back({ch[s], ch[s + 1]});
                }
            }
            if (lvl >= 2)
                for (const auto& bp : prev)
                    window_pass(lvl, bp.first, bp.second, cur);
            out.insert(out.end(), cur.begin(), cur.end());
            prev = std::move(cur);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return std::move(out);
    }

    // Attaches the stack over b2 to the stack over b1, where b1 meets
    // the closure of b2 at the previous level. Emits (cell over b1,
    // cell over b2) pairs and records section limits.
    void window_pass(uint32_t lvl, int b1, int b2,
                     std::vector<std::pair<int, int>>& cur) {
        const std::vector<Poly>& f = fam(lvl);
        const uint32_t var = G + lvl - 1;
        const Cell& c1 = cell(b1);
        const Cell& c2 = cell(b2);
        const bool samep = c1.parent == c2.parent;

        // Anchor point of b1 inside the closure of b2. A sector b1 of a
        // cross-parent pair needs re-anchoring into the overlap of the
        // sector with the limit extent of b2.
        APoint y0 = c1.sample;
        std::optional<AlgUPoly> hx0;
        RootInterval ivx0;
        if (!samep) {
            if (lvl != 3)
                throw internal_error("adjacency: cross pair below top level");
            Stack st1 = build_stack(cell(c1.parent).sample, fam(lvl - 1));
            const int pos1 = c1.index.back();
            if (pos1 % 2 == 1) {
                const MergedRoot& r = st1.roots[static_cast<size_t>(pos1 - 1) / 2];
                hx0 = *st1.fibers[r.def];
                ivx0 = r.iv;
            } else {
                const auto& ch2 = cell(c2.parent).children;
                const int pos2 = c2.index.back();
                const int F = pos2 > 0 ? limits.at({ch2[static_cast<size_t>(pos2) - 1],
                                                    c1.parent})
                                       : kNegInf;
                const int Gc = pos2 + 1 < static_cast<int>(ch2.size())
                                   ? limits.at({ch2[static_cast<size_t>(pos2) + 1],
                                                c1.parent})
                                   : kPosInf;
                const int n1 = static_cast<int>(st1.roots.size());
                const int fi = F == kNegInf ? -1 : (F == kPosInf ? n1 : F);
                const int gi = Gc == kPosInf ? n1 : (Gc == kNegInf ? -1 : Gc);
                const int k1 = pos1 / 2;
                const int lo_i = std::max(k1 - 1, fi);
                const int hi_i = std::min(k1, gi);
                if (lo_i >= hi_i)
                    throw internal_error("adjacency: empty re-anchor overlap");
                const Q x0 = sector_rational(st1, lo_i);
                y0 = cell(c1.parent).sample.extended(x0);
                Poly lx = Poly::variable(G + 1, G + 2) -
                          Poly::constant(G + 2, x0);
                hx0 = cell(c1.parent).sample.fiber(lx);
                ivx0 = RootInterval{x0, x0};
            }
        }

        Stack st0 = build_stack(y0, f);
        if (st0.zero) throw internal_error("adjacency: vanishing fiber");
        const size_t m = st0.roots.size();
        if (cell(b1).children.size() != 2 * m + 1)
            throw internal_error("adjacency: stack shape drift at anchor");
        const std::vector<Q> seps = separators(st0, f, var);
        const std::vector<Poly> cross = crossings(f, var, seps);

        APoint yp = samep ? vertical_approach(lvl, b1, b2, cross)
                          : (c2.index.back() % 2 == 1
                                 ? curve_approach(b1, b2, cross)
                                 : slice_approach(b1, b2, cross, *hx0, ivx0));

        Stack stp = build_stack(yp, f);
        const size_t M = (cell(b2).children.size() - 1) / 2;
        if (stp.roots.size() != M)
            throw internal_error("adjacency: stack shape drift at approach");

        // Window index of each approach root: separators lying below it.
        std::vector<size_t> w(M);
        for (size_t k = 0; k < M; ++k) {
            size_t cnt = 0;
            for (const Q& c : seps) {
                const int s = cmp_root_q(*stp.fibers[stp.roots[k].def],
                                         stp.roots[k].iv, c);
                if (s == 0)
                    throw internal_error("adjacency: root meets separator");
                if (s > 0) ++cnt;
            }
            w[k] = cnt;
            if (k > 0 && w[k] < w[k - 1])
                throw internal_error("adjacency: window order violated");
        }

        // Sections of b2: window j in [1, m] converges to root j-1.
        for (size_t k = 0; k < M; ++k) {
            const int sec = cell(b2).children[2 * k + 1];
            int code;
            if (w[k] == 0) {
                code = kNegInf;
            } else if (w[k] == m + 1) {
                code = kPosInf;
            } else {
                code = static_cast<int>(w[k]) - 1;
                cur.push_back({cell(b1).children[2 * static_cast<size_t>(code) + 1],
                               sec});
            }
            limits[{sec, b1}] = code;
        }

        // Sectors of b2: their closure covers the column positions
        // between the limits of their bounding sections.
        for (size_t k = 0; k <= M; ++k) {
            const int sect = cell(b2).children[2 * k];
            const int L = k == 0 ? kNegInf
                                 : limits.at({cell(b2).children[2 * k - 1], b1});
            const int R = k == M ? kPosInf
                                 : limits.at({cell(b2).children[2 * k + 1], b1});
            const int posL = L == kNegInf ? 0
                                          : (L == kPosInf
                                                 ? 2 * static_cast<int>(m) + 1
                                                 : 2 * L + 1);
            const int posR = R == kPosInf ? 2 * static_cast<int>(m)
                                          : (R == kNegInf ? -1 : 2 * R + 1);
            for (int q = std::max(posL, 0);
                 q <= std::min(posR, 2 * static_cast<int>(m)); ++q)
                cur.push_back({cell(b1).children[static_cast<size_t>(q)], sect});
        }
    }

    // Approach point for a same-stack pair: step off the section root
    // into the sector, stopping before any crossing fiber root and the
    // sector's far end.
    APoint vertical_approach(uint32_t lvl, int b1, int b2,
                             const std::vector<Poly>& cross) {
        const int bb = cell(b1).parent;
        const APoint& bs = cell(bb).sample;
        Stack stb = build_stack(bs, fam(lvl - 1));
        const int pos1 = cell(b1).index.back();
        const size_t s = static_cast<size_t>(pos1 - 1) / 2;
        const int dir = cell(b2).index.back() > pos1 ? 1 : -1;
        std::vector<AlgUPoly> hxs;
        for (const Poly& x : cross) {
            AlgUPoly h = bs.fiber(x);
            if (h.is_zero())
                throw internal_error("adjacency: crossing fiber vanishes");
            if (h.degree() >= 1) hxs.push_back(std::move(h));
        }
        std::vector<const AlgUPoly*> hps;
        hps.reserve(hxs.size());
        for (const auto& h : hxs) hps.push_back(&h);
        std::optional<RootRef> far;
        if (dir > 0 ? s + 1 < stb.roots.size() : s >= 1) {
            const MergedRoot& fr = stb.roots[dir > 0 ? s + 1 : s - 1];
            far = RootRef{&*stb.fibers[fr.def], fr.iv};
        }
        const MergedRoot& r0 = stb.roots[s];
        const Q xp = step_off(*stb.fibers[r0.def], r0.iv, hps, far, dir);
        return bs.extended(xp);
    }

    // Approach point along a section over a neighbouring sector: a
    // rational base offset below every parameter where the section
    // could meet a crossing variety, then the matching stack root.
    APoint curve_approach(int b1, int b2, const std::vector<Poly>& cross) {
        const int p1 = cell(b1).parent;
        const int p2 = cell(b2).parent;
        const uint32_t xv = G + 1;
        Stack stg = build_stack(d.ground_, fam(1));
        const size_t s0 = static_cast<size_t>(cell(p1).index.back() - 1) / 2;
        const int dir = cell(p2).index.back() > cell(p1).index.back() ? 1 : -1;
        Stack st2 = build_stack(cell(p2).sample, fam(2));
        const size_t k2 = static_cast<size_t>(cell(b2).index.back() - 1) / 2;
        const Poly& def = fam(2)[st2.roots[k2].def];
        std::vector<AlgUPoly> hbs;
        for (const Poly& x : cross) {
            Poly g = poly_gcd(def, x);
            Poly ds = g.is_constant()
                          ? def
                          : exact_divide(def, g.normalized()).normalized();
            if (ds.is_constant() || ds.degree_in(xv) < 1)
                throw internal_error("adjacency: section inside a crossing variety");
            Poly r = resultant(ds, x, xv);
            if (r.is_zero())
                throw internal_error("adjacency: curve resultant vanished");
            Poly rn = narrow(r, xv);
            if (rn.is_constant()) continue;
            AlgUPoly h = d.ground_.fiber(rn);
            if (h.is_zero())
                throw cap_error("adjacency: degenerate parameter fiber");
            if (h.degree() >= 1) hbs.push_back(std::move(h));
        }
        std::vector<const AlgUPoly*> hps;
        hps.reserve(hbs.size());
        for (const auto& h : hbs) hps.push_back(&h);
        std::optional<RootRef> far;
        const size_t s2 = static_cast<size_t>(cell(p2).index.back()) / 2;
        if (dir > 0 ? s2 < stg.roots.size() : s2 >= 1) {
            const MergedRoot& fr = stg.roots[dir > 0 ? s2 : s2 - 1];
            far = RootRef{&*stg.fibers[fr.def], fr.iv};
        }
        const MergedRoot& r0 = stg.roots[s0];
        const Q tp = step_off(*stg.fibers[r0.def], r0.iv, hps, far, dir);
        APoint tb = d.ground_.extended(tp);
        Stack stt = build_stack(tb, fam(2));
        if (stt.roots.size() != st2.roots.size())
            throw internal_error("adjacency: curve stack drift");
        return tb.extended(fam(2)[stt.roots[k2].def], stt.roots[k2].iv);
    }

    // Approach point inside a sector over a neighbouring sector: a
    // rational box straddling the anchor height and free of crossing
    // varieties, entered at a parameter before any event that could
    // let a crossing variety reach the boxed part of the sector.
    APoint slice_approach(int b1, int b2, const std::vector<Poly>& cross,
                          const AlgUPoly& hx0, const RootInterval& ivx0) {
        const int p1 = cell(b1).parent;
        const int p2 = cell(b2).parent;
        const uint32_t xv = G + 1;
        const APoint& col = cell(p1).sample;

        // Crossing-free gap around the anchor height on the column.
        std::vector<AlgUPoly> axs;
        for (const Poly& x : cross) {
            AlgUPoly h = col.fiber(x);
            if (h.is_zero())
                throw internal_error("adjacency: crossing vanishes on column");
            if (h.degree() >= 1) axs.push_back(std::move(h));
        }
        std::vector<const AlgUPoly*> axp;
        axp.reserve(axs.size());
        for (const auto& h : axs) axp.push_back(&h);
        auto bad = [&](const Q& c) {
            for (const Poly& q : fam(2))
                if (q.substitute(xv, c).is_zero()) return true;
            for (const Poly& x : cross)
                if (x.substitute(xv, c).is_zero()) return true;
            return false;
        };
        auto pick = [&](int dir) {
            RootInterval iv = ivx0;
            Q c = step_off(hx0, iv, axp, std::nullopt, dir);
            while (bad(c)) {
                while (!iv.exact() && !(dir > 0 ? iv.hi < c : c < iv.lo))
                    hx0.refine(iv);
                c = ((dir > 0 ? iv.hi : iv.lo) + c) / 2;
            }
            return c;
        };
        const Q xlo = pick(-1);
        const Q xhi = pick(+1);

        // Parameters at which a crossing variety could enter the boxed
        // sector: through a box edge, a bounding branch, a vertical
        // line of the variety, or a turning point.
        Stack st2 = build_stack(cell(p2).sample, fam(2));
        const size_t k2 = static_cast<size_t>(cell(b2).index.back()) / 2;
        std::vector<Poly> bounds;
        auto push_bound = [&](Poly p) {
            if (p.is_zero())
                throw internal_error("adjacency: zero slice bound");
            Poly n = narrow(std::move(p), xv);
            if (!n.is_constant()) bounds.push_back(std::move(n));
        };
        for (const Poly& x : cross) {
            push_bound(x.substitute(xv, xlo));
            push_bound(x.substitute(xv, xhi));
            Poly cont = content_wrt(x, xv);
            if (!cont.is_constant()) push_bound(std::move(cont));
            Poly prim = primitive_wrt(x, xv);
            if (prim.degree_in(xv) >= 1) {
                Poly sf = squarefree_part(prim);
                if (sf.degree_in(xv) >= 1) {
                    Poly disc = resultant(sf, sf.derivative(xv), xv);
                    if (disc.is_zero())
                        throw internal_error("adjacency: vanishing turning locus");
                    push_bound(std::move(disc));
                }
            }
            for (int side = 0; side < 2; ++side) {
                const bool below = side == 0;
                if (below ? k2 < 1 : k2 >= st2.roots.size()) continue;
                const Poly& db = fam(2)[st2.roots[below ? k2 - 1 : k2].def];
                Poly g = poly_gcd(db, x);
                Poly ds = g.is_constant()
                              ? db
                              : exact_divide(db, g.normalized()).normalized();
                if (ds.is_constant() || ds.degree_in(xv) < 1) continue;
                Poly r = resultant(ds, x, xv);
                if (r.is_zero())
                    throw internal_error("adjacency: branch resultant vanished");
                push_bound(std::move(r));
            }
        }
        for (const Poly& q : fam(2)) {
            push_bound(q.substitute(xv, xlo));
            push_bound(q.substitute(xv, xhi));
        }

        Stack stg = build_stack(d.ground_, fam(1));
        const size_t s0 = static_cast<size_t>(cell(p1).index.back() - 1) / 2;
        const int dir = cell(p2).index.back() > cell(p1).index.back() ? 1 : -1;
        std::vector<AlgUPoly> hbs;
        for (const Poly& b : bounds) {
            AlgUPoly h = d.ground_.fiber(b);
            if (h.is_zero())
                throw cap_error("adjacency: degenerate parameter fiber");
            if (h.degree() >= 1) hbs.push_back(std::move(h));
        }
        std::vector<const AlgUPoly*> hps;
        hps.reserve(hbs.size());
        for (const auto& h : hbs) hps.push_back(&h);
        std::optional<RootRef> far;
        const size_t s2 = static_cast<size_t>(cell(p2).index.back()) / 2;
        if (dir > 0 ? s2 < stg.roots.size() : s2 >= 1) {
            const MergedRoot& fr = stg.roots[dir > 0 ? s2 : s2 - 1];
            far = RootRef{&*stg.fibers[fr.def], fr.iv};
        }
        const MergedRoot& r0 = stg.roots[s0];
        const Q tp = step_off(*stg.fibers[r0.def], r0.iv, hps, far, dir);

        // The boxed fiber of the sector at the chosen parameter.
        APoint tb = d.ground_.extended(tp);
        Stack st2t = build_stack(tb, fam(2));
        if (st2t.roots.size() != st2.roots.size())
            throw internal_error("adjacency: slice stack drift");
        Bnd lo = exact_bnd(xlo);
        Bnd hi = exact_bnd(xhi);
        if (k2 >= 1) {
            MergedRoot& fr = st2t.roots[k2 - 1];
            const AlgUPoly& fh = *st2t.fibers[fr.def];
            const int c = cmp_root_q(fh, fr.iv, xlo);
            if (c == 0) throw internal_error("adjacency: branch meets box edge");
            if (c > 0) lo = root_bnd(fh, fr.iv);
        }
        if (k2 < st2t.roots.size()) {
            MergedRoot& fr = st2t.roots[k2];
            const AlgUPoly& fh = *st2t.fibers[fr.def];
            const int c = cmp_root_q(fh, fr.iv, xhi);
            if (c == 0) throw internal_error("adjacency: branch meets box edge");
            if (c < 0) hi = root_bnd(fh, fr.iv);
        }
        return tb.extended(between(lo, hi));
    }
};

const std::vector<std::pair<int, int>>& Decomposition::incidences() const {
    if (inc_) return *inc_;
    if (nvars_ > 3)
        throw cap_error("cell adjacency is supported up to three variables");
    if (nvars_ >= 2 && zero_fiber_)
        throw cap_error("cell adjacency requires a well-based decomposition");
    AdjacencyEngine e(*this);
    inc_ = std::make_shared<std::vector<std::pair<int, int>>>(e.run());
    return *inc_;
}

void Decomposition::label_components() {
    const auto& inc = incidences();
    std::vector<int> uf(cells_.size());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int a) {
        while (uf[static_cast<size_t>(a)] != a) {
            uf[static_cast<size_t>(a)] = uf[static_cast<size_t>(uf[static_cast<size_t>(a)])];
            a = uf[static_cast<size_t>(a)];
        }
        return a;
    };
    for (const auto& pr : inc) {
        const Cell& a = cells_[static_cast<size_t>(pr.first)];
        const Cell& b = cells_[static_cast<size_t>(pr.second)];
        if (a.index.size() != nvars_ || b.index.size() != nvars_) continue;
        if (a.signs == b.signs)
            uf[static_cast<size_t>(find(pr.first))] = find(pr.second);
    }
    std::map<int, int> label;
    for (int id : tops_) {
        const int r = find(id);
        auto it = label.find(r);
        if (it == label.end())
            it = label.emplace(r, static_cast<int>(label.size())).first;
        cells_[static_cast<size_t>(id)].component = it->second;
    }
}

}  // namespace sap
