#include "sap/algebraic.hpp"

#include <utility>

namespace sap {

RealAlgebraic::RealAlgebraic(const Q& r)
    : f_(UPoly(std::vector<Q>{-r, Q(1)}).normalized()), iv_{r, r} {}

RealAlgebraic::RealAlgebraic(const UPoly& f, const RootInterval& iv)
    : f_(squarefree_part(f)), iv_(iv) {
    if (f_.is_constant())
        throw internal_error("RealAlgebraic: constant annihilator");
    if (f_.degree() == 1) {
        // the unique root is rational; pin the interval to it
        Q r = -f_.coeff(0) / f_.coeff(1);
        iv_.lo = r;
        iv_.hi = r;
    } else if (!iv_.exact()) {
        // one cheap probe so simple rational roots are named exactly
        Q cand = simplest_between(iv_.lo, iv_.hi);
        if (iv_.lo < cand && cand < iv_.hi && f_.eval(cand).is_zero()) {
            iv_.lo = cand;
            iv_.hi = cand;
        }
    }
    if (iv_.exact()) {
        if (!f_.eval(iv_.lo).is_zero())
            throw internal_error("RealAlgebraic: exact interval misses root");
    } else {
        if (sign(f_.eval(iv_.lo)) * sign(f_.eval(iv_.hi)) >= 0)
            throw internal_error("RealAlgebraic: no sign change over interval");
    }
}

std::vector<RealAlgebraic> RealAlgebraic::roots_of(const UPoly& p) {
    IsolatedRoots iso = isolate_real_roots(p);
    std::vector<RealAlgebraic> out;
    out.reserve(iso.roots.size());
    for (const RootInterval& iv : iso.roots)
        out.emplace_back(iso.squarefree, iv);
    return out;
}

Q RealAlgebraic::rational_value() const {
    if (!is_rational())
        throw internal_error("RealAlgebraic: not known rational");
    return iv_.lo;
}

void RealAlgebraic::refine() const {
    if (!iv_.exact()) refine_root(f_, iv_);
}

void RealAlgebraic::refine_below(const Q& width) const {
    refine_root_below(f_, iv_, width);
}

bool RealAlgebraic::try_exact(const Q& r) const {
    if (iv_.exact()) return iv_.lo == r;
    if (!(iv_.lo < r && r < iv_.hi)) return false;
    if (!f_.eval(r).is_zero()) return false;
    iv_.lo = r;
    iv_.hi = r;
    return true;
}

int RealAlgebraic::sign_of(const UPoly& q) const {
    if (q.is_zero()) return 0;
    if (q.is_constant()) return sign(q.coeff(0));
    if (is_rational()) return sign(q.eval(iv_.lo));

    // Exact zero test: q vanishes here iff gcd(f, q) does, and the gcd
    // divides f, so within the isolating interval the only candidate
    // root is this number; a sign change detects it exactly.
    UPoly g = upoly_gcd(f_, q);
    if (g.degree() >= 1 &&
        sign(g.eval(iv_.lo)) * sign(g.eval(iv_.hi)) < 0)
        return 0;

    // Nonzero: shrink the interval until q cannot vanish on it.
    std::vector<UPoly> chain = sturm_chain(q);
    while (true) {
        int at_lo = sign(q.eval(iv_.lo));
        if (at_lo != 0 && count_roots_in(chain, iv_.lo, iv_.hi) == 0)
            return at_lo;
        refine();
        if (is_rational()) return sign(q.eval(iv_.lo));
    }
}

UPoly RealAlgebraic::reduce(const UPoly& g) const {
    if (g.degree() < f_.degree()) return g;
    UPoly quot, rem;
    UPoly::divmod(g, f_, quot, rem);
    return rem;
}

int RealAlgebraic::compare(const Q& x) const {
    if (is_rational()) {
        Q d = iv_.lo - x;
        return sign(d);
    }
    if (x <= iv_.lo) return 1;   // endpoints are non-roots, value is interior
    if (x >= iv_.hi) return -1;
    if (try_exact(x)) return 0;
    // f changes sign exactly once in the interval, at this number.
    return sign(f_.eval(x)) == sign(f_.eval(iv_.lo)) ? 1 : -1;
}

int RealAlgebraic::compare(const RealAlgebraic& o) const {
    if (is_rational()) return -o.compare(iv_.lo);
    if (o.is_rational()) return compare(o.iv_.lo);

    // Disjoint hulls decide immediately.
    auto disjoint = [&]() -> int {
        if (iv_.hi <= o.iv_.lo) return -1;
        if (o.iv_.hi <= iv_.lo) return 1;
        return 0;
    };
    if (int d = disjoint()) return d;

    UPoly g = upoly_gcd(f_, o.f_);
    bool both_on_g =
        g.degree() >= 1 &&
        sign(g.eval(iv_.lo)) * sign(g.eval(iv_.hi)) < 0 &&
        sign(g.eval(o.iv_.lo)) * sign(g.eval(o.iv_.hi)) < 0;

    if (both_on_g) {
        // Both numbers are roots of g; equal iff the same root.
        IsolatedRoots giso = isolate_real_roots(g);
        auto locate = [&](const RealAlgebraic& a) -> size_t {
            while (true) {
                for (size_t i = 0; i < giso.roots.size(); ++i) {
                    const RootInterval& J = giso.roots[i];
                    if (J.exact()) {
                        if (a.try_exact(J.lo)) return i;
                    } else if (J.lo < a.iv_.lo && a.iv_.hi < J.hi) {
                        return i;
                    }
                }
                a.refine();
                if (a.is_rational()) {
                    for (size_t i = 0; i < giso.roots.size(); ++i) {
                        const RootInterval& J = giso.roots[i];
                        if (J.exact() ? J.lo == a.iv_.lo
                                      : (J.lo < a.iv_.lo && a.iv_.lo < J.hi))
                            return i;
                    }
                    throw internal_error("RealAlgebraic: root left gcd loci");
                }
            }
        };
        size_t mine = locate(*this);
        size_t theirs = locate(o);
        if (mine == theirs) return 0;
        return mine < theirs ? -1 : 1;
    }

    // Distinct numbers: refine until the hulls separate.
    while (true) {
        if (int d = disjoint()) return d;
        if (is_rational()) return -o.compare(iv_.lo);
        if (o.is_rational()) return compare(o.iv_.lo);
        if (iv_.width() >= o.iv_.width()) refine(); else o.refine();
    }
}

std::vector<int> thom_encoding(const UPoly& p, const RealAlgebraic& root) {
    if (p.degree() < 1)
        throw internal_error("thom_encoding: constant polynomial");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(p.degree()) + 1);
    UPoly d = p;
    while (true) {
        out.push_back(root.sign_of(d));
        if (d.degree() == 0) break;
        d = d.derivative();
    }
    if (out[0] != 0)
        throw internal_error("thom_encoding: not a root of the polynomial");
    return out;
}

}  // namespace sap
