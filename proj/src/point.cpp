#include "sap/point.hpp"

#include <algorithm>
#include <utility>

#include "sap/subres.hpp"

namespace sap {

namespace {

// gcd over Q: gcd(a/b, c/d) = gcd(ad, cb)/(bd), gcd(x, 0) = |x|.
Q rational_gcd(const Q& a, const Q& b) {
    if (a.is_zero()) return abs(b);
    if (b.is_zero()) return abs(a);
    Z n = gcd(Z(num(a) * den(b)), Z(num(b) * den(a)));
    return Q(n, den(a) * den(b));
}

// Interval arithmetic with exact rational endpoints.
struct IvQ {
    Q lo, hi;
};

IvQ iv_add(const IvQ& a, const IvQ& b) { return {a.lo + b.lo, a.hi + b.hi}; }

IvQ iv_mul(const IvQ& a, const IvQ& b) {
    Q c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {std::min({c1, c2, c3, c4}), std::max({c1, c2, c3, c4})};
}

IvQ iv_eval(const UPoly& p, const IvQ& x) {
    if (p.is_zero()) return {Q(0), Q(0)};
    IvQ acc{p.lc(), p.lc()};
    for (size_t i = p.coeffs().size() - 1; i-- > 0;) {
        acc = iv_mul(acc, x);
        acc = iv_add(acc, {p.coeffs()[i], p.coeffs()[i]});
    }
    return acc;
}

}  // namespace

APoint::APoint() : APoint(RealAlgebraic(Q(0)), UPoly::constant(Q(1)), {}) {}

APoint::APoint(RealAlgebraic base, UPoly den, std::vector<UPoly> nums)
    : tau_(std::move(base)), g0_(std::move(den)), g_(std::move(nums)) {
    if (tau_.sign_of(g0_) == 0)
        throw input_error("point denominator vanishes at the base root");

    // Keep the annihilator coprime to the denominator by shrinking it;
    // the base stays a root and the interval keeps isolating.
    UPoly w = upoly_gcd(tau_.annihilator(), g0_);
    if (w.degree() >= 1) {
        UPoly q, r;
        UPoly::divmod(tau_.annihilator(), w, q, r);
        if (!r.is_zero())
            throw internal_error("APoint: gcd does not divide annihilator");
        tau_ = RealAlgebraic(q, tau_.interval());
    }

    g0_ = tau_.reduce(g0_);
    for (UPoly& g : g_) g = tau_.reduce(g);

    // Common positive rescale to keep coefficients small; ratios are
    // preserved, so the point is unchanged.
    Q scale(0);
    for (const Q& c : g0_.coeffs()) scale = rational_gcd(scale, c);
    for (const UPoly& g : g_)
        for (const Q& c : g.coeffs()) scale = rational_gcd(scale, c);
    if (!scale.is_zero() && scale != Q(1)) {
        Q inv = Q(1) / scale;
        g0_ = g0_ * inv;
        for (UPoly& g : g_) g = g * inv;
    }
}

APoint APoint::from_rationals(const std::vector<Q>& coords) {
    std::vector<UPoly> nums;
    nums.reserve(coords.size());
    for (const Q& c : coords) nums.push_back(UPoly::constant(c));
    return APoint(RealAlgebraic(Q(0)), UPoly::constant(Q(1)), std::move(nums));
}

std::vector<Q> APoint::rational_coords() const {
    if (!is_rational())
        throw internal_error("APoint: base not known rational");
    Q t = tau_.rational_value();
    Q d = g0_.eval(t);
    std::vector<Q> out;
    out.reserve(g_.size());
    for (const UPoly& g : g_) out.push_back(g.eval(t) / d);
    return out;
}

UPoly APoint::numerator_of(const Poly& P, int clear_degree) const {
    UPoly acc;
    for (const Poly::Term& t : P.terms()) {
        UPoly m = UPoly::constant(t.c);
        int used = 0;
        for (size_t i = 0; i < t.e.size(); ++i)
            for (uint32_t k = 0; k < t.e[i]; ++k) {
                m = tau_.reduce(m * g_[i]);
                ++used;
            }
        for (int k = used; k < clear_degree; ++k) m = tau_.reduce(m * g0_);
        acc = acc + m;
    }
    return acc;
}

int APoint::sign_at(const Poly& P) const {
    if (P.nvars() != dim())
        throw internal_error("APoint: arity mismatch in sign query");
    if (is_rational()) return sign(P.eval(rational_coords()));
    int d = P.total_degree();
    if (d < 0) return 0;
    int sn = tau_.sign_of(numerator_of(P, d));
    int s0 = tau_.sign_of(g0_);
    return (d % 2 == 1 && s0 < 0) ? -sn : sn;
}

std::vector<UPoly> APoint::fiber_coeffs(const Poly& H) const {
    if (H.nvars() != dim() + 1)
        throw internal_error("APoint: arity mismatch in fiber");
    std::vector<Poly> cs = H.coeffs_wrt(static_cast<uint32_t>(dim()));
    int d = 0;
    for (const Poly& c : cs) d = std::max(d, c.total_degree());
    std::vector<UPoly> out;
    out.reserve(cs.size());
    for (const Poly& c : cs) out.push_back(numerator_of(c, d));
    return out;
}

AlgUPoly APoint::fiber(const Poly& H) const {
    return AlgUPoly(fiber_coeffs(H), tau_);
}

APoint APoint::extended(const Q& value) const {
    std::vector<UPoly> nums = g_;
    nums.push_back(g0_ * value);
    return APoint(tau_, g0_, std::move(nums));
}

APoint APoint::with_rational_base() const {
    return from_rationals(rational_coords());
}

std::pair<Q, Q> APoint::coordinate_bounds(size_t i, const Q& width) const {
    if (i >= dim()) throw internal_error("APoint: coordinate out of range");
    while (true) {
        if (is_rational()) {
            Q v = g_[i].eval(tau_.rational_value()) /
                  g0_.eval(tau_.rational_value());
            return {v, v};
        }
        IvQ t{tau_.interval().lo, tau_.interval().hi};
        IvQ nu = iv_eval(g_[i], t);
        IvQ de = iv_eval(g0_, t);
        if (de.lo.sign() * de.hi.sign() > 0) {
            Q c1 = nu.lo / de.lo, c2 = nu.lo / de.hi, c3 = nu.hi / de.lo,
              c4 = nu.hi / de.hi;
            Q lo = std::min({c1, c2, c3, c4});
            Q hi = std::max({c1, c2, c3, c4});
            if (hi - lo < width) return {lo, hi};
        }
        tau_.refine();
    }
}

APoint APoint::extended(const Poly& H, const RootInterval& r) const {
    if (r.exact()) return extended(r.lo);

    if (is_rational()) {
        // The base may be a lately-collapsed rational with nonconstant
        // parametrizations; evaluating settles both shapes.
        const Q t0 = tau_.rational_value();
        std::vector<UPoly> cs = fiber_coeffs(H);
        std::vector<Q> hc;
        hc.reserve(cs.size());
        for (const UPoly& c : cs) hc.push_back(c.eval(t0));
        RealAlgebraic xi(UPoly(std::move(hc)), r);
        std::vector<Q> old = rational_coords();
        std::vector<UPoly> nums;
        nums.reserve(old.size() + 1);
        for (const Q& c : old) nums.push_back(UPoly::constant(c));
        nums.push_back(UPoly::x());
        return APoint(std::move(xi), UPoly::constant(Q(1)), std::move(nums));
    }

    // Primitive-element extension: combine the base with the new fiber
    // root into one number, then re-express everything over it.
    std::vector<UPoly> nu = fiber_coeffs(H);
    AlgUPoly h(nu, tau_);
    if (h.is_zero())
        throw internal_error("APoint: extending along a vanishing fiber");

    // Bivariate numerator: var 0 carries the base, var 1 the new root.
    std::vector<Poly> ncs;
    ncs.reserve(nu.size());
    for (const UPoly& c : nu) ncs.push_back(from_upoly(c, 0, 2));
    Poly hn = Poly::from_coeffs(1, 2, ncs);

    // Strip the annihilator factor sharing all fiber coefficients, so
    // the resultant below cannot vanish identically.
    UPoly cont;
    for (const UPoly& c : nu) cont = upoly_gcd(cont, c);
    UPoly fstar = tau_.annihilator();
    UPoly w = upoly_gcd(fstar, cont);
    if (w.degree() >= 1) {
        UPoly q, rem;
        UPoly::divmod(fstar, w, q, rem);
        if (!rem.is_zero())
            throw internal_error("APoint: content gcd does not divide");
        fstar = q.normalized();
    }
    if (fstar.degree() == 1) {
        // the base number is rational after all; re-anchor and retry
        Q r0 = -fstar.coeff(0) / fstar.coeff(1);
        std::vector<Q> coords;
        coords.reserve(g_.size());
        Q den = g0_.eval(r0);
        if (den.is_zero())
            throw internal_error("APoint: denominator vanishes at base");
        for (const UPoly& gi : g_) coords.push_back(gi.eval(r0) / den);
        return from_rationals(coords).extended(H, r);
    }
    if (fstar.degree() < 1)
        throw internal_error("APoint: empty annihilator for the base");
    Poly f2 = from_upoly(fstar, 0, 2);
    int df = fstar.degree();

    for (int k = 1; k <= 64; ++k) {
        for (int dir = 0; dir < 2; ++dir) {
            Q lambda = dir == 0 ? Q(k) : Q(-k);

            // Candidate combined number: base + lambda * root, with
            // annihilator Res_T(fstar(T), hn(T, (Z - T)/lambda)).
            Poly zsub = (Poly::variable(1, 2) - Poly::variable(0, 2)) *
                        (Q(1) / lambda);
            Poly ht = hn.substitute(1, zsub);
            // Degenerate combination: the base cancels out entirely,
            // so it cannot be recovered from this lambda.
            if (ht.degree_in(0) < 1) continue;
            Poly rp = resultant(f2, ht, 0);
            UPoly rz = to_upoly(rp, 1);
            if (rz.is_zero())
                throw internal_error("APoint: combined resultant vanished");
            UPoly annp = squarefree_part(rz);
            std::vector<UPoly> ann_chain = sturm_chain(annp);

            RealAlgebraic t = tau_;
            RootInterval rr = r;
            RootInterval J{};
            while (true) {
                const RootInterval& ti = t.interval();
                if (lambda > 0)
                    J = {ti.lo + lambda * rr.lo, ti.hi + lambda * rr.hi};
                else
                    J = {ti.lo + lambda * rr.hi, ti.hi + lambda * rr.lo};
                if (!annp.eval(J.lo).is_zero() && !annp.eval(J.hi).is_zero() &&
                    count_roots_in(ann_chain, J.lo, J.hi) == 1)
                    break;
                t.refine();
                h.refine(rr);
                if (rr.exact()) return extended(rr.lo);
                if (t.is_rational())
                    return with_rational_base().extended(H, rr);
            }
            RealAlgebraic tp(annp, J);

            // Recover the old base over the new number as -b/a.
            UPoly a, b;
            if (ht.degree_in(0) == 1) {
                std::vector<Poly> cw = ht.coeffs_wrt(0);
                b = to_upoly(cw[0], 1);
                a = to_upoly(cw[1], 1);
            } else {
                Poly s1 = subresultant(f2, ht, 0, 1);
                std::vector<Poly> cw = s1.coeffs_wrt(0);
                b = cw.empty() ? UPoly() : to_upoly(cw[0], 1);
                a = cw.size() > 1 ? to_upoly(cw[1], 1) : UPoly();
            }
            a = tp.reduce(a);
            b = tp.reduce(b);
            int sa = tp.sign_of(a);
            if (sa == 0) continue;

            // fstar(-b/a) must vanish at the new number...
            UPoly c1;
            UPoly nbk = UPoly::constant(Q(1));
            UPoly nb = -b;
            for (int i = 0; i <= df; ++i) {
                UPoly term = nbk * fstar.coeff(static_cast<size_t>(i));
                for (int j = 0; j < df - i; ++j) term = tp.reduce(term * a);
                c1 = c1 + term;
                if (i < df) nbk = tp.reduce(nbk * nb);
            }
            if (tp.sign_of(c1) != 0) continue;
            // ...and -b/a must land strictly inside the base's isolating
            // interval, making it the base itself.
            const RootInterval& ti = t.interval();
            UPoly u1 = nb - a * ti.lo;
            UPoly u2 = nb - a * ti.hi;
            if (tp.sign_of(tp.reduce(u1)) * sa != 1) continue;
            if (tp.sign_of(tp.reduce(u2)) * sa != -1) continue;
            // The recovered root (Z a + b)/(lambda a) must land inside
            // the fiber interval.
            UPoly za = tp.reduce(UPoly::x() * a);
            int sl = sa * sign(lambda);
            UPoly v1 = za + b - a * (lambda * rr.lo);
            UPoly v2 = za + b - a * (lambda * rr.hi);
            if (tp.sign_of(tp.reduce(v1)) * sl != 1) continue;
            if (tp.sign_of(tp.reduce(v2)) * sl != -1) continue;

            // Re-express all coordinates over the new base.
            int dg = g0_.degree();
            for (const UPoly& g : g_) dg = std::max(dg, g.degree());
            auto lift = [&](const UPoly& g) {
                UPoly acc;
                UPoly pw = UPoly::constant(Q(1));
                for (int i = 0; i <= dg; ++i) {
                    UPoly term = pw * g.coeff(static_cast<size_t>(i));
                    for (int j = 0; j < dg - i; ++j) term = tp.reduce(term * a);
                    acc = acc + term;
                    if (i < dg) pw = tp.reduce(pw * nb);
                }
                return acc;
            };
            UPoly big0 = lift(g0_);
            UPoly den2 = tp.reduce(a * big0) * lambda;
            std::vector<UPoly> nums2;
            nums2.reserve(g_.size() + 1);
            for (const UPoly& g : g_)
                nums2.push_back(tp.reduce(a * lift(g)) * lambda);
            nums2.push_back(tp.reduce((za + b) * big0));
            return APoint(std::move(tp), std::move(den2), std::move(nums2));
        }
    }
    throw internal_error("APoint: no separating combination found");
}

APoint APoint::extended_linear(const std::vector<Q>& coeffs, const Q& shift) const {
    if (coeffs.size() != g_.size())
        throw internal_error("APoint::extended_linear: arity mismatch");
    UPoly num = g0_ * UPoly::constant(shift);
    for (size_t j = 0; j < coeffs.size(); ++j)
        num = num + g_[j] * UPoly::constant(coeffs[j]);
    std::vector<UPoly> nums = g_;
    nums.push_back(std::move(num));
    return APoint(tau_, g0_, std::move(nums));
}

APoint APoint::prefix(size_t k) const {
    if (k > g_.size()) throw internal_error("APoint::prefix: out of range");
    if (k == g_.size()) return *this;
    return APoint(tau_, g0_, std::vector<UPoly>(g_.begin(), g_.begin() + k));
}

APoint APoint::linear_image(const std::vector<std::vector<Q>>& m) const {
    std::vector<UPoly> nums;
    nums.reserve(m.size());
    for (const std::vector<Q>& row : m) {
        if (row.size() != g_.size())
            throw internal_error("APoint::linear_image: row arity mismatch");
        UPoly num = UPoly::constant(Q(0));
        for (size_t j = 0; j < row.size(); ++j)
            num = num + g_[j] * UPoly::constant(row[j]);
        nums.push_back(std::move(num));
    }
    return APoint(tau_, g0_, std::move(nums));
}

int APoint::compare_coord(size_t i, const Q& c) const {
    if (i >= g_.size()) throw internal_error("APoint::compare_coord: index");
    int s = tau_.sign_of(g_[i] - g0_ * UPoly::constant(c));
    if (s == 0) return 0;
    return s * tau_.sign_of(g0_);
}

RealAlgebraic APoint::coordinate(size_t i) const {
    if (i >= g_.size()) throw internal_error("APoint::coordinate: index");
    if (tau_.is_rational()) {
        const Q t = tau_.rational_value();
        return RealAlgebraic(g_[i].eval(t) / g0_.eval(t));
    }
    // The coordinate values over all roots of the annihilator f are the
    // roots of Res_T(f(T), g0(T) Z - g_i(T)); the resultant cannot vanish
    // identically because g0 shares no root with f.
    const Poly fT = from_upoly(tau_.annihilator(), 0, 2);
    const Poly zpoly = from_upoly(g0_, 0, 2) * parse_poly("Z", {"T", "Z"}) -
                       from_upoly(g_[i], 0, 2);
    const UPoly R = to_upoly(resultant(fT, zpoly, 0), 1);
    for (const RealAlgebraic& r : RealAlgebraic::roots_of(R)) {
        if (r.interval().exact()) {
            if (compare_coord(i, r.interval().lo) == 0) return r;
        } else if (compare_coord(i, r.interval().lo) > 0 &&
                   compare_coord(i, r.interval().hi) < 0) {
            return r;
        }
    }
    throw internal_error("APoint::coordinate: value not among resultant roots");
}

RurPoint to_rur(const APoint& p) {
    const UPoly& f = p.base().annihilator();
    RurPoint u;
    u.f = f;
    u.g0 = p.denominator();
    u.g.reserve(p.dim());
    for (size_t i = 0; i < p.dim(); ++i) u.g.push_back(p.numerator(i));
    u.sigma = ThomEncoding{f, thom_encoding(f, p.base())};
    return u;
}

APoint from_rur(const RurPoint& u) {
    if (u.f.degree() < 1)
        throw input_error("point annihilator must be nonconstant");
    if (!(u.sigma.poly == u.f))
        throw input_error("Thom encoding must refer to the point annihilator");
    if (u.sigma.signs.size() != static_cast<size_t>(u.f.degree()) + 1)
        throw input_error("Thom encoding has the wrong number of signs");
    if (u.sigma.signs[0] != 0)
        throw input_error("Thom encoding must start with sign 0");
    for (const RealAlgebraic& r : RealAlgebraic::roots_of(u.f)) {
        if (thom_encoding(u.f, r) == u.sigma.signs)
            return APoint(r, u.g0, u.g);
    }
    throw input_error("Thom encoding selects no real root");
}

int rur_sign(const RurPoint& u, const Poly& q) {
    return from_rur(u).sign_at(q);
}

}  // namespace sap
