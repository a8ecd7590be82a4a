#include "sap/algupoly.hpp"

#include <algorithm>
#include <utility>

namespace sap {

AlgUPoly::AlgUPoly(std::vector<UPoly> coeffs, RealAlgebraic base)
    : c_(std::move(coeffs)), base_(std::move(base)) {
    reduce_all(c_);
    trim_at_base(c_);
}

AlgUPoly::AlgUPoly(const Poly& H, uint32_t base_var, uint32_t x_var,
                   RealAlgebraic base)
    : base_(std::move(base)) {
    std::vector<Poly> cs = H.coeffs_wrt(x_var);
    c_.reserve(cs.size());
    for (const Poly& p : cs) c_.push_back(to_upoly(p, base_var));
    reduce_all(c_);
    trim_at_base(c_);
}

void AlgUPoly::reduce_all(std::vector<UPoly>& v) const {
    for (UPoly& u : v) u = base_.reduce(u);
}

void AlgUPoly::trim_at_base(std::vector<UPoly>& v) const {
    while (!v.empty() && base_.sign_of(v.back()) == 0) v.pop_back();
}

std::vector<UPoly> AlgUPoly::derive(const std::vector<UPoly>& v) const {
    std::vector<UPoly> d;
    if (v.size() <= 1) return d;
    d.reserve(v.size() - 1);
    for (size_t i = 1; i < v.size(); ++i) d.push_back(v[i] * Q(i));
    trim_at_base(d);
    return d;
}

AlgUPoly AlgUPoly::derivative() const { return AlgUPoly(derive(c_), base_); }

int AlgUPoly::sign_at_of(const std::vector<UPoly>& v, const Q& x) const {
    if (v.empty()) return 0;
    UPoly e = v.back();
    for (size_t i = v.size() - 1; i-- > 0;) e = e * x + v[i];
    return base_.sign_of(e);
}

int AlgUPoly::sign_at(const Q& x) const { return sign_at_of(c_, x); }

int AlgUPoly::sign_at_ratio(const UPoly& num, const UPoly& den) const {
    const int sd = base_.sign_of(den);
    if (sd == 0)
        throw internal_error("AlgUPoly::sign_at_ratio: zero denominator");
    if (is_zero()) return 0;
    const int d = degree();
    // h(num/den) = N / den^d with N = sum_i c_i num^i den^(d-i).
    UPoly dpow = UPoly::constant(Q(1));
    std::vector<UPoly> dp;
    dp.reserve(d + 1);
    dp.push_back(dpow);
    for (int j = 1; j <= d; ++j) {
        dpow = base_.reduce(dpow * den);
        dp.push_back(dpow);
    }
    UPoly acc = UPoly::constant(Q(0));
    UPoly npow = UPoly::constant(Q(1));
    for (int i = 0; i <= d; ++i) {
        acc = base_.reduce(acc + base_.reduce(c_[i] * npow) * dp[d - i]);
        if (i < d) npow = base_.reduce(npow * num);
    }
    const int s = base_.sign_of(acc);
    if (s == 0) return 0;
    return (d % 2 == 1 && sd < 0) ? -s : s;
}

std::vector<AlgUPoly::Elem> AlgUPoly::build_chain(std::vector<UPoly> a,
                                                  std::vector<UPoly> b) const {
    if (a.empty())
        throw internal_error("AlgUPoly: chain head vanishes at base");
    std::vector<Elem> out;
    out.push_back({std::move(a), 1});
    if (b.empty()) return out;
    if (out[0].c.size() < b.size())
        throw internal_error("AlgUPoly: chain head has smaller degree");
    out.push_back({std::move(b), 1});

    // r := lc(den)*r - lc(r)*X^(deg r - deg den)*den until deg r < deg den;
    // steps counts the multiplications by lc(den).
    auto prem = [&](const std::vector<UPoly>& num,
                    const std::vector<UPoly>& den, int& steps) {
        std::vector<UPoly> r = num;
        const UPoly& lb = den.back();
        size_t db = den.size() - 1;
        steps = 0;
        while (r.size() > db) {
            size_t dr = r.size() - 1;
            UPoly lr = r.back();
            std::vector<UPoly> nr(dr);
            size_t shift = dr - db;
            for (size_t i = 0; i < dr; ++i) {
                UPoly t = lb * r[i];
                if (i >= shift) t = t - lr * den[i - shift];
                nr[i] = base_.reduce(t);
            }
            r = std::move(nr);
            trim_at_base(r);
            ++steps;
        }
        return r;
    };

    while (true) {
        const std::vector<UPoly>& prev = out[out.size() - 2].c;
        const std::vector<UPoly>& cur = out[out.size() - 1].c;
        int steps = 0;
        std::vector<UPoly> next = prem(prev, cur, steps);
        if (next.empty()) break;
        for (UPoly& u : next) u = -u;

        UPoly cont = next[0];
        for (size_t i = 1; i < next.size() && cont.degree() != 0; ++i)
            cont = upoly_gcd(cont, next[i]);
        int cont_sign = 1;
        if (cont.degree() >= 1) {
            cont_sign = base_.sign_of(cont);
            if (cont_sign == 0)
                throw internal_error("AlgUPoly: content vanishes at base");
            for (UPoly& u : next) {
                UPoly q, r;
                UPoly::divmod(u, cont, q, r);
                if (!r.is_zero())
                    throw internal_error("AlgUPoly: content division failed");
                u = q;
            }
        }

        int lc_sign = base_.sign_of(cur.back());
        int eps = out[out.size() - 2].eps;
        if (steps % 2 == 1 && lc_sign < 0) eps = -eps;
        eps *= cont_sign;
        out.push_back({std::move(next), eps});
    }
    return out;
}

int AlgUPoly::variations(const std::vector<Elem>& chain, const Q& x) const {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const Elem& e : chain)
        signs.push_back(e.eps * sign_at_of(e.c, x));
    return sign_variations(signs);
}

int AlgUPoly::variations_neg_inf(const std::vector<Elem>& chain) const {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const Elem& e : chain) {
        int s = e.eps * base_.sign_of(e.c.back());
        if ((e.c.size() - 1) % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return sign_variations(signs);
}

int AlgUPoly::variations_pos_inf(const std::vector<Elem>& chain) const {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const Elem& e : chain)
        signs.push_back(e.eps * base_.sign_of(e.c.back()));
    return sign_variations(signs);
}

int AlgUPoly::count_via(const std::vector<Elem>& chain, const Q& a,
                        const Q& b) const {
    if (b < a) throw internal_error("AlgUPoly: inverted interval");
    return variations(chain, a) - variations(chain, b);
}

const std::vector<AlgUPoly::Elem>& AlgUPoly::ensure_count_chain() const {
    if (!count_chain_) {
        if (c_.empty())
            throw internal_error("AlgUPoly: counting on zero specialization");
        auto ch = std::make_shared<std::vector<Elem>>();
        if (degree() == 0)
            ch->push_back({c_, 1});
        else
            *ch = build_chain(c_, derive(c_));
        count_chain_ = std::move(ch);
    }
    return *count_chain_;
}

int AlgUPoly::count_roots_in(const Q& a, const Q& b) const {
    return count_via(ensure_count_chain(), a, b);
}

int AlgUPoly::count_real_roots() const {
    const std::vector<Elem>& ch = ensure_count_chain();
    return variations_neg_inf(ch) - variations_pos_inf(ch);
}

std::vector<UPoly> AlgUPoly::pseudo_quotient(
    const std::vector<UPoly>& num, const std::vector<UPoly>& den) const {
    std::vector<UPoly> r = num;
    std::vector<UPoly> q(num.size() - den.size() + 1);
    const UPoly& lb = den.back();
    size_t db = den.size() - 1;
    while (r.size() > db) {
        size_t dr = r.size() - 1;
        UPoly lr = r.back();
        size_t shift = dr - db;
        for (UPoly& u : q) u = base_.reduce(lb * u);
        q[shift] = q[shift] + lr;
        std::vector<UPoly> nr(dr);
        for (size_t i = 0; i < dr; ++i) {
            UPoly t = lb * r[i];
            if (i >= shift) t = t - lr * den[i - shift];
            nr[i] = base_.reduce(t);
        }
        r = std::move(nr);
        trim_at_base(r);
    }
    if (!r.empty())
        throw internal_error("AlgUPoly: pseudo-division not exact at base");
    trim_at_base(q);
    return q;
}

std::vector<UPoly> AlgUPoly::divide_linear(const std::vector<UPoly>& v,
                                           const Q& root) const {
    std::vector<UPoly> out(v.size() - 1);
    out[out.size() - 1] = v.back();
    for (size_t i = out.size() - 1; i-- > 0;)
        out[i] = base_.reduce(v[i + 1] + out[i + 1] * root);
    UPoly rem = v[0] + out[0] * root;
    if (base_.sign_of(rem) != 0)
        throw internal_error("AlgUPoly: claimed root is not a root");
    trim_at_base(out);
    return out;
}

const AlgUPoly::Cache& AlgUPoly::ensure_cache() const {
    if (cache_) return *cache_;
    if (c_.empty())
        throw internal_error("AlgUPoly: isolating roots of zero specialization");
    auto cache = std::make_shared<Cache>();

    std::vector<UPoly> work = c_;
    if (work.size() >= 3) {
        std::vector<Elem> ch = build_chain(work, derive(work));
        const std::vector<UPoly>& g = ch.back().c;
        if (g.size() >= 2) work = pseudo_quotient(work, g);
    }

    std::vector<Q> found;
    std::vector<RootInterval> open;
    while (work.size() >= 2) {
        open.clear();
        std::vector<Elem> chain = build_chain(work, derive(work));
        int total = variations_neg_inf(chain) - variations_pos_inf(chain);
        if (total == 0) break;

        Q M(1);
        while (true) {
            while (sign_at_of(work, M) == 0 || sign_at_of(work, -M) == 0)
                M += 1;
            if (count_via(chain, -M, M) == total) break;
            M *= 2;
        }

        struct Span {
            Q lo, hi;
            int vlo, vhi;
        };
        std::vector<Span> stack;
        stack.push_back({-M, M, variations(chain, -M), variations(chain, M)});
        bool hit = false;
        Q hit_at(0);
        while (!stack.empty()) {
            Span s = std::move(stack.back());
            stack.pop_back();
            int k = s.vlo - s.vhi;
            if (k == 0) continue;
            if (k == 1) {
                if (sign_at_of(work, s.lo) * sign_at_of(work, s.hi) >= 0)
                    throw internal_error("AlgUPoly: lost bracketing sign change");
                open.push_back({s.lo, s.hi});
                continue;
            }
            Q m = (s.lo + s.hi) / 2;
            if (sign_at_of(work, m) == 0) {
                hit = true;
                hit_at = m;
                break;
            }
            int vm = variations(chain, m);
            stack.push_back({s.lo, m, s.vlo, vm});
            stack.push_back({m, s.hi, vm, s.vhi});
        }
        if (!hit) break;
        found.push_back(hit_at);
        work = divide_linear(work, hit_at);
    }
    if (work.size() < 2) open.clear();

    // Separate: exact roots outside every open hull, hulls disjoint.
    auto halve = [&](RootInterval& r) {
        Q m = r.mid();
        int sm = sign_at_of(work, m);
        if (sm == 0) {
            r.lo = m;
            r.hi = m;
        } else if (sm == sign_at_of(work, r.lo)) {
            r.lo = m;
        } else {
            r.hi = m;
        }
    };
    std::sort(open.begin(), open.end(),
              [](const RootInterval& a, const RootInterval& b) {
                  return a.lo < b.lo;
              });
    for (size_t i = 0; i < open.size(); ++i) {
        RootInterval& r = open[i];
        while (true) {
            bool bad = false;
            if (!r.exact()) {
                for (const Q& f : found)
                    if (r.lo <= f && f <= r.hi) bad = true;
            }
            if (i > 0 && !(open[i - 1].hi < r.lo)) bad = true;
            if (!bad) break;
            halve(r);
        }
    }

    // one cheap probe per interval so simple rational roots are exact
    for (RootInterval& r : open) {
        if (r.exact()) continue;
        Q cand = simplest_between(r.lo, r.hi);
        if (r.lo < cand && cand < r.hi && sign_at_of(work, cand) == 0) {
            r.lo = cand;
            r.hi = cand;
        }
    }

    std::vector<RootInterval> roots = std::move(open);
    for (const Q& f : found) roots.push_back({f, f});
    std::sort(roots.begin(), roots.end(),
              [](const RootInterval& a, const RootInterval& b) {
                  return a.lo < b.lo;
              });
    for (size_t i = 1; i < roots.size(); ++i)
        if (!(roots[i - 1].hi < roots[i].lo))
            throw internal_error("AlgUPoly: isolation intervals overlap");

    cache->work = std::move(work);
    cache->roots = std::move(roots);
    cache_ = std::move(cache);
    return *cache_;
}

const std::vector<RootInterval>& AlgUPoly::isolate_roots() const {
    return ensure_cache().roots;
}

void AlgUPoly::refine(RootInterval& r) const {
    if (r.exact()) return;
    const Cache& cache = ensure_cache();
    Q m = r.mid();
    int sm = sign_at_of(cache.work, m);
    if (sm == 0) {
        r.lo = m;
        r.hi = m;
        return;
    }
    if (sm == sign_at_of(cache.work, r.lo))
        r.lo = m;
    else
        r.hi = m;
}

AlgUPoly AlgUPoly::gcd_at_base(const AlgUPoly& a, const AlgUPoly& b) {
    if (a.base_.compare(b.base_) != 0)
        throw internal_error("AlgUPoly: gcd over different bases");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const AlgUPoly& hi = a.degree() >= b.degree() ? a : b;
    const AlgUPoly& lo = a.degree() >= b.degree() ? b : a;
    std::vector<Elem> ch = hi.build_chain(hi.c_, lo.c_);
    return AlgUPoly(ch.back().c, a.base_);
}

}  // namespace sap
