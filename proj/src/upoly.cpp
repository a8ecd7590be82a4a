#include "sap/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace sap {

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly::UPoly(std::vector<Q> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x() { return UPoly({Q(0), Q(1)}); }

UPoly UPoly::constant(const Q& c) { return UPoly({c}); }

const Q& UPoly::lc() const {
    if (c_.empty()) throw internal_error("UPoly::lc: zero polynomial");
    return c_.back();
}

Q UPoly::eval(const Q& x) const {
    Q acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Q> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Q(static_cast<unsigned>(i));
    return UPoly(std::move(d));
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Q> r(std::max(c_.size(), o.c_.size()), Q(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UPoly();
    std::vector<Q> r(c_.size() + o.c_.size() - 1, Q(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Q& s) const {
    if (s.is_zero()) return UPoly();
    UPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw internal_error("UPoly::divmod: by zero");
    r = a;
    std::vector<Q> qc;
    int db = b.degree();
    if (a.degree() >= db) qc.assign(static_cast<size_t>(a.degree() - db) + 1, Q(0));
    while (r.degree() >= db) {
        int k = r.degree() - db;
        Q f = r.lc() / b.lc();
        qc[static_cast<size_t>(k)] = f;
        std::vector<Q> sub(static_cast<size_t>(k), Q(0));
        sub.insert(sub.end(), b.c_.begin(), b.c_.end());
        UPoly s(std::move(sub));
        r = r - s * f;
    }
    q = UPoly(std::move(qc));
}

UPoly UPoly::normalized() const {
    UPoly p = positive_normalized();
    if (!p.c_.empty() && p.c_.back().sign() < 0) return -p;
    return p;
}

UPoly UPoly::positive_normalized() const {
    if (c_.empty()) return *this;
    Z l(1), g(0);
    for (const auto& c : c_) l = lcm(l, den(c));
    for (const auto& c : c_) g = gcd(g, num(c) * (l / den(c)));
    if (g.is_zero()) return *this;
    return *this * Q(l, g);
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        Q c = c_[i];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (i == 0 || c != 1) os << format_q(c);
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    UPoly u = a.normalized(), v = b.normalized();
    while (!v.is_zero()) {
        UPoly q, r;
        UPoly::divmod(u, v, q, r);
        u = v;
        v = r.normalized();
    }
    return u;
}

UPoly squarefree_part(const UPoly& p) {
    if (p.is_zero()) return p;
    UPoly g = upoly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.normalized();
    UPoly q, r;
    UPoly::divmod(p, g, q, r);
    if (!r.is_zero()) throw internal_error("squarefree_part: gcd does not divide");
    return q.normalized();
}

UPoly to_upoly(const Poly& p, uint32_t var) {
    std::vector<Q> c = p.univariate_coeffs(var);
    if (p.is_zero()) c.clear();
    return UPoly(std::move(c));
}

Poly from_upoly(const UPoly& p, uint32_t var, uint32_t nvars) {
    std::vector<Poly::Term> terms;
    const auto& c = p.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        Poly::Exp e(nvars, 0);
        e[var] = static_cast<uint32_t>(i);
        terms.push_back({std::move(e), c[i]});
    }
    return Poly::from_terms(nvars, std::move(terms));
}

std::vector<UPoly> sturm_chain(const UPoly& p, const UPoly& q) {
    std::vector<UPoly> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p.positive_normalized());
    if (q.is_zero()) return seq;
    seq.push_back(q.positive_normalized());
    while (seq.back().degree() > 0) {
        UPoly quo, rem;
        UPoly::divmod(seq[seq.size() - 2], seq.back(), quo, rem);
        if (rem.is_zero()) break;
        seq.push_back((-rem).positive_normalized());
    }
    return seq;
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
    return sturm_chain(p, p.derivative());
}

int sign_variations(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int variations_at(const std::vector<UPoly>& chain, const Q& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& f : chain) signs.push_back(f.eval(x).sign());
    return sign_variations(signs);
}

int variations_at_neg_inf(const std::vector<UPoly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& f : chain) {
        int s = f.is_zero() ? 0 : f.lc().sign();
        if (!f.is_zero() && (f.degree() & 1)) s = -s;
        signs.push_back(s);
    }
    return sign_variations(signs);
}

int variations_at_pos_inf(const std::vector<UPoly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& f : chain) signs.push_back(f.is_zero() ? 0 : f.lc().sign());
    return sign_variations(signs);
}

int count_roots_in(const std::vector<UPoly>& chain, const Q& a, const Q& b) {
    if (b < a) throw internal_error("count_roots_in: reversed interval");
    return variations_at(chain, a) - variations_at(chain, b);
}

int count_real_roots(const UPoly& p) {
    if (p.is_zero()) throw internal_error("count_real_roots: zero polynomial");
    auto chain = sturm_chain(squarefree_part(p));
    return variations_at_neg_inf(chain) - variations_at_pos_inf(chain);
}

namespace {

// Isolates all roots of the squarefree sf not in `found` (exact roots
// already factored out of sf). Appends open intervals with endpoint
// sign changes. Returns false when a bisection point hits a root; the
// root is appended to `found` and the caller divides it out and
// retries.
bool bisect_isolate(const UPoly& sf, std::vector<Q>& found,
                    std::vector<RootInterval>& out) {
    auto chain = sturm_chain(sf);
    int total = variations_at_neg_inf(chain) - variations_at_pos_inf(chain);
    if (total == 0) return true;
    Q M(1);
    while (true) {
        while (sf.eval(M).is_zero() || sf.eval(-M).is_zero()) M += 1;
        if (count_roots_in(chain, -M, M) == total) break;
        M *= 2;
    }
    struct Span {
        Q lo, hi;
        int vlo, vhi;
    };
    std::vector<Span> stack{{-M, M, variations_at(chain, -M), variations_at(chain, M)}};
    while (!stack.empty()) {
        Span s = stack.back();
        stack.pop_back();
        int k = s.vlo - s.vhi;
        if (k == 0) continue;
        if (k == 1) {
            if (sf.eval(s.lo).sign() * sf.eval(s.hi).sign() >= 0)
                throw internal_error("bisect_isolate: endpoint sign invariant");
            out.push_back({s.lo, s.hi});
            continue;
        }
        Q m = (s.lo + s.hi) / 2;
        if (sf.eval(m).is_zero()) {
            found.push_back(m);
            return false;  // restart with the root divided out
        }
        int vm = variations_at(chain, m);
        stack.push_back({m, s.hi, vm, s.vhi});
        stack.push_back({s.lo, m, s.vlo, vm});
    }
    return true;
}

}  // namespace

IsolatedRoots isolate_real_roots(const UPoly& p) {
    if (p.is_zero()) throw internal_error("isolate_real_roots: zero polynomial");
    UPoly sf = squarefree_part(p);
    std::vector<Q> exact;
    std::vector<RootInterval> open;
    // Peel degree-1 factors and midpoint hits; restart after each peel.
    // `open` only keeps the intervals of the last complete run.
    while (true) {
        if (sf.degree() == 1) {
            exact.push_back(-sf.coeff(0) / sf.coeff(1));
            sf = UPoly::constant(Q(1));
            open.clear();
            break;
        }
        if (sf.degree() <= 0) {
            open.clear();
            break;
        }
        open.clear();
        if (bisect_isolate(sf, exact, open)) break;
        UPoly q, r;
        UPoly::divmod(sf, UPoly({-exact.back(), Q(1)}), q, r);
        if (!r.is_zero()) throw internal_error("isolate_real_roots: bad root division");
        sf = q.normalized();
    }
    // Refine each open interval (against the peeled sf, whose endpoint
    // sign change it carries) until its closed hull excludes every
    // exact root and hulls are pairwise disjoint. Roots are distinct,
    // so halving terminates.
    std::sort(open.begin(), open.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < open.size(); ++i) {
            auto& iv = open[i];
            for (const Q& r : exact) {
                while (!iv.exact() && iv.lo <= r && r <= iv.hi) {
                    refine_root(sf, iv);
                    changed = true;
                }
            }
            while (!iv.exact() && i > 0 && !(open[i - 1].hi < iv.lo)) {
                refine_root(sf, iv);
                changed = true;
            }
        }
    }
    // One cheap probe per interval so simple rational roots are exact.
    for (auto& iv : open) {
        if (iv.exact()) continue;
        Q cand = simplest_between(iv.lo, iv.hi);
        if (iv.lo < cand && cand < iv.hi && sf.eval(cand).is_zero())
            iv.lo = iv.hi = cand;
    }
    // Assemble: exact roots plus refined open intervals, sorted. After
    // exclusion the sign-change invariant also holds for the full
    // squarefree part (the peeled factors keep one sign on each hull).
    UPoly ref = squarefree_part(p);
    IsolatedRoots result;
    result.squarefree = ref;
    for (const Q& r : exact) result.roots.push_back({r, r});
    for (auto& iv : open) result.roots.push_back(iv);
    std::sort(result.roots.begin(), result.roots.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    for (size_t i = 0; i + 1 < result.roots.size(); ++i)
        if (!(result.roots[i].hi < result.roots[i + 1].lo))
            throw internal_error("isolate_real_roots: overlapping intervals");
    for (const auto& iv : result.roots)
        if (!iv.exact() && ref.eval(iv.lo).sign() * ref.eval(iv.hi).sign() >= 0)
            throw internal_error("isolate_real_roots: endpoint signs");
    return result;
}

void refine_root(const UPoly& sf, RootInterval& r) {
    if (r.exact()) return;
    Q m = r.mid();
    int sm = sf.eval(m).sign();
    if (sm == 0) {
        r.lo = r.hi = m;
        return;
    }
    if (sf.eval(r.lo).sign() * sm < 0) {
        r.hi = m;
    } else {
        r.lo = m;
    }
}

void refine_root_below(const UPoly& sf, RootInterval& r, const Q& limit) {
    while (!r.exact() && !(r.width() < limit)) refine_root(sf, r);
}

}  // namespace sap
