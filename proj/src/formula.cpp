#include "sap/formula.hpp"

#include <utility>

namespace sap {

bool rel_holds(Rel r, int s) {
    switch (r) {
        case Rel::GE: return s >= 0;
        case Rel::LE: return s <= 0;
        case Rel::EQ: return s == 0;
    }
    throw internal_error("rel_holds: bad relation");
}

Formula Formula::always_true() { return Formula(Kind::True); }
Formula Formula::always_false() { return Formula(Kind::False); }

Formula Formula::atom(Poly p, Rel r) {
    if (p.is_constant())
        return rel_holds(r, sign(p.constant_value())) ? always_true()
                                                      : always_false();
    Formula f(Kind::Atom);
    f.poly_ = std::move(p);
    f.rel_ = r;
    return f;
}

Formula Formula::conj(std::vector<Formula> parts) {
    std::vector<Formula> kept;
    for (Formula& f : parts) {
        if (f.kind_ == Kind::False) return always_false();
        if (f.kind_ != Kind::True) kept.push_back(std::move(f));
    }
    if (kept.empty()) return always_true();
    if (kept.size() == 1) return std::move(kept.front());
    Formula f(Kind::And);
    f.kids_ = std::move(kept);
    return f;
}

Formula Formula::disj(std::vector<Formula> parts) {
    std::vector<Formula> kept;
    for (Formula& f : parts) {
        if (f.kind_ == Kind::True) return always_true();
        if (f.kind_ != Kind::False) kept.push_back(std::move(f));
    }
    if (kept.empty()) return always_false();
    if (kept.size() == 1) return std::move(kept.front());
    Formula f(Kind::Or);
    f.kids_ = std::move(kept);
    return f;
}

const Poly& Formula::poly() const {
    if (kind_ != Kind::Atom) throw internal_error("Formula::poly: not an atom");
    return poly_;
}

Rel Formula::rel() const {
    if (kind_ != Kind::Atom) throw internal_error("Formula::rel: not an atom");
    return rel_;
}

uint32_t Formula::nvars() const {
    switch (kind_) {
        case Kind::True:
        case Kind::False:
            return 0;
        case Kind::Atom:
            return poly_.nvars();
        case Kind::And:
        case Kind::Or: {
            uint32_t n = 0;
            for (const Formula& f : kids_) n = std::max(n, f.nvars());
            return n;
        }
    }
    throw internal_error("Formula::nvars: bad kind");
}

bool Formula::holds_at(const APoint& p) const {
    return holds([&p](const Poly& q) { return p.sign_at(q); });
}

bool Formula::holds(const std::function<int(const Poly&)>& sign_of) const {
    switch (kind_) {
        case Kind::True:
            return true;
        case Kind::False:
            return false;
        case Kind::Atom:
            return rel_holds(rel_, sign_of(poly_));
        case Kind::And:
            for (const Formula& f : kids_)
                if (!f.holds(sign_of)) return false;
            return true;
        case Kind::Or:
            for (const Formula& f : kids_)
                if (f.holds(sign_of)) return true;
            return false;
    }
    throw internal_error("Formula::holds: bad kind");
}

namespace {

void collect_polys(const Formula& f, std::vector<Poly>& out) {
    switch (f.kind()) {
        case Formula::Kind::True:
        case Formula::Kind::False:
            return;
        case Formula::Kind::Atom: {
            for (const Poly& p : out)
                if (p == f.poly()) return;
            out.push_back(f.poly());
            return;
        }
        case Formula::Kind::And:
        case Formula::Kind::Or:
            for (const Formula& k : f.children()) collect_polys(k, out);
            return;
    }
}

}  // namespace

std::vector<Poly> Formula::polys() const {
    std::vector<Poly> out;
    collect_polys(*this, out);
    return out;
}

Formula Formula::specialize_prefix(size_t k, const std::vector<Q>& vals) const {
    if (vals.size() != k)
        throw internal_error("Formula::specialize_prefix: arity mismatch");
    switch (kind_) {
        case Kind::True:
        case Kind::False:
            return *this;
        case Kind::Atom: {
            if (poly_.nvars() < k)
                throw internal_error("Formula::specialize_prefix: too few vars");
            const uint32_t rest = poly_.nvars() - static_cast<uint32_t>(k);
            std::vector<Poly::Term> terms;
            terms.reserve(poly_.terms().size());
            for (const Poly::Term& t : poly_.terms()) {
                Q c = t.c;
                for (size_t i = 0; i < k; ++i)
                    if (t.e[i] != 0) c *= pow_q(vals[i], t.e[i]);
                terms.push_back(
                    {Poly::Exp(t.e.begin() + k, t.e.end()), std::move(c)});
            }
            return atom(Poly::from_terms(rest, std::move(terms)), rel_);
        }
        case Kind::And:
        case Kind::Or: {
            std::vector<Formula> parts;
            parts.reserve(kids_.size());
            for (const Formula& f : kids_)
                parts.push_back(f.specialize_prefix(k, vals));
            return kind_ == Kind::And ? conj(std::move(parts))
                                      : disj(std::move(parts));
        }
    }
    throw internal_error("Formula::specialize_prefix: bad kind");
}

Formula Formula::embedded(uint32_t shift, uint32_t width) const {
    switch (kind_) {
        case Kind::True:
        case Kind::False:
            return *this;
        case Kind::Atom: {
            std::vector<uint32_t> map(poly_.nvars());
            for (uint32_t i = 0; i < poly_.nvars(); ++i) map[i] = i + shift;
            Formula f(Kind::Atom);
            f.poly_ = poly_.rename_vars(map, width);
            f.rel_ = rel_;
            return f;
        }
        case Kind::And:
        case Kind::Or: {
            Formula f(kind_);
            f.kids_.reserve(kids_.size());
            for (const Formula& k : kids_) f.kids_.push_back(k.embedded(shift, width));
            return f;
        }
    }
    throw internal_error("Formula::embedded: bad kind");
}

}  // namespace sap
