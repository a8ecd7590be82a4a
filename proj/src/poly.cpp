#include "sap/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace sap {

namespace {

// Descending graded-lex: higher total degree first, then lexicographic.
bool exp_before(const Poly::Exp& a, const Poly::Exp& b) {
    uint64_t da = std::accumulate(a.begin(), a.end(), uint64_t{0});
    uint64_t db = std::accumulate(b.begin(), b.end(), uint64_t{0});
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

bool exp_equal(const Poly::Exp& a, const Poly::Exp& b) { return a == b; }

}  // namespace

Poly::Poly(uint32_t nvars, const Q& constant) : nvars_(nvars) {
    if (!constant.is_zero()) terms_.push_back({Exp(nvars, 0), constant});
}

Poly Poly::variable(uint32_t var, uint32_t nvars) {
    if (var >= nvars) throw internal_error("Poly::variable: index out of range");
    Poly p(nvars);
    Exp e(nvars, 0);
    e[var] = 1;
    p.terms_.push_back({std::move(e), Q(1)});
    return p;
}

Poly Poly::constant(uint32_t nvars, const Q& c) { return Poly(nvars, c); }

Poly Poly::from_terms(uint32_t nvars, std::vector<Term> terms) {
    Poly p(nvars);
    for (auto& t : terms) {
        if (t.e.size() != nvars) throw internal_error("Poly::from_terms: bad exponent arity");
    }
    p.terms_ = std::move(terms);
    p.normalize_terms();
    return p;
}

void Poly::normalize_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return exp_before(a.e, b.e); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && exp_equal(merged.back().e, t.e)) {
            merged.back().c += t.c;
            if (merged.back().c.is_zero()) merged.pop_back();
        } else if (!t.c.is_zero()) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_[0].e.begin(), terms_[0].e.end(),
                        [](uint32_t x) { return x == 0; }));
}

Q Poly::constant_value() const {
    if (terms_.empty()) return Q(0);
    if (!is_constant()) throw internal_error("Poly::constant_value: not constant");
    return terms_[0].c;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    uint64_t d = 0;
    for (uint32_t e : terms_[0].e) d += e;  // leading term has max degree
    return static_cast<int>(d);
}

int Poly::degree_in(uint32_t var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.e[var]));
    return d;
}

int Poly::max_var() const {
    int mv = -1;
    for (const auto& t : terms_)
        for (uint32_t v = 0; v < nvars_; ++v)
            if (t.e[v] > 0) mv = std::max(mv, static_cast<int>(v));
    return mv;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars_ != o.nvars_) throw internal_error("Poly::+: arity mismatch");
    Poly r(nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (exp_equal(terms_[i].e, o.terms_[j].e)) {
            Q c = terms_[i].c + o.terms_[j].c;
            if (!c.is_zero()) r.terms_.push_back({terms_[i].e, std::move(c)});
            ++i, ++j;
        } else if (exp_before(terms_[i].e, o.terms_[j].e)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw internal_error("Poly::*: arity mismatch");
    if (terms_.empty() || o.terms_.empty()) return Poly(nvars_);
    std::map<Exp, Q, bool (*)(const Exp&, const Exp&)> acc(&exp_before);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Exp e(nvars_);
            for (uint32_t v = 0; v < nvars_; ++v) e[v] = a.e[v] + b.e[v];
            auto it = acc.find(e);
            if (it == acc.end()) {
                acc.emplace(std::move(e), a.c * b.c);
            } else {
                it->second += a.c * b.c;
            }
        }
    }
    Poly r(nvars_);
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({e, std::move(c)});
    return r;
}

Poly Poly::operator*(const Q& s) const {
    if (s.is_zero()) return Poly(nvars_);
    Poly r = *this;
    for (auto& t : r.terms_) t.c *= s;
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].e != o.terms_[i].e || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

bool Poly::operator<(const Poly& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (terms_[i].e != o.terms_[i].e)
            return exp_before(terms_[i].e, o.terms_[i].e);
        if (terms_[i].c != o.terms_[i].c) return terms_[i].c < o.terms_[i].c;
    }
    return terms_.size() < o.terms_.size();
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(nvars_, Q(1));
    Poly b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

Poly Poly::derivative(uint32_t var) const {
    Poly r(nvars_);
    for (const auto& t : terms_) {
        if (t.e[var] == 0) continue;
        Term d = t;
        d.c *= Q(t.e[var]);
        --d.e[var];
        r.terms_.push_back(std::move(d));
    }
    r.normalize_terms();
    return r;
}

std::vector<Poly> Poly::coeffs_wrt(uint32_t var) const {
    int d = degree_in(var);
    if (d < 0) return {};
    std::vector<Poly> out(static_cast<size_t>(d) + 1, Poly(nvars_));
    for (const auto& t : terms_) {
        Term stripped = t;
        uint32_t k = stripped.e[var];
        stripped.e[var] = 0;
        out[k].terms_.push_back(std::move(stripped));
    }
    for (auto& c : out) c.normalize_terms();
    return out;
}

Poly Poly::lc_wrt(uint32_t var) const {
    auto cs = coeffs_wrt(var);
    if (cs.empty()) return Poly(nvars_);
    return cs.back();
}

Poly Poly::from_coeffs(uint32_t var, uint32_t nvars,
                       const std::vector<Poly>& coeffs) {
    Poly r(nvars);
    Poly xv = Poly::variable(var, nvars);
    for (size_t j = 0; j < coeffs.size(); ++j)
        r += coeffs[j] * xv.pow(static_cast<unsigned>(j));
    return r;
}

Q Poly::eval(const std::vector<Q>& point) const {
    if (point.size() != nvars_) throw internal_error("Poly::eval: arity mismatch");
    Q acc(0);
    for (const auto& t : terms_) {
        Q m = t.c;
        for (uint32_t v = 0; v < nvars_; ++v)
            if (t.e[v]) m *= pow_q(point[v], t.e[v]);
        acc += m;
    }
    return acc;
}

Poly Poly::substitute(uint32_t var, const Q& value) const {
    Poly r(nvars_);
    for (const auto& t : terms_) {
        Term s = t;
        if (s.e[var]) {
            s.c *= pow_q(value, s.e[var]);
            s.e[var] = 0;
        }
        if (!s.c.is_zero()) r.terms_.push_back(std::move(s));
    }
    r.normalize_terms();
    return r;
}

Poly Poly::substitute(uint32_t var, const Poly& replacement) const {
    auto cs = coeffs_wrt(var);
    if (cs.empty()) return Poly(nvars_);
    // Horner evaluation in the replacement.
    Poly acc = cs.back();
    for (size_t j = cs.size() - 1; j-- > 0;) acc = acc * replacement + cs[j];
    return acc;
}

Poly Poly::rename_vars(const std::vector<uint32_t>& map,
                       uint32_t new_nvars) const {
    if (map.size() != nvars_) throw internal_error("Poly::rename_vars: bad map");
    Poly r(new_nvars);
    for (const auto& t : terms_) {
        Term s;
        s.c = t.c;
        s.e.assign(new_nvars, 0);
        for (uint32_t v = 0; v < nvars_; ++v) {
            if (t.e[v] == 0) continue;
            if (map[v] >= new_nvars) throw internal_error("Poly::rename_vars: target out of range");
            s.e[map[v]] += t.e[v];
        }
        r.terms_.push_back(std::move(s));
    }
    r.normalize_terms();
    return r;
}

Poly Poly::normalized() const {
    if (terms_.empty()) return *this;
    Z l(1), g(0);
    for (const auto& t : terms_) {
        l = lcm(l, den(t.c));
    }
    for (const auto& t : terms_) {
        g = gcd(g, num(t.c) * (l / den(t.c)));
    }
    if (g.is_zero()) return *this;
    Q s{l, g};  // positive scale making coefficients coprime integers
    if (s < 0) s = -s;
    Poly r = *this * s;
    if (r.terms_[0].c.sign() < 0) r = -r;
    return r;
}

std::vector<Q> Poly::univariate_coeffs(uint32_t var) const {
    int d = degree_in(var);
    std::vector<Q> out(static_cast<size_t>(std::max(d, 0)) + 1, Q(0));
    for (const auto& t : terms_) {
        for (uint32_t v = 0; v < nvars_; ++v)
            if (v != var && t.e[v] > 0)
                throw internal_error("Poly::univariate_coeffs: extra variable present");
        out[t.e[var]] = t.c;
    }
    return out;
}

std::string Poly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Q c = t.c;
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
        bool any_var = std::any_of(t.e.begin(), t.e.end(), [](uint32_t x) { return x > 0; });
        bool coeff_shown = (c != 1) || !any_var;
        if (coeff_shown) os << format_q(c);
        bool star = coeff_shown;
        for (uint32_t v = 0; v < nvars_; ++v) {
            if (t.e[v] == 0) continue;
            if (star) os << "*";
            os << (v < var_names.size() ? var_names[v] : "x" + std::to_string(v));
            if (t.e[v] > 1) os << "^" << t.e[v];
            star = true;
        }
    }
    return os.str();
}

std::string Poly::to_string() const { return to_string({}); }

size_t PolyHash::operator()(const Poly& p) const {
    size_t h = std::hash<uint32_t>{}(p.nvars_);
    auto mix = [&h](size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
    for (const auto& t : p.terms_) {
        for (uint32_t e : t.e) mix(e);
        mix(std::hash<std::string>{}(num(t.c).str()));
        mix(std::hash<std::string>{}(den(t.c).str()));
    }
    return h;
}

Poly exact_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw internal_error("exact_divide: by zero");
    if (a.is_zero()) return Poly(a.nvars());
    Poly rem = a;
    Poly quot(a.nvars());
    const auto& bl = b.terms()[0];
    while (!rem.is_zero()) {
        const auto& rl = rem.terms()[0];
        Poly::Exp e(a.nvars());
        for (uint32_t v = 0; v < a.nvars(); ++v) {
            if (rl.e[v] < bl.e[v]) throw internal_error("exact_divide: not divisible");
            e[v] = rl.e[v] - bl.e[v];
        }
        Poly mono = Poly::from_terms(a.nvars(), {{e, rl.c / bl.c}});
        quot += mono;
        rem -= mono * b;
    }
    return quot;
}

Poly content_wrt(const Poly& a, uint32_t var) {
    Poly g(a.nvars());
    for (const auto& c : a.coeffs_wrt(var)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    if (g.is_zero()) return Poly::constant(a.nvars(), Q(1));
    return g;
}

Poly primitive_wrt(const Poly& a, uint32_t var) {
    if (a.is_zero()) return a;
    Poly c = content_wrt(a, var);
    if (c.is_constant() && c.constant_value() == 1) return a;
    return exact_divide(a, c);
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.normalized();
    if (b.is_zero()) return a.normalized();
    int mv = std::max(a.max_var(), b.max_var());
    if (mv < 0) return Poly::constant(a.nvars(), Q(1));
    uint32_t var = static_cast<uint32_t>(mv);
    if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
        // One side is free of the top variable: gcd divides its content.
        const Poly& flat = a.degree_in(var) == 0 ? a : b;
        const Poly& tall = a.degree_in(var) == 0 ? b : a;
        return poly_gcd(flat, content_wrt(tall, var));
    }
    Poly ca = content_wrt(a, var), cb = content_wrt(b, var);
    Poly pa = exact_divide(a, ca), pb = exact_divide(b, cb);
    // Primitive PRS on the main variable.
    Poly u = pa.normalized(), v = pb.normalized();
    if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);
    while (!v.is_zero()) {
        Poly r = prem(u, v, var);
        u = v;
        v = r.is_zero() ? r : primitive_wrt(r, var).normalized();
    }
    Poly g = primitive_wrt(u, var).normalized();
    return (g * poly_gcd(ca, cb)).normalized();
}

Poly squarefree_wrt(const Poly& a, uint32_t var) {
    if (a.is_zero() || a.degree_in(var) == 0) return a.normalized();
    Poly g = poly_gcd(a, a.derivative(var));
    if (g.is_constant()) return a.normalized();
    return exact_divide(a.normalized(), g.normalized()).normalized();
}

Poly squarefree_part(const Poly& a) {
    if (a.is_zero() || a.is_constant()) return a.normalized();
    Poly g = a.normalized();
    for (uint32_t v = 0; v < a.nvars(); ++v) {
        if (a.degree_in(v) > 0) g = poly_gcd(g, a.derivative(v));
        if (g.is_constant()) return a.normalized();
    }
    return exact_divide(a.normalized(), g.normalized()).normalized();
}

Poly prem(const Poly& a, const Poly& b, uint32_t var) {
    int db = b.degree_in(var);
    if (db < 0) throw internal_error("prem: zero divisor");
    Poly r = a;
    Poly blc = b.lc_wrt(var);
    int dr = r.degree_in(var);
    Poly xv = Poly::variable(var, a.nvars());
    while (!r.is_zero() && (dr = r.degree_in(var)) >= db) {
        Poly rlc = r.lc_wrt(var);
        r = r * blc - b * rlc * xv.pow(static_cast<unsigned>(dr - db));
        if (!r.is_zero() && r.degree_in(var) >= dr)
            throw internal_error("prem: no degree drop");
    }
    return r;
}

namespace {

// Recursive-descent parser for polynomial expressions.
struct PolyParser {
    const std::string& s;
    size_t i = 0;
    const std::vector<std::string>& names;
    uint32_t nvars;

    PolyParser(const std::string& text, const std::vector<std::string>& var_names)
        : s(text), names(var_names), nvars(static_cast<uint32_t>(var_names.size())) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    Poly parse_expr() {
        Poly acc = parse_term_signed();
        while (true) {
            skip_ws();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                char op = s[i++];
                Poly t = parse_term();
                acc = op == '+' ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_term_signed() {
        skip_ws();
        bool neg = false;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') neg = !neg;
            ++i;
            skip_ws();
        }
        Poly t = parse_term();
        return neg ? -t : t;
    }

    Poly parse_term() {
        Poly acc = parse_power();
        while (true) {
            skip_ws();
            if (eat('*')) {
                acc *= parse_power();
            } else if (i < s.size() &&
                       (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '(')) {
                acc *= parse_power();  // implicit multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_power() {
        Poly base = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) throw input_error("polynomial: exponent expected");
            unsigned e = static_cast<unsigned>(std::stoul(s.substr(start, i - start)));
            return base.pow(e);
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (i >= s.size()) throw input_error("polynomial: unexpected end");
        if (s[i] == '(') {
            ++i;
            Poly e = parse_expr();
            if (!eat(')')) throw input_error("polynomial: missing ')'");
            return e;
        }
        if (s[i] == '-' || s[i] == '+') return parse_term_signed();
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            Z n(s.substr(start, i - start));
            skip_ws();
            if (i < s.size() && s[i] == '/') {
                size_t save = i;
                ++i;
                skip_ws();
                size_t dstart = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (dstart == i) {
                    i = save;  // not a fraction; leave '/' unconsumed
                } else {
                    Z d(s.substr(dstart, i - dstart));
                    if (d.is_zero()) throw input_error("polynomial: zero denominator");
                    return Poly::constant(nvars, Q(n, d));
                }
            }
            return Poly::constant(nvars, Q(n));
        }
        if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
            size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                    s[i] == '\''))
                ++i;
            std::string name = s.substr(start, i - start);
            for (uint32_t v = 0; v < names.size(); ++v)
                if (names[v] == name) return Poly::variable(v, nvars);
            throw input_error("polynomial: unknown variable '" + name + "'");
        }
        throw input_error(std::string("polynomial: unexpected character '") + s[i] + "'");
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& var_names) {
    PolyParser p(text, var_names);
    Poly r = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size()) throw input_error("polynomial: trailing input");
    return r;
}

}  // namespace sap
