#include "sap/numbers.hpp"

namespace sap {

Z floor_q(const Q& q) {
    Z n = num(q), d = den(q);
    Z quo = n / d;  // truncates toward zero
    if (n.sign() < 0 && quo * d != n) --quo;
    return quo;
}

Z ceil_q(const Q& q) { return -floor_q(-q); }

Q simplest_between(const Q& lo, const Q& hi) {
    if (!(lo < hi)) throw internal_error("simplest_between: empty interval");
    Z a = floor_q(lo) + 1;  // smallest integer strictly above lo
    if (Q(a) < hi) {
        // An integer fits; take the one closest to zero.
        Z b = ceil_q(hi) - 1;  // largest integer strictly below hi
        Z pick(0);
        if (pick < a) pick = a;
        if (pick > b) pick = b;
        return Q(pick);
    }
    // The interval lies within (f, f+1]; recurse on reciprocals of the
    // fractional parts (continued-fraction descent, terminates for
    // rational endpoints).
    Z f = floor_q(lo);
    Q fa = lo - Q(f), fb = hi - Q(f);
    if (fa.is_zero()) {
        Z k = floor_q(Q(1) / fb) + 1;  // 1/k < fb
        return Q(f) + Q(1, k);
    }
    Q inner = simplest_between(Q(1) / fb, Q(1) / fa);
    return Q(f) + Q(1) / inner;
}

Q parse_q(const std::string& text) {
    if (text.empty()) throw input_error("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Q(Z(text));
        }
        Z n(text.substr(0, slash));
        Z d(text.substr(slash + 1));
        if (d.is_zero()) throw input_error("zero denominator in rational literal");
        return Q(n, d);
    } catch (const input_error&) {
        throw;
    } catch (const std::runtime_error&) {
        throw input_error("malformed rational literal '" + text + "'");
    }
}

std::string format_q(const Q& q) {
    Z d = den(q);
    if (d == 1) return num(q).str();
    return num(q).str() + "/" + d.str();
}

Z pow_z(const Z& base, unsigned e) {
    Z r(1), b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

Q pow_q(const Q& base, unsigned e) {
    Q r(1), b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

Z binomial(unsigned n, unsigned k) {
    if (k > n) return Z(0);
    if (k > n - k) k = n - k;
    Z r(1);
    for (unsigned i = 1; i <= k; ++i) {
        r *= Z(n - k + i);
        r /= Z(i);
    }
    return r;
}

}  // namespace sap
