#ifndef SAP_NUMBERS_HPP
#define SAP_NUMBERS_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sap {

// Exact arbitrary-precision integers and rationals (GMP backed).
// Rationals are kept canonical by the backend: gcd-reduced, positive
// denominator.
using Z = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                        boost::multiprecision::et_off>;
using Q = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                        boost::multiprecision::et_off>;

// Raised on malformed external input (files, CLI arguments, formulas).
// The CLI maps it to exit code 1 with a machine-readable error object.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a request exceeds the supported desk-scale caps.
// The CLI maps it to exit code 2.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant failures that indicate a bug, never bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline int sign(const Z& z) { return z.sign(); }
inline int sign(const Q& q) { return q.sign(); }

inline Z num(const Q& q) { return numerator(q); }
inline Z den(const Q& q) { return denominator(q); }

// Largest integer <= q.
Z floor_q(const Q& q);
// Smallest integer >= q.
Z ceil_q(const Q& q);

// Simplest rational strictly inside (lo, hi): the unique fraction with
// minimal denominator, ties broken by minimal |numerator|, found by
// Stern-Brocot descent. Requires lo < hi.
Q simplest_between(const Q& lo, const Q& hi);

// Parses "n" or "n/d" with optional leading minus; d > 0 after
// normalization. Throws input_error on malformed text or zero
// denominator.
Q parse_q(const std::string& text);

// Formats as "n" or "n/d" (canonical, d > 1 only when needed).
std::string format_q(const Q& q);

// Power with nonnegative integer exponent.
Z pow_z(const Z& base, unsigned e);
Q pow_q(const Q& base, unsigned e);

// Binomial coefficient C(n, k); 0 when k > n.
Z binomial(unsigned n, unsigned k);

}  // namespace sap

#endif
