#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sap/numbers.hpp"

using namespace sap;

TEST_CASE("floor and ceil at non-integers and integers") {
    CHECK(floor_q(Q(7, 2)) == 3);
    CHECK(ceil_q(Q(7, 2)) == 4);
    CHECK(floor_q(Q(-7, 2)) == -4);
    CHECK(ceil_q(Q(-7, 2)) == -3);
    CHECK(floor_q(Q(5)) == 5);
    CHECK(ceil_q(Q(5)) == 5);
    CHECK(floor_q(Q(-5)) == -5);
    CHECK(ceil_q(Q(0)) == 0);
}

TEST_CASE("simplest_between prefers integers closest to zero") {
    CHECK(simplest_between(Q(2), Q(7)) == Q(3));
    CHECK(simplest_between(Q(-5), Q(5)) == Q(0));
    CHECK(simplest_between(Q(-7), Q(-2)) == Q(-3));
    CHECK(simplest_between(Q(1, 2), Q(3, 2)) == Q(1));
}

TEST_CASE("simplest_between finds minimal denominators in tight gaps") {
    CHECK(simplest_between(Q(1, 3), Q(1, 2)) == Q(2, 5));
    CHECK(simplest_between(Q(-3), Q(-2)) == Q(-5, 2));
    CHECK(simplest_between(Q(1, 10), Q(2, 10)) == Q(1, 6));
    // Result is always strictly interior.
    Q lo(141, 100), hi(142, 100);
    Q m = simplest_between(lo, hi);
    CHECK(lo < m);
    CHECK(m < hi);
    CHECK_THROWS_AS(simplest_between(Q(1), Q(1)), internal_error);
}

TEST_CASE("rational parsing round-trips and rejects malformed text") {
    CHECK(parse_q("5") == Q(5));
    CHECK(parse_q("-5") == Q(-5));
    CHECK(parse_q("3/6") == Q(1, 2));
    CHECK(parse_q("-4/6") == Q(-2, 3));
    CHECK(format_q(Q(1, 2)) == "1/2");
    CHECK(format_q(Q(-7)) == "-7");
    CHECK(format_q(parse_q("-22/7")) == "-22/7");
    CHECK_THROWS_AS(parse_q(""), input_error);
    CHECK_THROWS_AS(parse_q("abc"), input_error);
    CHECK_THROWS_AS(parse_q("1/0"), input_error);
    CHECK_THROWS_AS(parse_q("5/"), input_error);
}

TEST_CASE("integer powers and binomials") {
    CHECK(pow_z(Z(3), 0) == 1);
    CHECK(pow_z(Z(2), 10) == 1024);
    CHECK(pow_z(Z(-2), 3) == -8);
    CHECK(pow_q(Q(1, 2), 3) == Q(1, 8));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(52, 5) == Z("2598960"));
}

TEST_CASE("rationals stay canonical through arithmetic") {
    Q a(2, 4);
    CHECK(num(a) == 1);
    CHECK(den(a) == 2);
    Q b = a + Q(1, 2);
    CHECK(b == Q(1));
    CHECK(den(b) == 1);
    CHECK(sign(Q(-3, 7)) == -1);
    CHECK(sign(Q(0)) == 0);
}
