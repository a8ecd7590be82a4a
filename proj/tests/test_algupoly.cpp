#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sap/algupoly.hpp"

using namespace sap;

namespace {

const std::vector<std::string> TX = {"T", "X"};

RealAlgebraic sqrt2() {
    UPoly f(std::vector<Q>{-2, 0, 1});
    auto roots = RealAlgebraic::roots_of(f);
    return roots[1];
}

AlgUPoly make(const std::string& text, const RealAlgebraic& base) {
    return AlgUPoly(parse_poly(text, TX), 0, 1, base);
}

}  // namespace

TEST_CASE("specialization degree and signs at sqrt(2)") {
    RealAlgebraic r2 = sqrt2();
    AlgUPoly h = make("X^2 - T^2", r2);  // X^2 - 2
    CHECK(h.degree() == 2);
    CHECK_FALSE(h.is_zero());
    CHECK(h.sign_at(Q(0)) == -1);
    CHECK(h.sign_at(Q(2)) == 1);
    CHECK(h.sign_at(Q(-2)) == 1);
    CHECK(h.count_real_roots() == 2);
    CHECK(h.count_roots_in(Q(0), Q(2)) == 1);
    CHECK(h.count_roots_in(Q(-2), Q(0)) == 1);
    CHECK(h.count_roots_in(Q(2), Q(3)) == 0);

    AlgUPoly d = h.derivative();
    CHECK(d.degree() == 1);
    CHECK(d.sign_at(Q(1)) == 1);
    CHECK(d.sign_at(Q(-1)) == -1);
}

TEST_CASE("degree drops when leading coefficient dies at the base") {
    RealAlgebraic r2 = sqrt2();
    // (T^2 - 2) X^3 + X - 1 loses its cubic term at sqrt(2)
    AlgUPoly h = make("(T^2 - 2)*X^3 + X - 1", r2);
    CHECK(h.degree() == 1);
    CHECK(h.count_real_roots() == 1);
    // and a polynomial that dies entirely
    AlgUPoly z = make("(T^2 - 2)*X + (2 - T^2)", r2);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK_THROWS_AS(z.count_real_roots(), internal_error);
    CHECK_THROWS_AS(z.isolate_roots(), internal_error);
}

TEST_CASE("isolation of X^2 - 2 over the algebraic base") {
    RealAlgebraic r2 = sqrt2();
    AlgUPoly h = make("X^2 - T^2", r2);
    const auto& roots = h.isolate_roots();
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].lo == Q(-2));
    CHECK(roots[0].hi == Q(0));
    CHECK(roots[1].lo == Q(1));
    CHECK(roots[1].hi == Q(2));
    CHECK(h.sign_at(roots[0].lo) * h.sign_at(roots[0].hi) < 0);
    CHECK(h.sign_at(roots[1].lo) * h.sign_at(roots[1].hi) < 0);
}

TEST_CASE("isolation peels rational roots hit by bisection") {
    RealAlgebraic r2 = sqrt2();
    // (X - 1)(X^2 - 2) = X^3 - X^2 - T^2 X + T^2 at the base
    AlgUPoly h = make("X^3 - X^2 - T^2*X + T^2", r2);
    CHECK(h.count_real_roots() == 3);
    const auto& roots = h.isolate_roots();
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].lo == Q(-2));
    CHECK(roots[0].hi == Q(0));
    CHECK(roots[1].exact());
    CHECK(roots[1].lo == Q(1));
    CHECK(roots[2].lo == Q(5, 4));
    CHECK(roots[2].hi == Q(3, 2));
    for (size_t i = 1; i < roots.size(); ++i)
        CHECK(roots[i - 1].hi < roots[i].lo);
}

TEST_CASE("isolation handles repeated factors") {
    RealAlgebraic r2 = sqrt2();
    AlgUPoly h = make("(X^2 - T^2)^2", r2);  // (X^2 - 2)^2
    CHECK(h.count_real_roots() == 2);
    CHECK(h.count_roots_in(Q(1), Q(2)) == 1);
    const auto& roots = h.isolate_roots();
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].lo == Q(-2));
    CHECK(roots[0].hi == Q(0));
    CHECK(roots[1].lo == Q(1));
    CHECK(roots[1].hi == Q(2));
}

TEST_CASE("root depending on the base is bracketed and refinable") {
    RealAlgebraic r2 = sqrt2();
    AlgUPoly h = make("X - T^3", r2);  // root 2 sqrt(2) ~ 2.8284
    CHECK(h.degree() == 1);
    auto roots = h.isolate_roots();
    REQUIRE(roots.size() == 1);
    RootInterval r = roots[0];
    while (!r.exact() && r.width() >= Q(1, 100)) h.refine(r);
    CHECK_FALSE(r.exact());  // 2 sqrt 2 is irrational
    CHECK(h.sign_at(r.lo) == -1);
    CHECK(h.sign_at(r.hi) == 1);
    CHECK(r.lo > Q(28, 10));
    CHECK(r.hi < Q(29, 10));
}

TEST_CASE("gcd at the base extracts the shared root") {
    RealAlgebraic r2 = sqrt2();
    // (X - T)(X - 1) and (X - T)(X + 2) share the root sqrt(2)
    AlgUPoly a = make("(X - T)*(X - 1)", r2);
    AlgUPoly b = make("(X - T)*(X + 2)", r2);
    AlgUPoly g = AlgUPoly::gcd_at_base(a, b);
    CHECK(g.degree() == 1);
    CHECK(g.count_roots_in(Q(1), Q(2)) == 1);
    CHECK(g.count_real_roots() == 1);

    AlgUPoly c = make("X - 5", r2);
    CHECK(AlgUPoly::gcd_at_base(a, c).degree() == 0);
    CHECK(AlgUPoly::gcd_at_base(a, AlgUPoly({}, r2)).degree() == 2);
}

TEST_CASE("rational base degenerates to plain arithmetic") {
    RealAlgebraic three(Q(3));
    AlgUPoly h = make("X^2 - T", three);  // X^2 - 3
    CHECK(h.degree() == 2);
    CHECK(h.count_real_roots() == 2);
    const auto& roots = h.isolate_roots();
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].lo == Q(-2));
    CHECK(roots[0].hi == Q(0));
    CHECK(roots[1].lo == Q(1));
    CHECK(roots[1].hi == Q(2));
}

TEST_CASE("direct coefficient construction") {
    RealAlgebraic r2 = sqrt2();
    // coefficients given as polynomials in the base: X^2 - T reduced
    std::vector<UPoly> cs = {UPoly(std::vector<Q>{0, -1}), UPoly(),
                             UPoly(std::vector<Q>{1})};
    AlgUPoly h(cs, r2);  // X^2 - sqrt(2), roots at +-2^(1/4)
    CHECK(h.degree() == 2);
    CHECK(h.count_real_roots() == 2);
    // 2^(3/4) ~ 1.6818 is not a root; sqrt(sqrt(2)) ~ 1.1892 is
    CHECK(h.sign_at(Q(1)) == -1);       // 1 - sqrt2 < 0
    CHECK(h.sign_at(Q(119, 100)) == 1); // just above the positive root
    CHECK(h.sign_at(Q(118, 100)) == -1);
}
