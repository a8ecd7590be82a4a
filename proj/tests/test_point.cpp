#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sap/point.hpp"

using namespace sap;

namespace {

const std::vector<std::string> X1 = {"X1"};
const std::vector<std::string> X12 = {"X1", "X2"};
const std::vector<std::string> X123 = {"X1", "X2", "X3"};

Poly pp(const std::string& text, const std::vector<std::string>& names) {
    return parse_poly(text, names);
}

}  // namespace

TEST_CASE("rational points evaluate exactly") {
    APoint p = APoint::from_rationals({Q(3, 5), Q(4, 5)});
    CHECK(p.dim() == 2);
    CHECK(p.is_rational());
    CHECK(p.sign_at(pp("X1^2 + X2^2 - 1", X12)) == 0);
    CHECK(p.sign_at(pp("X1 + X2", X12)) == 1);
    CHECK(p.sign_at(pp("X1 - X2", X12)) == -1);
    auto c = p.rational_coords();
    CHECK(c[0] == Q(3, 5));
    CHECK(c[1] == Q(4, 5));
    auto b = p.coordinate_bounds(1, Q(1, 100));
    CHECK(b.first == Q(4, 5));
    CHECK(b.second == Q(4, 5));
}

TEST_CASE("origin point extends along a univariate fiber") {
    APoint o;  // R^0
    CHECK(o.dim() == 0);
    Poly H = pp("X1^2 - 2", X1);
    AlgUPoly h = o.fiber(H);
    CHECK(h.degree() == 2);
    auto roots = h.isolate_roots();
    REQUIRE(roots.size() == 2);

    APoint p = o.extended(H, roots[1]);  // sqrt(2)
    CHECK(p.dim() == 1);
    CHECK_FALSE(p.is_rational());
    CHECK(p.sign_at(pp("X1^2 - 2", X1)) == 0);
    CHECK(p.sign_at(pp("X1 - 1", X1)) == 1);
    CHECK(p.sign_at(pp("2*X1 - 3", X1)) == -1);  // sqrt2 < 1.5

    APoint m = o.extended(H, roots[0]);  // -sqrt(2)
    CHECK(m.sign_at(pp("X1", X1)) == -1);
    CHECK(m.sign_at(pp("X1^2 - 2", X1)) == 0);
}

TEST_CASE("rational coordinate extension") {
    APoint o;
    Poly H = pp("X1^2 - 2", X1);
    APoint p = o.extended(H, o.fiber(H).isolate_roots()[1]).extended(Q(1, 2));
    CHECK(p.dim() == 2);
    CHECK(p.sign_at(pp("X2 - X1", X12)) == -1);
    CHECK(p.sign_at(pp("4*X2^2 - 1", X12)) == 0);
    CHECK(p.sign_at(pp("X1*X2 - 1", X12)) == -1);   // sqrt2/2 < 1
    CHECK(p.sign_at(pp("2*X1*X2 - 1", X12)) == 1);  // sqrt2 > 1
}

TEST_CASE("primitive element combines two irrational coordinates") {
    APoint o;
    Poly H1 = pp("X1^2 - 2", X1);
    APoint p1 = o.extended(H1, o.fiber(H1).isolate_roots()[1]);

    Poly H2 = pp("X2^2 - 3", X12);
    AlgUPoly f2 = p1.fiber(H2);
    auto roots = f2.isolate_roots();
    REQUIRE(roots.size() == 2);
    APoint p = p1.extended(H2, roots[1]);  // (sqrt2, sqrt3)

    CHECK(p.dim() == 2);
    CHECK(p.sign_at(pp("X1^2 - 2", X12)) == 0);
    CHECK(p.sign_at(pp("X2^2 - 3", X12)) == 0);
    CHECK(p.sign_at(pp("X2 - X1", X12)) == 1);
    CHECK(p.sign_at(pp("X1*X2 - 2", X12)) == 1);       // sqrt6 > 2
    CHECK(p.sign_at(pp("2*X1*X2 - 5", X12)) == -1);    // 2 sqrt6 < 5
    CHECK(p.sign_at(pp("X1^2*X2^2 - 6", X12)) == 0);   // product is sqrt6
    CHECK(p.sign_at(pp("X1 + X2 - 4", X12)) == -1);

    auto b0 = p.coordinate_bounds(0, Q(1, 1000));
    CHECK(b0.second - b0.first < Q(1, 1000));
    CHECK(b0.first > 0);
    CHECK(b0.first * b0.first < 2);
    CHECK(b0.second * b0.second > 2);
    auto b1 = p.coordinate_bounds(1, Q(1, 1000));
    CHECK(b1.first * b1.first < 3);
    CHECK(b1.second * b1.second > 3);
}

TEST_CASE("triple tower keeps exactness") {
    APoint o;
    Poly H1 = pp("X1^2 - 2", X1);
    APoint p1 = o.extended(H1, o.fiber(H1).isolate_roots()[1]);
    Poly H2 = pp("X2^2 - 3", X12);
    APoint p2 = p1.extended(H2, p1.fiber(H2).isolate_roots()[1]);
    // third coordinate: the root of x1*x2*X - 1, i.e. 1/sqrt(6)
    Poly H3 = pp("X1*X2*X3 - 1", X123);
    AlgUPoly f3 = p2.fiber(H3);
    CHECK(f3.degree() == 1);
    auto roots = f3.isolate_roots();
    REQUIRE(roots.size() == 1);
    APoint p = p2.extended(H3, roots[0]);

    CHECK(p.dim() == 3);
    CHECK(p.sign_at(pp("6*X3^2 - 1", X123)) == 0);
    CHECK(p.sign_at(pp("X1*X2*X3 - 1", X123)) == 0);
    CHECK(p.sign_at(pp("5*X3 - 2", X123)) == 1);   // 1/sqrt6 ~ .408 > .4
    CHECK(p.sign_at(pp("2*X3 - 1", X123)) == -1);  // .408 < .5
}

TEST_CASE("fiber root that happens to be rational stays exact") {
    APoint o;
    Poly H1 = pp("X1^2 - 2", X1);
    APoint p1 = o.extended(H1, o.fiber(H1).isolate_roots()[1]);
    // x1 * X - x1 has the root 1, reached through the algebraic path
    Poly H = pp("X1*X2 - X1", X12);
    AlgUPoly h = p1.fiber(H);
    auto roots = h.isolate_roots();
    REQUIRE(roots.size() == 1);
    APoint p = p1.extended(H, roots[0]);
    CHECK(p.sign_at(pp("X2 - 1", X12)) == 0);
    CHECK(p.sign_at(pp("X1^2 - 2", X12)) == 0);
    CHECK(p.sign_at(pp("X2 - X1", X12)) == -1);
}

TEST_CASE("rational base with an unnamed rational root") {
    APoint p0 = APoint::from_rationals({Q(5)});
    Poly H = pp("2*X2 - X1", X12);  // root 5/2
    AlgUPoly h = p0.fiber(H);
    auto roots = h.isolate_roots();
    REQUIRE(roots.size() == 1);
    APoint p = p0.extended(H, roots[0]);
    CHECK(p.dim() == 2);
    CHECK(p.sign_at(pp("2*X2 - X1", X12)) == 0);
    CHECK(p.sign_at(pp("X2 - 2", X12)) == 1);
    CHECK(p.sign_at(pp("X2 - 3", X12)) == -1);
}

TEST_CASE("constructor validation and normalization") {
    // denominator vanishing at the base is rejected
    auto r2 = RealAlgebraic::roots_of(UPoly(std::vector<Q>{-2, 0, 1}));
    CHECK_THROWS_AS(
        APoint(r2[1], UPoly(std::vector<Q>{-2, 0, 1}), {}),
        input_error);

    // redundant annihilator factors shared with the denominator shrink
    UPoly wide(std::vector<Q>{6, -2, -3, 1});  // (x^2 - 2)(x - 3)
    RealAlgebraic loose(wide, RootInterval{Q(1), Q(2)});
    // coordinate x(x-3)/(x-3) = x
    APoint p(loose, UPoly(std::vector<Q>{-3, 1}),
             {UPoly(std::vector<Q>{0, -3, 1})});
    CHECK(p.base().annihilator().degree() == 2);
    CHECK(p.sign_at(pp("X1^2 - 2", X1)) == 0);

    // arity mismatches are internal errors
    APoint q = APoint::from_rationals({Q(1)});
    CHECK_THROWS_AS(q.sign_at(pp("X1 + X2", X12)), internal_error);
    CHECK_THROWS_AS(q.fiber(pp("X1", X1)), internal_error);
}

static APoint root2_root3() {
    APoint o;
    Poly H1 = pp("X1^2 - 2", X1);
    APoint p1 = o.extended(H1, o.fiber(H1).isolate_roots()[1]);
    Poly H2 = pp("X2^2 - 3", X12);
    return p1.extended(H2, p1.fiber(H2).isolate_roots()[1]);
}

TEST_CASE("coordinate access helpers") {
    APoint p = root2_root3();

    CHECK(p.compare_coord(0, Q(1)) == 1);
    CHECK(p.compare_coord(0, Q(3, 2)) == -1);
    CHECK(p.compare_coord(1, Q(2)) == -1);

    RealAlgebraic c1 = p.coordinate(1);
    CHECK(c1.sign_of(UPoly(std::vector<Q>{-3, 0, 1})) == 0);
    CHECK(c1.sign_of(UPoly(std::vector<Q>{-1, 1})) == 1);

    APoint head = p.prefix(1);
    CHECK(head.dim() == 1);
    CHECK(head.sign_at(pp("X1^2 - 2", X1)) == 0);
    CHECK(p.prefix(0).dim() == 0);

    // x3 = x1 + x2 - 1
    APoint e = p.extended_linear({Q(1), Q(1)}, Q(-1));
    CHECK(e.sign_at(pp("X3 - X1 - X2 + 1", X123)) == 0);
    CHECK(e.sign_at(pp("X3 - 2", X123)) == 1);   // sqrt2+sqrt3-1 = 2.146...
    CHECK(e.sign_at(pp("X3 - 9/4", X123)) == -1);

    // coordinate swap
    APoint s = p.linear_image({{Q(0), Q(1)}, {Q(1), Q(0)}});
    CHECK(s.sign_at(pp("X1^2 - 3", X12)) == 0);
    CHECK(s.sign_at(pp("X2^2 - 2", X12)) == 0);
}

TEST_CASE("transport form round-trips a tower point") {
    APoint p = root2_root3();
    RurPoint u = to_rur(p);
    CHECK(u.f.degree() == 4);
    CHECK(u.sigma.signs.size() == 5);
    CHECK(u.sigma.signs[0] == 0);

    APoint back = from_rur(u);
    CHECK(back.sign_at(pp("X1^2 - 2", X12)) == 0);
    CHECK(back.sign_at(pp("X2^2 - 3", X12)) == 0);
    CHECK(back.sign_at(pp("X2 - X1", X12)) == 1);

    RurPoint u2 = to_rur(back);
    CHECK(u2.f == u.f);
    CHECK(u2.g0 == u.g0);
    CHECK(u2.g == u.g);
    CHECK(u2.sigma.signs == u.sigma.signs);
}

TEST_CASE("transport form sign queries") {
    UPoly t2m2(std::vector<Q>{-2, 0, 1});
    UPoly one = UPoly::constant(Q(1));
    UPoly t(std::vector<Q>{0, 1});

    // positive root of T^2 - 2, coordinate T: the point (sqrt2)
    RurPoint a{t2m2, one, {t}, ThomEncoding{t2m2, {0, 1, 1}}};
    CHECK(rur_sign(a, pp("X1 - 1", X1)) == 1);

    // root of T - 1, coordinate 2T: the point (2)
    UPoly tm1(std::vector<Q>{-1, 1});
    RurPoint b{tm1, one, {UPoly(std::vector<Q>{0, 2})}, ThomEncoding{tm1, {0, 1}}};
    CHECK(rur_sign(b, pp("X1 - 2", X1)) == 0);

    // negative root of T^2 - 2
    RurPoint c{t2m2, one, {t}, ThomEncoding{t2m2, {0, -1, 1}}};
    CHECK(rur_sign(c, pp("X1", X1)) == -1);
}

TEST_CASE("transport form validation") {
    UPoly t2m2(std::vector<Q>{-2, 0, 1});
    UPoly one = UPoly::constant(Q(1));
    UPoly t(std::vector<Q>{0, 1});

    // wrong sign count
    RurPoint bad1{t2m2, one, {t}, ThomEncoding{t2m2, {0, 1}}};
    CHECK_THROWS_AS(from_rur(bad1), input_error);
    // leading sign must be 0
    RurPoint bad2{t2m2, one, {t}, ThomEncoding{t2m2, {1, 1, 1}}};
    CHECK_THROWS_AS(from_rur(bad2), input_error);
    // shape is fine but no real root has this encoding
    RurPoint bad3{t2m2, one, {t}, ThomEncoding{t2m2, {0, 1, -1}}};
    CHECK_THROWS_AS(from_rur(bad3), input_error);
    // encoding refers to a different polynomial
    RurPoint bad4{t2m2, one, {t}, ThomEncoding{t, {0, 1, 1}}};
    CHECK_THROWS_AS(from_rur(bad4), input_error);
    // constant annihilator
    RurPoint bad5{one, one, {t}, ThomEncoding{one, {0}}};
    CHECK_THROWS_AS(from_rur(bad5), input_error);
    // denominator vanishing at the selected root
    RurPoint bad6{t2m2, t2m2, {t}, ThomEncoding{t2m2, {0, 1, 1}}};
    CHECK_THROWS_AS(from_rur(bad6), input_error);
}
