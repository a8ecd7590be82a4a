#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sap/upoly.hpp"

using namespace sap;

namespace {
UPoly U(const std::string& s) { return to_upoly(parse_poly(s, {"X"}), 0); }
}  // namespace

TEST_CASE("dense representation trims and evaluates") {
    CHECK(UPoly({Q(1), Q(0), Q(0)}).degree() == 0);
    CHECK(UPoly().is_zero());
    CHECK(U("X^5 - 3X + 7").eval(Q(2)) == Q(33));
    CHECK(U("X^2 - 2").eval(Q(3, 2)) == Q(1, 4));
    CHECK(U("X^3").derivative() == U("3X^2"));
    CHECK(U("5").derivative().is_zero());
}

TEST_CASE("division with remainder is exact over the rationals") {
    UPoly q, r;
    UPoly::divmod(U("X^5 - 3X + 7"), U("X^2 + 1"), q, r);
    CHECK(q == U("X^3 - X"));
    CHECK(r == U("-2X + 7"));
    CHECK(U("X^5 - 3X + 7") == q * U("X^2 + 1") + r);
    UPoly::divmod(U("X - 1"), U("X^3"), q, r);
    CHECK(q.is_zero());
    CHECK(r == U("X - 1"));
    CHECK_THROWS_AS(UPoly::divmod(U("X"), UPoly(), q, r), internal_error);
}

TEST_CASE("gcd and squarefree part") {
    CHECK(upoly_gcd(U("X^2 - 1"), U("X - 1")) == U("X - 1"));
    CHECK(upoly_gcd(U("X^2 + 1"), U("X^2 - 1")) == U("1"));
    CHECK(upoly_gcd(U("6X"), U("4")) == U("1"));
    CHECK(squarefree_part(U("(X-1)^2 * (X+2)")) == U("X^2 + X - 2"));
    CHECK(squarefree_part(U("X^2 - 2")) == U("X^2 - 2"));
    CHECK(squarefree_part(U("9X^2")) == U("X"));
}

TEST_CASE("bridges to the multivariate ring") {
    Poly p = parse_poly("X^2*Y - Y + 1", {"X", "Y"});
    Poly at = p.substitute(1, Q(2));  // 2X^2 - 1
    UPoly u = to_upoly(at, 0);
    CHECK(u == UPoly({Q(-1), Q(0), Q(2)}));
    CHECK(from_upoly(u, 0, 2) == at);
    CHECK_THROWS_AS(to_upoly(p, 0), internal_error);
}

TEST_CASE("classic chain and variation counts") {
    auto chain = sturm_chain(U("X^3 - 3X + 1"));
    REQUIRE(chain.size() == 4);
    CHECK(chain[0] == U("X^3 - 3X + 1"));
    CHECK(chain[1] == U("X^2 - 1"));
    CHECK(chain[2] == U("2X - 1"));
    CHECK(chain[3] == U("1"));
    CHECK(variations_at_neg_inf(chain) == 3);
    CHECK(variations_at_pos_inf(chain) == 0);
    CHECK(count_roots_in(chain, Q(0), Q(2)) == 2);
    CHECK(count_roots_in(chain, Q(-2), Q(0)) == 1);
    CHECK(sign_variations({+1, -1, 0, +1}) == 2);
    CHECK(sign_variations({0, 0, 0}) == 0);
    CHECK(sign_variations({+1, 0, +1, -1}) == 1);
}

TEST_CASE("real root counting over the whole line") {
    CHECK(count_real_roots(U("X^3 - 3X + 1")) == 3);
    CHECK(count_real_roots(U("X^2 + 1")) == 0);
    CHECK(count_real_roots(U("X^5 - X")) == 3);
    CHECK(count_real_roots(U("(X-1)^2")) == 1);
    CHECK(count_real_roots(U("7")) == 0);
}

TEST_CASE("isolation brackets each root of X^2 - 2 once") {
    auto iso = isolate_real_roots(U("X^2 - 2"));
    CHECK(iso.squarefree == U("X^2 - 2"));
    REQUIRE(iso.roots.size() == 2);
    CHECK(iso.roots[0].lo == Q(-2));
    CHECK(iso.roots[0].hi == Q(0));
    CHECK(iso.roots[1].lo == Q(1));
    CHECK(iso.roots[1].hi == Q(2));
    // Semantics: the intervals bracket -sqrt(2) and sqrt(2).
    Q s2(141421356, 100000000);
    CHECK(iso.roots[0].lo < -s2);
    CHECK(-s2 < iso.roots[0].hi);
    CHECK(iso.roots[1].lo < s2);
    CHECK(s2 < iso.roots[1].hi);
    for (const auto& r : iso.roots)
        CHECK(iso.squarefree.eval(r.lo).sign() * iso.squarefree.eval(r.hi).sign() < 0);
}

TEST_CASE("isolation of a polynomial with no real roots") {
    CHECK(isolate_real_roots(U("X^2 + 1")).roots.empty());
    CHECK(isolate_real_roots(U("3")).roots.empty());
}

TEST_CASE("isolation collapses rational roots to exact points") {
    auto one = isolate_real_roots(U("(X-1)^2"));
    REQUIRE(one.roots.size() == 1);
    CHECK(one.roots[0].exact());
    CHECK(one.roots[0].lo == Q(1));

    auto three = isolate_real_roots(U("(X-1)*(X-2)*(X-3)"));
    REQUIRE(three.roots.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(three.roots[static_cast<size_t>(i)].exact());
        CHECK(three.roots[static_cast<size_t>(i)].lo == Q(i + 1));
    }
}

TEST_CASE("isolation separates three irrational roots") {
    auto iso = isolate_real_roots(U("X^3 - 3X + 1"));
    REQUIRE(iso.roots.size() == 3);
    CHECK(iso.roots[0].lo == Q(-2));
    CHECK(iso.roots[0].hi == Q(0));
    CHECK(iso.roots[1].lo == Q(1, 4));
    CHECK(iso.roots[1].hi == Q(1, 2));
    CHECK(iso.roots[2].lo == Q(1));
    CHECK(iso.roots[2].hi == Q(2));
    // Approximate root locations: -1.8793852, 0.34729636, 1.5320889.
    Q r0(-18793852, 10000000), r1(34729636, 100000000), r2(15320889, 10000000);
    CHECK(iso.roots[0].lo < r0);
    CHECK(r0 < iso.roots[0].hi);
    CHECK(iso.roots[1].lo < r1);
    CHECK(r1 < iso.roots[1].hi);
    CHECK(iso.roots[2].lo < r2);
    CHECK(r2 < iso.roots[2].hi);
    // Closed hulls pairwise disjoint.
    CHECK(iso.roots[0].hi < iso.roots[1].lo);
    CHECK(iso.roots[1].hi < iso.roots[2].lo);
}

TEST_CASE("refinement preserves the bracket and shrinks width") {
    auto iso = isolate_real_roots(U("X^2 - 2"));
    RootInterval r = iso.roots[1];
    refine_root_below(iso.squarefree, r, Q(1, 100));
    CHECK(!r.exact());
    CHECK(r.width() < Q(1, 100));
    CHECK(iso.squarefree.eval(r.lo).sign() * iso.squarefree.eval(r.hi).sign() < 0);
    CHECK(Q(140, 100) < r.mid());
    CHECK(r.mid() < Q(143, 100));
    // Exact roots refine to themselves.
    RootInterval e{Q(5), Q(5)};
    refine_root(U("X - 5"), e);
    CHECK(e.lo == Q(5));
}

TEST_CASE("mixed exact and irrational roots stay disjoint") {
    // X * (X^2 - 2): roots -sqrt(2), 0, sqrt(2).
    auto iso = isolate_real_roots(U("X^3 - 2X"));
    REQUIRE(iso.roots.size() == 3);
    CHECK(iso.roots[0].hi < iso.roots[1].lo);
    CHECK(iso.roots[1].hi < iso.roots[2].lo);
    Q s2(141421356, 100000000);
    CHECK(iso.roots[0].lo < -s2);
    CHECK(-s2 < iso.roots[0].hi);
    bool middle_exact = iso.roots[1].exact() && iso.roots[1].lo == Q(0);
    bool middle_brackets = iso.roots[1].lo < Q(0) && Q(0) < iso.roots[1].hi;
    CHECK((middle_exact || middle_brackets));
    CHECK(iso.roots[2].lo < s2);
    CHECK(s2 < iso.roots[2].hi);
}
