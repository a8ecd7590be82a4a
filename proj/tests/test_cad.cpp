#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sap/cad.hpp"

using namespace sap;

namespace {
const std::vector<std::string> YX{"Y", "X"};
Poly pp(const std::string& text, const std::vector<std::string>& names) {
    return parse_poly(text, names);
}
}  // namespace

TEST_CASE("projection of the circle yields the critical line heights") {
    std::vector<Poly> fam{pp("X^2 + Y^2 - 1", YX)};
    std::vector<Poly> proj = coprime_basis(project(fam, 1));
    REQUIRE(proj.size() == 1);
    CHECK(proj[0] == parse_poly("Y^2 - 1", {"Y"}));
}

TEST_CASE("projection keeps polynomials free of the last variable") {
    // a graph and a vertical-independent constraint
    std::vector<Poly> fam{pp("X - Y", YX), pp("Y - 2", YX)};
    std::vector<Poly> proj = coprime_basis(project(fam, 1));
    // X - Y has constant coefficients in X except the linear one; Y - 2
    // passes through; the pair resultant contributes Y - 2 again.
    bool has_y2 = false;
    for (const Poly& p : proj) has_y2 = has_y2 || p == parse_poly("Y - 2", {"Y"});
    CHECK(has_y2);
}

TEST_CASE("coprime basis splits shared factors") {
    // (x-1)x and (x-1)(x+1) share the factor (x-1)
    std::vector<Poly> in{parse_poly("X^2 - X", {"X"}),
                         parse_poly("X^2 - 1", {"X"})};
    std::vector<Poly> b = coprime_basis(in);
    REQUIRE(b.size() == 3);
    std::set<std::string> names;
    for (const Poly& p : b) names.insert(p.to_string({"X"}));
    CHECK(names.count("X") == 1);
    CHECK(names.count("X - 1") == 1);
    CHECK(names.count("X + 1") == 1);

    // squares collapse and duplicates merge
    std::vector<Poly> b2 =
        coprime_basis({parse_poly("X^2 - 2*X + 1", {"X"}), parse_poly("X - 1", {"X"})});
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == parse_poly("X - 1", {"X"}));
}

TEST_CASE("line decomposition with two roots has five cells") {
    Decomposition d = Decomposition::build({parse_poly("X^2 - X", {"X"})}, 1);
    CHECK(d.tops().size() == 5);
    CHECK(d.well_based());
    // sections at 0 and 1
    const Cell& s0 = d.cell(d.tops()[1]);
    const Cell& s1 = d.cell(d.tops()[3]);
    CHECK(s0.is_section(0));
    CHECK(s1.is_section(0));
    CHECK(s0.sample.rational_coords() == std::vector<Q>{Q(0)});
    CHECK(s1.sample.rational_coords() == std::vector<Q>{Q(1)});
    CHECK(d.cell(d.tops()[0]).dim() == 0 + 1);
    CHECK(s0.dim() == 0);
}

TEST_CASE("circle decomposition has thirteen cells in five stacks") {
    Decomposition d = Decomposition::build({pp("X^2 + Y^2 - 1", YX)}, 2);
    CHECK(d.well_based());
    REQUIRE(d.tops().size() == 13);

    // stack widths over the five base cells
    std::vector<int> widths;
    int cur_parent = -1;
    for (int id : d.tops()) {
        const Cell& c = d.cell(id);
        if (c.parent != cur_parent) {
            widths.push_back(0);
            cur_parent = c.parent;
        }
        ++widths.back();
    }
    CHECK(widths == std::vector<int>{1, 3, 5, 3, 1});

    // sign census of the input polynomial over the cells
    int neg = 0, zero = 0, pos = 0;
    for (int id : d.tops()) {
        switch (d.cell(id).signs.at(0)) {
            case -1: ++neg; break;
            case 0: ++zero; break;
            default: ++pos; break;
        }
    }
    CHECK(neg == 1);   // open disk
    CHECK(zero == 4);  // two arcs and two tangent points
    CHECK(pos == 8);
}

TEST_CASE("coordinate axes give nine sign cells") {
    std::vector<Poly> fam{Poly::variable(0, 2), Poly::variable(1, 2)};
    Decomposition d = Decomposition::build(fam, 2);
    CHECK(d.tops().size() == 9);
    // every sign pair of (v0, v1) occurs exactly once
    std::set<std::pair<int, int>> seen;
    for (int id : d.tops())
        seen.insert({d.cell(id).signs[0], d.cell(id).signs[1]});
    CHECK(seen.size() == 9);
}

TEST_CASE("locate finds the cell realizing each point's signs") {
    Poly circle = pp("X^2 + Y^2 - 1", YX);
    Decomposition d = Decomposition::build({circle}, 2);

    auto check_point = [&](const APoint& p) {
        const int id = d.locate(p);
        const Cell& c = d.cell(id);
        CHECK(c.signs[0] == p.sign_at(circle));
        return id;
    };

    const int inside = check_point(APoint::from_rationals({Q(0), Q(0)}));
    CHECK(d.cell(inside).signs[0] == -1);
    const int boundary = check_point(APoint::from_rationals({Q(3, 5), Q(4, 5)}));
    CHECK(d.cell(boundary).signs[0] == 0);
    const int outside = check_point(APoint::from_rationals({Q(2), Q(2)}));
    CHECK(d.cell(outside).signs[0] == 1);
    CHECK(inside != boundary);
    CHECK(boundary != outside);

    // a deterministic sweep of rational probes: located cell always
    // carries the point's own sign vector
    for (int i = -6; i <= 6; ++i) {
        for (int j = -6; j <= 6; ++j) {
            APoint p = APoint::from_rationals({Q(i, 4), Q(j, 4)});
            check_point(p);
        }
    }
}

TEST_CASE("locate handles algebraic points on sections") {
    Poly circle = pp("X^2 + Y^2 - 1", YX);
    Decomposition d = Decomposition::build({circle}, 2);

    // the point (1/sqrt2, 1/sqrt2) on the upper-right arc
    APoint o;
    Poly half = parse_poly("2*Y^2 - 1", {"Y"});
    auto roots = o.fiber(half).isolate_roots();
    REQUIRE(roots.size() == 2);
    APoint base = o.extended(half, roots[1]);
    auto fr = base.fiber(circle).isolate_roots();
    REQUIRE(fr.size() == 2);
    APoint p = base.extended(circle, fr[1]);

    const int id = d.locate(p);
    const Cell& c = d.cell(id);
    CHECK(c.signs[0] == 0);
    CHECK(c.is_section(1));
    CHECK(!c.is_section(0));  // over the open middle base sector

    // tangent point (0, 1) lands on a section over a section
    const int top = d.locate(APoint::from_rationals({Q(1), Q(0)}));
    CHECK(d.cell(top).is_section(0));
    CHECK(d.cell(top).is_section(1));
    CHECK(top != id);
}

TEST_CASE("decomposition over an algebraic ground point") {
    // fiber family x2^2 - x1 over the ground point x1 = sqrt2
    APoint o;
    Poly h = parse_poly("X1^2 - 2", {"X1"});
    APoint ground = o.extended(h, o.fiber(h).isolate_roots()[1]);
    Poly fam = parse_poly("X2^2 - X1", {"X1", "X2"});

    Decomposition d = Decomposition::build({fam}, 1, ground);
    CHECK(d.well_based());
    REQUIRE(d.tops().size() == 5);
    CHECK(d.cell(d.tops()[2]).signs[0] == -1);
    CHECK(d.cell(d.tops()[1]).signs[0] == 0);
    CHECK(d.cell(d.tops()[0]).signs[0] == 1);

    // locate the ground extension x2 = 0 into the middle sector
    const int mid = d.locate(ground.extended(Q(0)));
    CHECK(mid == d.tops()[2]);
}

TEST_CASE("vanishing fiber is detected") {
    // Y*X vanishes identically on the line Y = 0
    Decomposition d = Decomposition::build({pp("Y*X", YX)}, 2);
    CHECK(!d.well_based());
    CHECK(d.tops().size() == 7);  // stacks 3,1,3
}

TEST_CASE("empty family still decomposes into one cell per level") {
    Decomposition d = Decomposition::build({}, 2);
    CHECK(d.tops().size() == 1);
    CHECK(d.cell(d.tops()[0]).sample.rational_coords() ==
          std::vector<Q>{Q(0), Q(0)});
    CHECK(d.well_based());
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(Decomposition::build({Poly(2)}, 2), input_error);
    CHECK_THROWS_AS(Decomposition::build({parse_poly("X", {"X"})}, 2),
                    input_error);
}

TEST_CASE("circle partition has three components") {
    Decomposition d = cc_partition({pp("X^2 + Y^2 - 1", YX)}, 2);
    REQUIRE(d.tops().size() == 13);
    CHECK(component_count(d) == 3);

    const int outside = d.locate(APoint::from_rationals({Q(-2), Q(0)}));
    const int on = d.locate(APoint::from_rationals({Q(-1), Q(0)}));
    const int inside = d.locate(APoint::from_rationals({Q(0), Q(0)}));
    CHECK(d.cell(outside).component == 0);
    CHECK(d.cell(on).component == 1);
    CHECK(d.cell(inside).component == 2);

    // the same labels appear at other probes of the same component
    CHECK(d.cell(d.locate(APoint::from_rationals({Q(0), Q(2)}))).component == 0);
    CHECK(d.cell(d.locate(APoint::from_rationals({Q(0), Q(1)}))).component == 1);
    CHECK(d.cell(d.locate(APoint::from_rationals({Q(1, 2), Q(0)}))).component ==
          2);
}

TEST_CASE("circle incidences carry the closure structure") {
    Decomposition d = cc_partition({pp("X^2 + Y^2 - 1", YX)}, 2);
    const auto& inc = d.incidences();

    const int inside = d.locate(APoint::from_rationals({Q(0), Q(0)}));
    const int south = d.locate(APoint::from_rationals({Q(-1), Q(0)}));
    const int north = d.locate(APoint::from_rationals({Q(1), Q(0)}));
    const int west = d.locate(APoint::from_rationals({Q(0), Q(-1)}));
    const int east = d.locate(APoint::from_rationals({Q(0), Q(1)}));

    // the interior disk is bounded exactly by the four circle cells
    std::set<int> disk_boundary;
    for (const auto& pr : inc)
        if (pr.second == inside) disk_boundary.insert(pr.first);
    CHECK(disk_boundary == std::set<int>{south, north, west, east});

    // each open arc ends at the two poles
    std::set<int> west_ends, east_ends;
    for (const auto& pr : inc) {
        if (pr.second == west) west_ends.insert(pr.first);
        if (pr.second == east) east_ends.insert(pr.first);
    }
    CHECK(west_ends == std::set<int>{south, north});
    CHECK(east_ends == std::set<int>{south, north});

    // boundary cells always have strictly smaller dimension
    for (const auto& pr : inc) {
        const Cell& a = d.cell(pr.first);
        const Cell& b = d.cell(pr.second);
        CHECK(a.index.size() == b.index.size());
        CHECK(a.dim() < b.dim());
    }
}

TEST_CASE("coordinate axes split the plane into nine components") {
    Decomposition d = cc_partition({pp("Y", YX), pp("X", YX)}, 2);
    REQUIRE(d.tops().size() == 9);
    CHECK(component_count(d) == 9);
    // no two cells share a sign vector, so labels enumerate the stacks
    std::set<int> labels;
    for (int id : d.tops()) labels.insert(d.cell(id).component);
    CHECK(labels.size() == 9);
    CHECK(*labels.begin() == 0);
    CHECK(*labels.rbegin() == 8);
}

TEST_CASE("one-variable partition uses the interleaving only") {
    Decomposition d = cc_partition({parse_poly("X^2 - X", {"X"})}, 1);
    REQUIRE(d.tops().size() == 5);
    CHECK(component_count(d) == 5);
    for (size_t i = 0; i < 5; ++i)
        CHECK(d.cell(d.tops()[i]).component == static_cast<int>(i));
    // sections are incident to both neighbouring sectors
    const auto& inc = d.incidences();
    std::set<std::pair<int, int>> want;
    const auto& t = d.tops();
    want.insert({t[1], t[0]});
    want.insert({t[1], t[2]});
    want.insert({t[3], t[2]});
    want.insert({t[3], t[4]});
    CHECK(std::set<std::pair<int, int>>(inc.begin(), inc.end()) == want);
}

TEST_CASE("sphere partition has three components") {
    std::vector<std::string> abc{"A", "B", "C"};
    Decomposition d = cc_partition({pp("A^2 + B^2 + C^2 - 1", abc)}, 3);
    REQUIRE(d.tops().size() == 25);
    CHECK(component_count(d) == 3);
    const int outside =
        d.locate(APoint::from_rationals({Q(-2), Q(0), Q(0)}));
    const int on = d.locate(APoint::from_rationals({Q(-1), Q(0), Q(0)}));
    const int inside = d.locate(APoint::from_rationals({Q(0), Q(0), Q(0)}));
    CHECK(d.cell(outside).component == 0);
    CHECK(d.cell(on).component == 1);
    CHECK(d.cell(inside).component == 2);
    CHECK(d.cell(d.locate(APoint::from_rationals({Q(0), Q(0), Q(2)})))
              .component == 0);
    CHECK(d.cell(d.locate(APoint::from_rationals({Q(0), Q(0), Q(1)})))
              .component == 1);
    CHECK(d.cell(d.locate(APoint::from_rationals({Q(0), Q(1, 2), Q(0)})))
              .component == 2);
}

TEST_CASE("adjacency guards") {
    // not well-based in two variables
    Decomposition bad = Decomposition::build({pp("Y*X", YX)}, 2);
    CHECK_THROWS_AS(bad.incidences(), cap_error);

    // more than three variables is out of scope
    std::vector<std::string> wxyz{"W", "X", "Y", "Z"};
    Decomposition wide =
        Decomposition::build({parse_poly("W + X + Y + Z", wxyz)}, 4);
    CHECK_THROWS_AS(wide.incidences(), cap_error);
}
