#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "sap/posetmod.hpp"

using namespace sap;

namespace {

const Field GF2 = make_field(2);
const Field GF3 = make_field(3);
const Field GF5 = make_field(5);
const Field QQ = make_field(0);

// Chain 0 <= 1 with one-dimensional spaces and the given 1x1 map.
FinitePosetModule chain_module(const Q& entry, const Field& f) {
    FinitePosetModule m;
    m.poset = FinitePoset(2, {{0, 1}});
    m.field = f;
    m.degrees = 1;
    m.dims = {{1}, {1}};
    m.maps[{0, 1}] = {Mat{{entry}}};
    return m;
}

// Chain on n elements whose relation lists consecutive pairs along the
// given linear order, all spaces one-dimensional, all maps identity.
FinitePosetModule chain_along(const std::vector<int>& order, const Field& f) {
    const size_t n = order.size();
    std::vector<std::pair<int, int>> rel;
    for (size_t i = 0; i + 1 < n; ++i) rel.emplace_back(order[i], order[i + 1]);
    FinitePosetModule m;
    m.poset = FinitePoset(n, rel);
    m.field = f;
    m.degrees = 1;
    m.dims.assign(n, {1});
    for (const auto& [a, b] : m.poset.comparable_pairs())
        m.maps[{a, b}] = {Mat{{Q(1)}}};
    return m;
}

// Checks the returned witness actually commutes with both modules'
// structure maps and is invertible everywhere.
void check_witness(const FinitePosetModule& m1, const FinitePosetModule& m2,
                   const EquivResult& r) {
    REQUIRE(r.value == Tri::True);
    REQUIRE(r.witness.size() == m1.poset.size());
    const Field& F = m1.field;
    for (size_t e = 0; e < m1.poset.size(); ++e)
        for (size_t d = 0; d < m1.degrees; ++d) {
            CHECK(r.witness[e][d].size() == m1.dims[e][d]);
            if (m1.dims[e][d] > 0)
                CHECK(mat_inverse(F, r.witness[e][d]).has_value());
        }
    for (const auto& [a, b] : m1.poset.comparable_pairs())
        for (size_t d = 0; d < m1.degrees; ++d) {
            const Mat lhs = mat_mul(F, r.witness[b][d], m1.map_at(a, b, d));
            const Mat rhs = mat_mul(F, m2.map_at(a, b, d), r.witness[a][d]);
            REQUIRE(lhs.size() == rhs.size());
            for (size_t j = 0; j < lhs.size(); ++j) {
                REQUIRE(lhs[j].size() == rhs[j].size());
                for (size_t i = 0; i < lhs[j].size(); ++i)
                    CHECK(F.is_zero(F.sub(lhs[j][i], rhs[j][i])));
            }
        }
}

// Partition a family of modules into strong-equivalence classes.
size_t strong_class_count(const std::vector<FinitePosetModule>& mods) {
    std::vector<int> cls(mods.size(), -1);
    int next = 0;
    for (size_t i = 0; i < mods.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = next++;
        for (size_t j = i + 1; j < mods.size(); ++j) {
            if (cls[j] >= 0) continue;
            const EquivResult r = strong_equivalent(mods[i], mods[j]);
            REQUIRE(r.value != Tri::Indeterminate);
            if (r.value == Tri::True) cls[j] = cls[i];
        }
    }
    return static_cast<size_t>(next);
}

}  // namespace

TEST_CASE("posets close up and reject cycles") {
    const FinitePoset p(4, {{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));
    CHECK(p.leq(0, 0));
    CHECK_FALSE(p.leq(2, 0));
    CHECK_FALSE(p.leq(0, 3));
    CHECK(p.comparable_pairs() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    const auto order = p.topological_order();
    REQUIRE(order.size() == 4);
    std::vector<size_t> pos(4);
    for (size_t i = 0; i < 4; ++i) pos[order[i]] = i;
    for (const auto& [a, b] : p.comparable_pairs()) CHECK(pos[a] < pos[b]);

    CHECK_THROWS_AS(FinitePoset(3, {{0, 1}, {1, 2}, {2, 0}}), input_error);
    CHECK_THROWS_AS(FinitePoset(2, {{0, 5}}), input_error);
    CHECK(FinitePoset(2, {{0, 1}}) == FinitePoset(2, {{0, 1}, {0, 0}}));
    CHECK(FinitePoset(2, {{0, 1}}) != FinitePoset(2, {{1, 0}}));
}

TEST_CASE("module validation and structure-map access") {
    FinitePosetModule m = chain_module(Q(1), GF3);
    m.validate();
    CHECK(m.functorial());
    CHECK(m.map_at(0, 0, 0) == identity_mat(1));
    CHECK(m.map_at(0, 1, 0) == Mat{{Q(1)}});
    CHECK_THROWS_AS(m.map_at(1, 0, 0), input_error);
    CHECK_THROWS_AS(m.map_at(0, 1, 3), input_error);

    FinitePosetModule bad = m;
    bad.maps[{0, 1}] = {Mat{{Q(1), Q(2)}}};
    CHECK_THROWS_AS(bad.validate(), input_error);
    bad = m;
    bad.maps.clear();
    CHECK_THROWS_AS(bad.validate(), input_error);
    bad = m;
    bad.maps[{1, 0}] = {Mat{{Q(1)}}};
    CHECK_THROWS_AS(bad.validate(), input_error);
    bad = m;
    bad.dims = {{1}};
    CHECK_THROWS_AS(bad.validate(), input_error);
}

TEST_CASE("functoriality detects a broken composite") {
    FinitePosetModule m;
    m.poset = FinitePoset(3, {{0, 1}, {1, 2}});
    m.field = QQ;
    m.degrees = 1;
    m.dims = {{1}, {1}, {1}};
    m.maps[{0, 1}] = {Mat{{Q(2)}}};
    m.maps[{1, 2}] = {Mat{{Q(3)}}};
    m.maps[{0, 2}] = {Mat{{Q(6)}}};
    m.validate();
    CHECK(m.functorial());
    m.maps[{0, 2}] = {Mat{{Q(5)}}};
    CHECK_FALSE(m.functorial());
}

TEST_CASE("invariants carry dimensions and ranks") {
    const FinitePosetModule a = chain_module(Q(1), GF3);
    const FinitePosetModule b = chain_module(Q(2), GF3);
    const FinitePosetModule z = chain_module(Q(0), GF3);
    CHECK(invariants(a) == invariants(b));
    CHECK(invariants(a) != invariants(z));
    const ModuleInvariants ia = invariants(a);
    CHECK(ia.dims == std::vector<std::vector<size_t>>{{1}, {1}});
    CHECK(ia.ranks.at({0, 1}) == std::vector<size_t>{1});
    CHECK(invariants(z).ranks.at({0, 1}) == std::vector<size_t>{0});
}

TEST_CASE("strong equivalence on chains") {
    const FinitePosetModule a = chain_module(Q(1), GF3);
    const FinitePosetModule b = chain_module(Q(2), GF3);
    const EquivResult r = strong_equivalent(a, b);
    check_witness(a, b, r);

    const EquivResult rz = strong_equivalent(a, chain_module(Q(0), GF3));
    CHECK(rz.value == Tri::False);

    // Symmetry and reflexivity.
    CHECK(strong_equivalent(b, a).value == Tri::True);
    CHECK(strong_equivalent(a, a).value == Tri::True);
}

TEST_CASE("strong equivalence rejects mismatched inputs") {
    const FinitePosetModule a = chain_module(Q(1), GF3);
    CHECK_THROWS_AS(strong_equivalent(a, chain_module(Q(1), GF5)), input_error);
    FinitePosetModule other = chain_module(Q(1), GF3);
    other.poset = FinitePoset(2, {{1, 0}});
    other.maps.clear();
    other.maps[{1, 0}] = {Mat{{Q(1)}}};
    CHECK_THROWS_AS(strong_equivalent(a, other), input_error);
}

TEST_CASE("strong equivalence caps total dimension per degree") {
    FinitePosetModule big;
    big.poset = FinitePoset(1, {});
    big.field = GF2;
    big.degrees = 1;
    big.dims = {{9}};
    big.validate();
    CHECK_THROWS_AS(strong_equivalent(big, big), cap_error);
}

TEST_CASE("gadget parameters distinguish modules exactly by their line") {
    const EquivResult same =
        strong_equivalent(example_ab(Q(0), Q(1), GF5), example_ab(Q(0), Q(2), GF5));
    check_witness(example_ab(Q(0), Q(1), GF5), example_ab(Q(0), Q(2), GF5), same);
    CHECK(strong_equivalent(example_ab(Q(1), Q(1), GF5),
                            example_ab(Q(1), Q(2), GF5))
              .value == Tri::False);
    CHECK(strong_equivalent(example_ab(Q(1), Q(0), GF2),
                            example_ab(Q(1), Q(1), GF2))
              .value == Tri::False);
    CHECK_THROWS_AS(example_ab(Q(0), Q(0), QQ), input_error);
    CHECK_THROWS_AS(example_ab(Q(5), Q(10), GF5), input_error);
}

TEST_CASE("gadget class counts over small fields") {
    std::vector<FinitePosetModule> gf2;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            if (a || b) gf2.push_back(example_ab(Q(a), Q(b), GF2));
    REQUIRE(gf2.size() == 3);
    CHECK(strong_class_count(gf2) == 3);

    std::vector<FinitePosetModule> gf3;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a || b) gf3.push_back(example_ab(Q(a), Q(b), GF3));
    REQUIRE(gf3.size() == 8);
    CHECK(strong_class_count(gf3) == 4);
}

TEST_CASE("rational searches stay honest") {
    // Equivalent over the rationals with witnesses on the search grid.
    const FinitePosetModule a = example_ab(Q(1), Q(1), QQ);
    const FinitePosetModule doubled = example_ab(Q(2), Q(2), QQ);
    const EquivResult ok = strong_equivalent(a, doubled);
    check_witness(a, doubled, ok);

    // Same invariants, genuinely inequivalent: the bounded search must
    // come back inconclusive, never a wrong answer.
    const EquivResult hard = strong_equivalent(a, example_ab(Q(1), Q(2), QQ));
    CHECK(hard.value == Tri::Indeterminate);

    // Solved (not enumerated) unknowns may leave the grid.
    const EquivResult scaled =
        strong_equivalent(chain_module(Q(1), QQ), chain_module(Q(5), QQ));
    check_witness(chain_module(Q(1), QQ), chain_module(Q(5), QQ), scaled);
}

TEST_CASE("weak equivalence across relabelings") {
    const FinitePosetModule g = example_ab(Q(1), Q(1), GF3);
    const FinitePosetModule permuted = relabel(g, {2, 0, 1, 3, 4});
    CHECK(permuted.poset != g.poset);
    const EquivResult r = weak_equivalent(g, permuted);
    CHECK(r.value == Tri::True);

    // Chain versus antichain: no order isomorphism exists.
    FinitePosetModule anti;
    anti.poset = FinitePoset(2, {});
    anti.field = GF3;
    anti.degrees = 1;
    anti.dims = {{1}, {1}};
    CHECK(weak_equivalent(chain_module(Q(1), GF3), anti).value == Tri::False);

    FinitePosetModule nine;
    nine.poset = FinitePoset(9, {});
    nine.field = GF3;
    nine.degrees = 1;
    nine.dims.assign(9, {1});
    CHECK_THROWS_AS(weak_equivalent(nine, nine), cap_error);
}

TEST_CASE("all relabeled chains are weakly equivalent") {
    std::vector<FinitePosetModule> chains;
    std::vector<int> order = {0, 1, 2};
    do {
        chains.push_back(chain_along(order, GF2));
    } while (std::next_permutation(order.begin(), order.end()));
    REQUIRE(chains.size() == 6);
    for (size_t i = 0; i < chains.size(); ++i)
        for (size_t j = i + 1; j < chains.size(); ++j)
            CHECK(weak_equivalent(chains[i], chains[j]).value == Tri::True);
}

TEST_CASE("strong equivalence implies weak equivalence") {
    const FinitePosetModule a = chain_module(Q(1), GF3);
    const FinitePosetModule b = chain_module(Q(2), GF3);
    REQUIRE(strong_equivalent(a, b).value == Tri::True);
    CHECK(weak_equivalent(a, b).value == Tri::True);
}

TEST_CASE("modules with several degrees are matched degree by degree") {
    FinitePosetModule m1 = chain_module(Q(1), GF3);
    m1.degrees = 2;
    m1.dims = {{1, 1}, {1, 1}};
    m1.maps[{0, 1}] = {Mat{{Q(1)}}, Mat{{Q(0)}}};
    m1.validate();
    FinitePosetModule m2 = m1;
    m2.maps[{0, 1}] = {Mat{{Q(2)}}, Mat{{Q(0)}}};
    const EquivResult r = strong_equivalent(m1, m2);
    check_witness(m1, m2, r);

    FinitePosetModule m3 = m1;
    m3.maps[{0, 1}] = {Mat{{Q(0)}}, Mat{{Q(1)}}};
    CHECK(strong_equivalent(m1, m3).value == Tri::False);
}
