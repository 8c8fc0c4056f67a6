#include "doctest.h"

#include "cgraph/bubbles.hpp"
#include "cgraph/dipoles.hpp"
#include "cgraph/jackets.hpp"
#include "support.hpp"

using namespace cgraph;

TEST_CASE("D=3 has three jacket cycles") {
    auto cycles = jacket_cycles(3);
    CHECK(cycles == std::vector<std::vector<Color>>{{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}});
    CHECK(jacket_cycles(4).size() == 12);
    CHECK(jacket_cycles(2).size() == 1);
    CHECK(jacket_cycles(1).empty());
    CHECK(canonical_cycle({2, 1, 0, 3}) == std::vector<Color>{0, 1, 2, 3});
}

TEST_CASE("jacket (0123) uses faces 01, 12, 23, 03") {
    Jacket j;
    j.cycle = {0, 1, 2, 3};
    auto pairs = j.face_pairs();
    std::sort(pairs.begin(), pairs.end());
    CHECK(pairs == std::vector<std::pair<Color, Color>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("each face lies in (D-1)! jackets") {
    for (int D : {3, 4}) {
        std::map<std::pair<Color, Color>, int> count;
        for (const auto& c : jacket_cycles(D)) {
            Jacket j;
            j.cycle = c;
            for (auto p : j.face_pairs()) ++count[p];
        }
        CHECK(static_cast<int>(count.size()) == D * (D + 1) / 2);
        for (auto [p, n] : count) CHECK(n == factorial(D - 1));
    }
}

TEST_CASE("supermelon jackets have genus zero") {
    auto js = enumerate_jackets(supermelon(3));
    REQUIRE(js.size() == 3);
    for (const Jacket& j : js) {
        CHECK(j.vertex_count == 2);
        CHECK(j.edge_count == 4);
        CHECK(j.face_count == 4);
        CHECK(j.genus == 0);
    }
    CHECK(degree(supermelon(3)) == 0);
}

TEST_CASE("genus must be integral") {
    CHECK(genus_from_counts(4, 4, 2) == 0);
    CHECK_THROWS_AS(genus_from_counts(3, 4, 2), std::logic_error);
}

TEST_CASE("degree identities hold on the corpus") {
    for (int D : {3, 4}) {
        for (const ColoredGraph& g : support::corpus(D, 45, 41)) {
            DegreeIdentities id = degree_identities(g);
            CHECK(id.bubble_identity_residual2 == 0);
            CHECK(id.inequality_slack >= 0);
            CHECK(id.omega == degree(g));
        }
    }
}

TEST_CASE("some random graph has a jacket of positive genus") {
    bool found = false;
    for (const ColoredGraph& g : support::corpus(3, 30, 43))
        for (const Jacket& j : enumerate_jackets(g)) found |= j.genus >= 1;
    CHECK(found);
}

TEST_CASE("contraction identity for every k") {
    for (const ColoredGraph& g : support::corpus(3, 45, 47)) {
        long long w = degree(g);
        for (int k = 1; k <= 3; ++k)
            for (const Dipole& d : find_dipoles(g, k)) CHECK(2 * w == contraction_drop2(3, k) + 2 * degree(contract(g, d)));
    }
    CHECK(contraction_drop2(3, 3) == 0);
    CHECK(contraction_drop2(3, 1) == 0);
}

TEST_CASE("bubble jackets drop the deleted color") {
    ColoredGraph g = supermelon(3);
    Jacket j;
    for (const Jacket& x : enumerate_jackets(g))
        if (x.cycle == std::vector<Color>{0, 1, 2, 3}) j = x;
    std::set<std::vector<Color>> got;
    for (Color i : {0, 3, 1})
        for (const BubbleJacket& b : bubble_jackets(g, j, i)) {
            got.insert(b.cycle);
            CHECK(b.genus == 0);
        }
    CHECK(got == std::set<std::vector<Color>>{{1, 2, 3}, {0, 2, 3}, {0, 1, 2}});
}

TEST_CASE("each bubble jacket comes from exactly D graph jackets") {
    const int D = 4;
    ColoredGraph g = support::corpus(D, 3, 53)[2];
    for (Color i = 0; i <= D; ++i) {
        std::map<std::pair<int, std::vector<Color>>, int> count;
        for (const Jacket& j : enumerate_jackets(g))
            for (const BubbleJacket& b : bubble_jackets(g, j, i)) ++count[{b.component, b.cycle}];
        for (auto [key, n] : count) CHECK(n == D);
    }
}
