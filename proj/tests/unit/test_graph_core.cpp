#include "doctest.h"

#include "cgraph/colored_graph.hpp"
#include "support.hpp"

using namespace cgraph;

TEST_CASE("supermelon is a valid closed graph") {
    ColoredGraph g = supermelon(3);
    CHECK(validate(g).ok());
    CHECK(g.positive_count() == 1);
    CHECK(g.edge_count() == 4);
    for (int c = 0; c <= 3; ++c) CHECK(g.edge(c).color == c);
}

TEST_CASE("duplicate color is reported") {
    ColoredGraph g(2, 1, 1, {{0, 0, 0}, {0, 0, 1}, {0, 0, 1}});
    ValidationReport r = validate(g);
    CHECK_FALSE(r.ok());
    CHECK(r.has("duplicate color at vertex"));
}

TEST_CASE("other invariants are reported") {
    CHECK(validate(ColoredGraph(1, 2, 1, {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}})).has("vertex count mismatch"));
    CHECK(validate(ColoredGraph(1, 2, 2, {{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}})).has("disconnected"));
    CHECK(validate(ColoredGraph(1, 1, 1, {{0, 0, 0}, {0, 0, 2}})).has("color out of range"));
}

TEST_CASE("serialize and parse round trip") {
    for (const ColoredGraph& g : support::corpus(3, 30, 11)) {
        std::string s = serialize(g);
        CHECK(serialize(parse(s)) == s);
    }
    std::string s = serialize(supermelon(3));
    CHECK(s.find(' ') == std::string::npos);
    ColoredGraph back = parse(s);
    CHECK(back.edge_count() == 4);
}

TEST_CASE("parse rejects color out of range") {
    const char* doc = R"({"dimension":1,"kind":"closed","positive_count":1,"negative_count":1,"edges":[[0,0,0],[0,0,2]]})";
    try {
        parse(doc);
        FAIL("parse accepted a bad color");
    } catch (const ParseError& e) {
        CHECK(e.report().has("color out of range"));
    }
    CHECK_THROWS_AS(parse("{not json"), ParseError);
}

TEST_CASE("boundary of an elementary melon with both legs cut") {
    // Elementary melon of color 0 sitting on a color-0 line, both legs open.
    ColoredGraph rooted = tree_to_graph(MelonTree::from_preorder(3, {1, 0, 0, 0, 0}));
    BoundaryGraph b = boundary_graph(rooted);
    REQUIRE(b.vertices.size() == 2);
    CHECK(b.vertices[0].color == 0);
    CHECK(b.vertices[1].color == 0);
    REQUIRE(b.edges.size() == 3);
    std::set<std::pair<int, int>> pairs;
    for (const BoundaryEdge& e : b.edges) pairs.insert({e.i, e.j});
    CHECK(pairs == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("one cut edge gives two boundary vertices and D parallel edges") {
    for (int D : {2, 3, 4}) {
        auto graphs = support::corpus(D, 12, 5);
        for (const ColoredGraph& g : graphs) {
            for (int e = 0; e < g.edge_count(); e += 3) {
                ColoredGraph open = cut_edge(g, e);
                CHECK(validate(open).ok());
                BoundaryGraph b = boundary_graph(open);
                REQUIRE(b.vertices.size() == 2);
                CHECK(b.vertices[0].color == g.edge(e).color);
                CHECK(b.vertices[1].color == g.edge(e).color);
                CHECK(static_cast<int>(b.edges.size()) == D);
                for (const BoundaryEdge& be : b.edges) CHECK(be.a != be.b);
            }
        }
    }
}

TEST_CASE("boundary vertices are D-valent after several cuts") {
    Rng rng = make_rng(3, 0);
    for (int trial = 0; trial < 40; ++trial) {
        ColoredGraph g = support::random_closed(3, 5, rng);
        std::vector<int> cuts{static_cast<int>(uniform_below(rng, 20)), static_cast<int>(uniform_below(rng, 20))};
        if (cuts[0] == cuts[1]) continue;
        ColoredGraph open = cut_edges(g, cuts);
        BoundaryGraph b = boundary_graph(open);
        CHECK(b.vertices.size() == 4);
        for (int v = 0; v < static_cast<int>(b.vertices.size()); ++v) CHECK(b.valence(v) == 3);
        for (const BoundaryEdge& e : b.edges) CHECK(e.i < e.j);
    }
}

TEST_CASE("glue_boundary inverts a single cut") {
    ColoredGraph g = support::corpus(3, 3, 9)[1];
    ColoredGraph glued = glue_boundary(cut_edge(g, 2));
    CHECK(validate(glued).ok());
    CHECK(glued.vertex_count() == g.vertex_count());
    CHECK_THROWS(boundary_graph(g));
}
