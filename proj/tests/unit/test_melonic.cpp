#include "doctest.h"

#include <cmath>

#include "cgraph/canonical.hpp"
#include "cgraph/homology.hpp"
#include "cgraph/jackets.hpp"
#include "cgraph/melonic.hpp"
#include "support.hpp"

using namespace cgraph;

TEST_CASE("melonic counts") {
    CHECK(count_melonic(3, 0) == 1);
    CHECK(count_melonic(3, 1) == 1);
    CHECK(count_melonic(3, 2) == 4);
    CHECK(count_melonic(3, 3) == 22);
    CHECK(count_melonic(3, 4) == 140);
    CHECK(count_melonic(1, 5) == 42);
    for (int D : {1, 2, 3, 5}) {
        CountTable t = count_table(D, 30);
        for (int p = 0; p <= 30; ++p) CHECK(t.counts[static_cast<std::size_t>(p)] == count_melonic(D, p));
    }
}

TEST_CASE("count table satisfies the convolution recurrence") {
    // C = 1 + z C^{D+1}: C_p is the sum over (D+1)-compositions of p-1.
    for (int D : {2, 3}) {
        CountTable t = count_table(D, 12);
        auto c = [&](int k) { return t.counts[static_cast<std::size_t>(k)]; };
        for (int p = 1; p <= 12; ++p) {
            std::vector<mpz_class> power(static_cast<std::size_t>(p), 0);
            power[0] = 1;
            for (int f = 0; f <= D; ++f) {
                std::vector<mpz_class> next(static_cast<std::size_t>(p), 0);
                for (int i = 0; i < p; ++i)
                    for (int j = 0; i + j < p; ++j) next[static_cast<std::size_t>(i + j)] += power[static_cast<std::size_t>(i)] * c(j);
                power = next;
            }
            CHECK(c(p) == power[static_cast<std::size_t>(p - 1)]);
        }
    }
}

TEST_CASE("exhaustive trees map to distinct graphs") {
    for (int D : {2, 3}) {
        for (int p = 1; p <= 5; ++p) {
            auto trees = all_trees(D, p);
            CHECK(mpz_class(static_cast<long>(trees.size())) == count_melonic(D, p));
            std::set<std::string> keys;
            for (const MelonTree& t : trees) keys.insert(canonical_form(tree_to_graph(t)).key);
            CHECK(keys.size() == trees.size());
        }
    }
}

TEST_CASE("growth by insertion reaches exactly the tree images") {
    for (int D : {2, 3}) {
        for (int p = 1; p <= 3; ++p) {
            std::set<std::string> grown = support::grown_rooted_classes(D, p);
            std::set<std::string> images;
            for (const MelonTree& t : all_trees(D, p)) images.insert(support::brute_key(tree_to_graph(t)));
            CHECK(grown == images);
        }
    }
}

TEST_CASE("p=1 gives the elementary melon of color 0") {
    Rng rng = make_rng(1, 0);
    MelonTree t = sample_uniform(3, 1, rng);
    CHECK(t.size() == 1);
    CHECK(t.color(t.root()) == 0);
    ColoredGraph g = tree_to_graph(t);
    CHECK(validate(g).ok());
    CHECK(g.positive_count() == 2);
    int parallel = 0;
    for (const Edge& e : g.edges()) parallel += e.positive == 0 && e.negative == 0;
    CHECK(parallel == 3);
}

TEST_CASE("sampler is uniform at p=2") {
    Rng rng = make_rng(7, 0);
    std::map<std::string, int> freq;
    const int n = 100000;
    for (int i = 0; i < n; ++i) ++freq[sample_uniform(3, 2, rng).code_string()];
    CHECK(freq.size() == 4);
    const double sigma = std::sqrt(n * 0.25 * 0.75);
    for (auto [code, k] : freq) CHECK(std::abs(k - n * 0.25) < 4 * sigma);
}

TEST_CASE("sampler chi-square at p=3") {
    Rng rng = make_rng(8, 0);
    std::map<std::string, int> freq;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) ++freq[sample_uniform(3, 3, rng).code_string()];
    CHECK(freq.size() == 22);
    double chi2 = 0, expect = n / 22.0;
    for (auto [code, k] : freq) chi2 += (k - expect) * (k - expect) / expect;
    CHECK(chi2 < 46.797);  // 0.999 quantile, 21 degrees of freedom
}

TEST_CASE("sampler is deterministic per seed") {
    CHECK(sample_uniform(3, 50, 99) == sample_uniform(3, 50, 99));
    CHECK_FALSE(sample_uniform(3, 50, 99) == sample_uniform(3, 50, 100));
}

TEST_CASE("graph_to_tree inverts tree_to_graph") {
    Rng rng = make_rng(13, 0);
    for (int i = 0; i < 10000; ++i) {
        int D = 2 + static_cast<int>(uniform_below(rng, 3));
        int p = 1 + static_cast<int>(uniform_below(rng, 100));
        MelonTree t = sample_uniform(D, p, rng);
        REQUIRE(graph_to_tree(tree_to_graph(t)) == t.normalized());
    }
}

TEST_CASE("sampled graphs are spheres of degree zero") {
    Rng rng = make_rng(17, 0);
    for (int i = 0; i < 30; ++i) {
        ColoredGraph g = tree_to_closed_graph(sample_uniform(3, 1 + static_cast<int>(uniform_below(rng, 30)), rng));
        CHECK(degree(g) == 0);
        auto h = homology(g);
        CHECK(h[0].betti == 1);
        CHECK(h[1].betti == 0);
        CHECK(h[2].betti == 0);
        CHECK(h[3].betti == 1);
    }
}

TEST_CASE("graph_to_tree rejects non-melonic graphs") {
    Rng rng = make_rng(19, 0);
    for (int trial = 0; trial < 100; ++trial) {
        ColoredGraph g = support::random_closed(3, 4, rng);
        if (degree(g) == 0) continue;
        int e = 0;
        while (g.edge(e).color != 0) ++e;
        try {
            graph_to_tree(cut_edge(g, e));
            FAIL("accepted a non-melonic graph");
        } catch (const NotMelonic& ex) {
            CHECK(ex.omega() == degree(g));
        }
        return;
    }
    FAIL("no non-melonic sample found");
}

TEST_CASE("words and depths") {
    Word w = Word::parse(3, "0;10132120312");
    CHECK(tree_depth(w) == 12);
    CHECK(depth(w) == 4);
    CHECK(w.to_string() == "0;10132120312");
    CHECK(depth(Word::parse(3, "0;")) == 0);
    CHECK(depth(Word::parse(3, "0;1")) == 1);
    CHECK_THROWS(Word::parse(3, "1;0"));
    CHECK_THROWS(Word::parse(3, "0;14"));
}

TEST_CASE("depth grows by at most one per letter along a branch") {
    Rng rng = make_rng(23, 0);
    for (int i = 0; i < 20; ++i) {
        MelonTree t = sample_uniform(3, 200, rng);
        for (int v = 0; v < t.size(); ++v) {
            if (t.parent(v) < 0) continue;
            int a = depth(word_of(t, t.parent(v))), b = depth(word_of(t, v));
            CHECK(b >= a);
            CHECK(b <= a + 1);
        }
    }
}

TEST_CASE("Lambda_Delta") {
    CHECK(lambda_delta(3) == mpq_class(3, 22));
    CHECK(lambda_delta(1) == mpq_class(1, 2));
}

TEST_CASE("pair estimate") {
    Rng rng = make_rng(29, 0);
    MelonTree t = sample_uniform(3, 300, rng);
    BallMetric m(t);
    CHECK(pair_distance_estimate(t, 5, 5).estimate == 0);
    CHECK(m.distance(5, 5) == 0);
    for (int trial = 0; trial < 500; ++trial) {
        int a = static_cast<int>(uniform_below(rng, 300)), b = static_cast<int>(uniform_below(rng, 300));
        PairEstimate e = pair_distance_estimate(t, a, b);
        int d = m.distance(a, b);
        CHECK(d >= e.lower);
        CHECK(d <= e.upper);
    }
}

TEST_CASE("single-color chain has suffix depth one") {
    MelonTree t(3);
    int node = t.insert(-1, 0);
    for (int i = 0; i < 20; ++i) node = t.insert(node, 1);
    PairEstimate e = pair_distance_estimate(t, t.root(), node);
    CHECK(e.estimate == 1);
    BallMetric m(t);
    CHECK(m.distance(t.root(), node) <= e.upper);
    CHECK(m.distance(t.root(), node) <= 7);
}

TEST_CASE("contour walk and walk distance") {
    std::vector<int> f{0, 1, 2, 3, 4, 3, 2, 3, 2, 3};
    CHECK(walk_distance(f, 4, 9) == 3);
    MelonTree one(3);
    one.insert(-1, 0);
    CHECK(contour_walk(one) == std::vector<int>{0, 1, 0});
    Rng rng = make_rng(31, 0);
    for (int i = 0; i < 1000; ++i) {
        MelonTree t = sample_uniform(3, 1 + static_cast<int>(uniform_below(rng, 50)), rng);
        auto walk = contour_walk(t);
        auto nodes = contour_nodes(t);
        REQUIRE(static_cast<int>(walk.size()) == 2 * t.size() + 1);
        CHECK(walk.front() == 0);
        CHECK(walk.back() == 0);
        for (std::size_t s = 1; s + 1 < walk.size(); ++s) CHECK(walk[s] > 0);
        int s = static_cast<int>(uniform_below(rng, walk.size() - 2)) + 1;
        auto dist = support::tree_bfs(t, nodes[static_cast<std::size_t>(s)]);
        for (int u = 1; u + 1 < static_cast<int>(walk.size()); ++u)
            CHECK(walk_distance(walk, s, u) == dist[static_cast<std::size_t>(nodes[static_cast<std::size_t>(u)])]);
    }
}

TEST_CASE("tree distance equals BFS") {
    Rng rng = make_rng(37, 0);
    MelonTree t = sample_uniform(4, 120, rng);
    auto d = support::tree_bfs(t, 7);
    for (int v = 0; v < t.size(); ++v) CHECK(tree_distance(t, 7, v) == d[static_cast<std::size_t>(v)]);
}
