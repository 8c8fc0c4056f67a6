#pragma once

// Test-side corpus generators and brute-force oracles. Nothing here calls the
// library routine it is used to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cgraph/colored_graph.hpp"
#include "cgraph/dipoles.hpp"
#include "cgraph/melonic.hpp"
#include "cgraph/random.hpp"

namespace support {

using namespace cgraph;

inline bool connected(const ColoredGraph& g) {
    const int P = g.positive_count(), V = g.vertex_count();
    if (V == 0) return false;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(V));
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.positive)].push_back(P + e.negative);
        adj[static_cast<std::size_t>(P + e.negative)].push_back(e.positive);
    }
    std::vector<char> seen(static_cast<std::size_t>(V), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[static_cast<std::size_t>(x)])
            if (!seen[static_cast<std::size_t>(y)]) seen[static_cast<std::size_t>(y)] = 1, ++count, stack.push_back(y);
    }
    return count == V;
}

// Closed graph whose color classes are independent uniform permutations,
// redrawn until connected.
inline ColoredGraph random_closed(int D, int p, Rng& rng) {
    while (true) {
        std::vector<Edge> edges;
        for (Color c = 0; c <= D; ++c) {
            std::vector<int> perm(static_cast<std::size_t>(p));
            std::iota(perm.begin(), perm.end(), 0);
            shuffle(perm, rng);
            for (int v = 0; v < p; ++v) edges.push_back({v, perm[static_cast<std::size_t>(v)], c});
        }
        ColoredGraph g(D, p, p, edges);
        if (connected(g)) return g;
    }
}

// Mixed corpus: uniform permutation graphs, melonic graphs, and melonic graphs
// grown further by random dipole creations.
inline std::vector<ColoredGraph> corpus(int D, int count, std::uint64_t seed, int max_p = 7) {
    std::vector<ColoredGraph> out;
    for (int i = 0; i < count; ++i) {
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
        const int kind = i % 3;
        if (kind == 0) {
            out.push_back(random_closed(D, 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_p))), rng));
        } else {
            int p = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_p)));
            ColoredGraph g = tree_to_closed_graph(sample_uniform(D, p, rng));
            if (kind == 2) {
                for (int step = 0; step < 3; ++step) {
                    int k = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(D)));
                    std::vector<Color> all(static_cast<std::size_t>(D + 1));
                    std::iota(all.begin(), all.end(), 0);
                    shuffle(all, rng);
                    CreationSpec spec;
                    for (int j = 0; j < k; ++j) spec.colors = spec.colors.with(all[static_cast<std::size_t>(j)]);
                    for (int j = k; j <= D; ++j) {
                        Color c = all[static_cast<std::size_t>(j)];
                        std::vector<int> of_color;
                        for (int e = 0; e < g.edge_count(); ++e)
                            if (g.edge(e).color == c) of_color.push_back(e);
                        spec.cut_edges.push_back(of_color[static_cast<std::size_t>(uniform_below(rng, of_color.size()))]);
                    }
                    try {
                        g = create(g, spec).graph;
                    } catch (const CreationError&) {
                    }
                }
            }
            out.push_back(std::move(g));
        }
    }
    return out;
}

// Canonical key by exhaustive search over vertex permutations (tiny graphs).
inline std::string brute_key(const ColoredGraph& g) {
    std::vector<int> pp(static_cast<std::size_t>(g.positive_count())), np(static_cast<std::size_t>(g.negative_count()));
    std::iota(pp.begin(), pp.end(), 0);
    std::vector<std::tuple<int, int, int>> best;
    bool have = false;
    do {
        std::iota(np.begin(), np.end(), 0);
        do {
            std::vector<std::tuple<int, int, int>> e;
            for (const Edge& x : g.edges())
                e.emplace_back(x.color, pp[static_cast<std::size_t>(x.positive)], np[static_cast<std::size_t>(x.negative)]);
            std::sort(e.begin(), e.end());
            if (!have || e < best) best = e, have = true;
        } while (std::next_permutation(np.begin(), np.end()));
    } while (std::next_permutation(pp.begin(), pp.end()));
    std::string key = std::to_string(g.positive_count()) + "/" + std::to_string(g.negative_count()) + ":";
    for (auto [c, a, b] : best) key += std::to_string(c) + "," + std::to_string(a) + "," + std::to_string(b) + ";";
    return key;
}

// Open graph I -- O carrying one edge of color 0.
inline ColoredGraph bare_rooted(int D) { return ColoredGraph(D, 1, 1, {{0, 0, 0}}, GraphKind::open); }

// Replaces edge e = (a, b, c) by a -- x, y -- b of color c and D parallel
// edges y -- x carrying the other colors.
inline ColoredGraph insert_elementary(const ColoredGraph& g, int e) {
    std::vector<Edge> edges = g.edges();
    const Edge old = edges[static_cast<std::size_t>(e)];
    const int x = g.negative_count(), y = g.positive_count();
    edges[static_cast<std::size_t>(e)] = {old.positive, x, old.color};
    edges.push_back({y, old.negative, old.color});
    for (Color j = 0; j <= g.dimension(); ++j)
        if (j != old.color) edges.push_back({y, x, j});
    return ColoredGraph(g.dimension(), g.positive_count() + 1, g.negative_count() + 1, edges, g.is_open() ? GraphKind::open : GraphKind::closed);
}

// Distinct rooted melonic graphs with p insertions, grown from the bare edge.
inline std::set<std::string> grown_rooted_classes(int D, int p) {
    std::map<std::string, ColoredGraph> level{{brute_key(bare_rooted(D)), bare_rooted(D)}};
    for (int step = 0; step < p; ++step) {
        std::map<std::string, ColoredGraph> next;
        for (const auto& [k, g] : level)
            for (int e = 0; e < g.edge_count(); ++e) {
                ColoredGraph h = insert_elementary(g, e);
                next.emplace(brute_key(h), h);
            }
        level = std::move(next);
    }
    std::set<std::string> out;
    for (const auto& [k, g] : level) out.insert(k);
    return out;
}

// Coefficients of the first-passage generating function from leg X to leg Y
// by propagating exact walk weights through internal vertices only.
inline std::vector<mpq_class> first_passage(const ColoredGraph& g, bool from_in, bool to_in, int T) {
    const int P = g.positive_count();
    const int V = g.vertex_count();
    int in = -1, out = -1;
    for (int v = 0; v < P; ++v)
        if (g.positive_valence(v) == 1) out = v;
    for (int n = 0; n < g.negative_count(); ++n)
        if (g.negative_valence(n) == 1) in = P + n;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(V));
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.positive)].push_back(P + e.negative);
        adj[static_cast<std::size_t>(P + e.negative)].push_back(e.positive);
    }
    const int start = from_in ? in : out, target = to_in ? in : out;
    std::vector<mpq_class> coef(static_cast<std::size_t>(T + 1), 0);
    std::vector<mpq_class> w(static_cast<std::size_t>(V), 0);
    w[static_cast<std::size_t>(start)] = 1;
    for (int t = 1; t <= T; ++t) {
        std::vector<mpq_class> next(static_cast<std::size_t>(V), 0);
        for (int x = 0; x < V; ++x) {
            if (w[static_cast<std::size_t>(x)] == 0) continue;
            if (t > 1 && (x == in || x == out)) continue;  // walks stop at the legs
            mpq_class share = w[static_cast<std::size_t>(x)] / static_cast<long>(adj[static_cast<std::size_t>(x)].size());
            for (int y : adj[static_cast<std::size_t>(x)]) next[static_cast<std::size_t>(y)] += share;
        }
        coef[static_cast<std::size_t>(t)] = next[static_cast<std::size_t>(target)];
        w = std::move(next);
        // Mass sitting on a leg has finished its walk.
        w[static_cast<std::size_t>(in)] = 0;
        w[static_cast<std::size_t>(out)] = 0;
    }
    return coef;
}

// Distances in the plain tree (parent/child edges) from `source`.
inline std::vector<int> tree_bfs(const MelonTree& t, int source) {
    std::vector<int> dist(static_cast<std::size_t>(t.size()), -1);
    std::queue<int> q;
    q.push(source);
    dist[static_cast<std::size_t>(source)] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        std::vector<int> nb;
        if (t.parent(x) >= 0) nb.push_back(t.parent(x));
        for (Color s = 0; s <= t.dimension(); ++s)
            if (t.child(x, s) >= 0) nb.push_back(t.child(x, s));
        for (int y : nb)
            if (dist[static_cast<std::size_t>(y)] < 0) dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1, q.push(y);
    }
    return dist;
}

}  // namespace support
