#include "cgraph/jackets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cgraph/bubbles.hpp"

namespace cgraph {

std::vector<std::pair<Color, Color>> Jacket::face_pairs() const {
    std::vector<std::pair<Color, Color>> out;
    for (std::size_t q = 0; q < cycle.size(); ++q) {
        Color a = cycle[q], b = cycle[(q + 1) % cycle.size()];
        out.push_back({std::min(a, b), std::max(a, b)});
    }
    return out;
}

int count_faces(const ColoredGraph& g, Color i, Color j) {
    if (i == j) throw std::invalid_argument("count_faces: colors must differ");
    std::vector<char> done(static_cast<std::size_t>(g.positive_count()), 0);
    int faces = 0;
    for (int v = 0; v < g.positive_count(); ++v) {
        if (done[static_cast<std::size_t>(v)]) continue;
        ++faces;
        int cur = v;
        do {
            done[static_cast<std::size_t>(cur)] = 1;
            int n = g.positive_neighbor(cur, i);
            cur = g.negative_neighbor(n, j);
        } while (cur != v);
    }
    return faces;
}

std::vector<std::vector<int>> face_table(const ColoredGraph& g) {
    const int C = g.color_count();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(C), std::vector<int>(static_cast<std::size_t>(C), 0));
    for (Color i = 0; i < C; ++i)
        for (Color j = i + 1; j < C; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = count_faces(g, i, j);
    return t;
}

std::vector<Color> canonical_cycle(std::vector<Color> cycle) {
    if (cycle.size() < 3) {
        std::sort(cycle.begin(), cycle.end());
        return cycle;
    }
    auto m = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), m, cycle.end());
    if (cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

std::vector<std::vector<Color>> jacket_cycles(int D) {
    std::vector<std::vector<Color>> out;
    if (D < 2) return out;
    std::vector<Color> rest(static_cast<std::size_t>(D));
    std::iota(rest.begin(), rest.end(), 1);
    do {
        if (rest.front() < rest.back()) {
            std::vector<Color> c{0};
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(std::move(c));
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

int genus_from_counts(int faces, int edges, int vertices) {
    int twice = 2 - faces + edges - vertices;
    if (twice < 0 || twice % 2 != 0)
        throw std::logic_error("jacket genus is not a non-negative integer (F=" + std::to_string(faces) +
                               ", E=" + std::to_string(edges) + ", V=" + std::to_string(vertices) + ")");
    return twice / 2;
}

namespace {

Jacket make_jacket(const std::vector<Color>& cycle, const std::vector<std::vector<int>>& faces, int E, int V) {
    Jacket j;
    j.cycle = cycle;
    j.edge_count = E;
    j.vertex_count = V;
    for (auto [a, b] : j.face_pairs()) j.face_count += faces[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    j.genus = genus_from_counts(j.face_count, E, V);
    return j;
}

}  // namespace

std::vector<Jacket> enumerate_jackets(const ColoredGraph& g) {
    std::vector<Jacket> out;
    if (g.dimension() < 2) return out;
    auto faces = face_table(g);
    for (const auto& cyc : jacket_cycles(g.dimension()))
        out.push_back(make_jacket(cyc, faces, g.edge_count(), g.vertex_count()));
    return out;
}

long long degree(const ColoredGraph& g) {
    if (g.dimension() < 2) return 0;
    long long w = 0;
    for (const auto& j : enumerate_jackets(g)) w += j.genus;
    return w;
}

std::vector<BubbleJacket> bubble_jackets(const ColoredGraph& g, const Jacket& jacket, Color i) {
    std::vector<Color> reduced;
    for (Color c : jacket.cycle)
        if (c != i) reduced.push_back(c);
    if (static_cast<int>(reduced.size()) != g.dimension()) throw std::invalid_argument("bubble_jackets: color not in cycle");
    reduced = canonical_cycle(reduced);
    std::vector<BubbleJacket> out;
    for (const Bubble& b : enumerate_bubbles(g, ColorSet::all(g.dimension()).without(i))) {
        BubbleJacket bj;
        bj.component = b.component;
        bj.cycle = reduced;
        int F = 0;
        if (reduced.size() >= 3) {
            auto ext = extract_bubble(g, b);
            // Map the reduced cycle into the bubble's re-indexed colors.
            std::vector<int> rank(static_cast<std::size_t>(g.color_count()), -1);
            for (std::size_t k = 0; k < ext.color_of.size(); ++k) rank[static_cast<std::size_t>(ext.color_of[k])] = static_cast<int>(k);
            for (std::size_t q = 0; q < reduced.size(); ++q)
                F += count_faces(ext.graph, rank[static_cast<std::size_t>(reduced[q])],
                                 rank[static_cast<std::size_t>(reduced[(q + 1) % reduced.size()])]);
            bj.genus = genus_from_counts(F, ext.graph.edge_count(), ext.graph.vertex_count());
        } else {
            // D = 2: bubbles are 2-colored cycles, planar.
            bj.genus = 0;
        }
        out.push_back(std::move(bj));
    }
    return out;
}

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

long long contraction_drop2(int D, int k) {
    return factorial(D - 1) * (static_cast<long long>(D + 1) * k - static_cast<long long>(k) * k - D);
}

DegreeIdentities degree_identities(const ColoredGraph& g) {
    const int D = g.dimension();
    DegreeIdentities id;
    id.omega = degree(g);
    long long last_species_sum = 0;
    for (Color i = 0; i <= D; ++i) {
        for (const Bubble& b : enumerate_bubbles(g, ColorSet::all(D).without(i))) {
            ++id.top_bubble_count;
            long long w = degree(extract_bubble(g, b).graph);
            id.bubble_degree_sum += w;
            if (i == D) last_species_sum += w;
        }
    }
    const long long p = g.positive_count();
    id.bubble_identity_residual2 =
        2 * id.omega - factorial(D - 1) * (p + D - id.top_bubble_count) - 2 * id.bubble_degree_sum;
    id.inequality_slack = id.omega - static_cast<long long>(D) * last_species_sum;
    return id;
}

}  // namespace cgraph
