#include "cgraph/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace cgraph {

namespace {

struct Labelling {
    std::vector<int> pos;
    std::vector<int> neg;
    std::vector<Edge> edges;  // relabelled, canonical order
};

// BFS from one vertex; returns false if some vertex is unreachable.
bool label_from(const ColoredGraph& g, bool root_positive, int root, Labelling& out) {
    const int P = g.positive_count();
    const int N = g.negative_count();
    const int C = g.color_count();
    out.pos.assign(static_cast<std::size_t>(P), -1);
    out.neg.assign(static_cast<std::size_t>(N), -1);
    // Queue holds encoded vertices: v >= 0 positive, ~v negative.
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(P + N));
    int next_pos = 0, next_neg = 0;
    if (root_positive) {
        out.pos[static_cast<std::size_t>(root)] = next_pos++;
        queue.push_back(root);
    } else {
        out.neg[static_cast<std::size_t>(root)] = next_neg++;
        queue.push_back(~root);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (Color c = 0; c < C; ++c) {
            if (x >= 0) {
                int n = g.positive_neighbor(x, c);
                if (n >= 0 && out.neg[static_cast<std::size_t>(n)] < 0) {
                    out.neg[static_cast<std::size_t>(n)] = next_neg++;
                    queue.push_back(~n);
                }
            } else {
                int v = g.negative_neighbor(~x, c);
                if (v >= 0 && out.pos[static_cast<std::size_t>(v)] < 0) {
                    out.pos[static_cast<std::size_t>(v)] = next_pos++;
                    queue.push_back(v);
                }
            }
        }
    }
    if (next_pos != P || next_neg != N) return false;
    out.edges.clear();
    out.edges.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        out.edges.push_back({out.pos[static_cast<std::size_t>(e.positive)], out.neg[static_cast<std::size_t>(e.negative)],
                             e.color});
    std::sort(out.edges.begin(), out.edges.end(), canonical_less);
    return true;
}

bool edges_less(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Edge& x, const Edge& y) { return canonical_less(x, y); });
}

std::string key_of(const ColoredGraph& g) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Edge& e : g.edges()) arr.push_back(nlohmann::json::array({e.positive, e.negative, e.color}));
    nlohmann::json doc;
    doc["dimension"] = g.dimension();
    doc["kind"] = g.is_open() ? "open" : "closed";
    doc["positive_count"] = g.positive_count();
    doc["negative_count"] = g.negative_count();
    doc["edges"] = std::move(arr);
    return doc.dump();
}

CanonicalForm finish(const ColoredGraph& g, Labelling best) {
    CanonicalForm out;
    out.graph = ColoredGraph(g.dimension(), g.positive_count(), g.negative_count(), std::move(best.edges), g.kind());
    out.positive_label = std::move(best.pos);
    out.negative_label = std::move(best.neg);
    out.key = key_of(out.graph);
    return out;
}

void check_simple_colors(const ColoredGraph& g) {
    std::vector<char> seen_p(static_cast<std::size_t>(g.positive_count() * g.color_count()), 0);
    std::vector<char> seen_n(static_cast<std::size_t>(g.negative_count() * g.color_count()), 0);
    for (const Edge& e : g.edges()) {
        if (e.positive < 0 || e.positive >= g.positive_count() || e.negative < 0 || e.negative >= g.negative_count() ||
            e.color < 0 || e.color > g.dimension())
            throw std::invalid_argument("canonical_form: edge out of range");
        auto& a = seen_p[static_cast<std::size_t>(e.positive * g.color_count() + e.color)];
        auto& b = seen_n[static_cast<std::size_t>(e.negative * g.color_count() + e.color)];
        if (a || b) throw std::invalid_argument("canonical_form: duplicate color at vertex");
        a = b = 1;
    }
}

}  // namespace

CanonicalForm canonical_form(const ColoredGraph& g) {
    check_simple_colors(g);
    if (g.positive_count() == 0) {
        if (g.negative_count() != 0) throw std::invalid_argument("canonical_form: graph must be connected");
        return finish(g, Labelling{});
    }
    Labelling best, cur;
    bool have = false;
    for (int r = 0; r < g.positive_count(); ++r) {
        if (!label_from(g, true, r, cur)) throw std::invalid_argument("canonical_form: graph must be connected");
        if (!have || edges_less(cur.edges, best.edges)) {
            std::swap(best, cur);
            have = true;
        }
    }
    return finish(g, std::move(best));
}

CanonicalForm canonical_form_rooted_negative(const ColoredGraph& g, int negative_root) {
    check_simple_colors(g);
    if (negative_root < 0 || negative_root >= g.negative_count())
        throw std::invalid_argument("canonical_form: root out of range");
    Labelling lab;
    if (!label_from(g, false, negative_root, lab)) throw std::invalid_argument("canonical_form: graph must be connected");
    return finish(g, std::move(lab));
}

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.dimension() != b.dimension() || a.kind() != b.kind() || a.positive_count() != b.positive_count() ||
        a.negative_count() != b.negative_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a).key == canonical_form(b).key;
}

}  // namespace cgraph
