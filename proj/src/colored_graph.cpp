#include "cgraph/colored_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace cgraph {

using nlohmann::json;

std::vector<ColorSet> subsets_of_size(int dimension, int size) {
    std::vector<ColorSet> out;
    const int n = dimension + 1;
    if (size < 0 || size > n) return out;
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        ColorSet s;
        for (int c : idx) s = s.with(c);
        out.push_back(s);
        int k = size - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - size + k) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int m = k + 1; m < size; ++m) idx[static_cast<std::size_t>(m)] = idx[static_cast<std::size_t>(m - 1)] + 1;
    }
    return out;
}

ColoredGraph::ColoredGraph(int dimension, int positive_count, int negative_count, std::vector<Edge> edges,
                           GraphKind kind)
    : dimension_(dimension),
      positive_count_(std::max(positive_count, 0)),
      negative_count_(std::max(negative_count, 0)),
      kind_(kind),
      edges_(std::move(edges)) {
    if (dimension_ < 0 || dimension_ + 1 > kMaxColors) {
        dimension_ = std::clamp(dimension_, 0, kMaxColors - 1);
    }
    const auto colors = static_cast<std::size_t>(dimension_ + 1);
    pos_adj_.assign(static_cast<std::size_t>(positive_count_) * colors, -1);
    neg_adj_.assign(static_cast<std::size_t>(negative_count_) * colors, -1);
    pos_valence_.assign(static_cast<std::size_t>(positive_count_), 0);
    neg_valence_.assign(static_cast<std::size_t>(negative_count_), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        bool p_ok = ed.positive >= 0 && ed.positive < positive_count_;
        bool n_ok = ed.negative >= 0 && ed.negative < negative_count_;
        if (p_ok) ++pos_valence_[static_cast<std::size_t>(ed.positive)];
        if (n_ok) ++neg_valence_[static_cast<std::size_t>(ed.negative)];
        if (ed.color < 0 || ed.color > dimension_) continue;
        if (p_ok) {
            int& s = pos_adj_[slot(ed.positive, ed.color)];
            if (s < 0) s = static_cast<int>(e);
        }
        if (n_ok) {
            int& s = neg_adj_[slot(ed.negative, ed.color)];
            if (s < 0) s = static_cast<int>(e);
        }
    }
}

Color ColoredGraph::positive_boundary_color(int v) const {
    for (Color c = 0; c <= dimension_; ++c)
        if (positive_edge(v, c) >= 0) return c;
    throw std::logic_error("positive vertex has no edges");
}

Color ColoredGraph::negative_boundary_color(int v) const {
    for (Color c = 0; c <= dimension_; ++c)
        if (negative_edge(v, c) >= 0) return c;
    throw std::logic_error("negative vertex has no edges");
}

int ColoredGraph::order() const {
    if (!is_open()) return positive_count_;
    int n = 0;
    for (int v = 0; v < positive_count_; ++v)
        if (!positive_is_boundary(v)) ++n;
    return n;
}

std::uint64_t ColoredGraph::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::int64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= static_cast<std::uint64_t>(x >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(dimension_);
    mix(kind_ == GraphKind::open ? 1 : 0);
    mix(positive_count_);
    mix(negative_count_);
    for (const Edge& e : edges_) {
        mix(e.positive);
        mix(e.negative);
        mix(e.color);
    }
    return h;
}

bool ValidationReport::has(std::string_view clause) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.clause == clause; });
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].clause << " (" << violations[i].subject << ")";
    }
    return os.str();
}

namespace {

std::string subject(const char* what, int index) { return std::string(what) + " " + std::to_string(index); }

// Checks the colors at one vertex: returns distinct-color violations.
void check_vertex_colors(const std::vector<int>& colors_seen, int dimension, const std::string& who,
                         bool require_full, std::vector<Violation>& out) {
    std::vector<int> count(static_cast<std::size_t>(dimension + 1), 0);
    for (int c : colors_seen)
        if (c >= 0 && c <= dimension) ++count[static_cast<std::size_t>(c)];
    for (int c = 0; c <= dimension; ++c) {
        if (count[static_cast<std::size_t>(c)] > 1)
            out.push_back({"duplicate color at vertex", who, "color " + std::to_string(c) + " appears " +
                                                                  std::to_string(count[static_cast<std::size_t>(c)]) +
                                                                  " times"});
        else if (require_full && count[static_cast<std::size_t>(c)] == 0)
            out.push_back({"missing color at vertex", who, "no edge of color " + std::to_string(c)});
    }
}

}  // namespace

ValidationReport validate(const ColoredGraph& g) {
    ValidationReport r;
    auto& out = r.violations;
    const int D = g.dimension();
    const int P = g.positive_count();
    const int N = g.negative_count();
    if (D < 1) out.push_back({"dimension out of range", "graph", "dimension must be at least 1"});
    if (P != N)
        out.push_back({"vertex count mismatch", "graph",
                       std::to_string(P) + " positive vs " + std::to_string(N) + " negative vertices"});
    if (P + N == 0) {
        out.push_back({"empty graph", "graph", "no vertices"});
        return r;
    }

    std::vector<std::vector<int>> pos_colors(static_cast<std::size_t>(P)), neg_colors(static_cast<std::size_t>(N));
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        bool bad = false;
        if (ed.positive < 0 || ed.positive >= P) {
            out.push_back({"vertex out of range", subject("edge", e), "positive endpoint " + std::to_string(ed.positive)});
            bad = true;
        }
        if (ed.negative < 0 || ed.negative >= N) {
            out.push_back({"vertex out of range", subject("edge", e), "negative endpoint " + std::to_string(ed.negative)});
            bad = true;
        }
        if (ed.color < 0 || ed.color > D) {
            out.push_back({"color out of range", subject("edge", e),
                           "color " + std::to_string(ed.color) + " not in 0.." + std::to_string(D)});
        }
        if (!bad) {
            pos_colors[static_cast<std::size_t>(ed.positive)].push_back(ed.color);
            neg_colors[static_cast<std::size_t>(ed.negative)].push_back(ed.color);
        }
    }

    auto valence_ok = [&](std::size_t val) {
        if (!g.is_open()) return val == static_cast<std::size_t>(D + 1);
        return val == 1 || val == static_cast<std::size_t>(D + 1);
    };
    int boundary = 0;
    for (int sign = 0; sign < 2; ++sign) {
        auto& table = sign == 0 ? pos_colors : neg_colors;
        const char* name = sign == 0 ? "positive" : "negative";
        for (std::size_t v = 0; v < table.size(); ++v) {
            std::string who = subject(name, static_cast<int>(v));
            std::size_t val = table[v].size();
            if (g.is_open() && val == 1) {
                ++boundary;
                check_vertex_colors(table[v], D, who, false, out);
                continue;
            }
            if (!g.is_open()) {
                check_vertex_colors(table[v], D, who, true, out);
                if (val > static_cast<std::size_t>(D + 1))
                    out.push_back({"invalid valence", who, "valence " + std::to_string(val)});
            } else {
                if (!valence_ok(val))
                    out.push_back({"invalid valence", who,
                                   "valence " + std::to_string(val) + ", expected 1 or " + std::to_string(D + 1)});
                else
                    check_vertex_colors(table[v], D, who, true, out);
            }
        }
    }

    if (g.is_open()) {
        if (boundary == 0) out.push_back({"open graph without boundary", "graph", "no 1-valent vertices"});
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (ed.positive < 0 || ed.positive >= P || ed.negative < 0 || ed.negative >= N) continue;
            bool pb = pos_colors[static_cast<std::size_t>(ed.positive)].size() == 1;
            bool nb = neg_colors[static_cast<std::size_t>(ed.negative)].size() == 1;
            if (pb && nb && P + N > 2)
                out.push_back({"boundary vertex not attached to internal vertex", subject("edge", e),
                               "edge joins two boundary vertices"});
        }
    }

    // Connectivity over in-range edges.
    std::vector<int> parent(static_cast<std::size_t>(P + N));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Edge& ed : g.edges()) {
        if (ed.positive < 0 || ed.positive >= P || ed.negative < 0 || ed.negative >= N) continue;
        int a = find(ed.positive), b = find(P + ed.negative);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    int roots = 0;
    for (int x = 0; x < P + N; ++x)
        if (find(x) == x) ++roots;
    if (roots > 1)
        out.push_back({"disconnected", "graph", std::to_string(roots) + " connected components"});
    return r;
}

void require_valid(const ColoredGraph& graph, std::string_view context) {
    auto report = validate(graph);
    if (!report.ok())
        throw std::invalid_argument(std::string(context) + ": invalid graph: " + report.summary());
}

namespace {

json to_json(const ColoredGraph& g) {
    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end(), canonical_less);
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back(json::array({e.positive, e.negative, e.color}));
    json doc;
    doc["dimension"] = g.dimension();
    doc["kind"] = g.is_open() ? "open" : "closed";
    doc["positive_count"] = g.positive_count();
    doc["negative_count"] = g.negative_count();
    doc["edges"] = std::move(arr);
    return doc;
}

int require_int(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    const json& v = doc.at(key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

std::string serialize(const ColoredGraph& graph) {
    require_valid(graph, "serialize");
    return to_json(graph).dump();
}

ColoredGraph parse(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed syntax: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("malformed syntax: document must be an object");
    int D = require_int(doc, "dimension");
    int P = require_int(doc, "positive_count");
    int N = require_int(doc, "negative_count");
    if (D < 1 || D + 1 > kMaxColors) throw ParseError("dimension out of range");
    if (P < 0 || N < 0) throw ParseError("vertex counts must be non-negative");
    GraphKind kind = GraphKind::closed;
    if (doc.contains("kind")) {
        const json& k = doc.at("kind");
        if (!k.is_string()) throw ParseError("field 'kind' must be a string");
        auto s = k.get<std::string>();
        if (s == "open")
            kind = GraphKind::open;
        else if (s != "closed")
            throw ParseError("field 'kind' must be \"closed\" or \"open\"");
    }
    if (!doc.contains("edges") || !doc.at("edges").is_array()) throw ParseError("missing array field 'edges'");
    std::vector<Edge> edges;
    for (const json& rec : doc.at("edges")) {
        if (!rec.is_array() || rec.size() != 3 || !rec[0].is_number_integer() || !rec[1].is_number_integer() ||
            !rec[2].is_number_integer())
            throw ParseError("malformed syntax: each edge must be [positive, negative, color]");
        edges.push_back({rec[0].get<int>(), rec[1].get<int>(), rec[2].get<int>()});
    }
    ColoredGraph g(D, P, N, std::move(edges), kind);
    auto report = validate(g);
    if (!report.ok()) {
        std::string first = report.violations.front().clause;
        throw ParseError(first + ": " + report.summary(), report);
    }
    if (doc.contains("cut_edges")) {
        if (kind != GraphKind::closed) throw ParseError("cut_edges requires a closed document");
        const json& cuts = doc.at("cut_edges");
        if (!cuts.is_array()) throw ParseError("field 'cut_edges' must be an array");
        std::vector<int> idx;
        for (const json& c : cuts) {
            if (!c.is_number_integer()) throw ParseError("cut_edges entries must be integers");
            int e = c.get<int>();
            if (e < 0 || e >= g.edge_count()) throw ParseError("cut edge index out of range");
            idx.push_back(e);
        }
        try {
            return cut_edges(g, idx);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    return g;
}

ColoredGraph cut_edges(const ColoredGraph& closed, std::span<const int> edge_indices) {
    if (closed.is_open()) throw std::invalid_argument("cut_edges: graph is already open");
    std::vector<char> cut(static_cast<std::size_t>(closed.edge_count()), 0);
    for (int e : edge_indices) {
        if (e < 0 || e >= closed.edge_count()) throw std::invalid_argument("cut_edges: edge index out of range");
        if (cut[static_cast<std::size_t>(e)]) throw std::invalid_argument("cut_edges: edge listed twice");
        cut[static_cast<std::size_t>(e)] = 1;
    }
    if (edge_indices.empty()) throw std::invalid_argument("cut_edges: no edges to cut");
    int P = closed.positive_count();
    int N = closed.negative_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(closed.edge_count()) + edge_indices.size());
    for (int e = 0; e < closed.edge_count(); ++e)
        if (!cut[static_cast<std::size_t>(e)]) edges.push_back(closed.edge(e));
    for (int e : edge_indices) {
        const Edge& ed = closed.edge(e);
        edges.push_back({ed.positive, N, ed.color});  // fresh negative boundary
        edges.push_back({P, ed.negative, ed.color});  // fresh positive boundary
        ++P;
        ++N;
    }
    return ColoredGraph(closed.dimension(), P, N, std::move(edges), GraphKind::open);
}

ColoredGraph cut_edge(const ColoredGraph& closed, int edge_index) {
    const int idx[] = {edge_index};
    return cut_edges(closed, idx);
}

ColoredGraph glue_boundary(const ColoredGraph& open) {
    if (!open.is_open()) throw std::invalid_argument("glue_boundary: graph is closed");
    int bp = -1, bn = -1, nb = 0;
    for (int v = 0; v < open.positive_count(); ++v)
        if (open.positive_is_boundary(v)) bp = v, ++nb;
    for (int v = 0; v < open.negative_count(); ++v)
        if (open.negative_is_boundary(v)) bn = v, ++nb;
    if (nb != 2 || bp < 0 || bn < 0)
        throw std::invalid_argument("glue_boundary: need exactly one positive and one negative boundary vertex");
    Color c = open.positive_boundary_color(bp);
    if (open.negative_boundary_color(bn) != c)
        throw std::invalid_argument("glue_boundary: boundary legs have different colors");
    int x = open.positive_neighbor(bp, c);  // negative internal
    int y = open.negative_neighbor(bn, c);  // positive internal
    std::vector<Edge> edges;
    for (const Edge& e : open.edges()) {
        if (e.positive == bp || e.negative == bn) continue;
        edges.push_back({e.positive > bp ? e.positive - 1 : e.positive, e.negative > bn ? e.negative - 1 : e.negative,
                         e.color});
    }
    edges.push_back({y > bp ? y - 1 : y, x > bn ? x - 1 : x, c});
    return ColoredGraph(open.dimension(), open.positive_count() - 1, open.negative_count() - 1, std::move(edges),
                        GraphKind::closed);
}

int BoundaryGraph::valence(int vertex) const {
    int n = 0;
    for (const auto& e : edges)
        if (e.a == vertex || e.b == vertex) ++n;
    return n;
}

BoundaryGraph boundary_graph(const ColoredGraph& g) {
    if (!g.is_open()) throw std::invalid_argument("boundary_graph: closed graphs have no boundary");
    require_valid(g, "boundary_graph");
    BoundaryGraph out;
    out.dimension = g.dimension();
    const int P = g.positive_count();
    std::vector<int> pos_index(static_cast<std::size_t>(P), -1), neg_index(static_cast<std::size_t>(g.negative_count()), -1);
    for (int v = 0; v < P; ++v)
        if (g.positive_is_boundary(v)) {
            pos_index[static_cast<std::size_t>(v)] = static_cast<int>(out.vertices.size());
            out.vertices.push_back({true, v, g.positive_boundary_color(v)});
        }
    for (int v = 0; v < g.negative_count(); ++v)
        if (g.negative_is_boundary(v)) {
            neg_index[static_cast<std::size_t>(v)] = static_cast<int>(out.vertices.size());
            out.vertices.push_back({false, v, g.negative_boundary_color(v)});
        }

    for (int a = 0; a < static_cast<int>(out.vertices.size()); ++a) {
        const BoundaryVertex bv = out.vertices[static_cast<std::size_t>(a)];
        const Color i = bv.color;
        for (Color j = 0; j <= g.dimension(); ++j) {
            if (j == i) continue;
            // Walk the alternating i/j path starting along the external leg.
            bool at_positive = bv.positive;
            int cur = bv.vertex;
            Color next = i;
            int end = -1;
            while (true) {
                int nb = at_positive ? g.positive_neighbor(cur, next) : g.negative_neighbor(cur, next);
                at_positive = !at_positive;
                cur = nb;
                bool boundary = at_positive ? g.positive_is_boundary(cur) : g.negative_is_boundary(cur);
                if (boundary) {
                    end = at_positive ? pos_index[static_cast<std::size_t>(cur)] : neg_index[static_cast<std::size_t>(cur)];
                    break;
                }
                next = next == i ? j : i;
            }
            if (a < end) out.edges.push_back({a, end, std::min(i, j), std::max(i, j)});
        }
    }
    return out;
}

ColoredGraph supermelon(int dimension) {
    std::vector<Edge> edges;
    for (Color c = 0; c <= dimension; ++c) edges.push_back({0, 0, c});
    return ColoredGraph(dimension, 1, 1, std::move(edges));
}

}  // namespace cgraph
