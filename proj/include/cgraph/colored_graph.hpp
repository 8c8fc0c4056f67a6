#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgraph/types.hpp"

namespace cgraph {

enum class GraphKind { closed, open };

// Bipartite edge-colored multigraph. Positive vertices are 0..P-1, negative
// vertices 0..N-1, each sign class indexed separately. The constructor accepts
// arbitrary data; use validate() to check the defining invariants.
class ColoredGraph {
public:
    ColoredGraph() = default;
    ColoredGraph(int dimension, int positive_count, int negative_count, std::vector<Edge> edges,
                 GraphKind kind = GraphKind::closed);

    int dimension() const { return dimension_; }
    int color_count() const { return dimension_ + 1; }
    int positive_count() const { return positive_count_; }
    int negative_count() const { return negative_count_; }
    int vertex_count() const { return positive_count_ + negative_count_; }
    GraphKind kind() const { return kind_; }
    bool is_open() const { return kind_ == GraphKind::open; }

    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

    // Index of the edge of color c at the vertex, or -1.
    int positive_edge(int v, Color c) const { return pos_adj_[slot(v, c)]; }
    int negative_edge(int v, Color c) const { return neg_adj_[slot(v, c)]; }
    // Opposite endpoint along color c, or -1.
    int positive_neighbor(int v, Color c) const {
        int e = positive_edge(v, c);
        return e < 0 ? -1 : edges_[static_cast<std::size_t>(e)].negative;
    }
    int negative_neighbor(int v, Color c) const {
        int e = negative_edge(v, c);
        return e < 0 ? -1 : edges_[static_cast<std::size_t>(e)].positive;
    }
    int positive_valence(int v) const { return pos_valence_[static_cast<std::size_t>(v)]; }
    int negative_valence(int v) const { return neg_valence_[static_cast<std::size_t>(v)]; }

    // Boundary vertices exist only in open graphs and are the 1-valent ones.
    bool positive_is_boundary(int v) const { return is_open() && positive_valence(v) == 1; }
    bool negative_is_boundary(int v) const { return is_open() && negative_valence(v) == 1; }
    // The color of the single edge at a boundary vertex.
    Color positive_boundary_color(int v) const;
    Color negative_boundary_color(int v) const;

    // Number of internal positive vertices (the order p for closed graphs).
    int order() const;

    // Content hash over dimension, kind, counts and the edge sequence.
    std::uint64_t fingerprint() const;

    friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
        return a.dimension_ == b.dimension_ && a.kind_ == b.kind_ &&
               a.positive_count_ == b.positive_count_ && a.negative_count_ == b.negative_count_ &&
               a.edges_ == b.edges_;
    }

private:
    std::size_t slot(int v, Color c) const {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(dimension_ + 1) +
               static_cast<std::size_t>(c);
    }

    int dimension_ = 0;
    int positive_count_ = 0;
    int negative_count_ = 0;
    GraphKind kind_ = GraphKind::closed;
    std::vector<Edge> edges_;
    std::vector<int> pos_adj_;
    std::vector<int> neg_adj_;
    std::vector<int> pos_valence_;
    std::vector<int> neg_valence_;
};

// Global vertex numbering used by bubble and homology code:
// positive v -> v, negative n -> positive_count + n.
inline int global_positive(const ColoredGraph&, int v) { return v; }
inline int global_negative(const ColoredGraph& g, int n) { return g.positive_count() + n; }

struct Violation {
    std::string clause;
    std::string subject;  // e.g. "positive 3", "edge 7"
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(std::string_view clause) const;
    std::string summary() const;
};

ValidationReport validate(const ColoredGraph& graph);

// Throws std::invalid_argument carrying the report summary when invalid.
void require_valid(const ColoredGraph& graph, std::string_view context);

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, ValidationReport report = {})
        : std::runtime_error(message), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// Canonical compact structured text; requires a valid graph.
std::string serialize(const ColoredGraph& graph);
// Parses and validates a document. Optional `cut_edges` (indices into the
// document's edge array) turn a closed document into an open graph.
ColoredGraph parse(std::string_view text);

// Replace each listed edge (p, n, c) of a closed graph by two external edges:
// p to a fresh negative boundary vertex and a fresh positive boundary vertex to n.
ColoredGraph cut_edges(const ColoredGraph& closed, std::span<const int> edge_indices);
ColoredGraph cut_edge(const ColoredGraph& closed, int edge_index);

// Rejoins the two external legs of an open graph with exactly one positive and
// one negative boundary vertex of the same color.
ColoredGraph glue_boundary(const ColoredGraph& open);

struct BoundaryVertex {
    bool positive = false;
    int vertex = 0;  // index within its sign class in the source graph
    Color color = 0;
};

struct BoundaryEdge {
    int a = 0;  // indices into BoundaryGraph::vertices, a < b
    int b = 0;
    Color i = 0;  // i < j
    Color j = 0;
};

struct BoundaryGraph {
    int dimension = 0;
    std::vector<BoundaryVertex> vertices;
    std::vector<BoundaryEdge> edges;

    int valence(int vertex) const;
};

BoundaryGraph boundary_graph(const ColoredGraph& open);

// Small standard graphs.
ColoredGraph supermelon(int dimension);

}  // namespace cgraph
