#pragma once

#include <map>
#include <string>
#include <vector>

#include "cgraph/colored_graph.hpp"

namespace cgraph {

struct Bubble {
    ColorSet colors;
    int component = 0;          // components numbered by smallest contained vertex
    std::vector<int> vertices;  // global vertex ids, ascending
    std::vector<int> edges;     // edge indices into the parent graph, ascending
};

// Component labelling of all vertices (global ids) for one color set.
struct BubbleLabels {
    ColorSet colors;
    int count = 0;
    std::vector<int> label;  // global vertex id -> component id
};

BubbleLabels bubble_labels(const ColoredGraph& graph, ColorSet colors);
std::vector<Bubble> enumerate_bubbles(const ColoredGraph& graph, ColorSet colors);

// Number of d-bubbles summed over all species, for d = 0..D.
std::vector<long long> bubble_counts(const ColoredGraph& graph);

// The bubble as a standalone closed graph of dimension |colors|-1; colors are
// re-indexed by rank within the bubble's color set.
struct ExtractedBubble {
    ColoredGraph graph;
    std::vector<int> positive_of;  // new positive index -> old positive index
    std::vector<int> negative_of;  // new negative index -> old negative index
    std::vector<Color> color_of;   // new color -> old color
};
ExtractedBubble extract_bubble(const ColoredGraph& graph, const Bubble& bubble);

struct Simplex {
    int dimension = 0;          // cardinality - 1
    std::vector<int> vertices;  // indices into DualComplex::ground, ascending
    std::vector<int> faces;     // indices of codimension-one faces (empty for points)
    ColorSet colors;            // colors of the indexing bubble's complement
    ColorSet bubble_colors;     // colors of the indexing bubble
    int bubble_component = -1;
};

struct GroundVertex {
    Color missing_color = 0;  // the D-bubble has colors {0..D} \ {missing_color}
    int component = 0;
};

struct DualComplex {
    int dimension = 0;
    std::vector<GroundVertex> ground;
    std::vector<Simplex> simplices;

    std::vector<int> simplices_of_dimension(int d) const;
};

DualComplex dual_complex(const ColoredGraph& graph);

struct PseudomanifoldReport {
    bool downward_closed = true;
    bool pure = true;
    bool non_branching = true;
    bool strongly_connected = true;
    std::vector<int> non_closed_witness;   // simplices whose faces are inconsistent
    std::vector<int> non_pure_witness;     // simplices in no top simplex
    std::vector<int> branching_witness;    // ridges in more than two facets
    int facet_components = 0;

    bool all() const { return downward_closed && pure && non_branching && strongly_connected; }
};

PseudomanifoldReport check_pseudomanifold(const DualComplex& complex);

// Facets and ridge adjacency as compact structured text.
std::string export_complex(const DualComplex& complex);

}  // namespace cgraph
