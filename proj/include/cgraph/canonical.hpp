#pragma once

#include <string>
#include <vector>

#include "cgraph/colored_graph.hpp"

namespace cgraph {

// Color-preserving relabelling that yields a canonical representative.
struct CanonicalForm {
    ColoredGraph graph;                 // relabelled graph, edges in canonical order
    std::vector<int> positive_label;    // old positive index -> new
    std::vector<int> negative_label;    // old negative index -> new
    std::string key;                    // serialization of `graph`
};

// Requires a connected graph with at most one edge per color at each vertex
// (closed or open). Under those conditions a breadth-first traversal from one
// root in color order fixes every label, so the minimum over roots is canonical.
CanonicalForm canonical_form(const ColoredGraph& graph);

// Canonical form over traversals rooted at the given negative vertex only;
// isomorphisms must then map the root to the root.
CanonicalForm canonical_form_rooted_negative(const ColoredGraph& graph, int negative_root);

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b);

}  // namespace cgraph
