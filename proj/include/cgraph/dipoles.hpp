#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgraph/colored_graph.hpp"

namespace cgraph {

struct Dipole {
    int positive = 0;
    int negative = 0;
    ColorSet colors;              // the shared colors
    int k = 0;
    int positive_bubble = 0;      // component of the complementary-color bubble through v
    int negative_bubble = 0;      // ... through v-bar
    std::uint64_t graph_fingerprint = 0;
};

class StaleDipole : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CreationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<Dipole> find_dipoles(const ColoredGraph& graph, int k);

// Rejects dipoles that no longer describe the graph.
ColoredGraph contract(const ColoredGraph& graph, const Dipole& dipole);

struct CreationSpec {
    ColorSet colors;             // the k shared colors of the new pair
    std::vector<int> cut_edges;  // one edge index per color outside `colors`
};

struct Creation {
    ColoredGraph graph;
    Dipole dipole;  // the new pair: positive = old P, negative = old N
};

// New vertices are appended (positive index P, negative index N); cut edges
// are removed and the new edges appended.
Creation create(const ColoredGraph& graph, const CreationSpec& spec);

// Inserting an elementary melon of color c on edge e (a D-dipole creation).
Creation insert_melon(const ColoredGraph& graph, int edge_index);

enum class TreePolicy { breadth_first, randomized };

struct RoutingStep {
    Color color = 0;
    int positive = 0;  // vertex ids of the input graph
    int negative = 0;
    int from_bubble = 0;  // connectivity-graph nodes joined by this edge
    int to_bubble = 0;
};

struct RoutingPass {
    Color color = 0;
    int bubble_count = 0;
    int root_bubble = 0;
    int first_step = 0;  // index into steps
    int step_count = 0;
};

struct RoutingLog {
    std::vector<RoutingStep> steps;
    std::vector<RoutingPass> passes;

    std::string to_json() const;
    static RoutingLog from_json(const std::string& text);
};

struct RoutingResult {
    ColoredGraph core;
    RoutingLog log;
    std::vector<int> positive_origin;  // core positive -> input positive
    std::vector<int> negative_origin;
};

// seed is used only by the randomized policy.
RoutingResult route_to_core(const ColoredGraph& graph, TreePolicy policy = TreePolicy::breadth_first,
                            std::uint64_t seed = 0);

// Re-applies the logged contractions one by one with contract(), calling
// visit(step_index, graph_after_step). Returns the final graph.
ColoredGraph replay_routing(const ColoredGraph& graph, const RoutingLog& log,
                            const std::function<void(std::size_t, const ColoredGraph&, const Dipole&)>& visit = {});

bool is_core(const ColoredGraph& graph);

struct MelonRemoval {
    int positive = 0;  // input vertex ids
    int negative = 0;
    Color open_color = 0;  // the single color not shared by the pair
};

struct MelonicReduction {
    bool melonic = false;
    std::vector<MelonRemoval> removals;
    int remaining_vertices = 0;
};

MelonicReduction reduce_melons(const ColoredGraph& graph);
bool is_melonic(const ColoredGraph& graph);

}  // namespace cgraph
