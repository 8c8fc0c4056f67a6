#pragma once

#include <vector>

#include "cgraph/colored_graph.hpp"

namespace cgraph {

struct Jacket {
    std::vector<Color> cycle;  // starts at the smallest color; second entry < last
    int face_count = 0;
    int edge_count = 0;
    int vertex_count = 0;
    int genus = 0;

    // Unordered color pairs (a < b) of consecutive cycle entries.
    std::vector<std::pair<Color, Color>> face_pairs() const;
};

// Number of bicolored cycles (faces) with colors i, j.
int count_faces(const ColoredGraph& graph, Color i, Color j);
// Table faces[i][j] for all pairs.
std::vector<std::vector<int>> face_table(const ColoredGraph& graph);

// Canonical representative of a cyclic color sequence up to rotation and reversal.
std::vector<Color> canonical_cycle(std::vector<Color> cycle);

// All D!/2 cycles on {0..D} in canonical form, lexicographic order. Empty for D < 2.
std::vector<std::vector<Color>> jacket_cycles(int dimension);

std::vector<Jacket> enumerate_jackets(const ColoredGraph& graph);

// (2 - F + E - V) / 2; throws std::logic_error if not a non-negative integer.
int genus_from_counts(int faces, int edges, int vertices);

// Sum of jacket genera; 0 for D < 2.
long long degree(const ColoredGraph& graph);

struct BubbleJacket {
    int component = 0;         // component id of the D-bubble (missing color fixed)
    std::vector<Color> cycle;  // cycle on the bubble's colors, canonical form
    int genus = 0;
};

// Deletes color i from the jacket's cycle and restricts to each D-bubble missing i.
std::vector<BubbleJacket> bubble_jackets(const ColoredGraph& graph, const Jacket& jacket, Color i);

// Residuals of the degree relations, scaled by 2 so they are integral.
struct DegreeIdentities {
    long long omega = 0;
    long long bubble_degree_sum = 0;  // sum over all D-bubbles of their degree
    long long top_bubble_count = 0;   // number of D-bubbles over all species
    long long bubble_identity_residual2 = 0;  // 2*omega - (D-1)!(p + D - B) - 2*sum
    long long inequality_slack = 0;           // omega - D * sum over bubbles missing color D
};

DegreeIdentities degree_identities(const ColoredGraph& graph);

long long factorial(int n);

// 2 * (D-1)!/2 * ((D+1)k - k^2 - D), the predicted drop of 2*omega under a k-dipole contraction.
long long contraction_drop2(int dimension, int k);

}  // namespace cgraph
