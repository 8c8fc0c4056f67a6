#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cgraph/colored_graph.hpp"
#include "cgraph/random.hpp"

namespace cgraph {

// Colored rooted (D+1)-ary tree. Each node has D+1 slots; the child in slot c
// has color c and the root has color 0. Empty slots are leaves.
class MelonTree {
public:
    explicit MelonTree(int dimension = 1);

    // Builds a tree from its preorder node/leaf sequence of length (D+1)p+1.
    static MelonTree from_preorder(int dimension, const std::vector<char>& internal);

    int dimension() const { return dimension_; }
    int size() const { return static_cast<int>(color_.size()); }
    bool empty() const { return color_.empty(); }
    int root() const { return root_; }

    Color color(int node) const { return color_[static_cast<std::size_t>(node)]; }
    int parent(int node) const { return parent_[static_cast<std::size_t>(node)]; }
    int child(int node, Color slot) const { return children_[slot_index(node, slot)]; }
    // Root has depth 1 (one letter in its word).
    int depth(int node) const;

    // Replaces the leaf in `slot` of `parent` by a new node of color `slot`;
    // parent = -1 fills the empty root slot. Returns the new node id.
    int insert(int parent, Color slot);

    // Same shape with nodes renumbered in preorder.
    MelonTree normalized() const;
    // Nodes in preorder.
    std::vector<int> preorder() const;
    // Preorder node/leaf flags.
    std::vector<char> preorder_code() const;
    std::string code_string() const;

    friend bool operator==(const MelonTree& a, const MelonTree& b);

private:
    std::size_t slot_index(int node, Color slot) const {
        return static_cast<std::size_t>(node) * static_cast<std::size_t>(dimension_ + 1) + static_cast<std::size_t>(slot);
    }

    int dimension_ = 1;
    int root_ = -1;
    std::vector<Color> color_;
    std::vector<int> parent_;
    std::vector<int> children_;
};

mpz_class count_melonic(int dimension, int p);

struct CountTable {
    int dimension = 0;
    std::vector<mpz_class> counts;  // counts[p], p = 0..pmax
};

// Computed from the functional equation G = 1 + z G^{D+1} alone.
CountTable count_table(int dimension, int pmax);

// Every tree with p nodes, in lexicographic order of preorder codes.
std::vector<MelonTree> all_trees(int dimension, int p);

MelonTree sample_uniform(int dimension, int p, Rng& rng);
MelonTree sample_uniform(int dimension, int p, std::uint64_t seed);

// Rooted melonic open graph. Node N gives positive vertex N (white) and
// negative vertex N (black); the positive boundary vertex is p and the
// negative boundary vertex (the root leg) is p. Requires a nonempty tree.
ColoredGraph tree_to_graph(const MelonTree& tree);
// Closed graph obtained by joining the two boundary legs.
ColoredGraph tree_to_closed_graph(const MelonTree& tree);

class NotMelonic : public std::invalid_argument {
public:
    NotMelonic(const std::string& what, long long omega) : std::invalid_argument(what), omega_(omega) {}
    long long omega() const { return omega_; }

private:
    long long omega_;
};

// Inverse of tree_to_graph up to vertex relabelling; requires D >= 2 and an
// open graph with one positive and one negative boundary vertex of color 0.
MelonTree graph_to_tree(const ColoredGraph& rooted);

struct Word {
    int dimension = 1;
    std::vector<std::uint8_t> letters;  // letters[0] is the root letter 0

    std::string to_string() const;  // "0;u1u2..." (comma separated when D > 9)
    static Word parse(int dimension, const std::string& text);
};

Word word_of(const MelonTree& tree, int node);
int tree_depth(const Word& word);
int depth(const Word& word);
// Depth of the word (root; suffix...) where `root` plays the part of the letter 0.
int depth_from(int dimension, Color root, std::span<const std::uint8_t> suffix);

mpq_class lambda_delta(int dimension);
// Lambda(w)/n for a word of n uniform letters.
double lambda_ratio_sample(int dimension, std::int64_t n, Rng& rng);

int lowest_common_ancestor(const MelonTree& tree, int a, int b);
int tree_distance(const MelonTree& tree, int a, int b);

struct PairEstimate {
    int estimate = 0;
    int lower = 0;
    int upper = 0;
    int ancestor = -1;
};
PairEstimate pair_distance_estimate(const MelonTree& tree, int a, int b);

// Graph distance between internal vertices of the melonic ball: each tree node
// is a D-bubble of the closed graph (the one missing the node's color that
// contains its white vertex); bubbles of different species are adjacent when
// they share a graph vertex.
class BallMetric {
public:
    explicit BallMetric(const MelonTree& tree);
    int bubble_of(int node) const { return node_bubble_[static_cast<std::size_t>(node)]; }
    int bubble_count() const { return static_cast<int>(offsets_.size()) - 1; }
    // Distances from a node to every node (indexed by node).
    std::vector<int> distances_from(int node) const;
    int distance(int a, int b) const;

private:
    std::vector<int> node_bubble_;
    std::vector<int> offsets_;  // CSR adjacency
    std::vector<int> targets_;
};

// Distance in the closed colored graph between the white vertices of two nodes.
std::vector<int> graph_distances_from(const MelonTree& tree, int node);

// Contour walk of the defoliated tree: f(0) = 0 at the base, the root is at
// height 1, length 2p+1.
std::vector<int> contour_walk(const MelonTree& tree);
// Node visited at each contour time (-1 for the base).
std::vector<int> contour_nodes(const MelonTree& tree);
int walk_distance(std::span<const int> f, int s, int t);

}  // namespace cgraph
