#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cgraph/bubbles.hpp"
#include "cgraph/colored_graph.hpp"

namespace cgraph {

// A closed D-colored graph (stored with dimension D-1, colors 0..D-1) with a
// distinguished negative vertex.
struct MarkedGraph {
    ColoredGraph graph;
    int mark = 0;
};

MarkedGraph make_marked(ColoredGraph graph, int mark);

// Re-indexes a D-bubble of a (D+1)-colored graph as a marked D-colored graph;
// `negative_vertex` is a negative vertex of the parent lying in the bubble.
MarkedGraph marked_bubble(const ColoredGraph& parent, const Bubble& bubble, int negative_vertex);

// Key identifying the isomorphism class of a marked graph (mark preserved).
std::string marked_key(const MarkedGraph& marked);

struct StarContraction {
    ColoredGraph graph;
    // Positions in the result; -1 for the deleted vertex.
    std::vector<int> first_positive, first_negative;
    std::vector<int> second_positive, second_negative;
};

// Deletes positive v1 of b1 and negative vb2 of b2 and joins their dangling
// half-edges color by color. Positives: b1's (minus v1) then b2's; negatives:
// b1's then b2's (minus vb2).
StarContraction star_contract(const ColoredGraph& b1, int v1, const ColoredGraph& b2, int vb2);

class GraphChain {
public:
    struct Term {
        MarkedGraph representative;
        mpq_class coefficient;
    };

    GraphChain() = default;
    static GraphChain basis(const MarkedGraph& g);

    void add(const MarkedGraph& g, const mpq_class& coefficient);
    void add(const GraphChain& other, const mpq_class& factor = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<std::string, Term>& terms() const { return terms_; }
    mpq_class coefficient(const MarkedGraph& g) const;

    friend GraphChain operator+(GraphChain a, const GraphChain& b) {
        a.add(b);
        return a;
    }
    friend GraphChain operator-(GraphChain a, const GraphChain& b) {
        a.add(b, -1);
        return a;
    }
    friend GraphChain operator*(const mpq_class& s, const GraphChain& a) {
        GraphChain out;
        out.add(a, s);
        return out;
    }
    friend bool operator==(const GraphChain& a, const GraphChain& b);

    // List of [canonical marked serialization, "num/den"] pairs.
    std::string to_json() const;

private:
    std::map<std::string, Term> terms_;
};

GraphChain bracket(const MarkedGraph& l1, const MarkedGraph& l2);
GraphChain bracket(const GraphChain& a, const GraphChain& b);

bool is_melonic_closed(const GraphChain& chain);

// All marked melonic D-colored graphs (stored dimension D-1) with at most
// max_vertices vertices, one per isomorphism class.
std::vector<MarkedGraph> marked_melonic_basis(int colors, int max_vertices);

}  // namespace cgraph
