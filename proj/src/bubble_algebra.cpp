#include "cgraph/bubble_algebra.hpp"

#include <set>
#include <stdexcept>

#include <json.hpp>

#include "cgraph/canonical.hpp"
#include "cgraph/dipoles.hpp"

namespace cgraph {

MarkedGraph make_marked(ColoredGraph graph, int mark) {
    if (graph.is_open()) throw std::invalid_argument("make_marked: closed graph required");
    if (mark < 0 || mark >= graph.negative_count()) throw std::invalid_argument("make_marked: mark is not a negative vertex");
    return {std::move(graph), mark};
}

MarkedGraph marked_bubble(const ColoredGraph& parent, const Bubble& bubble, int negative_vertex) {
    if (bubble.colors.size() != parent.dimension())
        throw std::invalid_argument("marked_bubble: expected a D-bubble");
    auto ext = extract_bubble(parent, bubble);
    for (std::size_t k = 0; k < ext.negative_of.size(); ++k)
        if (ext.negative_of[k] == negative_vertex) return make_marked(std::move(ext.graph), static_cast<int>(k));
    throw std::invalid_argument("marked_bubble: vertex not in bubble");
}

std::string marked_key(const MarkedGraph& m) { return canonical_form_rooted_negative(m.graph, m.mark).key; }

StarContraction star_contract(const ColoredGraph& b1, int v1, const ColoredGraph& b2, int vb2) {
    if (b1.dimension() != b2.dimension()) throw std::invalid_argument("star_contract: dimension mismatch");
    if (v1 < 0 || v1 >= b1.positive_count()) throw std::invalid_argument("star_contract: v1 is not a positive vertex of B1");
    if (vb2 < 0 || vb2 >= b2.negative_count()) throw std::invalid_argument("star_contract: vb2 is not a negative vertex of B2");
    StarContraction out;
    const int P1 = b1.positive_count(), N1 = b1.negative_count();
    out.first_positive.assign(static_cast<std::size_t>(P1), -1);
    out.first_negative.assign(static_cast<std::size_t>(N1), -1);
    out.second_positive.assign(static_cast<std::size_t>(b2.positive_count()), -1);
    out.second_negative.assign(static_cast<std::size_t>(b2.negative_count()), -1);
    int np = 0, nn = 0;
    for (int v = 0; v < P1; ++v)
        if (v != v1) out.first_positive[static_cast<std::size_t>(v)] = np++;
    for (int v = 0; v < b2.positive_count(); ++v) out.second_positive[static_cast<std::size_t>(v)] = np++;
    for (int n = 0; n < N1; ++n) out.first_negative[static_cast<std::size_t>(n)] = nn++;
    for (int n = 0; n < b2.negative_count(); ++n)
        if (n != vb2) out.second_negative[static_cast<std::size_t>(n)] = nn++;

    std::vector<Edge> edges;
    for (const Edge& e : b1.edges())
        if (e.positive != v1)
            edges.push_back({out.first_positive[static_cast<std::size_t>(e.positive)],
                             out.first_negative[static_cast<std::size_t>(e.negative)], e.color});
    for (const Edge& e : b2.edges())
        if (e.negative != vb2)
            edges.push_back({out.second_positive[static_cast<std::size_t>(e.positive)],
                             out.second_negative[static_cast<std::size_t>(e.negative)], e.color});
    for (Color c = 0; c <= b1.dimension(); ++c) {
        int a = b1.positive_neighbor(v1, c);   // negative of B1
        int b = b2.negative_neighbor(vb2, c);  // positive of B2
        if (a < 0 || b < 0) throw std::invalid_argument("star_contract: vertex lacks an edge of some color");
        edges.push_back({out.second_positive[static_cast<std::size_t>(b)], out.first_negative[static_cast<std::size_t>(a)], c});
    }
    out.graph = ColoredGraph(b1.dimension(), np, nn, std::move(edges));
    return out;
}

GraphChain GraphChain::basis(const MarkedGraph& g) {
    GraphChain c;
    c.add(g, 1);
    return c;
}

void GraphChain::add(const MarkedGraph& g, const mpq_class& coefficient) {
    if (coefficient == 0) return;
    std::string key = marked_key(g);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Term{g, coefficient});
        return;
    }
    it->second.coefficient += coefficient;
    if (it->second.coefficient == 0) terms_.erase(it);
}

void GraphChain::add(const GraphChain& other, const mpq_class& factor) {
    if (factor == 0) return;
    for (const auto& [key, term] : other.terms_) {
        mpq_class delta = term.coefficient * factor;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, Term{term.representative, delta});
            continue;
        }
        it->second.coefficient += delta;
        if (it->second.coefficient == 0) terms_.erase(it);
    }
}

mpq_class GraphChain::coefficient(const MarkedGraph& g) const {
    auto it = terms_.find(marked_key(g));
    return it == terms_.end() ? mpq_class(0) : it->second.coefficient;
}

bool operator==(const GraphChain& a, const GraphChain& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    for (; i != a.terms_.end(); ++i, ++j)
        if (i->first != j->first || i->second.coefficient != j->second.coefficient) return false;
    return true;
}

std::string GraphChain::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, term] : terms_) arr.push_back({nlohmann::json::parse(key), term.coefficient.get_str()});
    return arr.dump();
}

GraphChain bracket(const MarkedGraph& l1, const MarkedGraph& l2) {
    if (l1.graph.dimension() != l2.graph.dimension()) throw std::invalid_argument("bracket: dimension mismatch");
    GraphChain out;
    for (int v = 0; v < l1.graph.positive_count(); ++v) {
        auto s = star_contract(l1.graph, v, l2.graph, l2.mark);
        out.add(MarkedGraph{std::move(s.graph), s.first_negative[static_cast<std::size_t>(l1.mark)]}, 1);
    }
    for (int v = 0; v < l2.graph.positive_count(); ++v) {
        auto s = star_contract(l2.graph, v, l1.graph, l1.mark);
        out.add(MarkedGraph{std::move(s.graph), s.first_negative[static_cast<std::size_t>(l2.mark)]}, -1);
    }
    return out;
}

GraphChain bracket(const GraphChain& a, const GraphChain& b) {
    GraphChain out;
    for (const auto& [ka, ta] : a.terms())
        for (const auto& [kb, tb] : b.terms()) out.add(bracket(ta.representative, tb.representative), ta.coefficient * tb.coefficient);
    return out;
}

bool is_melonic_closed(const GraphChain& chain) {
    for (const auto& [key, term] : chain.terms())
        if (!is_melonic(term.representative.graph)) return false;
    return true;
}

std::vector<MarkedGraph> marked_melonic_basis(int colors, int max_vertices) {
    if (colors < 2) throw std::invalid_argument("marked_melonic_basis: need at least 2 colors");
    const int dim = colors - 1;
    std::vector<ColoredGraph> level{supermelon(dim)};
    std::vector<ColoredGraph> all = level;
    std::set<std::string> seen{canonical_form(level.front()).key};
    while (!level.empty() && level.front().vertex_count() + 2 <= max_vertices) {
        std::vector<ColoredGraph> next;
        for (const auto& g : level)
            for (int e = 0; e < g.edge_count(); ++e) {
                auto grown = insert_melon(g, e).graph;
                auto cf = canonical_form(grown);
                if (seen.insert(cf.key).second) next.push_back(std::move(cf.graph));
            }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    std::vector<MarkedGraph> out;
    std::set<std::string> marked_seen;
    for (const auto& g : all)
        for (int n = 0; n < g.negative_count(); ++n) {
            MarkedGraph m{g, n};
            if (marked_seen.insert(marked_key(m)).second) out.push_back(std::move(m));
        }
    return out;
}

}  // namespace cgraph
