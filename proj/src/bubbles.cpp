#include "cgraph/bubbles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace cgraph {

BubbleLabels bubble_labels(const ColoredGraph& g, ColorSet colors) {
    if (!colors.subset_of(ColorSet::all(g.dimension())))
        throw std::invalid_argument("bubble_labels: colors outside 0..D");
    const int P = g.positive_count();
    const int V = g.vertex_count();
    const auto cols = colors.colors();
    BubbleLabels out;
    out.colors = colors;
    out.label.assign(static_cast<std::size_t>(V), -1);
    std::vector<int> stack;
    for (int s = 0; s < V; ++s) {
        if (out.label[static_cast<std::size_t>(s)] >= 0) continue;
        int id = out.count++;
        out.label[static_cast<std::size_t>(s)] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (Color c : cols) {
                int y = x < P ? g.positive_neighbor(x, c) : g.negative_neighbor(x - P, c);
                if (y < 0) continue;
                if (x < P) y += P;
                if (out.label[static_cast<std::size_t>(y)] < 0) {
                    out.label[static_cast<std::size_t>(y)] = id;
                    stack.push_back(y);
                }
            }
        }
    }
    return out;
}

std::vector<Bubble> enumerate_bubbles(const ColoredGraph& g, ColorSet colors) {
    auto lab = bubble_labels(g, colors);
    std::vector<Bubble> out(static_cast<std::size_t>(lab.count));
    for (int i = 0; i < lab.count; ++i) {
        out[static_cast<std::size_t>(i)].colors = colors;
        out[static_cast<std::size_t>(i)].component = i;
    }
    for (int x = 0; x < g.vertex_count(); ++x) out[static_cast<std::size_t>(lab.label[static_cast<std::size_t>(x)])].vertices.push_back(x);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (!colors.contains(ed.color)) continue;
        out[static_cast<std::size_t>(lab.label[static_cast<std::size_t>(ed.positive)])].edges.push_back(e);
    }
    return out;
}

std::vector<long long> bubble_counts(const ColoredGraph& g) {
    const int D = g.dimension();
    std::vector<long long> counts(static_cast<std::size_t>(D + 2), 0);
    for (int d = 0; d <= D + 1; ++d)
        for (ColorSet s : subsets_of_size(D, d)) counts[static_cast<std::size_t>(d)] += bubble_labels(g, s).count;
    counts.pop_back();  // d = D+1 is the whole graph, not reported
    return counts;
}

ExtractedBubble extract_bubble(const ColoredGraph& g, const Bubble& b) {
    ExtractedBubble out;
    out.color_of = b.colors.colors();
    std::vector<int> color_rank(static_cast<std::size_t>(g.color_count()), -1);
    for (std::size_t i = 0; i < out.color_of.size(); ++i) color_rank[static_cast<std::size_t>(out.color_of[i])] = static_cast<int>(i);
    const int P = g.positive_count();
    std::vector<int> pos_new(static_cast<std::size_t>(P), -1), neg_new(static_cast<std::size_t>(g.negative_count()), -1);
    for (int x : b.vertices) {
        if (x < P) {
            pos_new[static_cast<std::size_t>(x)] = static_cast<int>(out.positive_of.size());
            out.positive_of.push_back(x);
        } else {
            neg_new[static_cast<std::size_t>(x - P)] = static_cast<int>(out.negative_of.size());
            out.negative_of.push_back(x - P);
        }
    }
    std::vector<Edge> edges;
    for (int e : b.edges) {
        const Edge& ed = g.edge(e);
        edges.push_back({pos_new[static_cast<std::size_t>(ed.positive)], neg_new[static_cast<std::size_t>(ed.negative)],
                         color_rank[static_cast<std::size_t>(ed.color)]});
    }
    out.graph = ColoredGraph(static_cast<int>(out.color_of.size()) - 1, static_cast<int>(out.positive_of.size()),
                             static_cast<int>(out.negative_of.size()), std::move(edges));
    return out;
}

std::vector<int> DualComplex::simplices_of_dimension(int d) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < simplices.size(); ++i)
        if (simplices[i].dimension == d) out.push_back(static_cast<int>(i));
    return out;
}

DualComplex dual_complex(const ColoredGraph& g) {
    const int D = g.dimension();
    if (D < 1) throw std::invalid_argument("dual_complex: dimension must be at least 1");
    const ColorSet full = ColorSet::all(D);
    DualComplex out;
    out.dimension = D;

    // Ground set: D-bubbles, one species per missing color.
    std::vector<BubbleLabels> top(static_cast<std::size_t>(D + 1));
    std::vector<int> ground_offset(static_cast<std::size_t>(D + 1), 0);
    for (Color i = 0; i <= D; ++i) {
        top[static_cast<std::size_t>(i)] = bubble_labels(g, full.without(i));
        ground_offset[static_cast<std::size_t>(i)] = static_cast<int>(out.ground.size());
        for (int r = 0; r < top[static_cast<std::size_t>(i)].count; ++r) out.ground.push_back({i, r});
    }

    // One simplex per bubble with at most D colors; index by (mask, component).
    std::map<std::uint32_t, BubbleLabels> labels;
    std::map<std::uint32_t, int> offset;
    for (int size = D; size >= 0; --size) {
        for (ColorSet s : subsets_of_size(D, size)) {
            auto lab = bubble_labels(g, s);
            offset[s.mask()] = static_cast<int>(out.simplices.size());
            std::vector<int> representative(static_cast<std::size_t>(lab.count), -1);
            for (int x = 0; x < g.vertex_count(); ++x) {
                int l = lab.label[static_cast<std::size_t>(x)];
                if (representative[static_cast<std::size_t>(l)] < 0) representative[static_cast<std::size_t>(l)] = x;
            }
            ColorSet missing = s.complement(D);
            for (int r = 0; r < lab.count; ++r) {
                Simplex sx;
                sx.dimension = D - size;
                sx.bubble_colors = s;
                sx.bubble_component = r;
                sx.colors = missing;
                int x = representative[static_cast<std::size_t>(r)];
                for (Color i : missing.colors())
                    sx.vertices.push_back(ground_offset[static_cast<std::size_t>(i)] +
                                          top[static_cast<std::size_t>(i)].label[static_cast<std::size_t>(x)]);
                std::sort(sx.vertices.begin(), sx.vertices.end());
                if (sx.dimension >= 1) {
                    for (Color i : missing.colors()) {
                        ColorSet bigger = s.with(i);
                        const auto& bl = labels.at(bigger.mask());
                        sx.faces.push_back(offset.at(bigger.mask()) + bl.label[static_cast<std::size_t>(x)]);
                    }
                }
                out.simplices.push_back(std::move(sx));
            }
            labels.emplace(s.mask(), std::move(lab));
        }
    }
    return out;
}

PseudomanifoldReport check_pseudomanifold(const DualComplex& cx) {
    PseudomanifoldReport rep;
    const int D = cx.dimension;
    const int n = static_cast<int>(cx.simplices.size());

    // Downward closure: every codimension-one subset of a simplex is a listed face.
    for (int s = 0; s < n; ++s) {
        const Simplex& sx = cx.simplices[static_cast<std::size_t>(s)];
        bool ok = static_cast<int>(sx.vertices.size()) == sx.dimension + 1 && sx.dimension <= D;
        if (ok && sx.dimension >= 1) {
            std::set<std::vector<int>> want;
            for (std::size_t k = 0; k < sx.vertices.size(); ++k) {
                auto sub = sx.vertices;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
                want.insert(sub);
            }
            std::set<std::vector<int>> have;
            for (int f : sx.faces) {
                if (f < 0 || f >= n) {
                    ok = false;
                    break;
                }
                const Simplex& fx = cx.simplices[static_cast<std::size_t>(f)];
                if (fx.dimension != sx.dimension - 1) ok = false;
                have.insert(fx.vertices);
            }
            if (have != want) ok = false;
        }
        if (!ok) rep.non_closed_witness.push_back(s);
    }
    rep.downward_closed = rep.non_closed_witness.empty();

    // Purity: every simplex lies under some D-simplex.
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s)
        if (cx.simplices[static_cast<std::size_t>(s)].dimension == D) {
            covered[static_cast<std::size_t>(s)] = 1;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (int f : cx.simplices[static_cast<std::size_t>(s)].faces)
            if (f >= 0 && f < n && !covered[static_cast<std::size_t>(f)]) {
                covered[static_cast<std::size_t>(f)] = 1;
                stack.push_back(f);
            }
    }
    for (int s = 0; s < n; ++s)
        if (!covered[static_cast<std::size_t>(s)] || cx.simplices[static_cast<std::size_t>(s)].dimension > D)
            rep.non_pure_witness.push_back(s);
    rep.pure = rep.non_pure_witness.empty();

    // Non-branching and strong connectivity via facet/ridge incidence.
    std::map<int, std::vector<int>> ridge_facets;
    std::vector<int> facets;
    for (int s = 0; s < n; ++s) {
        const Simplex& sx = cx.simplices[static_cast<std::size_t>(s)];
        if (sx.dimension != D) continue;
        facets.push_back(s);
        for (int f : sx.faces) ridge_facets[f].push_back(s);
    }
    for (const auto& [ridge, fs] : ridge_facets)
        if (fs.size() > 2) rep.branching_witness.push_back(ridge);
    rep.non_branching = rep.branching_witness.empty();

    std::map<int, int> facet_index;
    for (std::size_t i = 0; i < facets.size(); ++i) facet_index[facets[i]] = static_cast<int>(i);
    std::vector<int> parent(facets.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& [ridge, fs] : ridge_facets)
        for (std::size_t k = 1; k < fs.size(); ++k) {
            int a = find(facet_index[fs[0]]), b = find(facet_index[fs[k]]);
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++rep.facet_components;
    rep.strongly_connected = rep.facet_components == 1;
    return rep;
}

std::string export_complex(const DualComplex& cx) {
    using nlohmann::json;
    json facets = json::array();
    std::map<int, std::vector<int>> ridge_facets;
    std::map<int, int> facet_number;
    for (std::size_t s = 0; s < cx.simplices.size(); ++s) {
        const Simplex& sx = cx.simplices[s];
        if (sx.dimension != cx.dimension) continue;
        facet_number[static_cast<int>(s)] = static_cast<int>(facets.size());
        facets.push_back(sx.vertices);
        for (int f : sx.faces) ridge_facets[f].push_back(static_cast<int>(s));
    }
    json ridges = json::array();
    for (const auto& [ridge, fs] : ridge_facets) {
        json r;
        r["vertices"] = cx.simplices[static_cast<std::size_t>(ridge)].vertices;
        r["color"] = cx.simplices[static_cast<std::size_t>(ridge)].bubble_colors.colors();
        json adj = json::array();
        for (int f : fs) adj.push_back(facet_number[f]);
        r["facets"] = adj;
        ridges.push_back(r);
    }
    json ground = json::array();
    for (const auto& gv : cx.ground) ground.push_back(json::array({gv.missing_color, gv.component}));
    json doc;
    doc["dimension"] = cx.dimension;
    doc["ground"] = ground;
    doc["facets"] = facets;
    doc["ridges"] = ridges;
    return doc.dump();
}

}  // namespace cgraph
