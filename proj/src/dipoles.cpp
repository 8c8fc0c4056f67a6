#include "cgraph/dipoles.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "cgraph/bubbles.hpp"
#include "cgraph/random.hpp"

namespace cgraph {

namespace {

ColorSet shared_colors(const ColoredGraph& g, int v, int n) {
    ColorSet s;
    for (Color c = 0; c <= g.dimension(); ++c)
        if (g.positive_neighbor(v, c) == n) s = s.with(c);
    return s;
}

void require_closed(const ColoredGraph& g, const char* who) {
    if (g.is_open()) throw std::invalid_argument(std::string(who) + ": closed graph required");
}

// Mutable neighbor tables with deletion flags; vertex ids stay those of the input.
struct WorkGraph {
    int C = 0;
    std::vector<int> pn;  // positive v, color c -> negative neighbor
    std::vector<int> np;  // negative n, color c -> positive neighbor
    std::vector<char> palive, nalive;

    explicit WorkGraph(const ColoredGraph& g)
        : C(g.color_count()),
          pn(static_cast<std::size_t>(g.positive_count() * C)),
          np(static_cast<std::size_t>(g.negative_count() * C)),
          palive(static_cast<std::size_t>(g.positive_count()), 1),
          nalive(static_cast<std::size_t>(g.negative_count()), 1) {
        for (int v = 0; v < g.positive_count(); ++v)
            for (Color c = 0; c < C; ++c) pn[idx(v, c)] = g.positive_neighbor(v, c);
        for (int n = 0; n < g.negative_count(); ++n)
            for (Color c = 0; c < C; ++c) np[idx(n, c)] = g.negative_neighbor(n, c);
    }
    std::size_t idx(int v, Color c) const { return static_cast<std::size_t>(v * C + c); }
    int P() const { return static_cast<int>(palive.size()); }
    int N() const { return static_cast<int>(nalive.size()); }

    // Removes v, n and reconnects the half-edges of every color in `open`.
    void remove_pair(int v, int n, ColorSet open) {
        for (Color c : open.colors()) {
            int a = pn[idx(v, c)];
            int b = np[idx(n, c)];
            pn[idx(b, c)] = a;
            np[idx(a, c)] = b;
        }
        palive[static_cast<std::size_t>(v)] = 0;
        nalive[static_cast<std::size_t>(n)] = 0;
    }

    int alive_positive_count() const { return static_cast<int>(std::count(palive.begin(), palive.end(), 1)); }

    // Component labels over alive vertices for a color set; global ids as in the input.
    std::vector<int> labels(ColorSet colors, int& count) const {
        const int Pn = P();
        std::vector<int> lab(static_cast<std::size_t>(Pn + N()), -1);
        auto cols = colors.colors();
        count = 0;
        std::vector<int> stack;
        for (int s = 0; s < Pn + N(); ++s) {
            bool alive = s < Pn ? palive[static_cast<std::size_t>(s)] : nalive[static_cast<std::size_t>(s - Pn)];
            if (!alive || lab[static_cast<std::size_t>(s)] >= 0) continue;
            int id = count++;
            lab[static_cast<std::size_t>(s)] = id;
            stack.push_back(s);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (Color c : cols) {
                    int y = x < Pn ? Pn + pn[idx(x, c)] : np[idx(x - Pn, c)];
                    if (lab[static_cast<std::size_t>(y)] < 0) {
                        lab[static_cast<std::size_t>(y)] = id;
                        stack.push_back(y);
                    }
                }
            }
        }
        return lab;
    }

    ColoredGraph build(int D, std::vector<int>& pos_origin, std::vector<int>& neg_origin) const {
        std::vector<int> pnew(palive.size(), -1), nnew(nalive.size(), -1);
        pos_origin.clear();
        neg_origin.clear();
        for (int v = 0; v < P(); ++v)
            if (palive[static_cast<std::size_t>(v)]) {
                pnew[static_cast<std::size_t>(v)] = static_cast<int>(pos_origin.size());
                pos_origin.push_back(v);
            }
        for (int n = 0; n < N(); ++n)
            if (nalive[static_cast<std::size_t>(n)]) {
                nnew[static_cast<std::size_t>(n)] = static_cast<int>(neg_origin.size());
                neg_origin.push_back(n);
            }
        std::vector<Edge> edges;
        for (Color c = 0; c < C; ++c)
            for (int v : pos_origin) edges.push_back({pnew[static_cast<std::size_t>(v)], nnew[static_cast<std::size_t>(pn[idx(v, c)])], c});
        return ColoredGraph(D, static_cast<int>(pos_origin.size()), static_cast<int>(neg_origin.size()), std::move(edges));
    }
};

}  // namespace

std::vector<Dipole> find_dipoles(const ColoredGraph& g, int k) {
    require_closed(g, "find_dipoles");
    const int D = g.dimension();
    if (k < 1 || k > D) throw std::invalid_argument("find_dipoles: k must lie in 1..D");
    std::map<std::uint32_t, BubbleLabels> cache;
    std::vector<Dipole> out;
    const std::uint64_t fp = g.fingerprint();
    for (int v = 0; v < g.positive_count(); ++v) {
        std::vector<int> seen;
        for (Color c = 0; c <= D; ++c) {
            int n = g.positive_neighbor(v, c);
            if (std::find(seen.begin(), seen.end(), n) != seen.end()) continue;
            seen.push_back(n);
            ColorSet shared = shared_colors(g, v, n);
            if (shared.size() != k) continue;
            ColorSet rest = shared.complement(D);
            auto it = cache.find(rest.mask());
            if (it == cache.end()) it = cache.emplace(rest.mask(), bubble_labels(g, rest)).first;
            int a = it->second.label[static_cast<std::size_t>(v)];
            int b = it->second.label[static_cast<std::size_t>(g.positive_count() + n)];
            if (a == b) continue;
            out.push_back({v, n, shared, k, a, b, fp});
        }
    }
    std::sort(out.begin(), out.end(), [](const Dipole& x, const Dipole& y) {
        return std::pair(x.positive, x.negative) < std::pair(y.positive, y.negative);
    });
    return out;
}

ColoredGraph contract(const ColoredGraph& g, const Dipole& d) {
    require_closed(g, "contract");
    if (d.graph_fingerprint != g.fingerprint()) throw StaleDipole("contract: dipole refers to a different graph state");
    if (d.positive < 0 || d.positive >= g.positive_count() || d.negative < 0 || d.negative >= g.negative_count())
        throw StaleDipole("contract: dipole vertices out of range");
    const int D = g.dimension();
    ColorSet shared = shared_colors(g, d.positive, d.negative);
    if (shared != d.colors || shared.size() != d.k || d.k < 1)
        throw StaleDipole("contract: vertices no longer share exactly the dipole colors");
    ColorSet rest = shared.complement(D);
    auto lab = bubble_labels(g, rest);
    if (lab.label[static_cast<std::size_t>(d.positive)] ==
        lab.label[static_cast<std::size_t>(g.positive_count() + d.negative)])
        throw StaleDipole("contract: vertices are not separated");

    const int v = d.positive, vb = d.negative;
    auto pmap = [v](int x) { return x > v ? x - 1 : x; };
    auto nmap = [vb](int x) { return x > vb ? x - 1 : x; };
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) {
        if (e.positive == v || e.negative == vb) continue;
        edges.push_back({pmap(e.positive), nmap(e.negative), e.color});
    }
    for (Color c : rest.colors()) {
        int a = g.positive_neighbor(v, c);
        int b = g.negative_neighbor(vb, c);
        edges.push_back({pmap(b), nmap(a), c});
    }
    return ColoredGraph(D, g.positive_count() - 1, g.negative_count() - 1, std::move(edges));
}

Creation create(const ColoredGraph& g, const CreationSpec& spec) {
    require_closed(g, "create");
    const int D = g.dimension();
    const int k = spec.colors.size();
    if (k < 1 || k > D) throw CreationError("create: number of shared colors must lie in 1..D");
    if (!spec.colors.subset_of(ColorSet::all(D))) throw CreationError("create: shared color out of range");
    ColorSet rest = spec.colors.complement(D);
    if (static_cast<int>(spec.cut_edges.size()) != rest.size())
        throw CreationError("create: expected one cut edge per color outside the shared set");
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    ColorSet covered;
    for (int e : spec.cut_edges) {
        if (e < 0 || e >= g.edge_count()) throw CreationError("create: cut edge index out of range");
        if (used[static_cast<std::size_t>(e)]) throw CreationError("create: the same edge is cut twice");
        used[static_cast<std::size_t>(e)] = 1;
        Color c = g.edge(e).color;
        if (!rest.contains(c)) throw CreationError("create: cut edge color " + std::to_string(c) + " is a shared color");
        if (covered.contains(c)) throw CreationError("create: two cut edges of color " + std::to_string(c));
        covered = covered.with(c);
    }
    const int v = g.positive_count(), vb = g.negative_count();
    std::vector<Edge> edges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!used[static_cast<std::size_t>(e)]) edges.push_back(g.edge(e));
    for (int e : spec.cut_edges) {
        const Edge& ed = g.edge(e);
        edges.push_back({v, ed.negative, ed.color});
        edges.push_back({ed.positive, vb, ed.color});
    }
    for (Color c : spec.colors.colors()) edges.push_back({v, vb, c});
    ColoredGraph out(D, v + 1, vb + 1, std::move(edges));
    auto lab = bubble_labels(out, rest);
    int a = lab.label[static_cast<std::size_t>(v)];
    int b = lab.label[static_cast<std::size_t>(out.positive_count() + vb)];
    if (a == b)
        throw CreationError("create: the new vertices lie in the same bubble of colors " + rest.to_string() +
                            "; the pair would not be a dipole");
    Dipole d{v, vb, spec.colors, k, a, b, out.fingerprint()};
    return {std::move(out), d};
}

Creation insert_melon(const ColoredGraph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count()) throw CreationError("insert_melon: edge index out of range");
    Color c = g.edge(edge_index).color;
    return create(g, {ColorSet::all(g.dimension()).without(c), {edge_index}});
}

std::string RoutingLog::to_json() const {
    using nlohmann::json;
    json steps_j = json::array();
    for (const auto& s : steps) steps_j.push_back({s.color, s.positive, s.negative, s.from_bubble, s.to_bubble});
    json passes_j = json::array();
    for (const auto& p : passes)
        passes_j.push_back({{"color", p.color}, {"bubble_count", p.bubble_count}, {"root_bubble", p.root_bubble},
                            {"first_step", p.first_step}, {"step_count", p.step_count}});
    json doc;
    doc["steps"] = steps_j;
    doc["passes"] = passes_j;
    return doc.dump();
}

RoutingLog RoutingLog::from_json(const std::string& text) {
    auto doc = nlohmann::json::parse(text);
    RoutingLog log;
    for (const auto& s : doc.at("steps"))
        log.steps.push_back({s.at(0).get<int>(), s.at(1).get<int>(), s.at(2).get<int>(), s.at(3).get<int>(),
                             s.at(4).get<int>()});
    for (const auto& p : doc.at("passes"))
        log.passes.push_back({p.at("color").get<int>(), p.at("bubble_count").get<int>(), p.at("root_bubble").get<int>(),
                              p.at("first_step").get<int>(), p.at("step_count").get<int>()});
    return log;
}

RoutingResult route_to_core(const ColoredGraph& g, TreePolicy policy, std::uint64_t seed) {
    require_closed(g, "route_to_core");
    require_valid(g, "route_to_core");
    const int D = g.dimension();
    const int P = g.positive_count();
    WorkGraph w(g);
    Rng rng(seed);
    RoutingResult res;
    for (Color i = D; i >= 0; --i) {
        int m = 0;
        auto lab = w.labels(ColorSet::all(D).without(i), m);
        RoutingPass pass{i, m, 0, static_cast<int>(res.log.steps.size()), 0};
        if (m > 1) {
            if (policy == TreePolicy::randomized) {
                pass.root_bubble = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(m)));
            } else {
                int v0 = static_cast<int>(std::find(w.palive.begin(), w.palive.end(), 1) - w.palive.begin());
                pass.root_bubble = lab[static_cast<std::size_t>(v0)];
            }
            struct Line {
                int v, n, to;
            };
            std::vector<std::vector<Line>> adj(static_cast<std::size_t>(m));
            for (int v = 0; v < P; ++v) {
                if (!w.palive[static_cast<std::size_t>(v)]) continue;
                int n = w.pn[w.idx(v, i)];
                int a = lab[static_cast<std::size_t>(v)], b = lab[static_cast<std::size_t>(P + n)];
                if (a == b) continue;  // loop line
                adj[static_cast<std::size_t>(a)].push_back({v, n, b});
                adj[static_cast<std::size_t>(b)].push_back({v, n, a});
            }
            if (policy == TreePolicy::randomized)
                for (auto& list : adj) shuffle(list, rng);
            std::vector<char> seen(static_cast<std::size_t>(m), 0);
            std::vector<int> queue{pass.root_bubble};
            seen[static_cast<std::size_t>(pass.root_bubble)] = 1;
            for (std::size_t h = 0; h < queue.size(); ++h) {
                int x = queue[h];
                for (const Line& l : adj[static_cast<std::size_t>(x)]) {
                    if (seen[static_cast<std::size_t>(l.to)]) continue;
                    seen[static_cast<std::size_t>(l.to)] = 1;
                    queue.push_back(l.to);
                    res.log.steps.push_back({i, l.v, l.n, x, l.to});
                }
            }
            if (static_cast<int>(queue.size()) != m) throw std::logic_error("route_to_core: connectivity graph is disconnected");
            for (int s = pass.first_step; s < static_cast<int>(res.log.steps.size()); ++s) {
                const auto& st = res.log.steps[static_cast<std::size_t>(s)];
                w.remove_pair(st.positive, st.negative, ColorSet::all(D).without(i));
            }
        }
        pass.step_count = static_cast<int>(res.log.steps.size()) - pass.first_step;
        res.log.passes.push_back(pass);
    }
    res.core = w.build(D, res.positive_origin, res.negative_origin);
    return res;
}

ColoredGraph replay_routing(const ColoredGraph& g, const RoutingLog& log,
                            const std::function<void(std::size_t, const ColoredGraph&, const Dipole&)>& visit) {
    ColoredGraph cur = g;
    std::vector<int> pos_id(static_cast<std::size_t>(g.positive_count())), neg_id(static_cast<std::size_t>(g.negative_count()));
    for (std::size_t v = 0; v < pos_id.size(); ++v) pos_id[v] = static_cast<int>(v);
    for (std::size_t n = 0; n < neg_id.size(); ++n) neg_id[n] = static_cast<int>(n);
    for (std::size_t s = 0; s < log.steps.size(); ++s) {
        const auto& st = log.steps[s];
        int v = pos_id.at(static_cast<std::size_t>(st.positive));
        int n = neg_id.at(static_cast<std::size_t>(st.negative));
        if (v < 0 || n < 0) throw StaleDipole("replay_routing: step refers to a removed vertex");
        ColorSet colors = ColorSet{st.color};
        auto lab = bubble_labels(cur, colors.complement(cur.dimension()));
        Dipole d{v, n, colors, 1, lab.label[static_cast<std::size_t>(v)],
                 lab.label[static_cast<std::size_t>(cur.positive_count() + n)], cur.fingerprint()};
        ColoredGraph next = contract(cur, d);
        for (auto& x : pos_id)
            if (x == v) x = -1;
            else if (x > v) --x;
        for (auto& x : neg_id)
            if (x == n) x = -1;
            else if (x > n) --x;
        if (visit) visit(s, next, d);
        cur = std::move(next);
    }
    return cur;
}

bool is_core(const ColoredGraph& g) {
    for (Color i = 0; i <= g.dimension(); ++i)
        if (bubble_labels(g, ColorSet::all(g.dimension()).without(i)).count != 1) return false;
    return true;
}

MelonicReduction reduce_melons(const ColoredGraph& g) {
    require_closed(g, "reduce_melons");
    const int D = g.dimension();
    WorkGraph w(g);
    MelonicReduction out;
    int alive = g.positive_count();
    std::vector<int> work;
    for (int v = g.positive_count() - 1; v >= 0; --v) work.push_back(v);
    auto try_remove = [&](int v) -> bool {
        for (Color c = 0; c <= D; ++c) {
            int n = w.pn[w.idx(v, c)];
            int shared = 0;
            Color open = -1;
            for (Color c2 = 0; c2 <= D; ++c2) {
                if (w.pn[w.idx(v, c2)] == n)
                    ++shared;
                else
                    open = c2;
            }
            if (shared != D) continue;
            int a = w.pn[w.idx(v, open)];
            int b = w.np[w.idx(n, open)];
            w.remove_pair(v, n, ColorSet{open});
            out.removals.push_back({v, n, open});
            --alive;
            work.push_back(b);
            for (Color c2 = 0; c2 <= D; ++c2) work.push_back(w.np[w.idx(a, c2)]);
            return true;
        }
        return false;
    };
    while (!work.empty() && alive > 1) {
        int v = work.back();
        work.pop_back();
        if (!w.palive[static_cast<std::size_t>(v)]) continue;
        try_remove(v);
    }
    out.remaining_vertices = 2 * alive;
    out.melonic = alive == 1;
    return out;
}

bool is_melonic(const ColoredGraph& g) { return reduce_melons(g).melonic; }

}  // namespace cgraph
