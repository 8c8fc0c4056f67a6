#include "cgraph/melonic.hpp"

#include <algorithm>
#include <sstream>

#include "cgraph/bubbles.hpp"
#include "cgraph/jackets.hpp"

namespace cgraph {

MelonTree::MelonTree(int dimension) : dimension_(dimension) {
    if (dimension < 1 || dimension + 1 > kMaxColors) throw std::invalid_argument("MelonTree: dimension out of range");
}

int MelonTree::depth(int node) const {
    int d = 0;
    for (int x = node; x >= 0; x = parent(x)) ++d;
    return d;
}

int MelonTree::insert(int parent, Color slot) {
    if (slot < 0 || slot > dimension_) throw std::invalid_argument("MelonTree::insert: slot out of range");
    int id = size();
    if (parent < 0) {
        if (root_ >= 0) throw std::invalid_argument("MelonTree::insert: root slot is occupied");
        if (slot != 0) throw std::invalid_argument("MelonTree::insert: the root slot has color 0");
        root_ = id;
    } else {
        if (parent >= size()) throw std::invalid_argument("MelonTree::insert: parent out of range");
        if (children_[slot_index(parent, slot)] >= 0) throw std::invalid_argument("MelonTree::insert: slot is occupied");
        children_[slot_index(parent, slot)] = id;
    }
    color_.push_back(slot);
    parent_.push_back(parent);
    children_.insert(children_.end(), static_cast<std::size_t>(dimension_ + 1), -1);
    return id;
}

std::vector<int> MelonTree::preorder() const {
    std::vector<int> out;
    if (root_ < 0) return out;
    out.reserve(color_.size());
    std::vector<int> stack{root_};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (Color s = dimension_; s >= 0; --s) {
            int c = child(x, s);
            if (c >= 0) stack.push_back(c);
        }
    }
    return out;
}

std::vector<char> MelonTree::preorder_code() const {
    std::vector<char> code;
    code.reserve(static_cast<std::size_t>((dimension_ + 1) * size() + 1));
    if (root_ < 0) {
        code.push_back(0);
        return code;
    }
    // Stack of (node, next slot); emits 1 on entering a node and 0 for each leaf.
    std::vector<std::pair<int, int>> stack{{root_, 0}};
    code.push_back(1);
    while (!stack.empty()) {
        auto& [x, s] = stack.back();
        if (s > dimension_) {
            stack.pop_back();
            continue;
        }
        int c = child(x, s);
        ++s;
        if (c < 0) {
            code.push_back(0);
        } else {
            code.push_back(1);
            stack.push_back({c, 0});
        }
    }
    return code;
}

std::string MelonTree::code_string() const {
    auto code = preorder_code();
    std::string s(code.size(), '0');
    for (std::size_t i = 0; i < code.size(); ++i)
        if (code[i]) s[i] = '1';
    return s;
}

MelonTree MelonTree::from_preorder(int dimension, const std::vector<char>& internal) {
    MelonTree t(dimension);
    if (internal.empty()) throw std::invalid_argument("from_preorder: empty sequence");
    long long sum = 0;
    for (std::size_t i = 0; i < internal.size(); ++i) {
        sum += internal[i] ? dimension : -1;
        if ((sum < 0) != (i + 1 == internal.size()))
            throw std::invalid_argument("from_preorder: not a valid preorder code");
    }
    if (!internal[0]) return t;
    std::size_t p = static_cast<std::size_t>(std::count(internal.begin(), internal.end(), 1));
    t.color_.reserve(p);
    t.parent_.reserve(p);
    t.children_.reserve(p * static_cast<std::size_t>(dimension + 1));
    std::vector<std::pair<int, int>> stack;
    stack.push_back({t.insert(-1, 0), 0});
    for (std::size_t i = 1; i < internal.size(); ++i) {
        auto [x, s] = stack.back();
        stack.back().second = s + 1;
        if (internal[i]) {
            int c = t.insert(x, s);
            stack.push_back({c, 0});
        }
        while (!stack.empty() && stack.back().second > dimension) stack.pop_back();
    }
    return t;
}

MelonTree MelonTree::normalized() const { return from_preorder(dimension_, preorder_code()); }

bool operator==(const MelonTree& a, const MelonTree& b) {
    return a.dimension_ == b.dimension_ && a.preorder_code() == b.preorder_code();
}

mpz_class count_melonic(int D, int p) {
    if (D < 1 || p < 0) throw std::invalid_argument("count_melonic: need D >= 1 and p >= 0");
    const unsigned long n = static_cast<unsigned long>(D + 1) * static_cast<unsigned long>(p) + 1;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, static_cast<unsigned long>(p));
    return b / n;
}

CountTable count_table(int D, int pmax) {
    if (D < 1 || pmax < 0) throw std::invalid_argument("count_table: need D >= 1 and pmax >= 0");
    CountTable t;
    t.dimension = D;
    // G = 1 + z H with H = G^{m}; power coefficients by the recurrence
    // n H_n = sum_{k=1..n} ((m+1)k - n) G_k H_{n-k}.
    const long m = D + 1;
    std::vector<mpz_class> G{1}, H{1};
    for (int n = 1; n <= pmax; ++n) {
        G.push_back(H[static_cast<std::size_t>(n - 1)]);
        mpz_class acc = 0;
        for (int k = 1; k <= n; ++k) acc += ((m + 1) * k - n) * G[static_cast<std::size_t>(k)] * H[static_cast<std::size_t>(n - k)];
        H.push_back(acc / n);
    }
    t.counts = G;
    return t;
}

std::vector<MelonTree> all_trees(int D, int p) {
    std::vector<MelonTree> out;
    const int n = (D + 1) * p + 1;
    std::vector<char> code(static_cast<std::size_t>(n), 0);
    // Depth-first over codes with the prefix-sum constraint, leaves (0) first.
    auto rec = [&](auto&& self, int pos, int remaining, long long sum) -> void {
        if (pos == n) {
            out.push_back(MelonTree::from_preorder(D, code));
            return;
        }
        int slots_left = n - pos;
        // Leaf here.
        if (sum - 1 >= 0 || pos + 1 == n) {
            if (!(pos + 1 < n && sum - 1 < 0) && slots_left - 1 >= remaining) {
                code[static_cast<std::size_t>(pos)] = 0;
                if (pos + 1 == n ? (sum - 1 == -1 && remaining == 0) : true) self(self, pos + 1, remaining, sum - 1);
            }
        }
        if (remaining > 0 && pos + 1 < n) {
            code[static_cast<std::size_t>(pos)] = 1;
            self(self, pos + 1, remaining - 1, sum + D);
            code[static_cast<std::size_t>(pos)] = 0;
        }
    };
    if (p == 0) {
        out.push_back(MelonTree(D));
        return out;
    }
    code[0] = 1;
    rec(rec, 1, p - 1, D);
    return out;
}

MelonTree sample_uniform(int D, int p, Rng& rng) {
    if (p < 1) throw std::invalid_argument("sample_uniform: p must be at least 1");
    const std::size_t n = static_cast<std::size_t>(D + 1) * static_cast<std::size_t>(p) + 1;
    // Uniform p-subset of positions (Floyd's algorithm).
    std::vector<char> mark(n, 0);
    for (std::size_t j = n - static_cast<std::size_t>(p); j < n; ++j) {
        std::size_t t = static_cast<std::size_t>(uniform_below(rng, j + 1));
        if (mark[t])
            mark[j] = 1;
        else
            mark[t] = 1;
    }
    // Cycle lemma: rotate to start just after the first minimum of the prefix sums.
    long long sum = 0, best = 1;
    std::size_t at = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += mark[i] ? D : -1;
        if (sum < best) {
            best = sum;
            at = i;
        }
    }
    std::vector<char> code(n);
    for (std::size_t i = 0; i < n; ++i) code[i] = mark[(at + 1 + i) % n];
    return MelonTree::from_preorder(D, code);
}

MelonTree sample_uniform(int D, int p, std::uint64_t seed) {
    Rng rng(seed);
    return sample_uniform(D, p, rng);
}

ColoredGraph tree_to_graph(const MelonTree& t) {
    if (t.empty()) throw std::invalid_argument("tree_to_graph: tree has no nodes");
    const int D = t.dimension();
    const int p = t.size();
    const int O = p, I = p;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>((D + 1) * p + 1));
    edges.push_back({t.root(), I, 0});
    std::vector<int> terminal(static_cast<std::size_t>(p), -1);
    terminal[static_cast<std::size_t>(t.root())] = O;
    std::vector<int> stack{t.root()};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        const Color c = t.color(x);
        for (Color j = 0; j <= D; ++j) {
            int term = j == c ? terminal[static_cast<std::size_t>(x)] : x;
            int ch = t.child(x, j);
            if (ch < 0) {
                edges.push_back({term, x, j});
            } else {
                edges.push_back({ch, x, j});
                terminal[static_cast<std::size_t>(ch)] = term;
                stack.push_back(ch);
            }
        }
    }
    return ColoredGraph(D, p + 1, p + 1, std::move(edges), GraphKind::open);
}

ColoredGraph tree_to_closed_graph(const MelonTree& t) { return glue_boundary(tree_to_graph(t)); }

namespace {

// Tree under reconstruction: nodes created in arbitrary order.
struct Builder {
    int D;
    int root = -1;
    std::vector<Color> color;
    std::vector<int> parent, parent_slot;
    std::vector<int> children;

    int add(Color c) {
        color.push_back(c);
        parent.push_back(-1);
        parent_slot.push_back(-1);
        children.insert(children.end(), static_cast<std::size_t>(D + 1), -1);
        return static_cast<int>(color.size()) - 1;
    }
    int& child(int node, Color s) { return children[static_cast<std::size_t>(node * (D + 1) + s)]; }
    void attach(int par, Color slot, int node) {
        if (par < 0)
            root = node;
        else
            child(par, slot) = node;
        parent[static_cast<std::size_t>(node)] = par;
        parent_slot[static_cast<std::size_t>(node)] = slot;
    }
};

}  // namespace

MelonTree graph_to_tree(const ColoredGraph& g) {
    const int D = g.dimension();
    if (D < 2) throw std::invalid_argument("graph_to_tree: requires D >= 2");
    if (!g.is_open()) throw std::invalid_argument("graph_to_tree: open rooted graph required");
    require_valid(g, "graph_to_tree");
    int O = -1, I = -1, nb = 0;
    for (int v = 0; v < g.positive_count(); ++v)
        if (g.positive_is_boundary(v)) O = v, ++nb;
    for (int v = 0; v < g.negative_count(); ++v)
        if (g.negative_is_boundary(v)) I = v, ++nb;
    if (nb != 2 || O < 0 || I < 0 || g.positive_boundary_color(O) != 0 || g.negative_boundary_color(I) != 0)
        throw std::invalid_argument("graph_to_tree: need one positive and one negative boundary vertex of color 0");

    const int C = D + 1;
    struct E {
        int pos, neg;
        Color color;
    };
    std::vector<E> edges;
    for (const Edge& e : g.edges()) edges.push_back({e.positive, e.negative, e.color});
    std::vector<int> pe(static_cast<std::size_t>(g.positive_count() * C)), ne(static_cast<std::size_t>(g.negative_count() * C));
    for (int v = 0; v < g.positive_count(); ++v)
        for (Color c = 0; c < C; ++c) pe[static_cast<std::size_t>(v * C + c)] = g.positive_edge(v, c);
    for (int n = 0; n < g.negative_count(); ++n)
        for (Color c = 0; c < C; ++c) ne[static_cast<std::size_t>(n * C + c)] = g.negative_edge(n, c);
    std::vector<char> palive(static_cast<std::size_t>(g.positive_count()), 1), nalive(static_cast<std::size_t>(g.negative_count()), 1);
    palive[static_cast<std::size_t>(O)] = 0;  // boundary vertices are never peeled
    nalive[static_cast<std::size_t>(I)] = 0;

    struct Peel {
        Color c;
        int e_in, e_out, e_new;
        std::vector<int> shared_edges;  // (color j != c) edge ids
        std::vector<Color> shared_colors;
    };
    std::vector<Peel> peels;
    int internal = g.positive_count() - 1;
    std::vector<int> work;
    for (int v = g.positive_count() - 1; v >= 0; --v)
        if (v != O) work.push_back(v);
    while (!work.empty() && internal > 0) {
        int x = work.back();
        work.pop_back();
        if (x == O || !palive[static_cast<std::size_t>(x)]) continue;
        for (Color c = 0; c < C; ++c) {
            int n = edges[static_cast<std::size_t>(pe[static_cast<std::size_t>(x * C + c)])].neg;
            if (n == I || !nalive[static_cast<std::size_t>(n)]) continue;
            int shared = 0;
            Color open = -1;
            for (Color j = 0; j < C; ++j) {
                if (edges[static_cast<std::size_t>(pe[static_cast<std::size_t>(x * C + j)])].neg == n)
                    ++shared;
                else
                    open = j;
            }
            if (shared != D) continue;
            Peel pl;
            pl.c = open;
            pl.e_in = pe[static_cast<std::size_t>(x * C + open)];
            pl.e_out = ne[static_cast<std::size_t>(n * C + open)];
            int u = edges[static_cast<std::size_t>(pl.e_in)].neg;
            int t = edges[static_cast<std::size_t>(pl.e_out)].pos;
            for (Color j = 0; j < C; ++j)
                if (j != open) {
                    pl.shared_edges.push_back(pe[static_cast<std::size_t>(x * C + j)]);
                    pl.shared_colors.push_back(j);
                }
            pl.e_new = static_cast<int>(edges.size());
            edges.push_back({t, u, open});
            pe[static_cast<std::size_t>(t * C + open)] = pl.e_new;
            ne[static_cast<std::size_t>(u * C + open)] = pl.e_new;
            palive[static_cast<std::size_t>(x)] = 0;
            nalive[static_cast<std::size_t>(n)] = 0;
            --internal;
            peels.push_back(std::move(pl));
            if (t != O) work.push_back(t);
            if (u != I)
                for (Color j = 0; j < C; ++j) {
                    int y = edges[static_cast<std::size_t>(ne[static_cast<std::size_t>(u * C + j)])].pos;
                    if (y != O) work.push_back(y);
                }
            break;
        }
    }
    if (internal > 0) {
        long long omega = degree(glue_boundary(g));
        throw NotMelonic("graph_to_tree: graph is not melonic (omega = " + std::to_string(omega) + ")", omega);
    }

    // Replay in reverse. Each live edge means either a leaf (parent, slot) or
    // the in-leg of a node.
    struct Meaning {
        bool inleg = false;
        int node = -1;  // inleg: the node; leaf: the parent (-1 for the root slot)
        Color slot = 0;
    };
    std::vector<Meaning> meaning(edges.size());
    const int final_edge = ne[static_cast<std::size_t>(I * C + 0)];
    meaning[static_cast<std::size_t>(final_edge)] = {false, -1, 0};
    Builder b{D, -1, {}, {}, {}, {}};
    for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
        const Meaning m = meaning[static_cast<std::size_t>(it->e_new)];
        int node = b.add(it->c);
        if (!m.inleg) {
            if (m.slot != it->c) throw std::logic_error("graph_to_tree: inconsistent slot color");
            b.attach(m.node, m.slot, node);
            meaning[static_cast<std::size_t>(it->e_out)] = {false, node, it->c};
        } else {
            int x = m.node;
            b.attach(b.parent[static_cast<std::size_t>(x)], static_cast<Color>(b.parent_slot[static_cast<std::size_t>(x)]), node);
            b.attach(node, it->c, x);
            meaning[static_cast<std::size_t>(it->e_out)] = {true, x, 0};
        }
        meaning[static_cast<std::size_t>(it->e_in)] = {true, node, 0};
        for (std::size_t k = 0; k < it->shared_edges.size(); ++k)
            meaning[static_cast<std::size_t>(it->shared_edges[k])] = {false, node, it->shared_colors[k]};
    }
    // Emit in preorder.
    MelonTree out(D);
    if (b.root < 0) return out;
    std::vector<std::pair<int, int>> stack;  // (builder node, new parent id)
    stack.push_back({b.root, -1});
    while (!stack.empty()) {
        auto [x, par] = stack.back();
        stack.pop_back();
        int id = out.insert(par, par < 0 ? 0 : b.color[static_cast<std::size_t>(x)]);
        for (Color s = D; s >= 0; --s) {
            int ch = b.child(x, s);
            if (ch >= 0) stack.push_back({ch, id});
        }
    }
    return out.normalized();
}

std::string Word::to_string() const {
    std::ostringstream os;
    if (letters.empty()) return "";
    os << static_cast<int>(letters[0]) << ';';
    for (std::size_t i = 1; i < letters.size(); ++i) {
        if (dimension > 9 && i > 1) os << ',';
        os << static_cast<int>(letters[i]);
    }
    return os.str();
}

Word Word::parse(int D, const std::string& text) {
    Word w;
    w.dimension = D;
    auto semi = text.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("malformed word: missing ';'");
    auto parse_letter = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw std::invalid_argument("malformed word: bad letter '" + s + "'");
        int x = std::stoi(s);
        if (x > D) throw std::invalid_argument("malformed word: letter " + s + " out of range");
        w.letters.push_back(static_cast<std::uint8_t>(x));
    };
    parse_letter(text.substr(0, semi));
    if (w.letters[0] != 0) throw std::invalid_argument("malformed word: must begin with 0");
    std::string rest = text.substr(semi + 1);
    rest.erase(std::remove(rest.begin(), rest.end(), ' '), rest.end());
    if (D > 9) {
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) parse_letter(tok);
    } else {
        for (char ch : rest) parse_letter(std::string(1, ch));
    }
    return w;
}

Word word_of(const MelonTree& t, int node) {
    if (node < 0 || node >= t.size()) throw std::invalid_argument("word_of: node out of range");
    Word w;
    w.dimension = t.dimension();
    for (int x = node; x >= 0; x = t.parent(x)) w.letters.push_back(static_cast<std::uint8_t>(t.color(x)));
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
}

int tree_depth(const Word& w) { return static_cast<int>(w.letters.size()); }

int depth_from(int D, Color root, std::span<const std::uint8_t> suffix) {
    const std::uint32_t full = ColorSet::all(D).mask();
    std::size_t i = 0;
    const std::size_t n = suffix.size();
    int k = 0;
    if (n > 0 && suffix[0] != root) {
        k = 1;
        while (i < n && suffix[i] != root) ++i;
    }
    while (i < n) {
        ++k;
        std::uint32_t mask = 0;
        while (i < n) {
            std::uint32_t next = mask | (1u << suffix[i]);
            if (next == full) break;
            mask = next;
            ++i;
        }
    }
    return k;
}

int depth(const Word& w) {
    if (w.letters.empty() || w.letters[0] != 0) throw std::invalid_argument("malformed word: must begin with 0");
    for (auto x : w.letters)
        if (x > w.dimension) throw std::invalid_argument("malformed word: letter out of range");
    return depth_from(w.dimension, 0, std::span<const std::uint8_t>(w.letters).subspan(1));
}

mpq_class lambda_delta(int D) {
    if (D < 1) throw std::invalid_argument("lambda_delta: D must be at least 1");
    mpq_class sum = 0;
    for (int r = 0; r <= D; ++r) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(D), static_cast<unsigned long>(r));
        mpq_class term(binom * r, (D + 1 - r) * (D + 1 - r));
        term.canonicalize();
        if ((D - r) % 2) sum -= term;
        else sum += term;
    }
    mpq_class inv = (D + 1) * sum;
    mpq_class out = 1 / inv;
    out.canonicalize();
    return out;
}

double lambda_ratio_sample(int D, std::int64_t n, Rng& rng) {
    const std::uint32_t full = ColorSet::all(D).mask();
    const auto C = static_cast<std::uint64_t>(D + 1);
    // Streaming version of depth_from with root letter 0.
    std::int64_t k = 0;
    bool first = true;
    bool in_first = false;
    std::uint32_t mask = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        auto x = static_cast<std::uint32_t>(uniform_below(rng, C));
        if (first) {
            first = false;
            if (x != 0) {
                k = 1;
                in_first = true;
                continue;
            }
        }
        if (in_first) {
            if (x != 0) continue;
            in_first = false;
            k += 1;
            mask = 1u << x;
            continue;
        }
        if (k == 0) {
            k = 1;
            mask = 1u << x;
            continue;
        }
        std::uint32_t next = mask | (1u << x);
        if (next == full) {
            ++k;
            mask = 1u << x;
        } else {
            mask = next;
        }
    }
    return static_cast<double>(k) / static_cast<double>(n);
}

int lowest_common_ancestor(const MelonTree& t, int a, int b) {
    int da = t.depth(a), db = t.depth(b);
    while (da > db) a = t.parent(a), --da;
    while (db > da) b = t.parent(b), --db;
    while (a != b) a = t.parent(a), b = t.parent(b);
    return a;
}

int tree_distance(const MelonTree& t, int a, int b) {
    int l = lowest_common_ancestor(t, a, b);
    return t.depth(a) + t.depth(b) - 2 * t.depth(l);
}

PairEstimate pair_distance_estimate(const MelonTree& t, int a, int b) {
    PairEstimate out;
    if (a == b) {
        out.ancestor = a;
        out.lower = -6;
        out.upper = 6;
        return out;
    }
    int l = lowest_common_ancestor(t, a, b);
    out.ancestor = l;
    auto suffix = [&](int x) {
        std::vector<std::uint8_t> s;
        for (; x != l; x = t.parent(x)) s.push_back(static_cast<std::uint8_t>(t.color(x)));
        std::reverse(s.begin(), s.end());
        return s;
    };
    auto sa = suffix(a), sb = suffix(b);
    out.estimate = depth_from(t.dimension(), t.color(l), sa) + depth_from(t.dimension(), t.color(l), sb);
    out.lower = out.estimate - 6;
    out.upper = out.estimate + 6;
    return out;
}

namespace {

struct ClosedTables {
    int P = 0;
    int C = 0;
    std::vector<int> pn, np;  // neighbor tables of the closed graph
};

// Neighbor tables of tree_to_closed_graph without building the edge list twice.
ClosedTables closed_tables(const MelonTree& t) {
    ColoredGraph g = tree_to_closed_graph(t);
    ClosedTables ct;
    ct.P = g.positive_count();
    ct.C = g.color_count();
    ct.pn.resize(static_cast<std::size_t>(ct.P * ct.C));
    ct.np.resize(static_cast<std::size_t>(ct.P * ct.C));
    for (const Edge& e : g.edges()) {
        ct.pn[static_cast<std::size_t>(e.positive * ct.C + e.color)] = e.negative;
        ct.np[static_cast<std::size_t>(e.negative * ct.C + e.color)] = e.positive;
    }
    return ct;
}

}  // namespace

BallMetric::BallMetric(const MelonTree& t) {
    if (t.empty()) throw std::invalid_argument("BallMetric: tree has no nodes");
    auto ct = closed_tables(t);
    const int P = ct.P, C = ct.C, V = 2 * P;
    // Label vertices by D-bubble for every species; ids are global across species.
    std::vector<int> lab(static_cast<std::size_t>(C * V), -1);
    int total = 0;
    std::vector<int> stack;
    for (Color miss = 0; miss < C; ++miss) {
        int* L = lab.data() + static_cast<std::ptrdiff_t>(miss) * V;
        for (int s = 0; s < V; ++s) {
            if (L[s] >= 0) continue;
            int id = total++;
            L[s] = id;
            stack.push_back(s);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (Color c = 0; c < C; ++c) {
                    if (c == miss) continue;
                    int y = x < P ? P + ct.pn[static_cast<std::size_t>(x * C + c)] : ct.np[static_cast<std::size_t>((x - P) * C + c)];
                    if (L[y] < 0) {
                        L[y] = id;
                        stack.push_back(y);
                    }
                }
            }
        }
    }
    node_bubble_.resize(static_cast<std::size_t>(t.size()));
    for (int node = 0; node < t.size(); ++node)
        node_bubble_[static_cast<std::size_t>(node)] = lab[static_cast<std::size_t>(t.color(node) * V + node)];
    // Bubbles through a common vertex are pairwise adjacent.
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(V * C * (C - 1)));
    for (int x = 0; x < V; ++x)
        for (Color a = 0; a < C; ++a)
            for (Color b = 0; b < C; ++b)
                if (a != b) pairs.push_back({lab[static_cast<std::size_t>(a * V + x)], lab[static_cast<std::size_t>(b * V + x)]});
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    offsets_.assign(static_cast<std::size_t>(total + 1), 0);
    for (auto& pr : pairs) ++offsets_[static_cast<std::size_t>(pr.first + 1)];
    for (int i = 0; i < total; ++i) offsets_[static_cast<std::size_t>(i + 1)] += offsets_[static_cast<std::size_t>(i)];
    targets_.resize(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) targets_[i] = pairs[i].second;
}

std::vector<int> BallMetric::distances_from(int node) const {
    const int n = bubble_count();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    int s = node_bubble_.at(static_cast<std::size_t>(node));
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int x = queue[h];
        for (int k = offsets_[static_cast<std::size_t>(x)]; k < offsets_[static_cast<std::size_t>(x + 1)]; ++k) {
            int y = targets_[static_cast<std::size_t>(k)];
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    std::vector<int> out(node_bubble_.size());
    for (std::size_t i = 0; i < node_bubble_.size(); ++i) out[i] = dist[static_cast<std::size_t>(node_bubble_[i])];
    return out;
}

int BallMetric::distance(int a, int b) const { return distances_from(a).at(static_cast<std::size_t>(b)); }

std::vector<int> graph_distances_from(const MelonTree& t, int node) {
    auto ct = closed_tables(t);
    const int P = ct.P, C = ct.C;
    std::vector<int> dist(static_cast<std::size_t>(2 * P), -1);
    std::vector<int> queue{node};
    dist[static_cast<std::size_t>(node)] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int x = queue[h];
        for (Color c = 0; c < C; ++c) {
            int y = x < P ? P + ct.pn[static_cast<std::size_t>(x * C + c)] : ct.np[static_cast<std::size_t>((x - P) * C + c)];
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    dist.resize(static_cast<std::size_t>(t.size()));  // white vertices of the nodes
    return dist;
}

std::vector<int> contour_nodes(const MelonTree& t) {
    std::vector<int> out{-1};
    if (t.empty()) return out;
    std::vector<std::pair<int, int>> stack{{t.root(), 0}};
    out.push_back(t.root());
    while (!stack.empty()) {
        auto& [x, s] = stack.back();
        int next = -1;
        while (s <= t.dimension() && next < 0) next = t.child(x, s++);
        if (next >= 0) {
            stack.push_back({next, 0});
            out.push_back(next);
        } else {
            stack.pop_back();
            out.push_back(stack.empty() ? -1 : stack.back().first);
        }
    }
    return out;
}

std::vector<int> contour_walk(const MelonTree& t) {
    auto nodes = contour_nodes(t);
    std::vector<int> f(nodes.size());
    int h = 0;
    f[0] = 0;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        // Heights follow from the visit order: moving down adds 1, up subtracts 1.
        int prev = nodes[i - 1], cur = nodes[i];
        bool down = cur >= 0 && (prev < 0 ? true : t.parent(cur) == prev);
        h += down ? 1 : -1;
        f[i] = h;
    }
    return f;
}

int walk_distance(std::span<const int> f, int s, int t) {
    if (s < 0 || t < 0 || static_cast<std::size_t>(std::max(s, t)) >= f.size())
        throw std::out_of_range("walk_distance: time out of range");
    int lo = std::min(s, t), hi = std::max(s, t);
    int m = *std::min_element(f.begin() + lo, f.begin() + hi + 1);
    return f[static_cast<std::size_t>(s)] + f[static_cast<std::size_t>(t)] - 2 * m;
}

}  // namespace cgraph
