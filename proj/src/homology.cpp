#include "cgraph/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cgraph {

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            std::int64_t x = a.at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out.at(i, j) += x * b.at(k, j);
        }
    return out;
}

std::string IntMatrix::to_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
        os << '\n';
    }
    return os.str();
}

namespace {

struct Overflow {};

inline std::int64_t abs_value(std::int64_t x) { return x < 0 ? -x : x; }
inline mpz_class abs_value(const mpz_class& x) { return abs(x); }

// a - q*b
inline std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
    std::int64_t prod = 0, res = 0;
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &res)) throw Overflow{};
    if (res == INT64_MIN) throw Overflow{};
    return res;
}
inline mpz_class sub_mul(const mpz_class& a, const mpz_class& q, const mpz_class& b) { return a - q * b; }

inline std::int64_t quotient(std::int64_t a, std::int64_t b) { return a / b; }
inline mpz_class quotient(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline mpz_class to_mpz(std::int64_t x) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(x));
    return z;
}
inline mpz_class to_mpz(const mpz_class& x) { return x; }

// Diagonalizes by unimodular row/column operations; returns |diagonal| entries.
template <class T>
std::vector<mpz_class> diagonalize(std::vector<T> a, int R, int C) {
    auto at = [&](int r, int c) -> T& { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(C) + static_cast<std::size_t>(c)]; };
    auto swap_rows = [&](int r1, int r2) {
        if (r1 == r2) return;
        for (int c = 0; c < C; ++c) std::swap(at(r1, c), at(r2, c));
    };
    auto swap_cols = [&](int c1, int c2) {
        if (c1 == c2) return;
        for (int r = 0; r < R; ++r) std::swap(at(r, c1), at(r, c2));
    };
    std::vector<mpz_class> diag;
    for (int r = 0; r < std::min(R, C); ++r) {
        int bi = -1, bj = -1;
        T best{};
        for (int i = r; i < R; ++i)
            for (int j = r; j < C; ++j) {
                const T& x = at(i, j);
                if (x == 0) continue;
                if (bi < 0 || abs_value(x) < best) {
                    best = abs_value(x);
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break;
        swap_rows(r, bi);
        swap_cols(r, bj);
        while (true) {
            bool clean = true;
            for (int i = r + 1; i < R; ++i) {
                if (at(i, r) == 0) continue;
                T q = quotient(at(i, r), at(r, r));
                if (q != 0)
                    for (int c = r; c < C; ++c)
                        if (at(r, c) != 0) at(i, c) = sub_mul(at(i, c), q, at(r, c));
                if (at(i, r) != 0) clean = false;
            }
            for (int j = r + 1; j < C; ++j) {
                if (at(r, j) == 0) continue;
                T q = quotient(at(r, j), at(r, r));
                if (q != 0)
                    for (int i = r; i < R; ++i)
                        if (at(i, r) != 0) at(i, j) = sub_mul(at(i, j), q, at(i, r));
                if (at(r, j) != 0) clean = false;
            }
            if (clean) break;
            // Move the smallest remainder in row/column r to the pivot.
            int mi = r, mj = r;
            T m = abs_value(at(r, r));
            for (int i = r + 1; i < R; ++i)
                if (at(i, r) != 0 && abs_value(at(i, r)) < m) m = abs_value(at(i, r)), mi = i, mj = r;
            for (int j = r + 1; j < C; ++j)
                if (at(r, j) != 0 && abs_value(at(r, j)) < m) m = abs_value(at(r, j)), mi = r, mj = j;
            swap_rows(r, mi);
            swap_cols(r, mj);
        }
        diag.push_back(abs(to_mpz(at(r, r))));
    }
    return diag;
}

std::vector<mpz_class> divisibility_chain(std::vector<mpz_class> d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            mpz_class g = gcd(d[i], d[j]);
            mpz_class l = lcm(d[i], d[j]);
            d[i] = g;
            d[j] = l;
        }
    return d;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const int R = m.rows(), C = m.cols();
    std::vector<mpz_class> diag;
    try {
        std::vector<std::int64_t> a(static_cast<std::size_t>(R) * static_cast<std::size_t>(C));
        for (int r = 0; r < R; ++r)
            for (int c = 0; c < C; ++c) a[static_cast<std::size_t>(r) * static_cast<std::size_t>(C) + static_cast<std::size_t>(c)] = m.at(r, c);
        diag = diagonalize(std::move(a), R, C);
    } catch (const Overflow&) {
        std::vector<mpz_class> a(static_cast<std::size_t>(R) * static_cast<std::size_t>(C));
        for (int r = 0; r < R; ++r)
            for (int c = 0; c < C; ++c) a[static_cast<std::size_t>(r) * static_cast<std::size_t>(C) + static_cast<std::size_t>(c)] = to_mpz(m.at(r, c));
        diag = diagonalize(std::move(a), R, C);
    }
    SmithResult out;
    out.rank = static_cast<int>(diag.size());
    out.invariant_factors = divisibility_chain(std::move(diag));
    return out;
}

namespace {

struct SpeciesIndex {
    std::vector<BubbleLabels> labels;  // per species, lexicographic
    std::vector<int> offset;           // first basis index per species
    std::map<std::uint32_t, int> position;
    int size = 0;
};

SpeciesIndex index_species(const ColoredGraph& g, int d) {
    SpeciesIndex si;
    for (ColorSet s : subsets_of_size(g.dimension(), d)) {
        si.position[s.mask()] = static_cast<int>(si.labels.size());
        si.offset.push_back(si.size);
        si.labels.push_back(bubble_labels(g, s));
        si.size += si.labels.back().count;
    }
    return si;
}

IntMatrix build_boundary(const ColoredGraph& g, int d, const SpeciesIndex& lower, const SpeciesIndex& upper) {
    IntMatrix m(lower.size, upper.size);
    if (d == 0) return IntMatrix(0, upper.size);
    const int P = g.positive_count();
    if (d == 1) {
        for (std::size_t s = 0; s < upper.labels.size(); ++s) {
            Color c = upper.labels[s].colors.colors().front();
            for (int v = 0; v < P; ++v) {
                int col = upper.offset[s] + upper.labels[s].label[static_cast<std::size_t>(v)];
                int n = g.positive_neighbor(v, c);
                m.at(v, col) += 1;
                m.at(P + n, col) -= 1;
            }
        }
        return m;
    }
    for (std::size_t s = 0; s < upper.labels.size(); ++s) {
        const auto& up = upper.labels[s];
        auto cols = up.colors.colors();
        for (std::size_t q = 0; q < cols.size(); ++q) {
            ColorSet sub = up.colors.without(cols[q]);
            int li = lower.position.at(sub.mask());
            const auto& low = lower.labels[static_cast<std::size_t>(li)];
            const std::int64_t sign = (q % 2 == 0) ? 1 : -1;  // (-1)^{q+1} with q counted from 1
            for (int x = 0; x < g.vertex_count(); ++x) {
                int col = upper.offset[s] + up.label[static_cast<std::size_t>(x)];
                int row = lower.offset[static_cast<std::size_t>(li)] + low.label[static_cast<std::size_t>(x)];
                m.at(row, col) = sign;
            }
        }
    }
    return m;
}

}  // namespace

ChainComplex chain_complex(const ColoredGraph& g) {
    require_valid(g, "chain_complex");
    if (g.is_open()) throw std::invalid_argument("chain_complex: closed graph required");
    const int D = g.dimension();
    ChainComplex cc;
    cc.dimension = D;
    std::vector<SpeciesIndex> idx;
    for (int d = 0; d <= D; ++d) idx.push_back(index_species(g, d));
    for (int d = 0; d <= D; ++d) {
        std::vector<Bubble> basis;
        for (const auto& lab : idx[static_cast<std::size_t>(d)].labels) {
            auto bs = enumerate_bubbles(g, lab.colors);
            basis.insert(basis.end(), std::make_move_iterator(bs.begin()), std::make_move_iterator(bs.end()));
        }
        cc.basis.push_back(std::move(basis));
        if (d == 0)
            cc.boundary.push_back(IntMatrix(0, idx[0].size));
        else
            cc.boundary.push_back(build_boundary(g, d, idx[static_cast<std::size_t>(d - 1)], idx[static_cast<std::size_t>(d)]));
    }
    return cc;
}

IntMatrix boundary_matrix(const ColoredGraph& g, int d) {
    if (d < 0 || d > g.dimension()) throw std::out_of_range("boundary_matrix: degree out of range");
    require_valid(g, "boundary_matrix");
    auto upper = index_species(g, d);
    if (d == 0) return IntMatrix(0, upper.size);
    auto lower = index_species(g, d - 1);
    return build_boundary(g, d, lower, upper);
}

std::vector<HomologyGroup> homology(const ChainComplex& cc) {
    const int D = cc.dimension;
    std::vector<SmithResult> snf;
    for (int d = 0; d <= D; ++d) snf.push_back(smith_normal_form(cc.boundary[static_cast<std::size_t>(d)]));
    std::vector<HomologyGroup> out;
    for (int d = 0; d <= D; ++d) {
        HomologyGroup h;
        h.degree = d;
        int n = static_cast<int>(cc.basis[static_cast<std::size_t>(d)].size());
        int rank_here = snf[static_cast<std::size_t>(d)].rank;
        int rank_up = d < D ? snf[static_cast<std::size_t>(d + 1)].rank : 0;
        h.betti = n - rank_here - rank_up;
        if (d < D)
            for (const auto& f : snf[static_cast<std::size_t>(d + 1)].invariant_factors)
                if (f > 1) h.torsion.push_back(f);
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<HomologyGroup> homology(const ColoredGraph& g) { return homology(chain_complex(g)); }

Presentation fundamental_group_presentation(const ColoredGraph& g) {
    require_valid(g, "fundamental_group_presentation");
    if (g.is_open()) throw std::invalid_argument("fundamental_group_presentation: closed graph required");
    const int P = g.positive_count();
    const int D = g.dimension();
    std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int x = queue[h];
        for (Color c = 0; c <= D; ++c) {
            int e = x < P ? g.positive_edge(x, c) : g.negative_edge(x - P, c);
            const Edge& ed = g.edge(e);
            int y = x < P ? P + ed.negative : ed.positive;
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                in_tree[static_cast<std::size_t>(e)] = 1;
                queue.push_back(y);
            }
        }
    }
    Presentation pres;
    std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) order[static_cast<std::size_t>(e)] = e;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return canonical_less(g.edge(a), g.edge(b)); });
    std::vector<int> generator_of(static_cast<std::size_t>(g.edge_count()), -1);
    for (int e : order) {
        if (in_tree[static_cast<std::size_t>(e)]) {
            pres.tree_edges.push_back(e);
        } else {
            generator_of[static_cast<std::size_t>(e)] = pres.generator_count++;
            pres.generator_edges.push_back(e);
        }
    }
    if (D < 2) return pres;
    for (ColorSet pair : subsets_of_size(D, 2)) {
        auto cols = pair.colors();
        const Color ci = cols[0], cj = cols[1];
        auto lab = bubble_labels(g, pair);
        std::vector<char> started(static_cast<std::size_t>(lab.count), 0);
        for (int v = 0; v < P; ++v) {
            int comp = lab.label[static_cast<std::size_t>(v)];
            if (started[static_cast<std::size_t>(comp)]) continue;
            started[static_cast<std::size_t>(comp)] = 1;
            std::vector<std::pair<int, int>> word;
            int cur = v;
            do {
                int e1 = g.positive_edge(cur, ci);
                int n = g.edge(e1).negative;
                if (int gen = generator_of[static_cast<std::size_t>(e1)]; gen >= 0) word.push_back({gen, +1});
                int e2 = g.negative_edge(n, cj);
                if (int gen = generator_of[static_cast<std::size_t>(e2)]; gen >= 0) word.push_back({gen, -1});
                cur = g.edge(e2).positive;
            } while (cur != v);
            pres.relators.push_back(std::move(word));
            pres.relator_faces.push_back({pair, comp});
        }
    }
    return pres;
}

Abelianization abelianize(const Presentation& pres) {
    IntMatrix m(static_cast<int>(pres.relators.size()), pres.generator_count);
    for (std::size_t r = 0; r < pres.relators.size(); ++r)
        for (auto [gen, exp] : pres.relators[r]) m.at(static_cast<int>(r), gen) += exp;
    auto snf = smith_normal_form(m);
    Abelianization out;
    out.rank = pres.generator_count - snf.rank;
    for (const auto& f : snf.invariant_factors)
        if (f > 1) out.torsion.push_back(f);
    return out;
}

}  // namespace cgraph
