#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cgraph/bubbles.hpp"
#include "cgraph/colored_graph.hpp"

namespace cgraph {

// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& at(int r, int c) { return data_[index(r, c)]; }
    std::int64_t at(int r, int c) const { return data_[index(r, c)]; }
    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string to_text() const;  // rows of space-separated integers

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> data_;
};

struct SmithResult {
    int rank = 0;
    std::vector<mpz_class> invariant_factors;  // positive, each divides the next
};

// Falls back to arbitrary precision when 64-bit elimination would overflow.
SmithResult smith_normal_form(const IntMatrix& m);

struct ChainComplex {
    int dimension = 0;
    std::vector<std::vector<Bubble>> basis;  // basis[d]: d-bubbles, species lexicographic then component
    std::vector<IntMatrix> boundary;         // boundary[d] : C_d -> C_{d-1}; boundary[0] has 0 rows
};

ChainComplex chain_complex(const ColoredGraph& graph);
IntMatrix boundary_matrix(const ColoredGraph& graph, int d);

struct HomologyGroup {
    int degree = 0;
    int betti = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1
};

std::vector<HomologyGroup> homology(const ColoredGraph& graph);
std::vector<HomologyGroup> homology(const ChainComplex& complex);

struct Presentation {
    int generator_count = 0;
    std::vector<int> generator_edges;  // edge index of each generator
    std::vector<int> tree_edges;
    // Each relator is a word of (generator, exponent +-1) pairs.
    std::vector<std::vector<std::pair<int, int>>> relators;
    std::vector<std::pair<ColorSet, int>> relator_faces;  // (color pair, component) per relator
};

Presentation fundamental_group_presentation(const ColoredGraph& graph);

struct Abelianization {
    int rank = 0;
    std::vector<mpz_class> torsion;
};

Abelianization abelianize(const Presentation& presentation);

}  // namespace cgraph
