#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgraph {

using Color = int;

// Maximum number of colors supported by the bitmask representation.
inline constexpr int kMaxColors = 31;

class ColorSet {
public:
    constexpr ColorSet() = default;
    ColorSet(std::initializer_list<Color> colors) {
        for (Color c : colors) *this = with(c);
    }

    static constexpr ColorSet from_mask(std::uint32_t mask) {
        ColorSet s;
        s.mask_ = mask;
        return s;
    }
    // {0, ..., dimension}
    static constexpr ColorSet all(int dimension) {
        return from_mask(dimension + 1 >= 32 ? ~0u : ((1u << (dimension + 1)) - 1u));
    }

    constexpr std::uint32_t mask() const { return mask_; }
    constexpr bool contains(Color c) const { return c >= 0 && c < 32 && ((mask_ >> c) & 1u); }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }

    ColorSet with(Color c) const {
        if (c < 0 || c >= kMaxColors) throw std::out_of_range("color out of range");
        return from_mask(mask_ | (1u << c));
    }
    ColorSet without(Color c) const {
        if (c < 0 || c >= kMaxColors) throw std::out_of_range("color out of range");
        return from_mask(mask_ & ~(1u << c));
    }
    constexpr ColorSet complement(int dimension) const { return from_mask(all(dimension).mask_ & ~mask_); }
    constexpr bool subset_of(ColorSet other) const { return (mask_ & ~other.mask_) == 0; }

    std::vector<Color> colors() const {
        std::vector<Color> out;
        for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }
    std::string to_string() const {
        std::string s;
        for (Color c : colors()) {
            if (!s.empty() && c > 9) s += ',';
            s += std::to_string(c);
        }
        return s;
    }

    friend constexpr bool operator==(ColorSet, ColorSet) = default;
    // Lexicographic order on the sorted color tuples.
    friend std::strong_ordering operator<=>(ColorSet a, ColorSet b) {
        auto ca = a.colors();
        auto cb = b.colors();
        return ca <=> cb;
    }

private:
    std::uint32_t mask_ = 0;
};

// All color subsets of {0..dimension} with the given size, in lexicographic order.
std::vector<ColorSet> subsets_of_size(int dimension, int size);

struct Edge {
    int positive = 0;
    int negative = 0;
    Color color = 0;
    friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

// Canonical order: (color, positive, negative).
constexpr bool canonical_less(const Edge& a, const Edge& b) {
    if (a.color != b.color) return a.color < b.color;
    if (a.positive != b.positive) return a.positive < b.positive;
    return a.negative < b.negative;
}

}  // namespace cgraph
