#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace cgraph {

using Rng = std::mt19937_64;

// Fixed stream splitting: independent seeds for task `index` of a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ull));
}

inline Rng make_rng(std::uint64_t master, std::uint64_t index) { return Rng(substream_seed(master, index)); }

// Uniform integer in [0, n), n > 0. Rejection sampling keeps the result exact
// and independent of the standard library's distribution implementation.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % n + 1) % n;
    while (true) {
        std::uint64_t x = rng();
        if (x <= limit) return x % n;
    }
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace cgraph
