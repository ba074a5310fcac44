#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace demon {

// std::uniform_int_distribution and std::shuffle are implementation-defined,
// so seeded sampling goes through these helpers to stay identical across
// standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be > 0.
inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
    std::uint64_t x = rng();
    while (x > limit)
        x = rng();
    return x % bound;
}

/// Uniform real in [0, 1).
inline double uniform_unit(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle(std::span<T> items, Rng &rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_below(rng, i));
        using std::swap;
        swap(items[i - 1], items[j]);
    }
}

} // namespace demon
