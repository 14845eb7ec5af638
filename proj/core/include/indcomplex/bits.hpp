#pragma once

#include <bit>
#include <cstdint>

namespace indcomplex {

// Vertex sets of graphs with at most 128 vertices.
__extension__ typedef unsigned __int128 Mask;

inline constexpr int kMaskBits = 128;

constexpr Mask bit(int i) noexcept { return Mask{1} << i; }

constexpr bool test(Mask m, int i) noexcept { return ((m >> i) & 1U) != 0; }

constexpr int popcount(Mask m) noexcept {
    return std::popcount(static_cast<std::uint64_t>(m)) +
           std::popcount(static_cast<std::uint64_t>(m >> 64));
}

// Index of the lowest set bit; m must be nonzero.
constexpr int lowest(Mask m) noexcept {
    const auto lo = static_cast<std::uint64_t>(m);
    if (lo != 0) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
}

// Index of the highest set bit; m must be nonzero.
constexpr int highest(Mask m) noexcept {
    const auto hi = static_cast<std::uint64_t>(m >> 64);
    if (hi != 0) return 127 - std::countl_zero(hi);
    return 63 - std::countl_zero(static_cast<std::uint64_t>(m));
}

constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

template <typename F>
constexpr void for_each_bit(Mask m, F&& f) {
    while (m != 0) {
        const int i = lowest(m);
        f(i);
        m &= m - 1;
    }
}

}  // namespace indcomplex
