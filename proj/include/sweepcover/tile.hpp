#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>

namespace sweep {

/// A cell of the infinite integer grid.
struct Tile {
    int32_t x = 0;
    int32_t y = 0;
    friend constexpr auto operator<=>(const Tile&, const Tile&) = default;
};

// Lexicographic order (x first, then y). Pivot selection and the perimeter
// walk anchor both use this order.
inline constexpr bool lex_less(const Tile& a, const Tile& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
}

inline int manhattan(const Tile& a, const Tile& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

/// Cardinal directions in clockwise order. +y is "up".
enum class Dir : uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline constexpr Tile step(const Tile& t, Dir d) {
    switch (d) {
        case Dir::N: return {t.x, t.y + 1};
        case Dir::E: return {t.x + 1, t.y};
        case Dir::S: return {t.x, t.y - 1};
        default: return {t.x - 1, t.y};
    }
}

inline constexpr Dir clockwise_next(Dir d) {
    return static_cast<Dir>((static_cast<int>(d) + 1) & 3);
}

inline constexpr Dir opposite(Dir d) {
    return static_cast<Dir>((static_cast<int>(d) + 2) & 3);
}

/// Rotate a direction by 90 degrees clockwise (N -> E -> S -> W).
inline constexpr Dir rotate_cw(Dir d) { return clockwise_next(d); }

/// Mirror across the vertical axis (E <-> W, N and S fixed).
inline constexpr Dir mirror_x(Dir d) {
    return d == Dir::E ? Dir::W : d == Dir::W ? Dir::E : d;
}

/// Direction from `a` to its 4-neighbor `b`. Precondition: manhattan == 1.
inline Dir dir_between(const Tile& a, const Tile& b) {
    if (b.x == a.x) return b.y > a.y ? Dir::N : Dir::S;
    return b.x > a.x ? Dir::E : Dir::W;
}

inline constexpr std::array<Tile, 4> four_neighbors(const Tile& t) {
    return {Tile{t.x, t.y + 1}, Tile{t.x + 1, t.y}, Tile{t.x, t.y - 1},
            Tile{t.x - 1, t.y}};
}

// 8-neighborhood offsets in clockwise order starting at N. The index of an
// offset in this array is its bit position in a neighborhood mask, so a 90
// degree clockwise rotation of a mask is a rotate-left by two bits.
inline constexpr std::array<Tile, 8> kRingOffsets = {
    Tile{0, 1},  Tile{1, 1},   Tile{1, 0},  Tile{1, -1},
    Tile{0, -1}, Tile{-1, -1}, Tile{-1, 0}, Tile{-1, 1}};

inline constexpr std::array<Tile, 8> eight_neighbors(const Tile& t) {
    std::array<Tile, 8> out{};
    for (int i = 0; i < 8; ++i)
        out[i] = {t.x + kRingOffsets[i].x, t.y + kRingOffsets[i].y};
    return out;
}

inline constexpr uint8_t rotate_mask_cw(uint8_t m) {
    return static_cast<uint8_t>((m << 2) | (m >> 6));
}

inline constexpr uint8_t mirror_mask_x(uint8_t m) {
    uint8_t out = m & 1;
    for (int i = 1; i < 8; ++i)
        if (m & (1u << i)) out |= static_cast<uint8_t>(1u << (8 - i));
    return out;
}

// Ring index (bit position) of the cardinal directions.
inline constexpr int ring_index(Dir d) { return static_cast<int>(d) * 2; }

struct TileHash {
    size_t operator()(const Tile& t) const noexcept {
        uint64_t v = (static_cast<uint64_t>(static_cast<uint32_t>(t.x)) << 32) |
                     static_cast<uint32_t>(t.y);
        v ^= v >> 33;
        v *= 0xff51afd7ed558ccdULL;
        v ^= v >> 33;
        v *= 0xc4ceb9fe1a85ec53ULL;
        v ^= v >> 33;
        return static_cast<size_t>(v);
    }
};

}  // namespace sweep
