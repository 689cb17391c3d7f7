#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "sweepcover/tile.hpp"

namespace sweep {

using TileSet = std::unordered_set<Tile, TileHash>;

/// Thrown when an operation's region precondition is violated
/// (empty region, hole, disconnection, tile not in region).
class RegionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite set of contaminated tiles on the infinite grid, with cached
/// geometric quantities. Mutation invalidates every cache.
class Region {
public:
    Region() = default;
    explicit Region(TileSet tiles) : tiles_(std::move(tiles)) {}
    Region(std::initializer_list<Tile> tiles) : tiles_(tiles) {}

    bool contains(const Tile& t) const { return tiles_.count(t) != 0; }
    bool empty() const { return tiles_.empty(); }
    int64_t area() const { return static_cast<int64_t>(tiles_.size()); }
    const TileSet& tiles() const { return tiles_; }

    void add(const Tile& t);
    void remove(const Tile& t);

    /// Tile of F with at least one non-contaminated 8-neighbor.
    bool is_boundary(const Tile& t) const;
    const TileSet& boundary() const;
    int64_t boundary_size() const { return static_cast<int64_t>(boundary().size()); }

    /// Contamination mask of the 8-neighborhood of `t` (bit order of
    /// kRingOffsets).
    uint8_t neighbor_mask(const Tile& t) const;

    /// W(F): largest within-region 4-distance from any tile to the boundary.
    int depth() const;

    /// c0: step count of the closed clockwise boundary-following walk
    /// anchored at the lexicographically smallest boundary tile.
    /// A singleton region has c0 = 1 by convention.
    int64_t perimeter_length() const;

    /// R(F): perimeter of the minimal axis-aligned bounding rectangle.
    int64_t bounding_rect_perimeter() const;

    /// C(F): minimal over v of the maximal within-region 4-distance from v.
    int region_radius() const;

    Tile lex_min_boundary() const;

    bool is_four_connected() const;
    bool is_simply_connected() const;

    /// 4-neighbor dilation followed by filling every enclosed clean pocket,
    /// so the result is again simply connected.
    Region spread() const;

    /// True iff `t` has >= 2 contaminated 4-neighbors that are not joined by
    /// a 4-connected path inside the contaminated part of t's 8-neighborhood
    /// (t itself excluded). Such a tile must never be cleaned.
    bool is_critical(const Tile& t) const;

    struct BBox {
        int32_t min_x, min_y, max_x, max_y;
        int64_t width() const { return int64_t(max_x) - min_x + 1; }
        int64_t height() const { return int64_t(max_y) - min_y + 1; }
    };
    BBox bbox() const;

    friend bool operator==(const Region& a, const Region& b) {
        return a.tiles_ == b.tiles_;
    }

private:
    TileSet tiles_;
    mutable std::optional<TileSet> boundary_;
    mutable std::optional<int> depth_;
    mutable std::optional<int64_t> perimeter_;
    mutable std::optional<int> radius_;
    void invalidate();
};

}  // namespace sweep
