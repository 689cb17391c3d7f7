#include "sweepcover/region.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>

#include "sweepcover/charts.hpp"
#include "sweepcover/protocol.hpp"

namespace sweep {

void Region::invalidate() {
    boundary_.reset();
    depth_.reset();
    perimeter_.reset();
    radius_.reset();
}

void Region::add(const Tile& t) {
    if (tiles_.insert(t).second) invalidate();
}

void Region::remove(const Tile& t) {
    if (!tiles_.erase(t)) throw RegionError("removing a tile outside the region");
    invalidate();
}

bool Region::is_boundary(const Tile& t) const {
    if (!contains(t)) return false;
    for (const Tile& u : eight_neighbors(t))
        if (!contains(u)) return true;
    return false;
}

const TileSet& Region::boundary() const {
    if (!boundary_) {
        TileSet b;
        for (const Tile& t : tiles_)
            if (is_boundary(t)) b.insert(t);
        boundary_ = std::move(b);
    }
    return *boundary_;
}

uint8_t Region::neighbor_mask(const Tile& t) const {
    uint8_t m = 0;
    for (int i = 0; i < 8; ++i) {
        Tile u{t.x + kRingOffsets[i].x, t.y + kRingOffsets[i].y};
        if (contains(u)) m |= static_cast<uint8_t>(1u << i);
    }
    return m;
}

int Region::depth() const {
    if (depth_) return *depth_;
    if (empty()) throw RegionError("depth of empty region");
    // Multi-source BFS from the boundary, inside the region.
    std::unordered_map<Tile, int, TileHash> dist;
    std::deque<Tile> queue;
    for (const Tile& t : boundary()) {
        dist.emplace(t, 0);
        queue.push_back(t);
    }
    int best = 0;
    while (!queue.empty()) {
        Tile t = queue.front();
        queue.pop_front();
        int d = dist[t];
        best = std::max(best, d);
        for (const Tile& u : four_neighbors(t)) {
            if (contains(u) && dist.emplace(u, d + 1).second) queue.push_back(u);
        }
    }
    depth_ = best;
    return best;
}

Tile Region::lex_min_boundary() const {
    if (empty()) throw RegionError("boundary of empty region");
    const TileSet& b = boundary();
    Tile best = *b.begin();
    for (const Tile& t : b)
        if (lex_less(t, best)) best = t;
    return best;
}

int64_t Region::perimeter_length() const {
    if (perimeter_) return *perimeter_;
    if (empty()) throw RegionError("perimeter of empty region");
    if (!is_simply_connected())
        throw RegionError("perimeter of a non-simply-connected region");
    if (area() == 1) {
        perimeter_ = 1;
        return 1;
    }
    auto isb = [this](const Tile& t) { return is_boundary(t); };
    Tile p0 = lex_min_boundary();
    auto start = first_move(p0, neighbor_mask(p0), ChartTable::builtin(), isb);
    if (!start) throw RegionError("perimeter walk has no first move");
    Tile pos = *start, prev = p0;
    int64_t steps = 1;
    const int64_t cap = 4 * boundary_size() + 8;
    while (true) {
        auto next = rightmost_step(pos, prev, isb,
                                   [this](const Tile& t) { return contains(t); });
        if (!next) throw RegionError("perimeter walk left the boundary");
        prev = pos;
        pos = *next;
        ++steps;
        if (pos == *start && prev == p0) break;
        if (steps > cap) throw RegionError("perimeter walk did not close");
    }
    perimeter_ = steps - 1;
    return *perimeter_;
}

Region::BBox Region::bbox() const {
    if (empty()) throw RegionError("bbox of empty region");
    BBox b{std::numeric_limits<int32_t>::max(), std::numeric_limits<int32_t>::max(),
           std::numeric_limits<int32_t>::min(), std::numeric_limits<int32_t>::min()};
    for (const Tile& t : tiles_) {
        b.min_x = std::min(b.min_x, t.x);
        b.min_y = std::min(b.min_y, t.y);
        b.max_x = std::max(b.max_x, t.x);
        b.max_y = std::max(b.max_y, t.y);
    }
    return b;
}

int64_t Region::bounding_rect_perimeter() const {
    BBox b = bbox();
    return 2 * (b.width() + b.height());
}

int Region::region_radius() const {
    if (radius_) return *radius_;
    if (empty()) throw RegionError("radius of empty region");
    if (!is_four_connected()) throw RegionError("radius of disconnected region");
    int best = std::numeric_limits<int>::max();
    std::unordered_map<Tile, int, TileHash> dist;
    std::deque<Tile> queue;
    for (const Tile& v : tiles_) {
        dist.clear();
        queue.clear();
        dist.emplace(v, 0);
        queue.push_back(v);
        int ecc = 0;
        while (!queue.empty()) {
            Tile t = queue.front();
            queue.pop_front();
            int d = dist[t];
            ecc = std::max(ecc, d);
            for (const Tile& u : four_neighbors(t))
                if (contains(u) && dist.emplace(u, d + 1).second) queue.push_back(u);
        }
        best = std::min(best, ecc);
    }
    radius_ = best;
    return best;
}

namespace {

// Dense window over [min_x-1, max_x+1] x [min_y-1, max_y+1]; keeps the
// connectivity checks linear in the box area even when the region has
// grown far beyond its initial size.
struct Window {
    int32_t x0, y0;
    int32_t w, h;
    std::vector<uint8_t> cells;  // 1 = contaminated

    explicit Window(const TileSet& tiles, const Region::BBox& b)
        : x0(b.min_x - 1), y0(b.min_y - 1),
          w(b.max_x - b.min_x + 3), h(b.max_y - b.min_y + 3),
          cells(size_t(w) * size_t(h), 0) {
        for (const Tile& t : tiles) cells[index(t.x, t.y)] = 1;
    }

    size_t index(int32_t x, int32_t y) const {
        return size_t(y - y0) * size_t(w) + size_t(x - x0);
    }
    bool inside(int32_t x, int32_t y) const {
        return x >= x0 && x < x0 + w && y >= y0 && y < y0 + h;
    }

    // Marks every cell 4-reachable from (sx, sy) through cells equal to
    // `value` with `mark`; returns how many were marked.
    size_t flood(int32_t sx, int32_t sy, uint8_t value, uint8_t mark) {
        if (!inside(sx, sy) || cells[index(sx, sy)] != value) return 0;
        std::deque<std::pair<int32_t, int32_t>> queue;
        cells[index(sx, sy)] = mark;
        queue.emplace_back(sx, sy);
        size_t n = 1;
        while (!queue.empty()) {
            auto [x, y] = queue.front();
            queue.pop_front();
            const int32_t nb[4][2] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
            for (const auto& p : nb) {
                if (!inside(p[0], p[1])) continue;
                uint8_t& c = cells[index(p[0], p[1])];
                if (c != value) continue;
                c = mark;
                ++n;
                queue.emplace_back(p[0], p[1]);
            }
        }
        return n;
    }
};

}  // namespace

bool Region::is_four_connected() const {
    if (empty()) return true;
    Window win(tiles_, bbox());
    Tile seed = *tiles_.begin();
    return win.flood(seed.x, seed.y, 1, 2) == tiles_.size();
}

bool Region::is_simply_connected() const {
    if (empty()) return false;
    Window win(tiles_, bbox());
    Tile seed = *tiles_.begin();
    if (win.flood(seed.x, seed.y, 1, 2) != tiles_.size()) return false;
    // Flood the clean cells from the window corner; any clean cell left
    // over sits in a hole.
    size_t clean = win.cells.size() - tiles_.size();
    return win.flood(win.x0, win.y0, 0, 3) == clean;
}

Region Region::spread() const {
    if (empty()) throw RegionError("spread of empty region");
    TileSet grown = tiles_;
    for (const Tile& t : tiles_)
        for (const Tile& u : four_neighbors(t)) grown.insert(u);
    // Fill pockets the dilation sealed off, restoring simple connectivity.
    Region out(std::move(grown));
    Window win(out.tiles_, out.bbox());
    win.flood(win.x0, win.y0, 0, 3);
    for (int32_t y = win.y0; y < win.y0 + win.h; ++y)
        for (int32_t x = win.x0; x < win.x0 + win.w; ++x)
            if (win.cells[win.index(x, y)] == 0) out.tiles_.insert(Tile{x, y});
    out.invalidate();
    return out;
}

bool Region::is_critical(const Tile& t) const {
    if (!contains(t)) throw RegionError("criticality of a tile outside the region");
    return mask_is_critical(neighbor_mask(t));
}

}  // namespace sweep
