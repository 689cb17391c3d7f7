#include "sweepcover/generate.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>
#include <vector>

namespace sweep {

std::optional<ShapeClass> parse_shape(const std::string& name) {
    if (name == "square") return ShapeClass::Square;
    if (name == "disk") return ShapeClass::Disk;
    if (name == "line") return ShapeClass::Line;
    if (name == "random-tree-grown" || name == "random") return ShapeClass::RandomTree;
    return std::nullopt;
}

const char* to_string(ShapeClass s) {
    switch (s) {
        case ShapeClass::Square: return "square";
        case ShapeClass::Disk: return "disk";
        case ShapeClass::Line: return "line";
        case ShapeClass::RandomTree: return "random-tree-grown";
    }
    return "?";
}

namespace {

Region make_square(int64_t area) {
    const auto side = static_cast<int64_t>(std::ceil(std::sqrt(double(area))));
    TileSet tiles;
    int64_t n = 0;
    for (int32_t y = 0; n < area; ++y)
        for (int32_t x = 0; x < side && n < area; ++x, ++n) tiles.insert(Tile{x, y});
    return Region(std::move(tiles));
}

Region make_line(int64_t area) {
    TileSet tiles;
    for (int32_t x = 0; x < area; ++x) tiles.insert(Tile{x, 0});
    return Region(std::move(tiles));
}

Region make_disk(int64_t area) {
    // Manhattan-ball layers around the origin, each layer in lex order.
    TileSet tiles;
    int64_t n = 0;
    for (int32_t r = 0; n < area; ++r) {
        std::vector<Tile> layer;
        if (r == 0) {
            layer.push_back(Tile{0, 0});
        } else {
            for (int32_t x = -r; x <= r; ++x) {
                int32_t dy = r - std::abs(x);
                layer.push_back(Tile{x, dy});
                if (dy != 0) layer.push_back(Tile{x, -dy});
            }
            std::sort(layer.begin(), layer.end(), lex_less);
        }
        for (const Tile& t : layer) {
            if (n == area) break;
            tiles.insert(t);
            ++n;
        }
    }
    return Region(std::move(tiles));
}

Region make_random_tree(uint64_t seed, int64_t area) {
    std::mt19937_64 rng(seed);
    Region region{Tile{0, 0}};
    while (region.area() < area) {
        std::vector<Tile> candidates;
        {
            TileSet seen;
            for (const Tile& t : region.tiles())
                for (const Tile& u : four_neighbors(t))
                    if (!region.contains(u) && seen.insert(u).second)
                        candidates.push_back(u);
        }
        std::sort(candidates.begin(), candidates.end(), lex_less);
        // Rejection loop: attaching a tile can close a hole, never
        // disconnect, so retry until the invariant holds.
        while (!candidates.empty()) {
            size_t i = static_cast<size_t>(rng() % candidates.size());
            Tile t = candidates[i];
            region.add(t);
            if (region.is_simply_connected()) break;
            region.remove(t);
            candidates.erase(candidates.begin() + static_cast<long>(i));
        }
        if (candidates.empty())
            throw std::logic_error("random growth ran out of candidates");
    }
    return region;
}

}  // namespace

Region generate_region(uint64_t seed, int64_t target_area, ShapeClass shape) {
    if (target_area < 1) throw std::invalid_argument("target area must be >= 1");
    switch (shape) {
        case ShapeClass::Square: return make_square(target_area);
        case ShapeClass::Line: return make_line(target_area);
        case ShapeClass::Disk: return make_disk(target_area);
        case ShapeClass::RandomTree: return make_random_tree(seed, target_area);
    }
    throw std::invalid_argument("unknown shape class");
}

}  // namespace sweep
