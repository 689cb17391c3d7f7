#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sweepcover/generate.hpp"
#include "sweepcover/region.hpp"

using namespace sweep;

namespace {

Region rect(int32_t w, int32_t h) {
    TileSet t;
    for (int32_t x = 0; x < w; ++x)
        for (int32_t y = 0; y < h; ++y) t.insert(Tile{x, y});
    return Region(std::move(t));
}

}  // namespace

TEST_CASE("area boundary and depth of simple shapes") {
    Region sq3 = rect(3, 3);
    CHECK(sq3.area() == 9);
    CHECK(sq3.boundary_size() == 8);
    CHECK(!sq3.is_boundary(Tile{1, 1}));
    CHECK(sq3.depth() == 1);

    Region sq5 = rect(5, 5);
    CHECK(sq5.boundary_size() == 16);
    CHECK(sq5.depth() == 2);

    Region line = rect(5, 1);
    CHECK(line.boundary_size() == 5);
    CHECK(line.depth() == 0);

    CHECK(rect(1, 1).depth() == 0);
}

TEST_CASE("perimeter walk length oracles") {
    CHECK(rect(1, 1).perimeter_length() == 1);
    CHECK(rect(2, 1).perimeter_length() == 2);
    CHECK(rect(5, 1).perimeter_length() == 8);
    CHECK(rect(3, 3).perimeter_length() == 8);
    // A full square ring walk visits each boundary tile once.
    CHECK(rect(10, 10).perimeter_length() == 36);
}

TEST_CASE("perimeter walk bounds hold on generated regions") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Region r = generate_region(seed, 6 + int64_t(seed) * 13, ShapeClass::RandomTree);
        int64_t c0 = r.perimeter_length();
        CHECK(c0 >= 2);
        CHECK(c0 <= 2 * r.boundary_size() - 2);
    }
}

TEST_CASE("bounding rectangle perimeter and radius") {
    CHECK(rect(3, 3).bounding_rect_perimeter() == 12);
    CHECK(rect(5, 1).bounding_rect_perimeter() == 12);
    CHECK(rect(5, 1).region_radius() == 2);
    CHECK(rect(3, 3).region_radius() == 2);
    CHECK(rect(1, 1).region_radius() == 0);
}

TEST_CASE("simple connectivity detection") {
    CHECK(rect(3, 3).is_simply_connected());
    Region ring = rect(3, 3);
    ring.remove(Tile{1, 1});
    CHECK(ring.is_four_connected());
    CHECK(!ring.is_simply_connected());
    Region diag{Tile{0, 0}, Tile{1, 1}};
    CHECK(!diag.is_four_connected());
    CHECK(!diag.is_simply_connected());
    CHECK(!Region{}.is_simply_connected());
}

TEST_CASE("spread dilates and fills pockets") {
    Region plus = Region{Tile{0, 0}}.spread();
    CHECK(plus.area() == 5);
    CHECK(plus.contains(Tile{0, 1}));
    CHECK(plus.contains(Tile{0, -1}));
    CHECK(plus.contains(Tile{1, 0}));
    CHECK(plus.contains(Tile{-1, 0}));

    CHECK(rect(3, 3).spread().area() == 21);

    // U shape whose mouth seals under dilation: the pocket must be filled.
    TileSet u;
    for (int32_t x = 0; x <= 4; ++x) u.insert(Tile{x, 0});
    for (int32_t y = 1; y <= 4; ++y) {
        u.insert(Tile{0, y});
        u.insert(Tile{4, y});
    }
    u.insert(Tile{1, 4});
    u.insert(Tile{3, 4});
    Region grown = Region(std::move(u)).spread();
    CHECK(grown.contains(Tile{2, 2}));
    CHECK(grown.contains(Tile{2, 3}));
    CHECK(grown.is_simply_connected());
}

TEST_CASE("spread grows by at least two tiles") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Region r = generate_region(seed, 1 + int64_t(seed) * 7, ShapeClass::RandomTree);
        CHECK(r.spread().area() >= r.area() + 2);
    }
}

TEST_CASE("critical tiles") {
    Region line = rect(3, 1);
    CHECK(line.is_critical(Tile{1, 0}));
    CHECK(!line.is_critical(Tile{0, 0}));
    CHECK(!line.is_critical(Tile{2, 0}));

    Region sq = rect(3, 3);
    for (const Tile& t : sq.tiles()) CHECK(!sq.is_critical(t));

    // Two arms joined through one tile.
    Region elbow{Tile{0, 0}, Tile{1, 0}, Tile{1, 1}, Tile{1, 2}, Tile{2, 0}};
    CHECK(elbow.is_critical(Tile{1, 0}));

    CHECK_THROWS_AS(sq.is_critical(Tile{9, 9}), RegionError);
}

TEST_CASE("caches match recomputation after mutation") {
    Region r = generate_region(3, 60, ShapeClass::RandomTree);
    (void)r.boundary();
    (void)r.depth();
    (void)r.perimeter_length();
    // Remove a leaf tile (keeps the region simply connected), then compare
    // every cached quantity with a cold copy.
    Tile leaf{};
    bool found = false;
    for (const Tile& t : r.boundary()) {
        Region probe = r;
        probe.remove(t);
        if (probe.is_simply_connected()) {
            leaf = t;
            found = true;
            break;
        }
    }
    REQUIRE(found);
    r.remove(leaf);
    Region cold(TileSet(r.tiles()));
    CHECK(r.boundary() == cold.boundary());
    CHECK(r.depth() == cold.depth());
    CHECK(r.perimeter_length() == cold.perimeter_length());
    CHECK(r.region_radius() == cold.region_radius());
}

TEST_CASE("generators are deterministic and exact") {
    for (ShapeClass s :
         {ShapeClass::Square, ShapeClass::Disk, ShapeClass::Line, ShapeClass::RandomTree}) {
        for (int64_t area : {int64_t(1), int64_t(7), int64_t(40)}) {
            Region a = generate_region(11, area, s);
            Region b = generate_region(11, area, s);
            CHECK(a == b);
            CHECK(a.area() == area);
            CHECK(a.is_simply_connected());
        }
    }
    CHECK(generate_region(1, 50, ShapeClass::RandomTree) !=
          generate_region(2, 50, ShapeClass::RandomTree));
    CHECK_THROWS(generate_region(0, 0, ShapeClass::Square));
}

TEST_CASE("region mutation guards") {
    Region r = rect(2, 2);
    CHECK_THROWS_AS(r.remove(Tile{5, 5}), RegionError);
    r.add(Tile{2, 0});
    CHECK(r.area() == 5);
    CHECK_THROWS_AS(Region{}.lex_min_boundary(), RegionError);
    CHECK_THROWS_AS(Region{}.depth(), RegionError);
    CHECK_THROWS_AS(Region{}.spread(), RegionError);
}
