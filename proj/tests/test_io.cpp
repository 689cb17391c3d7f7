#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sweepcover/generate.hpp"
#include "sweepcover/region_io.hpp"

using namespace sweep;

TEST_CASE("parse and serialize round trip") {
    const std::string sq = "REGION v1 3 3\n###\n###\n###\n";
    Region r = parse_region(sq);
    CHECK(r.area() == 9);
    CHECK(serialize_region(r) == sq);
}

TEST_CASE("serialization is canonical") {
    // Padding rows and columns crop away; coordinates translate to the
    // origin.
    const std::string padded = "REGION v1 6 5\n......\n..##..\n..##..\n......\n......\n";
    CHECK(serialize_region(parse_region(padded)) == "REGION v1 2 2\n##\n##\n");

    TileSet far_away;
    for (int32_t x = 40; x < 43; ++x) far_away.insert(Tile{x, -7});
    CHECK(serialize_region(Region(std::move(far_away))) == "REGION v1 3 1\n###\n");
}

TEST_CASE("row order is top to bottom") {
    Region r = parse_region("REGION v1 2 2\n#.\n##\n");
    // The top-left '#' is the highest y.
    CHECK(r.contains(Tile{0, 1}));
    CHECK(r.contains(Tile{0, 0}));
    CHECK(r.contains(Tile{1, 0}));
    CHECK(!r.contains(Tile{1, 1}));
}

TEST_CASE("grammar violations are rejected") {
    CHECK_THROWS_AS(parse_region(""), IoError);
    CHECK_THROWS_AS(parse_region("REGION v2 1 1\n#\n"), IoError);
    CHECK_THROWS_AS(parse_region("REGION v1 2 1\n#\n"), IoError);       // short row
    CHECK_THROWS_AS(parse_region("REGION v1 1 2\n#\n"), IoError);       // missing row
    CHECK_THROWS_AS(parse_region("REGION v1 1 1\n#\n#\n"), IoError);    // trailing data
    CHECK_THROWS_AS(parse_region("REGION v1 1 1\n#"), IoError);         // no newline
    CHECK_THROWS_AS(parse_region("REGION v1 1 1\nx\n"), IoError);       // bad character
}

TEST_CASE("invalid regions are rejected") {
    CHECK_THROWS_AS(parse_region("REGION v1 1 1\n.\n"), IoError);  // empty
    CHECK_THROWS_AS(parse_region("REGION v1 3 3\n###\n#.#\n###\n"), IoError);  // hole
    CHECK_THROWS_AS(parse_region("REGION v1 2 2\n#.\n.#\n"), IoError);  // diagonal
}

TEST_CASE("generated regions survive the round trip") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        Region r = generate_region(seed, 30 + int64_t(seed), ShapeClass::RandomTree);
        std::string text = serialize_region(r);
        Region back = parse_region(text);
        CHECK(serialize_region(back) == text);
        CHECK(back.area() == r.area());
    }
}
