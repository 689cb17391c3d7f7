#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sweepcover/protocol.hpp"
#include "sweepcover/region.hpp"

using namespace sweep;

namespace {

struct FakeWorld : WorldModel {
    Region region;
    std::vector<AgentState> agents;

    bool contaminated(const Tile& t) const override { return region.contains(t); }
    std::vector<const AgentState*> agents_at(const Tile& t) const override {
        std::vector<const AgentState*> out;
        for (const AgentState& a : agents)
            if (a.activated && !a.stopped && a.pos == t) out.push_back(&a);
        return out;
    }
};

Region rect(int32_t w, int32_t h) {
    TileSet t;
    for (int32_t x = 0; x < w; ++x)
        for (int32_t y = 0; y < h; ++y) t.insert(Tile{x, y});
    return Region(std::move(t));
}

AgentState make_agent(int id, Tile pos) {
    AgentState a;
    a.id = id;
    a.pos = pos;
    a.activated = true;
    return a;
}

}  // namespace

TEST_CASE("criticality from the neighborhood mask") {
    auto bit = [](Dir d) { return uint8_t(1u << ring_index(d)); };
    // Lone cardinal: nothing to disconnect.
    CHECK(!mask_is_critical(bit(Dir::N)));
    // Opposite cardinals with clean diagonals: two arcs.
    CHECK(mask_is_critical(uint8_t(bit(Dir::E) | bit(Dir::W))));
    // Adjacent cardinals joined by their shared diagonal: one arc.
    CHECK(!mask_is_critical(uint8_t(bit(Dir::N) | (1u << 1) | bit(Dir::E))));
    // Same cardinals without the diagonal: two arcs.
    CHECK(mask_is_critical(uint8_t(bit(Dir::N) | bit(Dir::E))));
    // Full ring: ring connected, never critical.
    CHECK(!mask_is_critical(0xff));
    // Ring broken only at one diagonal: still a single arc.
    CHECK(!mask_is_critical(uint8_t(0xff & ~(1u << 3))));
    CHECK(!mask_is_critical(0));
}

TEST_CASE("chart table covers the published first moves") {
    const ChartTable& charts = ChartTable::builtin();
    CHECK(charts.chart_count() == 32);
    auto bit = [](int i) { return uint8_t(1u << i); };
    // Single contaminated cardinal points straight at it.
    CHECK(charts.strict_lookup(bit(ring_index(Dir::E))) == Dir::E);
    // Rotation coverage: every rotation of a handled mask is handled. The
    // destinations need not commute with rotation, because symmetric
    // patterns carry their own published chart which takes precedence over
    // a generated rotation.
    for (int m = 0; m < 256; ++m) {
        auto d = charts.strict_lookup(uint8_t(m));
        if (!d) continue;
        CHECK(charts.strict_lookup(rotate_mask_cw(uint8_t(m))).has_value());
    }
    // The extended tier adds mirrors but never contradicts the strict tier.
    for (int m = 0; m < 256; ++m) {
        auto s = charts.strict_lookup(uint8_t(m));
        if (s) CHECK(charts.extended_lookup(uint8_t(m)) == s);
    }
}

TEST_CASE("chart parser rejects duplicate masks") {
    const std::string dup =
        "...\n.##\n...\n-> E\n\n"
        "...\n.##\n...\n-> W\n";
    CHECK_THROWS_AS(ChartTable::parse(dup), ChartError);
}

TEST_CASE("rightmost step follows the boundary clockwise") {
    Region sq = rect(3, 3);
    auto isb = [&](const Tile& t) { return sq.contains(t) && sq.is_boundary(t); };
    auto in = [&](const Tile& t) { return sq.contains(t); };
    // Walking up the left edge continues across the top.
    CHECK(rightmost_step(Tile{0, 1}, Tile{0, 0}, isb, in) == Tile{0, 2});
    CHECK(rightmost_step(Tile{0, 2}, Tile{0, 1}, isb, in) == Tile{1, 2});
    // A dead end walks back.
    Region line = rect(3, 1);
    auto isl = [&](const Tile& t) { return line.contains(t) && line.is_boundary(t); };
    auto inl = [&](const Tile& t) { return line.contains(t); };
    CHECK(rightmost_step(Tile{2, 0}, Tile{1, 0}, isl, inl) == Tile{1, 0});
}

TEST_CASE("rightmost step with an interior previous tile") {
    // 5x5 square: the center's previous tile is interior after a spread.
    Region sq = rect(5, 5);
    sq.remove(Tile{0, 0});
    auto isb = [&](const Tile& t) { return sq.contains(t) && sq.is_boundary(t); };
    auto in = [&](const Tile& t) { return sq.contains(t); };
    // (1,1) is boundary (diagonal to the removed corner); its neighbor
    // (2,2) is interior. From (1,1) arriving from (2,2): scan returns the
    // second boundary hit.
    CHECK(!sq.is_boundary(Tile{2, 2}));
    auto next = rightmost_step(Tile{1, 1}, Tile{2, 2}, isb, in);
    REQUIRE(next.has_value());
    CHECK(sq.is_boundary(*next));
}

TEST_CASE("rightmost step with a cleaned previous tile") {
    // The agent cleaned (0,1) behind itself while walking up the left edge
    // of a 5x5 square. The walk must keep peeling the edge, not turn into
    // the interior.
    Region sq = rect(5, 5);
    sq.remove(Tile{0, 1});
    auto isb = [&](const Tile& t) { return sq.contains(t) && sq.is_boundary(t); };
    auto in = [&](const Tile& t) { return sq.contains(t); };
    CHECK(rightmost_step(Tile{0, 2}, Tile{0, 1}, isb, in) == Tile{0, 3});
    // Cleaned prev with no other boundary neighbor: nowhere to go.
    Region lone = Region{Tile{0, 0}};
    auto isl = [&](const Tile& t) { return lone.contains(t) && lone.is_boundary(t); };
    auto inl = [&](const Tile& t) { return lone.contains(t); };
    CHECK(!rightmost_step(Tile{0, 0}, Tile{1, 0}, isl, inl).has_value());
}

TEST_CASE("priority of legal moves") {
    Tile from{0, 0};
    CHECK(priority(from, Tile{1, 0}) == 2);
    CHECK(priority(from, Tile{-1, 0}) == -2);
    CHECK(priority(from, Tile{0, 1}) == 1);
    CHECK(priority(from, Tile{0, -1}) == -1);
}

TEST_CASE("resting yields to earlier entrants and higher priority") {
    FakeWorld world;
    world.region = rect(4, 1);

    AgentState a = make_agent(0, Tile{1, 0});
    AgentState b = make_agent(1, Tile{1, 0});
    a.dest = b.dest = Tile{2, 0};
    a.entry_tick = 4;
    b.entry_tick = 2;  // b entered earlier: a rests, b does not
    a.prev = b.prev = Tile{0, 0};
    world.agents = {a, b};
    CHECK(compute_resting(a, SensorView(world, a.pos)));
    CHECK(!compute_resting(b, SensorView(world, b.pos)));

    // Same tick: the higher-priority entrant wins.
    world.agents[0].entry_tick = 2;
    world.agents[0].prev = Tile{0, 0};   // entered rightward, priority 2
    world.agents[1].prev = Tile{1, 1};   // entered downward, priority -1
    CHECK(!compute_resting(world.agents[0], SensorView(world, a.pos)));
    CHECK(compute_resting(world.agents[1], SensorView(world, b.pos)));

    // Exact tie: lower id moves.
    world.agents[1].prev = Tile{0, 0};
    CHECK(!compute_resting(world.agents[0], SensorView(world, a.pos)));
    CHECK(compute_resting(world.agents[1], SensorView(world, b.pos)));

    // Different destinations never rest.
    world.agents[0].dest = Tile{0, 0};
    CHECK(!compute_resting(world.agents[1], SensorView(world, b.pos)));
}

TEST_CASE("base waiting tags come from the three lower neighbors and the left") {
    FakeWorld world;
    world.region = rect(3, 3);
    AgentState c = make_agent(0, Tile{1, 1});
    world.agents = {c,
                    make_agent(1, Tile{0, 1}),    // left
                    make_agent(2, Tile{1, 0}),    // down
                    make_agent(3, Tile{0, 0}),    // left-down
                    make_agent(4, Tile{2, 0})};   // right-down
    uint8_t w = compute_base_waiting(world.agents[0], SensorView(world, c.pos));
    CHECK((w & tag_bit(WaitTag::Left)) != 0);
    CHECK((w & tag_bit(WaitTag::Down)) != 0);
    CHECK((w & tag_bit(WaitTag::LeftDown)) != 0);
    CHECK((w & tag_bit(WaitTag::RightDown)) != 0);

    // Inactive neighbors do not block.
    for (size_t i = 1; i < world.agents.size(); ++i) world.agents[i].resting = true;
    CHECK(compute_base_waiting(world.agents[0], SensorView(world, c.pos)) == 0);
}

TEST_CASE("cleaning rule") {
    FakeWorld world;
    world.region = rect(3, 1);
    Tile pivot{0, 0};

    AgentState end = make_agent(0, Tile{2, 0});
    world.agents = {end};
    CHECK(should_clean(end, SensorView(world, end.pos), pivot));

    // Critical middle tile of the line.
    AgentState mid = make_agent(1, Tile{1, 0});
    world.agents = {mid};
    CHECK(!should_clean(mid, SensorView(world, mid.pos), pivot));

    // The pivot is never cleaned by the movement rule.
    AgentState at_pivot = make_agent(2, pivot);
    world.agents = {at_pivot};
    CHECK(!should_clean(at_pivot, SensorView(world, pivot), pivot));

    // Another agent on the tile blocks cleaning.
    world.agents = {end, make_agent(3, Tile{2, 0})};
    CHECK(!should_clean(world.agents[0], SensorView(world, end.pos), pivot));
}

TEST_CASE("cleaning never opens a hole") {
    // Boundary only through a diagonal: all four cardinals contaminated.
    Region r = rect(3, 3);
    r.add(Tile{1, -1});
    r.add(Tile{1, 3});
    r.remove(Tile{0, 0});
    FakeWorld world;
    world.region = r;
    Tile pivot{1, 3};
    AgentState a = make_agent(0, Tile{1, 1});
    world.agents = {a};
    REQUIRE(r.is_boundary(Tile{1, 1}));
    REQUIRE(!r.is_critical(Tile{1, 1}));
    CHECK(!should_clean(a, SensorView(world, a.pos), pivot));
}

TEST_CASE("completion and near completion") {
    FakeWorld world;
    world.region = Region{Tile{0, 0}};
    Tile pivot{0, 0};
    AgentState a = make_agent(0, pivot);
    world.agents = {a};
    CHECK(completion_reached(a, SensorView(world, a.pos), pivot));
    CHECK(near_completion_flag(a, SensorView(world, a.pos)));

    world.region = rect(2, 1);
    CHECK(!completion_reached(world.agents[0], SensorView(world, pivot), pivot));
    CHECK(!near_completion_flag(world.agents[0], SensorView(world, pivot)));

    // Neighbor occupied: flag raises; cascade needs the neighbor flagged too.
    world.agents.push_back(make_agent(1, Tile{1, 0}));
    CHECK(near_completion_flag(world.agents[0], SensorView(world, pivot)));
    CHECK(!near_completion_cascade(world.agents[0], SensorView(world, pivot)));
    world.agents[1].near_completion = true;
    CHECK(near_completion_cascade(world.agents[0], SensorView(world, pivot)));
}

TEST_CASE("sensor range is enforced") {
    FakeWorld world;
    world.region = rect(9, 1);
    SensorView view(world, Tile{0, 0});
    CHECK(view.contaminated(Tile{3, 0}));
    CHECK_THROWS_AS(view.contaminated(Tile{4, 0}), SensorRangeError);
    CHECK_THROWS_AS(view.agents_at(Tile{2, 3}), SensorRangeError);
    // Boundary resolution needs the 8-neighborhood, so distance 3 probes
    // can already throw.
    CHECK_THROWS_AS(view.is_boundary(Tile{3, 0}), SensorRangeError);
}

TEST_CASE("strict initial move errors on uncovered masks") {
    // A mask outside the chart set (and without a forced fallback) must be
    // reported, not guessed.
    FakeWorld world;
    world.region = rect(1, 1);
    AgentState a = make_agent(0, Tile{0, 0});
    world.agents = {a};
    CHECK_THROWS_AS(initial_move(Tile{0, 0}, SensorView(world, Tile{0, 0})),
                    ChartError);
}
