#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sweepcover/charts.hpp"
#include "sweepcover/tile.hpp"

namespace sweep {

class ProtocolError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a decision rule tries to look beyond the sensor radius.
class SensorRangeError : public std::logic_error {
    using std::logic_error::logic_error;
};

inline constexpr int kSensorRadius = 3;

enum class WaitTag : uint8_t {
    Left = 1 << 0,
    Down = 1 << 1,
    LeftDown = 1 << 2,
    RightDown = 1 << 3,
    Right = 1 << 4,
    Up = 1 << 5,
};

inline constexpr uint8_t tag_bit(WaitTag t) { return static_cast<uint8_t>(t); }

struct AgentState {
    int id = 0;
    Tile pos{};
    std::optional<Tile> prev;  // last tile different from pos
    std::optional<Tile> dest;  // signaled destination, cleared after moving
    int64_t entry_tick = 0;    // tick at which pos was entered
    bool resting = false;
    uint8_t waiting = 0;  // WaitTag bits
    bool near_completion = false;
    bool saturated_perimeter = false;
    bool activated = false;
    bool stopped = false;
    bool moved_this_tick = false;
    bool ignore_resting = false;  // saturation override, valid for one tick
    bool held = false;  // no legal destination this tick; treated as inactive

    /// Non-resting and still due to move this tick.
    bool active() const {
        return activated && !stopped && !resting && !held && !moved_this_tick;
    }
};

/// World access used by SensorView; implemented by the engine and by test
/// fixtures.
class WorldModel {
public:
    virtual bool contaminated(const Tile& t) const = 0;
    /// Activated, non-stopped agents on t.
    virtual std::vector<const AgentState*> agents_at(const Tile& t) const = 0;
    virtual ~WorldModel() = default;
};

/// Range-checked window onto the world: every query is limited to Manhattan
/// distance 3 of the holder's position, enforcing the sensor model.
class SensorView {
public:
    SensorView(const WorldModel& world, Tile center)
        : world_(world), center_(center) {}

    const Tile& center() const { return center_; }

    bool contaminated(const Tile& t) const {
        check(t);
        return world_.contaminated(t);
    }

    /// Contaminated with at least one clean 8-neighbor. The neighbor probes
    /// go through the range check as well, so callers can only resolve
    /// boundary membership up to distance 2.
    bool is_boundary(const Tile& t) const {
        if (!contaminated(t)) return false;
        for (const Tile& u : eight_neighbors(t))
            if (!contaminated(u)) return true;
        return false;
    }

    uint8_t neighbor_mask(const Tile& t) const {
        uint8_t m = 0;
        for (int i = 0; i < 8; ++i) {
            Tile u{t.x + kRingOffsets[i].x, t.y + kRingOffsets[i].y};
            if (contaminated(u)) m |= static_cast<uint8_t>(1u << i);
        }
        return m;
    }

    std::vector<const AgentState*> agents_at(const Tile& t) const {
        check(t);
        return world_.agents_at(t);
    }

private:
    void check(const Tile& t) const {
        if (manhattan(t, center_) > kSensorRadius)
            throw SensorRangeError("sensor query outside Manhattan radius 3");
    }
    const WorldModel& world_;
    Tile center_;
};

/// Criticality decided from an 8-neighborhood contamination mask alone:
/// true iff >= 2 contaminated 4-neighbors fall into different components of
/// the contaminated ring, where ring cells are adjacent only when they are
/// consecutive (each cardinal connects through its flanking diagonals).
bool mask_is_critical(uint8_t mask);

/// Clockwise boundary-following step shared by the protocol and the
/// perimeter walk. IsBoundary and Contaminated are Tile -> bool predicates.
///
/// Three cases by the state of prev:
///  - on the boundary: first boundary neighbor clockwise after prev, going
///    back only as a dead-end fallback;
///  - contaminated interior (the region thickened underneath the agent):
///    second boundary hit of the clockwise scan from prev, since the first
///    one is the backward side;
///  - cleaned (the agent cleaned it on leaving, the common case): same
///    forward scan as the boundary case, except that walking back onto the
///    cleaned tile is impossible.
template <class IsBoundary, class Contaminated>
std::optional<Tile> rightmost_step(const Tile& pos, const Tile& prev,
                                   IsBoundary&& is_boundary, Contaminated&& contaminated) {
    const Dir back = dir_between(pos, prev);
    if (contaminated(prev) && !is_boundary(prev)) {
        Dir d = back;
        int hits = 0;
        for (int i = 0; i < 8; ++i) {
            Tile cand = step(pos, d);
            if (is_boundary(cand) && ++hits == 2) return cand;
            d = clockwise_next(d);
        }
        return std::nullopt;
    }
    Dir d = back;
    for (int i = 0; i < 3; ++i) {
        d = clockwise_next(d);
        Tile cand = step(pos, d);
        if (is_boundary(cand)) return cand;
    }
    if (is_boundary(prev)) return prev;  // full rotation: dead end, go back
    return std::nullopt;
}

/// First-move chain for callers that must always produce a direction:
/// chart table (with rotations and mirrors), then the forced move when a
/// single contaminated 4-neighbor exists, then the first boundary
/// 4-neighbor of the clockwise scan. Returns nullopt only when pos has no
/// contaminated 4-neighbor at all.
template <class IsBoundary>
std::optional<Tile> first_move(const Tile& pos, uint8_t mask,
                               const ChartTable& charts,
                               IsBoundary&& is_boundary) {
    if (auto d = charts.extended_lookup(mask)) return step(pos, *d);
    int cardinals = 0;
    Dir only = Dir::N;
    for (Dir d : {Dir::N, Dir::E, Dir::S, Dir::W}) {
        if (mask & (1u << ring_index(d))) {
            ++cardinals;
            only = d;
        }
    }
    if (cardinals == 1) return step(pos, only);
    for (Dir d : {Dir::N, Dir::E, Dir::S, Dir::W}) {
        if ((mask & (1u << ring_index(d))) && is_boundary(step(pos, d)))
            return step(pos, d);
    }
    return std::nullopt;
}

// Per-agent decision rules, pure over (state, view).

/// Boundary-following destination for an agent with a previous tile.
/// Throws ProtocolError when no boundary 4-neighbor exists.
Tile rightmost_neighbor(const Tile& pos, const Tile& prev, const SensorView& view);

/// First-tick destination from the chart table (strict tier: charts plus
/// rotations only). Throws ChartError naming the unmatched mask.
Tile initial_move(const Tile& pos, const SensorView& view);

/// 2*(x1-x0) + (y1-y0); ranks simultaneous entrants.
int priority(const Tile& from, const Tile& to);

/// Priority of the move that brought the agent to its current tile
/// (0 for an agent that has not moved yet).
int entry_priority(const AgentState& agent);

/// True iff a co-located agent signaling the same destination entered
/// earlier, or entered simultaneously with higher priority (id breaks
/// exact ties, lower id first).
bool compute_resting(const AgentState& agent, const SensorView& view);

/// Base waiting tags: active agents at (x-1,y), (x,y-1), (x-1,y-1),
/// (x+1,y-1). The swap clauses live in the engine because they mutate the
/// counterpart's set.
uint8_t compute_base_waiting(const AgentState& agent, const SensorView& view);

/// Cleaning rule at move time: on the boundary, not the pivot, not
/// critical, and no other agent left on the tile.
bool should_clean(const AgentState& agent, const SensorView& view, const Tile& pivot);

/// Termination at the pivot: no contaminated 4-neighbors remain.
bool completion_reached(const AgentState& agent, const SensorView& view, const Tile& pivot);

/// Every contaminated 4-neighbor holds at least one agent.
bool near_completion_flag(const AgentState& agent, const SensorView& view);

/// Every contaminated 4-neighbor holds an agent whose near-completion flag
/// is set; fires the simultaneous final clean.
bool near_completion_cascade(const AgentState& agent, const SensorView& view);

/// Tile and every non-critical boundary 4-neighbor hold >= 2 agents.
bool saturated_perimeter_flag(const AgentState& agent, const SensorView& view);

/// Tile and every boundary 4-neighbor carry the saturated flag; resting is
/// ignored for the tick.
bool saturation_override(const AgentState& agent, const SensorView& view);

}  // namespace sweep
