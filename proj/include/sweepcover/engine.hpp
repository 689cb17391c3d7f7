#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sweepcover/bounds.hpp"
#include "sweepcover/protocol.hpp"
#include "sweepcover/region.hpp"

namespace sweep {

class EngineError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SimConfig {
    Region region;
    int k = 1;
    std::optional<int64_t> d;        // spread period; nullopt = static run
    std::optional<int64_t> horizon;  // default: 10 * S0^2 * max(1, ln S0)
    /// 0 keeps the lexicographically smallest boundary tile as pivot;
    /// any other value rotates the pivot choice deterministically.
    uint64_t seed = 0;
    int trace_verbosity = 1;  // 0: core events, 1: plus flag events
    /// Recheck simple connectivity after every tick (test suites turn this
    /// on; it is linear in the region size).
    bool validate_invariants = false;
};

enum class EventKind { Activate, Move, Clean, Spread, Flag, Stall, Done };

struct TraceEvent {
    int64_t tick = 0;
    EventKind kind = EventKind::Move;
    std::optional<int> agent;
    std::optional<Tile> tile;
    int64_t area_after = 0;
};

enum class Outcome { Covered, Timeout, Stalled };

struct BoundReport {
    BoundInputs inputs{};
    double static_bound_value = 0;
    DynamicBound dynamic{};
    FeasibilityReport feas{};
    bool static_applicable = false;  // static runs only
    bool static_satisfied = false;
    bool dynamic_satisfied = false;
    /// Observed area at every spread tick respected the universal
    /// lower-bound recursion.
    bool area_recursion_ok = true;
};

struct SimResult {
    Outcome outcome = Outcome::Timeout;
    int64_t final_tick = 0;  // covered/stalled tick, or horizon
    int64_t cleaned_tiles = 0;
    std::vector<TraceEvent> trace;
    /// (tick, area) at t = 0 and immediately after every spread.
    std::vector<std::pair<int64_t, int64_t>> area_series;
    BoundReport bounds{};
};

struct SimState {
    int64_t tick = 0;
    Region region;
    std::vector<AgentState> agents;
    int inserted = 0;  // activated agent count
    Tile pivot{};
};

class Engine {
public:
    /// Validates the config and stages the agents; agent i activates at
    /// tick 2i. Throws EngineError for an empty or non-simply-connected
    /// region or k < 1.
    explicit Engine(SimConfig cfg);

    const SimState& state() const { return st_; }
    const SimConfig& config() const { return cfg_; }
    const std::vector<TraceEvent>& trace() const { return trace_; }
    bool finished() const { return outcome_.has_value(); }
    std::optional<Outcome> outcome() const { return outcome_; }
    int64_t horizon() const { return horizon_; }

    /// Advances one tick; no-op once finished.
    void tick();

    /// Runs to covered / stall / horizon and attaches the bound report.
    SimResult run();

private:
    void activate_due_agents();
    void completion_phase();
    void movement_phase();
    void apply_swap_clauses(AgentState& a);
    void spread_phase();
    void record(EventKind kind, std::optional<int> agent, std::optional<Tile> tile);
    void stop_agent(AgentState& a, bool clean_tile);

    SimConfig cfg_;
    SimState st_;
    std::vector<TraceEvent> trace_;
    std::vector<std::pair<int64_t, int64_t>> area_series_;
    std::optional<Outcome> outcome_;
    int64_t horizon_ = 0;
    int64_t cleaned_ = 0;
    int64_t idle_ticks_ = 0;  // ticks without activate/move/clean/spread
    bool progress_this_tick_ = false;
    bool area_recursion_ok_ = true;
};

// Trace text format, one event per line:
//   tick kind agent tile_x tile_y area_after
// space separated, '-' for an absent agent or tile. Kinds: activate, move,
// clean, spread, flag, stall, done.
std::string serialize_trace(const std::vector<TraceEvent>& events);

/// Throws EngineError naming the first malformed line (1-based).
std::vector<TraceEvent> parse_trace(const std::string& text);

struct ReplayAgent {
    Tile pos{};
    bool stopped = false;
};

struct ReplayState {
    Region region;
    std::vector<ReplayAgent> agents;  // indexed by agent id
};

/// Pure reducer: folds a trace over the initial region. Replaying an
/// engine's trace reproduces its final region and agent positions.
ReplayState replay(const Region& initial, const std::vector<TraceEvent>& events);

/// Single reducer step of replay.
void replay_apply(ReplayState& state, const TraceEvent& e);

const char* to_string(EventKind k);
const char* to_string(Outcome o);

}  // namespace sweep
