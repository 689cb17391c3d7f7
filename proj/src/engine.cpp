#include "sweepcover/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sweepcover/charts.hpp"

namespace sweep {

namespace {

class EngineWorld : public WorldModel {
public:
    EngineWorld(const Region& region, const std::vector<AgentState>& agents)
        : region_(region), agents_(agents) {}

    bool contaminated(const Tile& t) const override { return region_.contains(t); }

    std::vector<const AgentState*> agents_at(const Tile& t) const override {
        std::vector<const AgentState*> out;
        for (const AgentState& a : agents_)
            if (a.activated && !a.stopped && a.pos == t) out.push_back(&a);
        return out;
    }

private:
    const Region& region_;
    const std::vector<AgentState>& agents_;
};

int64_t default_horizon(int64_t s0) {
    double h = 10.0 * double(s0) * double(s0) * std::max(1.0, std::log(double(s0)));
    return std::max<int64_t>(1, static_cast<int64_t>(h));
}

}  // namespace

Engine::Engine(SimConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.k < 1) throw EngineError("agent count must be >= 1");
    if (cfg_.d && *cfg_.d < 1) throw EngineError("spread period must be >= 1");
    if (cfg_.region.empty()) throw EngineError("region is empty");
    if (!cfg_.region.is_simply_connected())
        throw EngineError("region is not simply connected");

    st_.region = cfg_.region;
    st_.tick = 0;
    st_.inserted = 0;

    // Deterministic "arbitrary" pivot: lexicographic minimum, rotated
    // through the sorted boundary when a nonzero seed asks for it.
    std::vector<Tile> boundary(st_.region.boundary().begin(), st_.region.boundary().end());
    std::sort(boundary.begin(), boundary.end(), lex_less);
    st_.pivot = boundary[cfg_.seed % boundary.size()];

    st_.agents.resize(static_cast<size_t>(cfg_.k));
    for (int i = 0; i < cfg_.k; ++i) {
        st_.agents[i].id = i;
        st_.agents[i].pos = st_.pivot;
    }

    horizon_ = cfg_.horizon ? *cfg_.horizon : default_horizon(st_.region.area());
    if (horizon_ < 1) throw EngineError("horizon must be >= 1");
    area_series_.emplace_back(0, st_.region.area());
}

void Engine::record(EventKind kind, std::optional<int> agent, std::optional<Tile> tile) {
    trace_.push_back({st_.tick, kind, agent, tile, st_.region.area()});
    switch (kind) {
        case EventKind::Activate:
        case EventKind::Move:
        case EventKind::Clean:
        case EventKind::Spread:
            progress_this_tick_ = true;
            break;
        default:
            break;
    }
}

void Engine::stop_agent(AgentState& a, bool clean_tile) {
    if (clean_tile && st_.region.contains(a.pos)) {
        st_.region.remove(a.pos);
        ++cleaned_;
        record(EventKind::Clean, a.id, a.pos);
    }
    a.stopped = true;
    record(EventKind::Done, a.id, a.pos);
}

void Engine::activate_due_agents() {
    for (AgentState& a : st_.agents) {
        if (a.activated) continue;
        if (st_.tick == 2 * static_cast<int64_t>(a.id)) {
            a.activated = true;
            a.entry_tick = st_.tick;
            ++st_.inserted;
            record(EventKind::Activate, a.id, a.pos);
        }
    }
}

void Engine::completion_phase() {
    EngineWorld world(st_.region, st_.agents);

    for (AgentState& a : st_.agents) {
        if (!a.activated || a.stopped) continue;
        SensorView view(world, a.pos);
        if (completion_reached(a, view, st_.pivot)) stop_agent(a, true);
    }
    if (st_.region.empty()) return;

    // Near-completion flags from occupancy, then the simultaneous cascade.
    std::vector<int> cascading;
    for (AgentState& a : st_.agents) {
        if (!a.activated || a.stopped) continue;
        SensorView view(world, a.pos);
        bool before = a.near_completion;
        a.near_completion = near_completion_flag(a, view);
        if (a.near_completion && !before && cfg_.trace_verbosity >= 1)
            record(EventKind::Flag, a.id, a.pos);
    }
    for (AgentState& a : st_.agents) {
        if (!a.activated || a.stopped) continue;
        SensorView view(world, a.pos);
        if (near_completion_cascade(a, view)) cascading.push_back(a.id);
    }
    // The cascade models the endgame where every contaminated tile holds
    // an agent and everything is cleaned at once. The flags alone can also
    // fire inside a locally saturated pocket mid-run, where a partial
    // simultaneous clean could remove a critical tile; only apply the
    // cascade when it really covers the whole remaining region.
    if (!cascading.empty()) {
        TileSet covered;
        for (int id : cascading) covered.insert(st_.agents[id].pos);
        bool total = true;
        for (const Tile& t : st_.region.tiles())
            if (!covered.count(t)) {
                total = false;
                break;
            }
        if (total)
            for (int id : cascading) stop_agent(st_.agents[id], true);
    }
    if (st_.region.empty()) return;

    for (AgentState& a : st_.agents) {
        if (!a.activated || a.stopped) continue;
        SensorView view(world, a.pos);
        a.saturated_perimeter = saturated_perimeter_flag(a, view);
    }
    for (AgentState& a : st_.agents) {
        if (!a.activated || a.stopped) continue;
        SensorView view(world, a.pos);
        a.ignore_resting = saturation_override(a, view);
    }
}

void Engine::movement_phase() {
    EngineWorld world(st_.region, st_.agents);
    const ChartTable& charts = ChartTable::builtin();
    const int max_rounds = cfg_.k + 4;

    for (int round = 0; round < max_rounds; ++round) {
        // Recompute destinations and resting for everyone still due to act.
        // Resting is sticky for the remainder of the tick: a yielded turn is
        // not reclaimed when the agent ahead departs, which is what makes
        // co-located agents separate again.
        for (AgentState& a : st_.agents) {
            if (!a.activated || a.stopped || a.moved_this_tick || a.resting) continue;
            a.held = false;
            a.dest.reset();
            SensorView view(world, a.pos);
            try {
                if (a.prev) {
                    a.dest = rightmost_neighbor(a.pos, *a.prev, view);
                } else {
                    auto isb = [&](const Tile& t) { return view.is_boundary(t); };
                    auto mv = first_move(a.pos, view.neighbor_mask(a.pos), charts, isb);
                    if (mv) a.dest = *mv;
                }
            } catch (const ProtocolError&) {
            }
            if (!a.dest) {
                a.held = true;  // nowhere to go; sit this tick out
                continue;
            }
            if (!a.ignore_resting && compute_resting(a, view)) a.resting = true;
        }

        // Base waiting tags, then the swap-release clauses in id order.
        for (AgentState& a : st_.agents) {
            if (!a.active()) continue;
            SensorView view(world, a.pos);
            a.waiting = compute_base_waiting(a, view);
        }
        for (AgentState& a : st_.agents) {
            if (!a.active() || !a.dest) continue;
            apply_swap_clauses(a);
        }

        // One movement per round; everything is recomputed afterwards so
        // later movers see the updated region and occupancy.
        AgentState* mover = nullptr;
        for (AgentState& a : st_.agents) {
            if (a.active() && a.dest && a.waiting == 0) {
                mover = &a;
                break;
            }
        }
        if (!mover) break;

        SensorView view(world, mover->pos);
        if (should_clean(*mover, view, st_.pivot)) {
            st_.region.remove(mover->pos);
            ++cleaned_;
            record(EventKind::Clean, mover->id, mover->pos);
        }
        Tile from = mover->pos;
        mover->pos = *mover->dest;
        mover->prev = from;
        mover->entry_tick = st_.tick;
        mover->dest.reset();
        mover->moved_this_tick = true;
        record(EventKind::Move, mover->id, mover->pos);
        if (st_.region.empty()) return;
    }
}

void Engine::apply_swap_clauses(AgentState& a) {
    EngineWorld world(st_.region, st_.agents);
    SensorView view(world, a.pos);
    const Tile p = a.pos;
    const Dir dest_dir = dir_between(p, *a.dest);
    if (dest_dir != Dir::E && dest_dir != Dir::N) return;

    const bool right = dest_dir == Dir::E;
    const Tile ahead = right ? Tile{p.x + 1, p.y} : Tile{p.x, p.y + 1};
    const Dir opposing = opposite(dest_dir);

    std::vector<int> counterparts;
    bool has_active_ahead = false;
    for (const AgentState* j : view.agents_at(ahead)) {
        if (!j->active()) continue;
        has_active_ahead = true;
        if (j->dest && dir_between(j->pos, *j->dest) == opposing) return;
        counterparts.push_back(j->id);
    }
    if (!has_active_ahead) return;

    // "No other agents delayed by this one": nobody behind is trying to
    // move into p, and the tiles that would wait on p are empty of active
    // agents.
    const Tile behind = right ? Tile{p.x - 1, p.y} : Tile{p.x, p.y - 1};
    for (const AgentState* l : view.agents_at(behind)) {
        if (l->active() && l->dest && dir_between(l->pos, *l->dest) == dest_dir) return;
    }
    const Tile blockers[3] = {
        right ? Tile{p.x, p.y + 1} : Tile{p.x + 1, p.y},
        Tile{p.x + 1, p.y + 1},
        Tile{p.x - 1, p.y + 1},
    };
    for (const Tile& b : blockers) {
        for (const AgentState* l : view.agents_at(b))
            if (l->active()) return;
    }

    a.waiting |= tag_bit(right ? WaitTag::Right : WaitTag::Up);
    const uint8_t released = tag_bit(right ? WaitTag::Left : WaitTag::Down);
    for (int id : counterparts)
        st_.agents[id].waiting &= static_cast<uint8_t>(~released);
}

void Engine::spread_phase() {
    if (!cfg_.d) return;
    if (st_.tick == 0 || st_.tick % *cfg_.d != 0) return;
    if (st_.region.empty()) return;
    int64_t before = st_.region.area();
    st_.region = st_.region.spread();
    record(EventKind::Spread, std::nullopt, std::nullopt);
    // Universal lower-bound recursion check against the previous sample.
    auto expected = area_lower_bound_step(area_series_.back().second, *cfg_.d, cfg_.k);
    if (expected && st_.region.area() < *expected) area_recursion_ok_ = false;
    (void)before;
    area_series_.emplace_back(st_.tick, st_.region.area());
}

void Engine::tick() {
    if (outcome_) return;
    progress_this_tick_ = false;

    for (AgentState& a : st_.agents) {
        a.moved_this_tick = false;
        a.resting = false;
        a.held = false;
        a.ignore_resting = false;
        a.waiting = 0;
    }

    activate_due_agents();

    if (cfg_.validate_invariants) {
        // The pivot itself can be cleaned by the near-completion cascade
        // while later agents are still staged on it, so exempt it.
        for (const AgentState& a : st_.agents)
            if (a.activated && !a.stopped && !st_.region.contains(a.pos) &&
                !(a.pos == st_.pivot))
                throw EngineError("active agent left the contaminated region");
    }

    completion_phase();
    if (!st_.region.empty()) movement_phase();

    if (st_.region.empty()) {
        outcome_ = Outcome::Covered;
        record(EventKind::Done, std::nullopt, std::nullopt);
        return;
    }

    spread_phase();

    if (cfg_.validate_invariants && !st_.region.is_simply_connected())
        throw EngineError("region lost simple connectivity");

    if (progress_this_tick_) {
        idle_ticks_ = 0;
    } else if (++idle_ticks_ >= cfg_.k + 4) {
        record(EventKind::Stall, std::nullopt, std::nullopt);
        outcome_ = Outcome::Stalled;
        return;
    }
    ++st_.tick;
}

SimResult Engine::run() {
    while (!outcome_ && st_.tick < horizon_) tick();

    SimResult res;
    if (outcome_) {
        res.outcome = *outcome_;
        res.final_tick = st_.tick;
    } else {
        res.outcome = Outcome::Timeout;
        res.final_tick = horizon_;
    }
    res.trace = trace_;
    res.area_series = area_series_;
    res.cleaned_tiles = cleaned_;

    BoundReport& b = res.bounds;
    b.inputs.s0 = cfg_.region.area();
    b.inputs.c0 = cfg_.region.perimeter_length();
    b.inputs.boundary_card = cfg_.region.boundary_size();
    b.inputs.w = cfg_.region.depth();
    b.inputs.k = cfg_.k;
    b.inputs.d = cfg_.d.value_or(0);
    b.static_bound_value = static_bound(b.inputs);
    b.static_applicable = !cfg_.d.has_value();
    b.static_satisfied = res.outcome == Outcome::Covered &&
                         double(res.final_tick) <= b.static_bound_value + 1.0;
    b.area_recursion_ok = area_recursion_ok_;
    if (cfg_.d) {
        b.dynamic = dynamic_bound(b.inputs);
        b.feas = feasibility(b.inputs, cfg_.region.bounding_rect_perimeter());
        b.dynamic_satisfied = res.outcome == Outcome::Covered && b.dynamic.applicable &&
                              double(res.final_tick) <= b.dynamic.value + 1.0;
    }
    return res;
}

const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::Activate: return "activate";
        case EventKind::Move: return "move";
        case EventKind::Clean: return "clean";
        case EventKind::Spread: return "spread";
        case EventKind::Flag: return "flag";
        case EventKind::Stall: return "stall";
        case EventKind::Done: return "done";
    }
    return "?";
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Covered: return "covered";
        case Outcome::Timeout: return "timeout";
        case Outcome::Stalled: return "stalled";
    }
    return "?";
}

std::string serialize_trace(const std::vector<TraceEvent>& events) {
    std::ostringstream out;
    for (const TraceEvent& e : events) {
        out << e.tick << ' ' << to_string(e.kind) << ' ';
        if (e.agent) out << *e.agent;
        else out << '-';
        out << ' ';
        if (e.tile) out << e.tile->x << ' ' << e.tile->y;
        else out << "- -";
        out << ' ' << e.area_after << '\n';
    }
    return out.str();
}

namespace {

std::optional<EventKind> kind_from(const std::string& s) {
    for (EventKind k : {EventKind::Activate, EventKind::Move, EventKind::Clean,
                        EventKind::Spread, EventKind::Flag, EventKind::Stall,
                        EventKind::Done})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

}  // namespace

std::vector<TraceEvent> parse_trace(const std::string& text) {
    std::vector<TraceEvent> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        TraceEvent e;
        std::string kind, agent, x, y;
        if (!(ls >> e.tick >> kind >> agent >> x >> y >> e.area_after))
            throw EngineError("malformed trace line " + std::to_string(line_no));
        auto k = kind_from(kind);
        if (!k) throw EngineError("unknown event kind on trace line " + std::to_string(line_no));
        e.kind = *k;
        try {
            if (agent != "-") e.agent = std::stoi(agent);
            if ((x == "-") != (y == "-"))
                throw EngineError("half-missing tile on trace line " + std::to_string(line_no));
            if (x != "-") e.tile = Tile{std::stoi(x), std::stoi(y)};
        } catch (const std::invalid_argument&) {
            throw EngineError("malformed trace line " + std::to_string(line_no));
        }
        std::string extra;
        if (ls >> extra)
            throw EngineError("trailing data on trace line " + std::to_string(line_no));
        out.push_back(e);
    }
    return out;
}

void replay_apply(ReplayState& st, const TraceEvent& e) {
    switch (e.kind) {
        case EventKind::Activate:
            if (!e.agent || !e.tile) throw EngineError("activate event missing fields");
            if (static_cast<size_t>(*e.agent) >= st.agents.size())
                st.agents.resize(static_cast<size_t>(*e.agent) + 1);
            st.agents[static_cast<size_t>(*e.agent)].pos = *e.tile;
            break;
        case EventKind::Move:
            if (!e.agent || !e.tile) throw EngineError("move event missing fields");
            st.agents.at(static_cast<size_t>(*e.agent)).pos = *e.tile;
            break;
        case EventKind::Clean:
            if (!e.tile) throw EngineError("clean event missing tile");
            st.region.remove(*e.tile);
            break;
        case EventKind::Spread:
            st.region = st.region.spread();
            break;
        case EventKind::Done:
            if (e.agent) st.agents.at(static_cast<size_t>(*e.agent)).stopped = true;
            break;
        case EventKind::Flag:
        case EventKind::Stall:
            break;
    }
}

ReplayState replay(const Region& initial, const std::vector<TraceEvent>& events) {
    ReplayState st;
    st.region = initial;
    for (const TraceEvent& e : events) replay_apply(st, e);
    return st;
}

}  // namespace sweep
