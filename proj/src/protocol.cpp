#include "sweepcover/protocol.hpp"

namespace sweep {

bool mask_is_critical(uint8_t mask) {
    int cardinals = 0;
    for (int i = 0; i < 8; i += 2)
        if (mask & (1u << i)) ++cardinals;
    if (cardinals < 2) return false;
    if (mask == 0xff) return false;
    // Ring cells are adjacent only when consecutive (cardinal <-> flanking
    // diagonal), so the contaminated cells split into arcs. The tile is
    // critical when contaminated 4-neighbors sit in different arcs.
    int start = 0;
    while (mask & (1u << start)) ++start;
    int arcs_with_cardinal = 0;
    bool in_arc = false, arc_has_cardinal = false;
    for (int j = 1; j < 8; ++j) {
        int i = (start + j) & 7;
        if (mask & (1u << i)) {
            if (!in_arc) {
                in_arc = true;
                arc_has_cardinal = false;
            }
            if ((i & 1) == 0) arc_has_cardinal = true;
        } else {
            if (in_arc && arc_has_cardinal) ++arcs_with_cardinal;
            in_arc = false;
        }
    }
    if (in_arc && arc_has_cardinal) ++arcs_with_cardinal;
    return arcs_with_cardinal >= 2;
}

Tile rightmost_neighbor(const Tile& pos, const Tile& prev, const SensorView& view) {
    auto isb = [&](const Tile& t) { return view.is_boundary(t); };
    auto cont = [&](const Tile& t) { return view.contaminated(t); };
    auto next = rightmost_step(pos, prev, isb, cont);
    if (!next) throw ProtocolError("no boundary 4-neighbor found");
    return *next;
}

Tile initial_move(const Tile& pos, const SensorView& view) {
    uint8_t mask = view.neighbor_mask(pos);
    auto dir = ChartTable::builtin().strict_lookup(mask);
    if (!dir)
        throw ChartError("no first-move chart matches neighborhood mask " +
                         std::to_string(static_cast<int>(mask)));
    return step(pos, *dir);
}

int priority(const Tile& from, const Tile& to) {
    return 2 * (to.x - from.x) + (to.y - from.y);
}

int entry_priority(const AgentState& agent) {
    return agent.prev ? priority(*agent.prev, agent.pos) : 0;
}

bool compute_resting(const AgentState& agent, const SensorView& view) {
    if (!agent.dest) return false;
    const int my_priority = entry_priority(agent);
    for (const AgentState* a : view.agents_at(agent.pos)) {
        if (a->id == agent.id) continue;
        if (!a->dest || !(*a->dest == *agent.dest)) continue;
        if (a->entry_tick < agent.entry_tick) return true;  // K1
        if (a->entry_tick == agent.entry_tick) {
            int p = entry_priority(*a);
            if (p > my_priority) return true;  // K2
            if (p == my_priority && a->id < agent.id) return true;
        }
    }
    return false;
}

namespace {

bool active_agent_at(const SensorView& view, const Tile& t) {
    for (const AgentState* a : view.agents_at(t))
        if (a->active()) return true;
    return false;
}

}  // namespace

uint8_t compute_base_waiting(const AgentState& agent, const SensorView& view) {
    const Tile p = agent.pos;
    uint8_t w = 0;
    const Tile left{p.x - 1, p.y}, down{p.x, p.y - 1};
    const Tile left_down{p.x - 1, p.y - 1}, right_down{p.x + 1, p.y - 1};
    if (view.contaminated(left) && active_agent_at(view, left)) w |= tag_bit(WaitTag::Left);
    if (view.contaminated(down) && active_agent_at(view, down)) w |= tag_bit(WaitTag::Down);
    if (view.contaminated(left_down) && active_agent_at(view, left_down))
        w |= tag_bit(WaitTag::LeftDown);
    if (view.contaminated(right_down) && active_agent_at(view, right_down))
        w |= tag_bit(WaitTag::RightDown);
    return w;
}

bool should_clean(const AgentState& agent, const SensorView& view, const Tile& pivot) {
    const Tile p = agent.pos;
    if (!view.is_boundary(p)) return false;
    if (p == pivot) return false;
    if (mask_is_critical(view.neighbor_mask(p))) return false;
    // A tile whose four cardinal neighbors are all contaminated is only on
    // the boundary through a diagonal; cleaning it would punch a hole in
    // the complement, so it is deferred until a cardinal side opens up.
    {
        bool open_cardinal = false;
        for (const Tile& u : four_neighbors(p))
            if (!view.contaminated(u)) open_cardinal = true;
        if (!open_cardinal) return false;
    }
    for (const AgentState* a : view.agents_at(p))
        if (a->id != agent.id) return false;
    return true;
}

bool completion_reached(const AgentState& agent, const SensorView& view, const Tile& pivot) {
    if (!(agent.pos == pivot)) return false;
    for (const Tile& u : four_neighbors(agent.pos))
        if (view.contaminated(u)) return false;
    return true;
}

bool near_completion_flag(const AgentState& agent, const SensorView& view) {
    for (const Tile& u : four_neighbors(agent.pos)) {
        if (!view.contaminated(u)) continue;
        if (view.agents_at(u).empty()) return false;
    }
    return true;
}

bool near_completion_cascade(const AgentState& agent, const SensorView& view) {
    for (const Tile& u : four_neighbors(agent.pos)) {
        if (!view.contaminated(u)) continue;
        bool flagged = false;
        for (const AgentState* a : view.agents_at(u))
            if (a->near_completion) flagged = true;
        if (!flagged) return false;
    }
    return true;
}

bool saturated_perimeter_flag(const AgentState& agent, const SensorView& view) {
    const Tile p = agent.pos;
    if (!view.is_boundary(p)) return false;
    if (view.agents_at(p).size() < 2) return false;
    for (const Tile& u : four_neighbors(p)) {
        if (!view.is_boundary(u)) continue;
        if (mask_is_critical(view.neighbor_mask(u))) continue;
        if (view.agents_at(u).size() < 2) return false;
    }
    return true;
}

bool saturation_override(const AgentState& agent, const SensorView& view) {
    if (!agent.saturated_perimeter) return false;
    if (!view.is_boundary(agent.pos)) return false;
    for (const Tile& u : four_neighbors(agent.pos)) {
        if (!view.is_boundary(u)) continue;
        bool flagged = false;
        for (const AgentState* a : view.agents_at(u))
            if (a->saturated_perimeter) flagged = true;
        if (!flagged) return false;
    }
    return true;
}

}  // namespace sweep
