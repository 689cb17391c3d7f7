#include "sweepcover/render.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <vector>

namespace sweep {

namespace {

constexpr int kCell = 8;

struct Rgb {
    unsigned char r, g, b;
};

constexpr Rgb kClean{240, 240, 240};
constexpr Rgb kContaminated{120, 120, 120};
constexpr Rgb kCritical{230, 150, 40};
constexpr Rgb kPivot{70, 100, 220};
constexpr Rgb kAgent{200, 40, 40};

struct Canvas {
    int32_t min_x, min_y, max_x, max_y;
    int width_px, height_px;
    std::vector<Rgb> px;

    Canvas(int32_t x0, int32_t y0, int32_t x1, int32_t y1)
        : min_x(x0), min_y(y0), max_x(x1), max_y(y1),
          width_px(int(x1 - x0 + 1) * kCell), height_px(int(y1 - y0 + 1) * kCell),
          px(size_t(width_px) * size_t(height_px)) {}

    void fill_tile(const Tile& t, Rgb c, int inset) {
        const int cx = int(t.x - min_x) * kCell;
        // Row 0 of the image is the top, i.e. max_y.
        const int cy = int(max_y - t.y) * kCell;
        for (int y = inset; y < kCell - inset; ++y)
            for (int x = inset; x < kCell - inset; ++x)
                px[size_t(cy + y) * size_t(width_px) + size_t(cx + x)] = c;
    }

    void write(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        out << "P6\n" << width_px << ' ' << height_px << "\n255\n";
        out.write(reinterpret_cast<const char*>(px.data()),
                  static_cast<std::streamsize>(px.size() * 3));
    }
};

struct FrameWriter {
    const std::string& dir;
    int32_t x0, y0, x1, y1;
    int count = 0;

    void emit(const Region& region, const std::vector<ReplayAgent>& agents,
              const std::optional<Tile>& pivot) {
        Canvas canvas(x0, y0, x1, y1);
        for (auto& p : canvas.px) p = kClean;
        for (const Tile& t : region.tiles()) canvas.fill_tile(t, kContaminated, 0);
        for (const Tile& t : region.tiles())
            if (region.is_critical(t)) canvas.fill_tile(t, kCritical, 0);
        if (pivot && region.contains(*pivot)) canvas.fill_tile(*pivot, kPivot, 0);
        for (const ReplayAgent& a : agents)
            if (!a.stopped) canvas.fill_tile(a.pos, kAgent, 2);
        char name[32];
        std::snprintf(name, sizeof(name), "frame_%06d.ppm", count++);
        canvas.write(dir + "/" + name);
    }
};

}  // namespace

int render_trace(const Region& initial, const std::vector<TraceEvent>& events,
                 const std::string& out_dir, int stride) {
    if (stride < 1) throw EngineError("render stride must be >= 1");
    std::filesystem::create_directories(out_dir);

    // Pre-pass for a canvas that fits every spread.
    Region::BBox bb = initial.bbox();
    int32_t x0 = bb.min_x, y0 = bb.min_y, x1 = bb.max_x, y1 = bb.max_y;
    {
        Region r = initial;
        for (const TraceEvent& e : events) {
            if (e.kind != EventKind::Spread) continue;
            r = r.spread();
            Region::BBox b = r.bbox();
            x0 = std::min(x0, b.min_x);
            y0 = std::min(y0, b.min_y);
            x1 = std::max(x1, b.max_x);
            y1 = std::max(y1, b.max_y);
        }
    }

    ReplayState st;
    st.region = initial;
    std::optional<Tile> pivot;
    FrameWriter frames{out_dir, x0 - 1, y0 - 1, x1 + 1, y1 + 1};

    frames.emit(st.region, st.agents, pivot);
    int64_t last_emitted_tick = 0;
    size_t i = 0;
    int64_t final_tick = events.empty() ? 0 : events.back().tick;
    for (int64_t t = 0; t <= final_tick; ++t) {
        std::vector<TraceEvent> tick_events;
        while (i < events.size() && events[i].tick == t) tick_events.push_back(events[i++]);
        if (tick_events.empty()) continue;
        if (!pivot)
            for (const TraceEvent& e : tick_events)
                if (e.kind == EventKind::Activate) {
                    pivot = e.tile;
                    break;
                }
        for (const TraceEvent& e : tick_events) replay_apply(st, e);
        if (t > 0 && t % stride == 0 && t < final_tick) {
            frames.emit(st.region, st.agents, pivot);
            last_emitted_tick = t;
        }
    }
    (void)last_emitted_tick;
    frames.emit(st.region, st.agents, pivot);
    return frames.count;
}

}  // namespace sweep
