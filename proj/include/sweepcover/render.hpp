#pragma once

#include <string>
#include <vector>

#include "sweepcover/engine.hpp"
#include "sweepcover/region.hpp"

namespace sweep {

/// Writes one binary PPM frame per `stride` ticks (plus the final state)
/// into out_dir as frame_NNNNNN.ppm. Contaminated tiles, agents, the pivot
/// and critical points are drawn in distinct colors; output is
/// deterministic. Returns the number of frames written.
int render_trace(const Region& initial, const std::vector<TraceEvent>& events,
                 const std::string& out_dir, int stride);

}  // namespace sweep
