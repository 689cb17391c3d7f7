#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sweepcover/region.hpp"

namespace sweep {

enum class ShapeClass { Square, Disk, Line, RandomTree };

std::optional<ShapeClass> parse_shape(const std::string& name);
const char* to_string(ShapeClass s);

/// A simply connected region of exactly target_area tiles, deterministic in
/// (seed, target_area, shape). Square, Disk and Line ignore the seed;
/// RandomTree grows by attaching uniformly random boundary-adjacent tiles,
/// rejecting attachments that would close a hole.
Region generate_region(uint64_t seed, int64_t target_area, ShapeClass shape);

}  // namespace sweep
