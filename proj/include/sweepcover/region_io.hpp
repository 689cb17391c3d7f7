#pragma once

#include <string>

#include "sweepcover/region.hpp"

namespace sweep {

class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Region text format, version 1:
//   REGION v1 <width> <height>
// followed by <height> lines of <width> characters, '#' contaminated and
// '.' clean, rows top to bottom, and a trailing newline. The canonical form
// is cropped to the bounding box and translated so the bottom-left corner
// of the box is (0,0); serialize always emits it, and
// serialize(parse(f)) == canonicalize(f) byte for byte.

/// Throws IoError on grammar violations or when the region is empty or not
/// simply connected.
Region parse_region(const std::string& text);

std::string serialize_region(const Region& region);

Region load_region_file(const std::string& path);
void save_region_file(const Region& region, const std::string& path);

}  // namespace sweep
