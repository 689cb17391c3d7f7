#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "sweepcover/tile.hpp"

namespace sweep {

class ChartError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// First-move lookup table: 8-neighborhood contamination mask -> direction.
///
/// Two tiers are kept. The strict tier holds the charts of the data file
/// plus their programmatic 90-degree rotations and is what the public
/// first-move operation consults (a miss is a hard error). The extended
/// tier additionally folds in mirror images; the simulation engine uses it
/// before falling back to a local boundary scan, since the published chart
/// set does not cover every mask that can occur at a pivot.
class ChartTable {
public:
    /// Parses the textual chart format (see data/initial_moves_v1.txt).
    /// Conflicting destinations for the same mask among the file's own
    /// entries are an error; conflicts introduced by rotations or mirrors
    /// resolve in favor of the earlier entry.
    static ChartTable parse(const std::string& text);

    /// The table built from the data shipped with the library.
    static const ChartTable& builtin();

    std::optional<Dir> strict_lookup(uint8_t mask) const { return strict_[mask]; }
    std::optional<Dir> extended_lookup(uint8_t mask) const { return extended_[mask]; }

    int chart_count() const { return chart_count_; }

private:
    std::array<std::optional<Dir>, 256> strict_{};
    std::array<std::optional<Dir>, 256> extended_{};
    int chart_count_ = 0;
};

}  // namespace sweep
