#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sweepcover/engine.hpp"
#include "sweepcover/generate.hpp"
#include "sweepcover/region.hpp"

namespace sweep {

struct RegionSource {
    std::string label;            // file path or generator tag
    std::optional<Region> region; // empty when the file was unreadable
    std::string error;            // per-row error text for bad sources
};

struct ExperimentSpec {
    std::vector<RegionSource> corpus;
    std::vector<int> ks;
    std::vector<std::optional<int64_t>> ds;  // nullopt = static
    std::optional<int64_t> horizon;
    int jobs = 1;
    bool validate_invariants = true;
};

struct ExperimentRow {
    std::string label;
    int k = 0;
    std::optional<int64_t> d;
    bool failed = false;   // unreadable source
    std::string error;
    BoundInputs inputs{};
    int64_t rect_perimeter = 0;
    FeasibilityReport feas{};
    double static_bound_value = 0;
    std::optional<Outcome> outcome;
    int64_t final_tick = 0;
    bool static_satisfied = false;
    bool dynamic_satisfied = false;
    bool area_recursion_ok = true;
    bool invariants_ok = true;
};

/// Runs every (region, k, d) combination, up to `jobs` rows concurrently.
/// Row order follows spec order regardless of completion order.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

/// Fixed, versioned header row plus one comma-separated line per row.
std::string experiment_csv(const std::vector<ExperimentRow>& rows);

}  // namespace sweep
