// pybind11 surface: region handling, the simulator and the bounds engine.
// Regions cross the boundary as serialized text or tile lists; simulation
// results come back as plain dicts so the python side stays dependency free.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sweepcover/bounds.hpp"
#include "sweepcover/engine.hpp"
#include "sweepcover/generate.hpp"
#include "sweepcover/region.hpp"
#include "sweepcover/region_io.hpp"

namespace py = pybind11;
using namespace sweep;

namespace {

Region region_from_tiles(const std::vector<std::pair<int32_t, int32_t>>& tiles) {
    TileSet set;
    for (const auto& [x, y] : tiles) set.insert(Tile{x, y});
    return Region(std::move(set));
}

std::vector<std::pair<int32_t, int32_t>> tiles_of(const Region& r) {
    std::vector<std::pair<int32_t, int32_t>> out;
    out.reserve(static_cast<size_t>(r.area()));
    for (const Tile& t : r.tiles()) out.emplace_back(t.x, t.y);
    std::sort(out.begin(), out.end());
    return out;
}

BoundInputs inputs_for(const Region& r, int64_t k, int64_t d) {
    BoundInputs in;
    in.s0 = r.area();
    in.c0 = r.perimeter_length();
    in.boundary_card = static_cast<int64_t>(r.boundary().size());
    in.w = r.depth();
    in.k = k;
    in.d = d;
    return in;
}

py::dict dynamic_dict(const DynamicBound& dyn) {
    py::dict out;
    out["applicable"] = dyn.applicable;
    out["discriminant"] = dyn.discriminant;
    if (dyn.applicable) out["value"] = dyn.value;
    return out;
}

py::dict run_simulation(const std::string& region_text, int k, std::optional<int64_t> d,
                        std::optional<int64_t> horizon, uint64_t seed, bool validate) {
    SimConfig cfg;
    cfg.region = parse_region(region_text);
    cfg.k = k;
    cfg.d = d;
    cfg.horizon = horizon;
    cfg.seed = seed;
    cfg.validate_invariants = validate;
    Engine engine(std::move(cfg));
    SimResult res = engine.run();

    py::dict out;
    out["outcome"] = std::string(to_string(res.outcome));
    out["final_tick"] = res.final_tick;
    out["cleaned_tiles"] = res.cleaned_tiles;
    out["horizon"] = engine.horizon();
    out["trace"] = serialize_trace(res.trace);
    out["area_series"] = res.area_series;
    py::dict bounds;
    bounds["static_bound"] = res.bounds.static_bound_value;
    bounds["static_applicable"] = res.bounds.static_applicable;
    bounds["static_satisfied"] = res.bounds.static_satisfied;
    bounds["dynamic"] = dynamic_dict(res.bounds.dynamic);
    bounds["dynamic_satisfied"] = res.bounds.dynamic_satisfied;
    bounds["area_recursion_ok"] = res.bounds.area_recursion_ok;
    if (d) {
        bounds["classification"] = std::string(to_string(res.bounds.feas.classification));
        bounds["distance_heuristic_fired"] = res.bounds.feas.distance_heuristic_fired;
    }
    out["bounds"] = bounds;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "grid coverage simulator core";

    py::register_exception<RegionError>(m, "RegionError");
    py::register_exception<IoError>(m, "IoError");
    py::register_exception<EngineError>(m, "EngineError");
    py::register_exception<BoundsError>(m, "BoundsError");

    m.def("canonicalize_region",
          [](const std::string& text) { return serialize_region(parse_region(text)); },
          py::arg("text"), "Parse and re-serialize a region in canonical form.");
    m.def("region_tiles",
          [](const std::string& text) { return tiles_of(parse_region(text)); },
          py::arg("text"), "Sorted (x, y) tile list of a serialized region.");
    m.def("region_from_tiles",
          [](const std::vector<std::pair<int32_t, int32_t>>& tiles) {
              return serialize_region(region_from_tiles(tiles));
          },
          py::arg("tiles"), "Serialize a tile list as a canonical region.");
    m.def("region_stats",
          [](const std::string& text) {
              Region r = parse_region(text);
              py::dict out;
              out["area"] = r.area();
              out["boundary"] = static_cast<int64_t>(r.boundary().size());
              out["perimeter"] = r.perimeter_length();
              out["depth"] = r.depth();
              out["rect_perimeter"] = r.bounding_rect_perimeter();
              out["radius"] = r.region_radius();
              out["simply_connected"] = r.is_simply_connected();
              return out;
          },
          py::arg("text"));
    m.def("spread_region",
          [](const std::string& text) { return serialize_region(parse_region(text).spread()); },
          py::arg("text"), "One contamination spread step.");

    m.def("generate_region",
          [](const std::string& shape, int64_t area, uint64_t seed) {
              auto s = parse_shape(shape);
              if (!s) throw std::invalid_argument("unknown shape: " + shape);
              return serialize_region(sweep::generate_region(seed, area, *s));
          },
          py::arg("shape"), py::arg("area"), py::arg("seed") = 0);

    m.def("run", &run_simulation, py::arg("region"), py::arg("k") = 1,
          py::arg("d") = std::nullopt, py::arg("horizon") = std::nullopt,
          py::arg("seed") = 0, py::arg("validate") = false,
          "Simulate a serialized region; returns a result dict.");

    m.def("digamma", &digamma, py::arg("x"));
    m.def("quarter_sphere_count", &quarter_sphere_count, py::arg("l"));
    m.def("area_lower_bound_step", &area_lower_bound_step, py::arg("s"), py::arg("d"),
          py::arg("k"));
    m.def("static_bound",
          [](const std::string& text, int64_t k) {
              return static_bound(inputs_for(parse_region(text), k, 0));
          },
          py::arg("region"), py::arg("k"));
    m.def("gamma_params",
          [](const std::string& text, int64_t k, int64_t d) {
              GammaParams g = gamma_params(inputs_for(parse_region(text), k, d));
              py::dict out;
              out["gamma2"] = g.gamma2;
              out["gamma1"] = g.gamma1;
              out["gamma"] = g.gamma;
              out["a1"] = g.a1;
              out["a2"] = g.a2;
              out["a3"] = g.a3;
              out["a4"] = g.a4;
              return out;
          },
          py::arg("region"), py::arg("k"), py::arg("d"));
    m.def("dynamic_bound",
          [](const std::string& text, int64_t k, int64_t d) {
              return dynamic_dict(dynamic_bound(inputs_for(parse_region(text), k, d)));
          },
          py::arg("region"), py::arg("k"), py::arg("d"));
    m.def("feasibility",
          [](const std::string& text, int64_t k, int64_t d) {
              Region r = parse_region(text);
              FeasibilityReport rep =
                  feasibility(inputs_for(r, k, d), r.bounding_rect_perimeter());
              py::dict out;
              out["classification"] = std::string(to_string(rep.classification));
              out["distance_heuristic_fired"] = rep.distance_heuristic_fired;
              out["dynamic"] = dynamic_dict(rep.dynamic);
              return out;
          },
          py::arg("region"), py::arg("k"), py::arg("d"));
}
