// Command line front end: run single simulations, evaluate the analytic
// bounds, generate corpus regions, render traces and batch-run benchmarks.
//
// Exit codes: 0 success, 2 invariant violation during a run, 3 bad input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sweepcover/bounds.hpp"
#include "sweepcover/engine.hpp"
#include "sweepcover/experiment.hpp"
#include "sweepcover/generate.hpp"
#include "sweepcover/region_io.hpp"
#include "sweepcover/render.hpp"

namespace {

constexpr int kExitInvariant = 2;
constexpr int kExitInput = 3;

struct RegionOpts {
    std::string file;
    std::string shape;
    int64_t area = 0;
    uint64_t gen_seed = 0;
};

void add_region_opts(CLI::App* cmd, RegionOpts& opts) {
    auto* file = cmd->add_option("--region", opts.file, "region file to load");
    auto* shape =
        cmd->add_option("--shape", opts.shape, "generate: square, disk, line, random-tree-grown");
    cmd->add_option("--area", opts.area, "generated region area")->needs(shape);
    cmd->add_option("--gen-seed", opts.gen_seed, "generator seed")->needs(shape);
    shape->excludes(file);
}

sweep::Region resolve_region(const RegionOpts& opts) {
    if (!opts.file.empty()) return sweep::load_region_file(opts.file);
    if (opts.shape.empty()) throw sweep::IoError("need --region or --shape");
    auto shape = sweep::parse_shape(opts.shape);
    if (!shape) throw sweep::IoError("unknown shape: " + opts.shape);
    if (opts.area < 1) throw sweep::IoError("--area must be >= 1");
    return sweep::generate_region(opts.gen_seed, opts.area, *shape);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sweep::IoError("cannot open for writing: " + path);
    out << text;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sweep::IoError("cannot read: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_bounds(std::ostream& out, const sweep::BoundInputs& in, int64_t rect_perimeter) {
    out << "s0 " << in.s0 << "\nc0 " << in.c0 << "\nboundary " << in.boundary_card
        << "\ndepth " << in.w << "\nrect_perimeter " << rect_perimeter << "\n";
    out << "static_bound " << sweep::static_bound(in) << "\n";
    if (in.d <= 0) return;
    sweep::FeasibilityReport feas = sweep::feasibility(in, rect_perimeter);
    out << "classification " << sweep::to_string(feas.classification) << "\n";
    out << "distance_heuristic_fired " << (feas.distance_heuristic_fired ? 1 : 0) << "\n";
    const sweep::DynamicBound& dyn = feas.dynamic;
    if (dyn.applicable) {
        out << "dynamic_bound " << dyn.value << "\n";
    } else {
        out << "dynamic_bound inapplicable\n";
        out << "discriminant " << dyn.discriminant << "\n";
    }
    try {
        sweep::GammaParams g = sweep::gamma_params(in);
        out << "gamma2 " << g.gamma2 << "\ngamma1 " << g.gamma1 << "\ngamma " << g.gamma
            << "\nA1 " << g.a1 << "\nA2 " << g.a2 << "\nA3 " << g.a3 << "\nA4 " << g.a4
            << "\n";
    } catch (const sweep::BoundsError& e) {
        out << "gamma_params error: " << e.what() << "\n";
    }
}

int cmd_run(const RegionOpts& ropts, int k, std::optional<int64_t> d,
            std::optional<int64_t> horizon, uint64_t seed, const std::string& trace_path,
            int verbosity, bool validate) {
    sweep::SimConfig cfg;
    cfg.region = resolve_region(ropts);
    cfg.k = k;
    cfg.d = d;
    cfg.horizon = horizon;
    cfg.seed = seed;
    cfg.trace_verbosity = verbosity;
    cfg.validate_invariants = validate;

    std::optional<sweep::Engine> engine;
    try {
        engine.emplace(std::move(cfg));
    } catch (const sweep::EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    sweep::SimResult res;
    try {
        res = engine->run();
    } catch (const sweep::EngineError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
    if (!trace_path.empty()) write_text(trace_path, sweep::serialize_trace(res.trace));

    std::cout << "outcome " << sweep::to_string(res.outcome) << "\n";
    std::cout << "final_tick " << res.final_tick << "\n";
    std::cout << "cleaned_tiles " << res.cleaned_tiles << "\n";
    std::cout << "horizon " << engine->horizon() << "\n";
    std::cout << "static_bound " << res.bounds.static_bound_value
              << (res.bounds.static_applicable
                      ? (res.bounds.static_satisfied ? " satisfied" : " violated")
                      : " (expanding run)")
              << "\n";
    if (res.bounds.dynamic.applicable)
        std::cout << "dynamic_bound " << res.bounds.dynamic.value
                  << (res.bounds.dynamic_satisfied ? " satisfied" : " violated") << "\n";
    std::cout << "area_recursion_ok " << (res.bounds.area_recursion_ok ? 1 : 0) << "\n";
    for (const auto& [tick, area] : res.area_series)
        std::cout << "area " << tick << " " << area << "\n";
    return 0;
}

int cmd_bench(const std::vector<std::string>& files, const std::vector<std::string>& gens,
              const std::vector<int>& ks, const std::vector<std::string>& ds,
              std::optional<int64_t> horizon, int jobs, bool validate,
              const std::string& out_path) {
    sweep::ExperimentSpec spec;
    for (const std::string& path : files) {
        sweep::RegionSource src;
        src.label = path;
        try {
            src.region = sweep::load_region_file(path);
        } catch (const std::exception& e) {
            src.error = e.what();
        }
        spec.corpus.push_back(std::move(src));
    }
    for (const std::string& g : gens) {
        // shape:area[:seed]
        sweep::RegionSource src;
        src.label = g;
        std::istringstream in(g);
        std::string shape_name, area_s, seed_s;
        std::getline(in, shape_name, ':');
        std::getline(in, area_s, ':');
        std::getline(in, seed_s, ':');
        auto shape = sweep::parse_shape(shape_name);
        try {
            if (!shape || area_s.empty())
                throw sweep::IoError("bad generator spec (want shape:area[:seed]): " + g);
            uint64_t seed = seed_s.empty() ? 0 : std::stoull(seed_s);
            src.region = sweep::generate_region(seed, std::stoll(area_s), *shape);
        } catch (const std::exception& e) {
            src.error = e.what();
        }
        spec.corpus.push_back(std::move(src));
    }
    if (spec.corpus.empty()) {
        std::cerr << "error: no regions given\n";
        return kExitInput;
    }
    spec.ks = ks;
    for (const std::string& d : ds) {
        if (d == "inf" || d == "static") {
            spec.ds.emplace_back(std::nullopt);
        } else {
            try {
                spec.ds.emplace_back(std::stoll(d));
            } catch (const std::exception&) {
                std::cerr << "error: bad --d value: " << d << "\n";
                return kExitInput;
            }
        }
    }
    spec.horizon = horizon;
    spec.jobs = jobs;
    spec.validate_invariants = validate;

    std::vector<sweep::ExperimentRow> rows = sweep::run_experiment(spec);
    write_text(out_path, sweep::experiment_csv(rows));
    for (const sweep::ExperimentRow& r : rows)
        if (r.failed && !r.invariants_ok) {
            std::cerr << "invariant violation: " << r.label << ": " << r.error << "\n";
            return kExitInvariant;
        }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coverage protocol simulator and bounds engine"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "simulate one region");
    RegionOpts run_region;
    add_region_opts(run, run_region);
    int run_k = 1;
    std::optional<int64_t> run_d, run_horizon;
    uint64_t run_seed = 0;
    std::string run_trace;
    int run_verbosity = 1;
    bool run_validate = false;
    run->add_option("--k", run_k, "agent count")->check(CLI::PositiveNumber);
    run->add_option("--d", run_d, "spread period; omit for a static region");
    run->add_option("--horizon", run_horizon, "tick limit override");
    run->add_option("--seed", run_seed, "pivot rotation seed");
    run->add_option("--trace", run_trace, "write the event trace here ('-' = stdout)");
    run->add_option("--verbosity", run_verbosity, "trace detail: 0 core, 1 plus flags")
        ->check(CLI::Range(0, 1));
    run->add_flag("--validate", run_validate, "recheck invariants every tick");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "print the analytic bounds for a region");
    RegionOpts bounds_region;
    add_region_opts(bounds, bounds_region);
    int bounds_k = 1;
    int64_t bounds_d = 0;
    bounds->add_option("--k", bounds_k, "agent count")->check(CLI::PositiveNumber);
    bounds->add_option("--d", bounds_d, "spread period; omit for static bound only");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generated region");
    std::string gen_shape = "square";
    int64_t gen_area = 1;
    uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--shape", gen_shape, "square, disk, line, random-tree-grown");
    gen->add_option("--area", gen_area, "tile count")->check(CLI::PositiveNumber);
    gen->add_option("--gen-seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // render
    auto* render = app.add_subcommand("render", "render a trace to PPM frames");
    RegionOpts render_region;
    add_region_opts(render, render_region);
    std::string render_trace_path, render_dir = "frames";
    int render_stride = 1;
    render->add_option("--trace", render_trace_path, "trace file")->required();
    render->add_option("--out-dir", render_dir, "frame directory");
    render->add_option("--stride", render_stride, "ticks per frame")
        ->check(CLI::PositiveNumber);

    // bench
    auto* bench = app.add_subcommand("bench", "batch runs over a corpus, CSV report");
    std::vector<std::string> bench_files, bench_gens, bench_ds = {"inf"};
    std::vector<int> bench_ks = {1};
    std::optional<int64_t> bench_horizon;
    int bench_jobs = 1;
    bool bench_no_validate = false;
    std::string bench_out;
    bench->add_option("--region", bench_files, "region files (repeatable)");
    bench->add_option("--gen", bench_gens, "generator specs shape:area[:seed] (repeatable)");
    bench->add_option("--k", bench_ks, "agent counts (repeatable)");
    bench->add_option("--d", bench_ds, "spread periods, 'inf' for static (repeatable)");
    bench->add_option("--horizon", bench_horizon, "tick limit override");
    bench->add_option("--jobs", bench_jobs, "worker threads")->check(CLI::PositiveNumber);
    bench->add_flag("--no-validate", bench_no_validate, "skip per-tick invariant checks");
    bench->add_option("--out", bench_out, "CSV path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(run_region, run_k, run_d, run_horizon, run_seed, run_trace,
                           run_verbosity, run_validate);
        if (bounds->parsed()) {
            sweep::Region region = resolve_region(bounds_region);
            sweep::BoundInputs in;
            in.s0 = region.area();
            in.c0 = region.perimeter_length();
            in.boundary_card = static_cast<int64_t>(region.boundary().size());
            in.w = region.depth();
            in.k = bounds_k;
            in.d = bounds_d;
            print_bounds(std::cout, in, region.bounding_rect_perimeter());
            return 0;
        }
        if (gen->parsed()) {
            auto shape = sweep::parse_shape(gen_shape);
            if (!shape) throw sweep::IoError("unknown shape: " + gen_shape);
            write_text(gen_out,
                       sweep::serialize_region(sweep::generate_region(gen_seed, gen_area, *shape)));
            return 0;
        }
        if (render->parsed()) {
            sweep::Region region = resolve_region(render_region);
            auto events = sweep::parse_trace(read_text(render_trace_path));
            int frames = sweep::render_trace(region, events, render_dir, render_stride);
            std::cout << "frames " << frames << "\n";
            return 0;
        }
        if (bench->parsed())
            return cmd_bench(bench_files, bench_gens, bench_ks, bench_ds, bench_horizon,
                             bench_jobs, !bench_no_validate, bench_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
