#include "sweepcover/experiment.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace sweep {

namespace {

struct RowTask {
    const RegionSource* source;
    int k;
    std::optional<int64_t> d;
};

ExperimentRow run_row(const RowTask& task, const ExperimentSpec& spec) {
    ExperimentRow row;
    row.label = task.source->label;
    row.k = task.k;
    row.d = task.d;
    if (!task.source->region) {
        row.failed = true;
        row.error = task.source->error.empty() ? "unreadable region" : task.source->error;
        return row;
    }
    try {
        SimConfig cfg;
        cfg.region = *task.source->region;
        cfg.k = task.k;
        cfg.d = task.d;
        cfg.horizon = spec.horizon;
        cfg.validate_invariants = spec.validate_invariants;
        Engine engine(std::move(cfg));
        SimResult res = engine.run();
        row.inputs = res.bounds.inputs;
        row.rect_perimeter = task.source->region->bounding_rect_perimeter();
        row.static_bound_value = res.bounds.static_bound_value;
        if (task.d) row.feas = res.bounds.feas;
        row.outcome = res.outcome;
        row.final_tick = res.final_tick;
        row.static_satisfied = res.bounds.static_satisfied;
        row.dynamic_satisfied = res.bounds.dynamic_satisfied;
        row.area_recursion_ok = res.bounds.area_recursion_ok;
    } catch (const std::exception& e) {
        row.failed = true;
        row.invariants_ok = false;
        row.error = e.what();
    }
    return row;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
    std::vector<RowTask> tasks;
    for (const RegionSource& src : spec.corpus)
        for (int k : spec.ks)
            for (const auto& d : spec.ds) tasks.push_back({&src, k, d});

    std::vector<ExperimentRow> rows(tasks.size());
    const int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) rows[i] = run_row(tasks[i], spec);
        return rows;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
        workers.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                rows[i] = run_row(tasks[i], spec);
        });
    }
    for (auto& w : workers) w.join();
    return rows;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream out;
    out << "report_v1,label,k,d,s0,c0,boundary,w,r,classification,distance_flag,"
           "static_bound,dynamic_bound,outcome,final_tick,static_ok,dynamic_ok,"
           "area_recursion_ok,invariants_ok,error\n";
    for (const ExperimentRow& r : rows) {
        out << "row," << r.label << ',' << r.k << ',';
        if (r.d) out << *r.d;
        else out << "inf";
        out << ',';
        if (r.failed) {
            out << ",,,,,,,,,,,,," << r.error << '\n';
            continue;
        }
        out << r.inputs.s0 << ',' << r.inputs.c0 << ',' << r.inputs.boundary_card << ','
            << r.inputs.w << ',' << r.rect_perimeter << ','
            << to_string(r.feas.classification) << ','
            << (r.feas.distance_heuristic_fired ? 1 : 0) << ',' << r.static_bound_value
            << ',';
        if (r.feas.dynamic.applicable) out << r.feas.dynamic.value;
        else out << "inapplicable";
        out << ',' << (r.outcome ? to_string(*r.outcome) : "none") << ',' << r.final_tick
            << ',' << (r.static_satisfied ? 1 : 0) << ',' << (r.dynamic_satisfied ? 1 : 0)
            << ',' << (r.area_recursion_ok ? 1 : 0) << ',' << (r.invariants_ok ? 1 : 0)
            << ",\n";
    }
    return out.str();
}

}  // namespace sweep
