#include "vnstt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <ostream>
#include <thread>

namespace vnstt {

std::vector<int> divisor_ks(std::uint32_t n) {
    std::vector<int> out;
    for (std::uint32_t d = 2; d <= n / 2; ++d) {
        if (n % d == 0) out.push_back(static_cast<int>(d));
    }
    return out;
}

namespace {

SweepRow summarize(const VnsRun& run) {
    SweepRow row;
    row.k = run.k;
    row.success = run.success();
    row.construct_calls = run.construct_calls;
    row.cost_evaluations = run.cost_evaluations;
    row.structure_pct = 100.0 / run.k;
    row.stage_monotone = stages_monotone(run);
    row.elapsed_ms = run.elapsed_ms;
    if (row.success) {
        const BestTraceEntry best = best_of_trace(run);
        row.best_cost = best.cost;
        row.best_structure = best.structure_index;
        row.best_leading_event = best.leading_event;
    }
    return row;
}

}  // namespace

SweepResult run_sweep(const ResolvedInstance& resolved, std::vector<int> ks, int jobs) {
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int k : ks) {
        partition_events(resolved, k);  // bounds check before any run starts
    }

    SweepResult result;
    result.report.instance_id = resolved.data().id;
    result.runs.resize(ks.size());

    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(ks.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < ks.size(); ++i) result.runs[i] = solve_vns(resolved, ks[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < ks.size(); i = next.fetch_add(1)) {
                    result.runs[i] = solve_vns(resolved, ks[i]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    double best = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        SweepRow row = summarize(result.runs[i]);
        if (row.success && (!result.report.argmin_k || row.best_cost < best - kCostEpsilon)) {
            best = row.best_cost;
            result.report.argmin_k = row.k;
        }
        result.report.rows.push_back(std::move(row));
    }
    return result;
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
    out << "k,best_cost,best_structure,best_leading_event,construct_calls,cost_evaluations,"
           "structure_pct,stage_monotone\n";
    char buf[64];
    for (const auto& row : report.rows) {
        out << row.k << ',';
        if (row.success) {
            std::snprintf(buf, sizeof(buf), "%.6f", row.best_cost);
            out << buf << ',' << row.best_structure << ',' << row.best_leading_event;
        } else {
            out << ",,";
        }
        std::snprintf(buf, sizeof(buf), "%.6f", row.structure_pct);
        out << ',' << row.construct_calls << ',' << row.cost_evaluations << ',' << buf << ','
            << (row.stage_monotone ? "true" : "false") << '\n';
    }
}

}  // namespace vnstt
