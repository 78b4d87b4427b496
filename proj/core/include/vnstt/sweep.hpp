#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vnstt/resolved.hpp"
#include "vnstt/vns.hpp"

namespace vnstt {

/// Summary of one solver run inside a k-sweep. `structure_pct` is the mean
/// structure size as a percentage of the event count (an observation, never
/// a target); `stage_monotone` records whether the run's per-stage best
/// costs were non-increasing.
struct SweepRow {
    int k = 0;
    bool success = false;
    double best_cost = 0.0;
    int best_structure = 0;
    std::string best_leading_event;
    std::uint64_t construct_calls = 0;
    std::uint64_t cost_evaluations = 0;
    double structure_pct = 0.0;
    bool stage_monotone = false;
    double elapsed_ms = 0.0;
};

struct SweepReport {
    std::string instance_id;
    std::vector<SweepRow> rows;          // ordered by k ascending
    std::optional<int> argmin_k;         // k of the cheapest successful run
};

/// All divisors d of n with 2 <= d <= n/2, ascending.
std::vector<int> divisor_ks(std::uint32_t n);

/// Runs solve_vns once per requested k. Duplicate k values are collapsed
/// and rows are reported in ascending k order. With jobs > 1 the runs
/// execute concurrently; the report is identical either way. Every k is
/// bounds-checked up front (std::invalid_argument).
/// Traces of the individual runs are returned alongside the rows, index-
/// aligned with report.rows.
struct SweepResult {
    SweepReport report;
    std::vector<VnsRun> runs;
};

SweepResult run_sweep(const ResolvedInstance& resolved, std::vector<int> ks, int jobs = 1);

/// CSV: k,best_cost,best_structure,best_leading_event,construct_calls,
/// cost_evaluations,structure_pct,stage_monotone. Failed runs leave the
/// best_* cells empty. Timings are deliberately not part of the file so
/// identical inputs produce identical bytes; read them from the rows.
void write_sweep_csv(std::ostream& out, const SweepReport& report);

}  // namespace vnstt
