#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vnstt/construct.hpp"
#include "vnstt/resolved.hpp"

namespace vnstt {

/// The event order split into k contiguous blocks NS_1..NS_k; their
/// concatenation is always a permutation of all events and every block
/// holds at least two events.
struct NeighborhoodStructures {
    std::vector<std::vector<std::uint32_t>> structures;

    int k() const { return static_cast<int>(structures.size()); }
};

/// One constructive pass logged during a structure's rotation sweep.
/// structure_index is 1-based (0 marks the final pass); rotation_step is
/// the number of left shifts applied; leading_event is the id at the
/// structure's first position; cost is empty when construction failed.
struct TraceRecord {
    int structure_index = 0;
    int rotation_step = 0;
    std::string leading_event;
    std::optional<double> cost;
    std::uint64_t cost_evaluations = 0;
};

/// Full log of one solver run: every rotation record in execution order,
/// the final pass, and the run totals.
struct VnsRun {
    std::string instance_id;
    int k = 0;
    std::vector<TraceRecord> trace;
    TraceRecord final_record;
    std::optional<Solution> final_solution;
    std::uint64_t construct_calls = 0;
    std::uint64_t cost_evaluations = 0;
    double elapsed_ms = 0.0;

    bool success() const { return final_solution.has_value(); }
};

struct BestTraceEntry {
    double cost = 0.0;
    int structure_index = 0;
    std::string leading_event;
};

/// Splits the instance's event order into k contiguous structures: the
/// first (N mod k) hold ceil(N/k) events, the rest floor(N/k).
/// Requires 2 <= k <= floor(N/2) (throws std::invalid_argument naming the
/// bounds otherwise).
NeighborhoodStructures partition_events(const ResolvedInstance& resolved, int k);
NeighborhoodStructures partition_events(std::uint32_t event_count, int k);

/// Cyclic left rotation by steps mod size; pure.
template <typename T>
std::vector<T> rotate_left(std::vector<T> values, std::size_t steps) {
    if (values.size() > 1) {
        steps %= values.size();
        std::rotate(values.begin(), values.begin() + steps, values.end());
    }
    return values;
}

/// Index r* of the cheapest rotation among one structure's records:
/// failed records compare greater than any cost, ties take the smallest
/// step, and an all-failed sweep keeps r* = 0. The records must cover
/// steps 0..size-1 in order (throws std::invalid_argument otherwise).
std::size_t best_rotation(std::span<const TraceRecord> records);

/// rotate_left(structure, r*) for the best_rotation of the records.
std::vector<std::uint32_t> realign_to_best(const std::vector<std::uint32_t>& structure,
                                           std::span<const TraceRecord> records);

/// Runs the full search: partition into k structures, rotate each one a
/// full circle logging a record per rotation, realign the structure to its
/// best-cost rotation, then build the final solution from the resulting
/// arrangement. Exactly N+1 constructive passes. Deterministic:
/// identical inputs give identical runs.
VnsRun solve_vns(const ResolvedInstance& resolved, int k);

/// Cheapest rotation record of the run (earliest on ties). Throws
/// std::runtime_error when every record failed.
BestTraceEntry best_of_trace(const VnsRun& run);

/// Minimum recorded cost per structure, in stage order; empty optional for
/// a stage whose rotations all failed.
std::vector<std::optional<double>> stage_minima(const VnsRun& run);

/// True when no stage's minimum is worse than its predecessor's (within
/// kCostEpsilon) and every stage produced at least one solution.
bool stages_monotone(const VnsRun& run);

/// CSV with header k,structure,rotation,leading_event,cost,feasible; one
/// row per rotation record plus one for the final pass (structure column
/// "final"). Costs use 6 fractional digits with '.'; failed rows leave the
/// cost empty.
void write_trace_csv(std::ostream& out, const VnsRun& run);

}  // namespace vnstt
