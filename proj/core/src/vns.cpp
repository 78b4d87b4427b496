#include "vnstt/vns.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "vnstt/cost.hpp"

namespace vnstt {

NeighborhoodStructures partition_events(std::uint32_t event_count, int k) {
    const int max_k = static_cast<int>(event_count / 2);
    if (event_count < 4 || k < 2 || k > max_k) {
        throw std::invalid_argument("k must satisfy 2 <= k <= floor(N/2) = " + std::to_string(max_k) +
                                    " for N = " + std::to_string(event_count) + "; got k = " +
                                    std::to_string(k));
    }
    NeighborhoodStructures ns;
    ns.structures.resize(k);
    const std::uint32_t base = event_count / k;
    const std::uint32_t remainder = event_count % k;
    std::uint32_t next = 0;
    for (int i = 0; i < k; ++i) {
        const std::uint32_t size = base + (static_cast<std::uint32_t>(i) < remainder ? 1 : 0);
        auto& block = ns.structures[i];
        block.reserve(size);
        for (std::uint32_t j = 0; j < size; ++j) block.push_back(next++);
    }
    return ns;
}

NeighborhoodStructures partition_events(const ResolvedInstance& resolved, int k) {
    return partition_events(resolved.event_count(), k);
}

std::size_t best_rotation(std::span<const TraceRecord> records) {
    if (records.empty()) throw std::invalid_argument("no rotation records");
    for (std::size_t r = 0; r < records.size(); ++r) {
        if (records[r].rotation_step != static_cast<int>(r)) {
            throw std::invalid_argument("rotation records must cover steps 0..size-1 in order");
        }
    }
    std::size_t best = 0;
    bool best_ok = records[0].cost.has_value();
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (!records[r].cost) continue;
        if (!best_ok || *records[r].cost < *records[best].cost - kCostEpsilon) {
            best = r;
            best_ok = true;
        }
    }
    return best;
}

std::vector<std::uint32_t> realign_to_best(const std::vector<std::uint32_t>& structure,
                                           std::span<const TraceRecord> records) {
    if (records.size() != structure.size()) {
        throw std::invalid_argument("expected one rotation record per structure position");
    }
    return rotate_left(structure, best_rotation(records));
}

namespace {

std::vector<std::uint32_t> concatenate(const NeighborhoodStructures& ns, int rotated_index,
                                       const std::vector<std::uint32_t>& rotated) {
    std::vector<std::uint32_t> arrangement;
    std::size_t n = 0;
    for (const auto& block : ns.structures) n += block.size();
    arrangement.reserve(n);
    for (int i = 0; i < ns.k(); ++i) {
        const auto& block = (i == rotated_index) ? rotated : ns.structures[i];
        arrangement.insert(arrangement.end(), block.begin(), block.end());
    }
    return arrangement;
}

}  // namespace

VnsRun solve_vns(const ResolvedInstance& resolved, int k) {
    const auto started = std::chrono::steady_clock::now();

    NeighborhoodStructures ns = partition_events(resolved, k);
    VnsRun run;
    run.instance_id = resolved.data().id;
    run.k = k;
    run.trace.reserve(resolved.event_count() + 1);

    for (int i = 0; i < k; ++i) {
        const std::size_t sweep_begin = run.trace.size();
        const std::size_t len = ns.structures[i].size();
        for (std::size_t r = 0; r < len; ++r) {
            auto rotated = rotate_left(ns.structures[i], r);
            auto arrangement = concatenate(ns, i, rotated);
            ConstructionResult res = construct(resolved, arrangement);

            TraceRecord record;
            record.structure_index = i + 1;
            record.rotation_step = static_cast<int>(r);
            record.leading_event = resolved.event_id(rotated.front());
            if (res.success()) record.cost = res.solution->cost;
            record.cost_evaluations = res.cost_evaluations;
            run.trace.push_back(std::move(record));

            run.construct_calls += 1;
            run.cost_evaluations += res.cost_evaluations;
        }
        // Realign this structure to the rotation that produced the cheapest
        // solution; the sweep's records are not consulted again after this.
        ns.structures[i] = realign_to_best(
            ns.structures[i], std::span<const TraceRecord>(run.trace).subspan(sweep_begin));
    }

    auto final_arrangement = concatenate(ns, -1, {});
    ConstructionResult final_res = construct(resolved, final_arrangement);
    run.construct_calls += 1;
    run.cost_evaluations += final_res.cost_evaluations;

    run.final_record.structure_index = 0;
    run.final_record.rotation_step = 0;
    run.final_record.leading_event = resolved.event_id(final_arrangement.front());
    if (final_res.success()) run.final_record.cost = final_res.solution->cost;
    run.final_record.cost_evaluations = final_res.cost_evaluations;
    run.final_solution = std::move(final_res.solution);

    run.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return run;
}

BestTraceEntry best_of_trace(const VnsRun& run) {
    const TraceRecord* best = nullptr;
    for (const auto& record : run.trace) {
        if (!record.cost) continue;
        if (!best || *record.cost < *best->cost - kCostEpsilon) best = &record;
    }
    if (!best) throw std::runtime_error("every constructive pass of the run failed");
    return {*best->cost, best->structure_index, best->leading_event};
}

std::vector<std::optional<double>> stage_minima(const VnsRun& run) {
    std::vector<std::optional<double>> minima(run.k);
    for (const auto& record : run.trace) {
        if (!record.cost) continue;
        auto& slot = minima[record.structure_index - 1];
        if (!slot || *record.cost < *slot) slot = record.cost;
    }
    return minima;
}

bool stages_monotone(const VnsRun& run) {
    const auto minima = stage_minima(run);
    for (std::size_t i = 0; i < minima.size(); ++i) {
        if (!minima[i]) return false;
        if (i > 0 && *minima[i] > *minima[i - 1] + kCostEpsilon) return false;
    }
    return true;
}

namespace {

std::string format_cost(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

void write_record_row(std::ostream& out, int k, const std::string& structure,
                      const TraceRecord& record) {
    out << k << ',' << structure << ',' << record.rotation_step << ',' << record.leading_event << ',';
    if (record.cost) out << format_cost(*record.cost);
    out << ',' << (record.cost ? "true" : "false") << '\n';
}

}  // namespace

void write_trace_csv(std::ostream& out, const VnsRun& run) {
    out << "k,structure,rotation,leading_event,cost,feasible\n";
    for (const auto& record : run.trace) {
        write_record_row(out, run.k, std::to_string(record.structure_index), record);
    }
    write_record_row(out, run.k, "final", run.final_record);
}

}  // namespace vnstt
