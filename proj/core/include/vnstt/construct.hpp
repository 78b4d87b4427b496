#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vnstt/cost.hpp"
#include "vnstt/resolved.hpp"

namespace vnstt {

/// Outcome of one constructive pass. On success the solution is complete
/// and hard-feasible; on failure `failed_event` names the first event for
/// which no feasible (timeslot, room) existed. `cost_evaluations` counts
/// the cost() calls made while scanning timeslots.
struct ConstructionResult {
    std::optional<Solution> solution;
    std::string failed_event;
    std::uint64_t cost_evaluations = 0;

    bool success() const { return solution.has_value(); }
};

/// Greedy sequential construction. Starting from the fixed events, each
/// event of `arrangement` (fixed ones are skipped) is tried in every
/// timeslot t = 0..T-1 in order:
///   - the room rule picks, among rooms feasible at t, the one with the
///     smallest adequate capacity (ties by lowest room id);
///   - if some room is feasible the event is placed tentatively and the
///     partial assignment's cost evaluated;
/// after the full scan the event commits to the cheapest recorded
/// (timeslot, room), ties broken by the lowest timeslot. The first event
/// with no feasible timeslot aborts the pass. Deterministic.
///
/// `arrangement` must be a permutation of all event indices; the id-based
/// overload accepts event ids. Throws std::invalid_argument otherwise.
ConstructionResult construct(const ResolvedInstance& resolved,
                             std::span<const std::uint32_t> arrangement);

ConstructionResult construct(const ResolvedInstance& resolved,
                             const std::vector<std::string>& arrangement_ids);

}  // namespace vnstt
