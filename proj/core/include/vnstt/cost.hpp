#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vnstt/resolved.hpp"

namespace vnstt {

/// Detection tolerance for cost comparisons (tie breaking, cached-cost
/// checks). Summation order can perturb the last bits of a double sum.
inline constexpr double kCostEpsilon = 1e-9;

enum class HardViolationKind {
    lecturer_clash,
    group_clash,
    room_clash,
    capacity,
    unassigned,
};

const char* to_string(HardViolationKind kind);

struct HardViolation {
    HardViolationKind kind;
    std::vector<std::string> events;  // offending event ids, sorted
    int timeslot = -1;                // -1 for unassigned/capacity-only context
    std::string entity;               // clashing lecturer/group/room id, if any
};

/// Counts the work done by cost(): one call per evaluation, one term per
/// placed event visited. Owned by a single solver run, never shared.
struct EvalCounter {
    std::uint64_t calls = 0;
    std::uint64_t event_terms = 0;
};

/// A hard-feasible assignment of a subset of events, with O(1) clash lookups
/// per (lecturer|group|room, timeslot) cell. place() requires the placement
/// to be feasible (check with is_feasible_placement first); fixed events may
/// be seeded via place() like any other.
class PartialAssignment {
public:
    explicit PartialAssignment(const ResolvedInstance& resolved);

    const ResolvedInstance& resolved() const { return *resolved_; }

    bool is_placed(std::uint32_t event) const { return placed_pos_[event] != kNone; }
    const Placement& placement_of(std::uint32_t event) const { return placement_[event]; }
    std::span<const std::uint32_t> placed_events() const { return placed_; }
    std::size_t placed_count() const { return placed_.size(); }

    void place(std::uint32_t event, const Placement& placement);
    void unplace(std::uint32_t event);

    /// Occupant event of the cell, or kNone.
    std::uint32_t lecturer_occupant(std::uint32_t lecturer, int timeslot) const;
    std::uint32_t group_occupant(std::uint32_t group, int timeslot) const;
    std::uint32_t room_occupant(std::uint32_t room, int timeslot) const;

    /// Id-keyed copy of the placements, the shape the file formats use.
    std::map<std::string, SolutionEntry> to_map() const;

    static constexpr std::uint32_t kNone = 0xffffffffu;

private:
    const ResolvedInstance* resolved_;
    std::vector<Placement> placement_;
    std::vector<std::uint32_t> placed_pos_;  // index into placed_, or kNone
    std::vector<std::uint32_t> placed_;
    std::vector<std::uint32_t> lecturer_at_;
    std::vector<std::uint32_t> group_at_;
    std::vector<std::uint32_t> room_at_;
};

/// Total soft cost of the placed events: sum of placement_penalty over the
/// assignment. O(placed) with O(1) work per event. When a counter is given,
/// records one call and one term per placed event.
double cost(const PartialAssignment& assignment, EvalCounter* counter = nullptr);

/// Same sum over an id-keyed map (possibly infeasible or incomplete);
/// used when evaluating loaded files. Throws std::invalid_argument on
/// unknown event/room ids.
double assignment_cost(const ResolvedInstance& resolved,
                       const std::map<std::string, SolutionEntry>& assignments);

/// Exhaustive hard-constraint check of an arbitrary assignment map.
/// With require_complete, events missing from the map are reported as
/// unassigned. An empty result means the assignment is feasible.
std::vector<HardViolation> hard_violations(const ResolvedInstance& resolved,
                                           const std::map<std::string, SolutionEntry>& assignments,
                                           bool require_complete);

/// True iff adding event -> placement introduces no hard violation against
/// the already-placed events. The event must not be placed yet.
bool is_feasible_placement(const PartialAssignment& assignment, std::uint32_t event,
                           const Placement& placement);

/// f_h acceptable against a reference value within absolute tolerance eps:
/// f_h <= f_ref + eps (boundary inclusive).
bool absolute_gap_ok(double f_h, double f_ref, double eps);

/// (f_h - f_ref) / f_h, the gap normalized by the heuristic value.
/// Throws std::domain_error when f_h == 0.
double relative_gap(double f_h, double f_ref);

/// True iff no single non-fixed event can be relocated to another feasible
/// (timeslot, room) with strictly lower total cost (improvement beyond
/// kCostEpsilon). Throws std::invalid_argument if the solution is not a
/// complete feasible assignment.
bool is_local_optimum(const ResolvedInstance& resolved, const Solution& solution);

}  // namespace vnstt
