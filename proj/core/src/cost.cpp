#include "vnstt/cost.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace vnstt {

const char* to_string(HardViolationKind kind) {
    switch (kind) {
        case HardViolationKind::lecturer_clash: return "LECTURER_CLASH";
        case HardViolationKind::group_clash: return "GROUP_CLASH";
        case HardViolationKind::room_clash: return "ROOM_CLASH";
        case HardViolationKind::capacity: return "CAPACITY";
        case HardViolationKind::unassigned: return "UNASSIGNED";
    }
    return "?";
}

PartialAssignment::PartialAssignment(const ResolvedInstance& resolved) : resolved_(&resolved) {
    const std::size_t n = resolved.event_count();
    const std::size_t t = static_cast<std::size_t>(resolved.timeslot_count());
    placement_.resize(n);
    placed_pos_.assign(n, kNone);
    placed_.reserve(n);
    lecturer_at_.assign(resolved.lecturer_count() * t, kNone);
    group_at_.assign(resolved.group_count() * t, kNone);
    room_at_.assign(resolved.room_count() * t, kNone);
}

std::uint32_t PartialAssignment::lecturer_occupant(std::uint32_t lecturer, int timeslot) const {
    return lecturer_at_[static_cast<std::size_t>(lecturer) * resolved_->timeslot_count() + timeslot];
}

std::uint32_t PartialAssignment::group_occupant(std::uint32_t group, int timeslot) const {
    return group_at_[static_cast<std::size_t>(group) * resolved_->timeslot_count() + timeslot];
}

std::uint32_t PartialAssignment::room_occupant(std::uint32_t room, int timeslot) const {
    return room_at_[static_cast<std::size_t>(room) * resolved_->timeslot_count() + timeslot];
}

void PartialAssignment::place(std::uint32_t event, const Placement& placement) {
    assert(!is_placed(event));
    assert(is_feasible_placement(*this, event, placement));
    const std::size_t t_count = static_cast<std::size_t>(resolved_->timeslot_count());
    const int t = placement.timeslot;
    lecturer_at_[resolved_->lecturer_of(event) * t_count + t] = event;
    for (std::uint32_t g : resolved_->groups_of(event)) group_at_[g * t_count + t] = event;
    room_at_[placement.room * t_count + t] = event;
    placement_[event] = placement;
    placed_pos_[event] = static_cast<std::uint32_t>(placed_.size());
    placed_.push_back(event);
}

void PartialAssignment::unplace(std::uint32_t event) {
    assert(is_placed(event));
    const std::size_t t_count = static_cast<std::size_t>(resolved_->timeslot_count());
    const Placement& p = placement_[event];
    lecturer_at_[resolved_->lecturer_of(event) * t_count + p.timeslot] = kNone;
    for (std::uint32_t g : resolved_->groups_of(event)) group_at_[g * t_count + p.timeslot] = kNone;
    room_at_[p.room * t_count + p.timeslot] = kNone;

    const std::uint32_t pos = placed_pos_[event];
    const std::uint32_t last = placed_.back();
    placed_[pos] = last;
    placed_pos_[last] = pos;
    placed_.pop_back();
    placed_pos_[event] = kNone;
}

std::map<std::string, SolutionEntry> PartialAssignment::to_map() const {
    std::map<std::string, SolutionEntry> out;
    for (std::uint32_t e : placed_) {
        const Placement& p = placement_[e];
        out.emplace(resolved_->event_id(e), SolutionEntry{p.timeslot, resolved_->room_id(p.room)});
    }
    return out;
}

double cost(const PartialAssignment& assignment, EvalCounter* counter) {
    const ResolvedInstance& ri = assignment.resolved();
    double total = 0.0;
    for (std::uint32_t e : assignment.placed_events()) {
        total += ri.placement_penalty(e, assignment.placement_of(e));
    }
    if (counter) {
        counter->calls += 1;
        counter->event_terms += assignment.placed_count();
    }
    return total;
}

double assignment_cost(const ResolvedInstance& resolved,
                       const std::map<std::string, SolutionEntry>& assignments) {
    double total = 0.0;
    for (const auto& [event_id, entry] : assignments) {
        const std::uint32_t e = resolved.event_index(event_id);
        if (entry.timeslot < 0 || entry.timeslot >= resolved.timeslot_count()) {
            throw std::invalid_argument("event '" + event_id + "' assigned timeslot out of range");
        }
        total += resolved.placement_penalty(e, Placement{entry.timeslot, resolved.room_index(entry.room)});
    }
    return total;
}

bool is_feasible_placement(const PartialAssignment& assignment, std::uint32_t event,
                           const Placement& placement) {
    const ResolvedInstance& ri = assignment.resolved();
    const int t = placement.timeslot;
    if (ri.attendees_of(event) > ri.room_capacity(placement.room)) return false;
    if (assignment.room_occupant(placement.room, t) != PartialAssignment::kNone) return false;
    if (assignment.lecturer_occupant(ri.lecturer_of(event), t) != PartialAssignment::kNone) return false;
    for (std::uint32_t g : ri.groups_of(event)) {
        if (assignment.group_occupant(g, t) != PartialAssignment::kNone) return false;
    }
    return true;
}

namespace {

struct ResolvedEntry {
    std::uint32_t event;
    std::uint32_t room;
    int timeslot;
};

void collect_clashes(const ResolvedInstance& ri, const std::vector<ResolvedEntry>& entries,
                     HardViolationKind kind, std::vector<HardViolation>& out) {
    // Key: (entity, timeslot) -> offending events. An event may carry several
    // group entities; lecturer and room carry one each.
    std::map<std::pair<std::uint32_t, int>, std::vector<std::uint32_t>> cells;
    for (const auto& entry : entries) {
        switch (kind) {
            case HardViolationKind::lecturer_clash:
                cells[{ri.lecturer_of(entry.event), entry.timeslot}].push_back(entry.event);
                break;
            case HardViolationKind::group_clash:
                for (std::uint32_t g : ri.groups_of(entry.event)) {
                    cells[{g, entry.timeslot}].push_back(entry.event);
                }
                break;
            case HardViolationKind::room_clash:
                cells[{entry.room, entry.timeslot}].push_back(entry.event);
                break;
            default:
                break;
        }
    }
    for (auto& [cell, events] : cells) {
        if (events.size() < 2) continue;
        std::vector<std::string> ids;
        ids.reserve(events.size());
        for (std::uint32_t e : events) ids.push_back(ri.event_id(e));
        std::sort(ids.begin(), ids.end());
        std::string entity;
        switch (kind) {
            case HardViolationKind::lecturer_clash: entity = ri.data().lecturers[cell.first].id; break;
            case HardViolationKind::group_clash: entity = ri.data().groups[cell.first].id; break;
            case HardViolationKind::room_clash: entity = ri.room_id(cell.first); break;
            default: break;
        }
        out.push_back({kind, std::move(ids), cell.second, std::move(entity)});
    }
}

}  // namespace

std::vector<HardViolation> hard_violations(const ResolvedInstance& resolved,
                                           const std::map<std::string, SolutionEntry>& assignments,
                                           bool require_complete) {
    std::vector<HardViolation> out;
    std::vector<ResolvedEntry> entries;
    entries.reserve(assignments.size());
    for (const auto& [event_id, entry] : assignments) {
        if (entry.timeslot < 0 || entry.timeslot >= resolved.timeslot_count()) {
            throw std::invalid_argument("event '" + event_id + "' assigned timeslot out of range");
        }
        entries.push_back(
            {resolved.event_index(event_id), resolved.room_index(entry.room), entry.timeslot});
    }

    collect_clashes(resolved, entries, HardViolationKind::lecturer_clash, out);
    collect_clashes(resolved, entries, HardViolationKind::group_clash, out);
    collect_clashes(resolved, entries, HardViolationKind::room_clash, out);

    for (const auto& entry : entries) {
        if (resolved.attendees_of(entry.event) > resolved.room_capacity(entry.room)) {
            out.push_back({HardViolationKind::capacity,
                           {resolved.event_id(entry.event)},
                           entry.timeslot,
                           resolved.room_id(entry.room)});
        }
    }

    if (require_complete) {
        for (std::uint32_t e = 0; e < resolved.event_count(); ++e) {
            if (!assignments.count(resolved.event_id(e))) {
                out.push_back({HardViolationKind::unassigned, {resolved.event_id(e)}, -1, ""});
            }
        }
    }
    return out;
}

bool absolute_gap_ok(double f_h, double f_ref, double eps) { return f_h <= f_ref + eps; }

double relative_gap(double f_h, double f_ref) {
    if (f_h == 0.0) throw std::domain_error("relative_gap undefined for f_h == 0");
    return (f_h - f_ref) / f_h;
}

bool is_local_optimum(const ResolvedInstance& resolved, const Solution& solution) {
    if (!hard_violations(resolved, solution.assignments, /*require_complete=*/true).empty()) {
        throw std::invalid_argument("is_local_optimum requires a complete feasible solution");
    }

    PartialAssignment pa(resolved);
    for (const auto& [event_id, entry] : solution.assignments) {
        pa.place(resolved.event_index(event_id),
                 Placement{entry.timeslot, resolved.room_index(entry.room)});
    }
    const double base = cost(pa);

    // Neighborhood: relocate one non-fixed event to any other feasible
    // (timeslot, room), everything else unchanged.
    for (std::uint32_t e = 0; e < resolved.event_count(); ++e) {
        if (resolved.fixed_of(e)) continue;
        const Placement original = pa.placement_of(e);
        pa.unplace(e);
        for (int t = 0; t < resolved.timeslot_count(); ++t) {
            for (std::uint32_t r = 0; r < resolved.room_count(); ++r) {
                const Placement candidate{t, r};
                if (candidate == original) continue;
                if (!is_feasible_placement(pa, e, candidate)) continue;
                pa.place(e, candidate);
                const double moved = cost(pa);
                pa.unplace(e);
                if (moved < base - kCostEpsilon) {
                    pa.place(e, original);
                    return false;
                }
            }
        }
        pa.place(e, original);
    }
    return true;
}

}  // namespace vnstt
