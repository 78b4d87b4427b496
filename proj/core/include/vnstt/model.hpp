#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vnstt {

/// Teaching week grid. Timeslots are flattened day-major:
/// t = day * periods_per_day + period, t in [0, timeslot_count()).
struct Calendar {
    int days = 0;
    int periods_per_day = 0;

    int timeslot_count() const { return days * periods_per_day; }
    int day_of(int timeslot) const { return timeslot / periods_per_day; }
    int period_of(int timeslot) const { return timeslot % periods_per_day; }

    bool operator==(const Calendar&) const = default;
};

struct Room {
    std::string id;
    int capacity = 0;  // seats, >= 1

    bool operator==(const Room&) const = default;
};

struct StudentGroup {
    std::string id;
    int size = 0;  // students, >= 1

    bool operator==(const StudentGroup&) const = default;
};

struct Lecturer {
    std::string id;

    bool operator==(const Lecturer&) const = default;
};

/// Pre-assigned (timeslot, room) of an event that the solver must not move.
struct FixedPlacement {
    int timeslot = 0;
    std::string room;

    bool operator==(const FixedPlacement&) const = default;
};

/// A teaching session: one lecturer, one or more student groups, to be
/// scheduled into exactly one (timeslot, room). Duration is one timeslot.
struct Event {
    std::string id;
    std::string lecturer;
    std::vector<std::string> groups;          // non-empty
    std::optional<FixedPlacement> fixed;
    std::vector<int> unpreferred_timeslots;   // kept sorted and unique

    bool operator==(const Event&) const = default;
};

/// Weights of the three soft-penalty terms (late period, capacity slack,
/// unpreferred timeslot). All non-negative.
struct CostWeights {
    double w_late = 1.0;
    double w_slack = 0.5;
    double w_unpref = 2.0;

    bool operator==(const CostWeights&) const = default;
};

/// A complete timetabling problem. The order of `events` defines the
/// initial processing arrangement and the event indices.
struct Instance {
    std::string id;
    Calendar calendar;
    std::vector<Room> rooms;
    std::vector<Lecturer> lecturers;
    std::vector<StudentGroup> groups;
    std::vector<Event> events;
    CostWeights weights;

    bool operator==(const Instance&) const = default;
};

struct SolutionEntry {
    int timeslot = 0;
    std::string room;

    bool operator==(const SolutionEntry&) const = default;
};

/// Per-event placements plus the cached total cost. Solver-produced
/// solutions assign every event exactly once and are hard-feasible.
struct Solution {
    std::string instance_id;
    std::map<std::string, SolutionEntry> assignments;
    double cost = 0.0;

    bool operator==(const Solution&) const = default;
};

/// One violated structural invariant of an Instance.
///
/// Codes: BAD_CALENDAR, BAD_CAPACITY, BAD_GROUP_SIZE, NEGATIVE_WEIGHT,
/// DUPLICATE_ID, NO_EVENTS, EMPTY_GROUPS, DUPLICATE_GROUP_REF,
/// UNKNOWN_LECTURER, UNKNOWN_GROUP, UNKNOWN_ROOM, TIMESLOT_RANGE,
/// FIXED_CONFLICT, FIXED_CAPACITY.
struct ValidationIssue {
    std::string code;
    std::string message;

    bool operator==(const ValidationIssue&) const = default;
};

/// Checks every structural invariant and returns one issue per violation;
/// an empty report means the instance is valid. Pure: violations are data,
/// not errors.
std::vector<ValidationIssue> validate_instance(const Instance& instance);

/// Total students attending the event (sum of its groups' sizes).
/// Groups must resolve; unknown ids count as zero here and are reported
/// by validate_instance.
int attendees(const Instance& instance, const Event& event);

}  // namespace vnstt
