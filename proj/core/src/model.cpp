#include "vnstt/model.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace vnstt {

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

template <typename T>
void check_unique_ids(const std::vector<T>& items, const char* what,
                      std::vector<ValidationIssue>& out) {
    std::unordered_set<std::string> seen;
    for (const auto& item : items) {
        if (!seen.insert(item.id).second) {
            out.push_back({"DUPLICATE_ID",
                           std::string(what) + " id " + quoted(item.id) + " appears more than once"});
        }
    }
}

}  // namespace

int attendees(const Instance& instance, const Event& event) {
    int total = 0;
    for (const auto& gid : event.groups) {
        auto it = std::find_if(instance.groups.begin(), instance.groups.end(),
                               [&](const StudentGroup& g) { return g.id == gid; });
        if (it != instance.groups.end()) total += it->size;
    }
    return total;
}

std::vector<ValidationIssue> validate_instance(const Instance& instance) {
    std::vector<ValidationIssue> issues;
    const auto& cal = instance.calendar;

    if (cal.days < 1 || cal.periods_per_day < 1) {
        issues.push_back({"BAD_CALENDAR",
                          "calendar must have days >= 1 and periods_per_day >= 1 (got " +
                              std::to_string(cal.days) + " x " + std::to_string(cal.periods_per_day) + ")"});
    }
    const int slot_count = std::max(0, cal.timeslot_count());

    for (const auto& room : instance.rooms) {
        if (room.capacity < 1) {
            issues.push_back({"BAD_CAPACITY",
                              "room " + quoted(room.id) + " has capacity " + std::to_string(room.capacity)});
        }
    }
    for (const auto& group : instance.groups) {
        if (group.size < 1) {
            issues.push_back({"BAD_GROUP_SIZE",
                              "group " + quoted(group.id) + " has size " + std::to_string(group.size)});
        }
    }
    if (instance.weights.w_late < 0 || instance.weights.w_slack < 0 || instance.weights.w_unpref < 0) {
        issues.push_back({"NEGATIVE_WEIGHT", "cost weights must be non-negative"});
    }

    check_unique_ids(instance.rooms, "room", issues);
    check_unique_ids(instance.lecturers, "lecturer", issues);
    check_unique_ids(instance.groups, "group", issues);
    check_unique_ids(instance.events, "event", issues);

    if (instance.events.empty()) {
        issues.push_back({"NO_EVENTS", "instance has no events"});
    }

    std::unordered_set<std::string> room_ids, lecturer_ids, group_ids;
    std::unordered_map<std::string, int> room_capacity;
    for (const auto& r : instance.rooms) {
        room_ids.insert(r.id);
        room_capacity.emplace(r.id, r.capacity);
    }
    for (const auto& l : instance.lecturers) lecturer_ids.insert(l.id);
    for (const auto& g : instance.groups) group_ids.insert(g.id);

    for (const auto& event : instance.events) {
        if (!lecturer_ids.count(event.lecturer)) {
            issues.push_back({"UNKNOWN_LECTURER",
                              "event " + quoted(event.id) + " references unknown lecturer " +
                                  quoted(event.lecturer)});
        }
        if (event.groups.empty()) {
            issues.push_back({"EMPTY_GROUPS", "event " + quoted(event.id) + " has no student groups"});
        }
        std::unordered_set<std::string> seen_groups;
        for (const auto& gid : event.groups) {
            if (!group_ids.count(gid)) {
                issues.push_back({"UNKNOWN_GROUP",
                                  "event " + quoted(event.id) + " references unknown group " + quoted(gid)});
            }
            if (!seen_groups.insert(gid).second) {
                issues.push_back({"DUPLICATE_GROUP_REF",
                                  "event " + quoted(event.id) + " lists group " + quoted(gid) + " twice"});
            }
        }
        for (int t : event.unpreferred_timeslots) {
            if (t < 0 || t >= slot_count) {
                issues.push_back({"TIMESLOT_RANGE",
                                  "event " + quoted(event.id) + " marks unpreferred timeslot " +
                                      std::to_string(t) + " outside [0, " + std::to_string(slot_count) + ")"});
            }
        }
        if (event.fixed) {
            if (!room_ids.count(event.fixed->room)) {
                issues.push_back({"UNKNOWN_ROOM",
                                  "event " + quoted(event.id) + " is fixed to unknown room " +
                                      quoted(event.fixed->room)});
            }
            if (event.fixed->timeslot < 0 || event.fixed->timeslot >= slot_count) {
                issues.push_back({"TIMESLOT_RANGE",
                                  "event " + quoted(event.id) + " is fixed to timeslot " +
                                      std::to_string(event.fixed->timeslot) + " outside [0, " +
                                      std::to_string(slot_count) + ")"});
            }
        }
    }

    // Pairwise checks over the fixed set: the pre-placed events must not
    // clash with each other or overflow their rooms.
    for (std::size_t a = 0; a < instance.events.size(); ++a) {
        const auto& ea = instance.events[a];
        if (!ea.fixed) continue;
        auto cap = room_capacity.find(ea.fixed->room);
        if (cap != room_capacity.end() && attendees(instance, ea) > cap->second) {
            issues.push_back({"FIXED_CAPACITY",
                              "event " + quoted(ea.id) + " is fixed to room " + quoted(ea.fixed->room) +
                                  " with capacity " + std::to_string(cap->second) + " but has " +
                                  std::to_string(attendees(instance, ea)) + " attendees"});
        }
        for (std::size_t b = a + 1; b < instance.events.size(); ++b) {
            const auto& eb = instance.events[b];
            if (!eb.fixed || ea.fixed->timeslot != eb.fixed->timeslot) continue;
            const char* why = nullptr;
            if (ea.lecturer == eb.lecturer) {
                why = "share a lecturer";
            } else if (ea.fixed->room == eb.fixed->room) {
                why = "share a room";
            } else if (std::any_of(ea.groups.begin(), ea.groups.end(), [&](const std::string& g) {
                           return std::find(eb.groups.begin(), eb.groups.end(), g) != eb.groups.end();
                       })) {
                why = "share a student group";
            }
            if (why) {
                issues.push_back({"FIXED_CONFLICT",
                                  "fixed events " + quoted(ea.id) + " and " + quoted(eb.id) + " " + why +
                                      " at timeslot " + std::to_string(ea.fixed->timeslot)});
            }
        }
    }

    return issues;
}

}  // namespace vnstt
