#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "vnstt/model.hpp"

namespace vnstt {

/// Index-based placement used inside the solver; the room is an index
/// into Instance::rooms.
struct Placement {
    int timeslot = 0;
    std::uint32_t room = 0;

    bool operator==(const Placement&) const = default;
};

/// An Instance with every cross-reference resolved to dense indices, plus
/// the lookup tables the solver needs (attendee counts, rooms ordered by
/// capacity, per-event unpreferred-timeslot bitmap). Construction throws
/// std::invalid_argument if ids are duplicated or references do not
/// resolve; run validate_instance first for a full report.
///
/// Immutable after construction and safe to share across threads.
class ResolvedInstance {
public:
    explicit ResolvedInstance(Instance instance);

    const Instance& data() const { return instance_; }

    std::uint32_t event_count() const { return static_cast<std::uint32_t>(instance_.events.size()); }
    std::uint32_t room_count() const { return static_cast<std::uint32_t>(instance_.rooms.size()); }
    std::uint32_t lecturer_count() const { return static_cast<std::uint32_t>(instance_.lecturers.size()); }
    std::uint32_t group_count() const { return static_cast<std::uint32_t>(instance_.groups.size()); }
    int timeslot_count() const { return instance_.calendar.timeslot_count(); }
    int periods_per_day() const { return instance_.calendar.periods_per_day; }
    const CostWeights& weights() const { return instance_.weights; }

    const std::string& event_id(std::uint32_t event) const { return instance_.events[event].id; }
    const std::string& room_id(std::uint32_t room) const { return instance_.rooms[room].id; }
    int room_capacity(std::uint32_t room) const { return instance_.rooms[room].capacity; }

    std::uint32_t event_index(const std::string& id) const;
    std::uint32_t room_index(const std::string& id) const;

    std::uint32_t lecturer_of(std::uint32_t event) const { return event_lecturer_[event]; }
    std::span<const std::uint32_t> groups_of(std::uint32_t event) const;
    int attendees_of(std::uint32_t event) const { return event_attendees_[event]; }
    const std::optional<Placement>& fixed_of(std::uint32_t event) const { return event_fixed_[event]; }

    bool is_unpreferred(std::uint32_t event, int timeslot) const {
        return unpref_[static_cast<std::size_t>(event) * timeslot_count_ + timeslot];
    }

    /// Room indices ordered by (capacity, id) ascending; the suffix starting
    /// at first_adequate_pos(attendees) holds exactly the adequate rooms.
    std::span<const std::uint32_t> rooms_by_capacity() const { return rooms_by_capacity_; }
    std::size_t first_adequate_pos(int attendees) const;

    /// Soft penalty contributed by placing `event` at `placement`:
    /// w_late * period/(P-1)  +  w_slack * (capacity-attendees)/capacity
    /// +  w_unpref * [timeslot unpreferred for event].
    double placement_penalty(std::uint32_t event, const Placement& placement) const;

private:
    Instance instance_;
    int timeslot_count_ = 0;
    double inv_periods_minus_one_ = 0.0;  // 0 when periods_per_day == 1

    std::unordered_map<std::string, std::uint32_t> event_by_id_;
    std::unordered_map<std::string, std::uint32_t> room_by_id_;

    std::vector<std::uint32_t> event_lecturer_;
    std::vector<std::uint32_t> event_group_begin_;  // offsets into event_groups_, size N+1
    std::vector<std::uint32_t> event_groups_;
    std::vector<int> event_attendees_;
    std::vector<std::optional<Placement>> event_fixed_;
    std::vector<bool> unpref_;  // N x T bitmap

    std::vector<std::uint32_t> rooms_by_capacity_;
    std::vector<int> sorted_capacities_;
};

}  // namespace vnstt
