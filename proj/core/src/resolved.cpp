#include "vnstt/resolved.hpp"

#include <algorithm>
#include <stdexcept>

namespace vnstt {

namespace {

template <typename T>
std::unordered_map<std::string, std::uint32_t> index_by_id(const std::vector<T>& items,
                                                           const char* what) {
    std::unordered_map<std::string, std::uint32_t> map;
    map.reserve(items.size());
    for (std::uint32_t i = 0; i < items.size(); ++i) {
        if (!map.emplace(items[i].id, i).second) {
            throw std::invalid_argument(std::string("duplicate ") + what + " id '" + items[i].id + "'");
        }
    }
    return map;
}

}  // namespace

ResolvedInstance::ResolvedInstance(Instance instance) : instance_(std::move(instance)) {
    if (instance_.calendar.days < 1 || instance_.calendar.periods_per_day < 1) {
        throw std::invalid_argument("calendar must have days >= 1 and periods_per_day >= 1");
    }
    timeslot_count_ = instance_.calendar.timeslot_count();
    const int periods = instance_.calendar.periods_per_day;
    inv_periods_minus_one_ = periods > 1 ? 1.0 / (periods - 1) : 0.0;

    event_by_id_ = index_by_id(instance_.events, "event");
    room_by_id_ = index_by_id(instance_.rooms, "room");
    auto lecturer_by_id = index_by_id(instance_.lecturers, "lecturer");
    auto group_by_id = index_by_id(instance_.groups, "group");

    const std::uint32_t n = event_count();
    event_lecturer_.resize(n);
    event_group_begin_.assign(n + 1, 0);
    event_attendees_.resize(n);
    event_fixed_.resize(n);
    unpref_.assign(static_cast<std::size_t>(n) * timeslot_count_, false);

    for (std::uint32_t e = 0; e < n; ++e) {
        const Event& ev = instance_.events[e];
        auto lec = lecturer_by_id.find(ev.lecturer);
        if (lec == lecturer_by_id.end()) {
            throw std::invalid_argument("event '" + ev.id + "' references unknown lecturer '" +
                                        ev.lecturer + "'");
        }
        event_lecturer_[e] = lec->second;
        if (ev.groups.empty()) {
            throw std::invalid_argument("event '" + ev.id + "' has no student groups");
        }
        int att = 0;
        for (const auto& gid : ev.groups) {
            auto grp = group_by_id.find(gid);
            if (grp == group_by_id.end()) {
                throw std::invalid_argument("event '" + ev.id + "' references unknown group '" + gid + "'");
            }
            event_groups_.push_back(grp->second);
            att += instance_.groups[grp->second].size;
        }
        event_group_begin_[e + 1] = static_cast<std::uint32_t>(event_groups_.size());
        event_attendees_[e] = att;

        if (ev.fixed) {
            auto room = room_by_id_.find(ev.fixed->room);
            if (room == room_by_id_.end()) {
                throw std::invalid_argument("event '" + ev.id + "' is fixed to unknown room '" +
                                            ev.fixed->room + "'");
            }
            if (ev.fixed->timeslot < 0 || ev.fixed->timeslot >= timeslot_count_) {
                throw std::invalid_argument("event '" + ev.id + "' is fixed to timeslot out of range");
            }
            event_fixed_[e] = Placement{ev.fixed->timeslot, room->second};
        }
        for (int t : ev.unpreferred_timeslots) {
            if (t >= 0 && t < timeslot_count_) {
                unpref_[static_cast<std::size_t>(e) * timeslot_count_ + t] = true;
            }
        }
    }

    rooms_by_capacity_.resize(room_count());
    for (std::uint32_t r = 0; r < room_count(); ++r) rooms_by_capacity_[r] = r;
    std::sort(rooms_by_capacity_.begin(), rooms_by_capacity_.end(),
              [&](std::uint32_t a, std::uint32_t b) {
                  const auto& ra = instance_.rooms[a];
                  const auto& rb = instance_.rooms[b];
                  return ra.capacity != rb.capacity ? ra.capacity < rb.capacity : ra.id < rb.id;
              });
    sorted_capacities_.resize(room_count());
    for (std::size_t i = 0; i < rooms_by_capacity_.size(); ++i) {
        sorted_capacities_[i] = instance_.rooms[rooms_by_capacity_[i]].capacity;
    }
}

std::uint32_t ResolvedInstance::event_index(const std::string& id) const {
    auto it = event_by_id_.find(id);
    if (it == event_by_id_.end()) throw std::invalid_argument("unknown event id '" + id + "'");
    return it->second;
}

std::uint32_t ResolvedInstance::room_index(const std::string& id) const {
    auto it = room_by_id_.find(id);
    if (it == room_by_id_.end()) throw std::invalid_argument("unknown room id '" + id + "'");
    return it->second;
}

std::span<const std::uint32_t> ResolvedInstance::groups_of(std::uint32_t event) const {
    return {event_groups_.data() + event_group_begin_[event],
            event_groups_.data() + event_group_begin_[event + 1]};
}

std::size_t ResolvedInstance::first_adequate_pos(int attendees) const {
    return static_cast<std::size_t>(
        std::lower_bound(sorted_capacities_.begin(), sorted_capacities_.end(), attendees) -
        sorted_capacities_.begin());
}

double ResolvedInstance::placement_penalty(std::uint32_t event, const Placement& placement) const {
    const CostWeights& w = instance_.weights;
    const double late =
        instance_.calendar.period_of(placement.timeslot) * inv_periods_minus_one_;
    const int capacity = instance_.rooms[placement.room].capacity;
    const double slack = static_cast<double>(capacity - event_attendees_[event]) / capacity;
    const double unpref = is_unpreferred(event, placement.timeslot) ? 1.0 : 0.0;
    return w.w_late * late + w.w_slack * slack + w.w_unpref * unpref;
}

}  // namespace vnstt
