#include "vnstt/generate.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "vnstt/construct.hpp"
#include "vnstt/cost.hpp"
#include "vnstt/resolved.hpp"
#include "vnstt/rng.hpp"

namespace vnstt {

namespace {

std::string padded_id(char prefix, std::uint32_t index, std::uint32_t count) {
    std::uint32_t width = 1;
    for (std::uint32_t v = count; v >= 10; v /= 10) ++width;
    std::string digits = std::to_string(index + 1);
    return prefix + std::string(width - std::min<std::size_t>(width, digits.size()), '0') + digits;
}

struct FixedSeeder {
    // Mirrors the solver's occupancy bookkeeping for the fixed set only.
    const Instance& instance;
    std::vector<int> lecturer_at, group_at, room_at;  // timeslot-major grids, -1 = free

    FixedSeeder(const Instance& inst, int slots)
        : instance(inst),
          lecturer_at(inst.lecturers.size() * slots, -1),
          group_at(inst.groups.size() * slots, -1),
          room_at(inst.rooms.size() * slots, -1) {}

    bool try_fix(std::uint32_t event_idx, int t, std::uint32_t room_idx, int slots) {
        const Event& e = instance.events[event_idx];
        if (attendees(instance, e) > instance.rooms[room_idx].capacity) return false;
        if (room_at[room_idx * slots + t] >= 0) return false;
        const auto lec =
            std::find_if(instance.lecturers.begin(), instance.lecturers.end(),
                         [&](const Lecturer& l) { return l.id == e.lecturer; }) -
            instance.lecturers.begin();
        if (lecturer_at[lec * slots + t] >= 0) return false;
        for (const auto& gid : e.groups) {
            const auto g = std::find_if(instance.groups.begin(), instance.groups.end(),
                                        [&](const StudentGroup& sg) { return sg.id == gid; }) -
                           instance.groups.begin();
            if (group_at[g * slots + t] >= 0) return false;
        }
        room_at[room_idx * slots + t] = static_cast<int>(event_idx);
        lecturer_at[lec * slots + t] = static_cast<int>(event_idx);
        for (const auto& gid : e.groups) {
            const auto g = std::find_if(instance.groups.begin(), instance.groups.end(),
                                        [&](const StudentGroup& sg) { return sg.id == gid; }) -
                           instance.groups.begin();
            group_at[g * slots + t] = static_cast<int>(event_idx);
        }
        return true;
    }
};

std::optional<Instance> generate_attempt(const GenSpec& spec, SplitMix64& rng) {
    Instance instance;
    instance.id = spec.name + "-s" + std::to_string(spec.seed);
    instance.calendar = {spec.days, spec.periods_per_day};
    const int slots = instance.calendar.timeslot_count();

    // Groups: students split as evenly as possible.
    const std::uint32_t base_size = spec.students / spec.groups;
    const std::uint32_t larger = spec.students % spec.groups;
    for (std::uint32_t g = 0; g < spec.groups; ++g) {
        instance.groups.push_back(
            {padded_id('g', g, spec.groups), static_cast<int>(base_size + (g < larger ? 1 : 0))});
    }

    for (std::uint32_t l = 0; l < spec.lecturers; ++l) {
        instance.lecturers.push_back({padded_id('l', l, spec.lecturers)});
    }
    std::vector<std::uint32_t> lecturer_order(spec.lecturers);
    std::iota(lecturer_order.begin(), lecturer_order.end(), 0u);
    rng.shuffle(lecturer_order);

    // Events: one lecturer round-robin over the shuffled order, 1-2 groups.
    int max_attendees = 1;
    int min_attendees = spec.students;
    for (std::uint32_t e = 0; e < spec.events; ++e) {
        Event event;
        event.id = padded_id('e', e, spec.events);
        event.lecturer = instance.lecturers[lecturer_order[e % spec.lecturers]].id;
        const std::uint32_t g1 = static_cast<std::uint32_t>(rng.below(spec.groups));
        event.groups.push_back(instance.groups[g1].id);
        if (spec.groups > 1 && rng.below(4) == 0) {
            std::uint32_t g2 = static_cast<std::uint32_t>(rng.below(spec.groups - 1));
            if (g2 >= g1) ++g2;
            event.groups.push_back(instance.groups[g2].id);
        }
        const int att = attendees(instance, event);
        max_attendees = std::max(max_attendees, att);
        min_attendees = std::min(min_attendees, att);

        const std::uint32_t unpref_count =
            static_cast<std::uint32_t>(spec.unpref_fraction * slots);
        if (unpref_count > 0) {
            auto picks = rng.sample(static_cast<std::uint32_t>(slots), unpref_count);
            event.unpreferred_timeslots.assign(picks.begin(), picks.end());
            std::sort(event.unpreferred_timeslots.begin(), event.unpreferred_timeslots.end());
        }
        instance.events.push_back(std::move(event));
    }

    // Rooms: one room of exactly the largest demand, the rest drawn from
    // [min demand, largest demand + headroom]. Every event fits somewhere.
    const int headroom = std::max(1, max_attendees / 4);
    for (std::uint32_t r = 0; r < spec.rooms; ++r) {
        int capacity = max_attendees;
        if (r > 0) {
            capacity = min_attendees +
                       static_cast<int>(rng.below(max_attendees - min_attendees + headroom + 1));
        }
        instance.rooms.push_back({padded_id('r', r, spec.rooms), capacity});
    }

    // Fixed events: scattered over seed-shuffled slots, mutually feasible.
    const std::uint32_t fixed_count = static_cast<std::uint32_t>(spec.fixed_fraction * spec.events);
    if (fixed_count > 0) {
        FixedSeeder seeder(instance, slots);
        auto fixed_events = rng.sample(spec.events, fixed_count);
        std::sort(fixed_events.begin(), fixed_events.end());
        for (std::uint32_t e : fixed_events) {
            std::vector<std::uint32_t> slot_order(slots);
            std::iota(slot_order.begin(), slot_order.end(), 0u);
            rng.shuffle(slot_order);
            bool placed = false;
            for (std::uint32_t t : slot_order) {
                for (std::uint32_t r = 0; r < spec.rooms && !placed; ++r) {
                    if (seeder.try_fix(e, static_cast<int>(t), r, slots)) {
                        instance.events[e].fixed =
                            FixedPlacement{static_cast<int>(t), instance.rooms[r].id};
                        placed = true;
                    }
                }
                if (placed) break;
            }
            if (!placed) return std::nullopt;  // caller retries with a new stream
        }
    }
    return instance;
}

}  // namespace

GenSpec preset(std::string_view name, std::uint64_t seed) {
    GenSpec spec;
    if (name == "N18") {
        spec = {.name = "N18", .events = 18, .students = 52, .groups = 4, .lecturers = 10,
                .rooms = 10, .seed = seed};
    } else if (name == "N90") {
        spec = {.name = "N90", .events = 90, .students = 175, .groups = 14, .lecturers = 29,
                .rooms = 18, .seed = seed};
    } else if (name == "N130") {
        spec = {.name = "N130", .events = 130, .students = 274, .groups = 21, .lecturers = 37,
                .rooms = 22, .seed = seed};
    } else {
        throw std::invalid_argument("unknown preset '" + std::string(name) +
                                    "'; valid presets: N18, N90, N130");
    }
    return spec;
}

Instance generate(const GenSpec& spec) {
    if (spec.events < 1 || spec.groups < 1 || spec.lecturers < 1 || spec.rooms < 1) {
        throw std::invalid_argument("spec requires events, groups, lecturers, rooms >= 1");
    }
    if (spec.students < spec.groups) {
        throw std::invalid_argument("spec requires students >= groups");
    }
    if (spec.days < 1 || spec.periods_per_day < 1) {
        throw std::invalid_argument("spec requires days >= 1 and periods_per_day >= 1");
    }
    const std::uint64_t slots =
        static_cast<std::uint64_t>(spec.days) * static_cast<std::uint64_t>(spec.periods_per_day);
    if (static_cast<std::uint64_t>(spec.rooms) * slots < spec.events) {
        throw std::invalid_argument("spec requires rooms * timeslots >= events");
    }
    if (spec.fixed_fraction < 0 || spec.fixed_fraction > 1 || spec.unpref_fraction < 0 ||
        spec.unpref_fraction > 1) {
        throw std::invalid_argument("fractions must lie in [0, 1]");
    }

    for (int attempt = 0; attempt < 10; ++attempt) {
        SplitMix64 rng(spec.seed ^ (static_cast<std::uint64_t>(attempt) * 0xD1B54A32D192ED03ull));
        std::optional<Instance> candidate = generate_attempt(spec, rng);
        if (!candidate || !validate_instance(*candidate).empty()) continue;

        ResolvedInstance resolved(*candidate);
        std::vector<std::uint32_t> identity(spec.events);
        std::iota(identity.begin(), identity.end(), 0u);
        if (construct(resolved, identity).success()) return *std::move(candidate);
    }
    throw UnsatisfiableSpec("no constructible instance found for spec '" + spec.name + "' seed " +
                            std::to_string(spec.seed) + " after 10 attempts");
}

}  // namespace vnstt
