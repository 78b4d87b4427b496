#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vnstt/model.hpp"

namespace vnstt {

/// Shape of a synthetic instance. Requires events/groups/lecturers/rooms
/// >= 1, students >= groups, and rooms * timeslots >= events.
struct GenSpec {
    std::string name = "gen";
    std::uint32_t events = 0;
    std::uint32_t students = 0;
    std::uint32_t groups = 0;
    std::uint32_t lecturers = 0;
    std::uint32_t rooms = 0;
    int days = 5;
    int periods_per_day = 8;
    std::uint64_t seed = 1;
    double fixed_fraction = 0.0;   // share of events pre-assigned a slot
    double unpref_fraction = 0.1;  // share of timeslots marked unpreferred per event
};

/// No attempt produced a constructible instance for the spec.
struct UnsatisfiableSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Named shapes: N18 (18 events, 52 students in 4 groups, 10 lecturers,
/// 10 rooms), N90 (90/175/14/29/18), N130 (130/274/21/37/22); all on a
/// 5-day x 8-period calendar. Throws std::invalid_argument for any other
/// name.
GenSpec preset(std::string_view name, std::uint64_t seed);

/// Deterministically generates a valid instance for the spec: group sizes
/// split the students with difference <= 1, lecturers are assigned
/// round-robin in a seed-shuffled order, each event attends 1-2 groups,
/// room capacities guarantee every event at least one adequate room, and
/// the result passes validate_instance and a constructive-search check.
/// Up to 10 attempts with perturbed streams; throws UnsatisfiableSpec
/// after that, std::invalid_argument for a spec violating its invariants.
Instance generate(const GenSpec& spec);

}  // namespace vnstt
