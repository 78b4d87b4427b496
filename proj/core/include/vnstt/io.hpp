#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "vnstt/model.hpp"
#include "vnstt/resolved.hpp"

namespace vnstt {

/// Malformed input file: unreadable, invalid JSON, or a schema problem.
/// The message names the offending field or JSON location.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instance files are JSON (UTF-8):
///   { "id", "calendar": {"days", "periods_per_day"},
///     "rooms": [{"id", "capacity"}], "lecturers": [{"id"}],
///     "groups": [{"id", "size"}],
///     "events": [{"id", "lecturer", "groups": [...],
///                 "fixed": {"timeslot", "room"}?,
///                 "unpreferred_timeslots": [...]?}],
///     "weights": {"w_late", "w_slack", "w_unpref"}? }
/// Event order in the file is the instance's initial arrangement and is
/// preserved exactly. Missing weights default to (1.0, 0.5, 2.0).
/// Loading does not validate cross-references; run validate_instance on
/// the result.
Instance parse_instance_json(const std::string& text, const std::string& origin);
Instance load_instance(const std::filesystem::path& path);

std::string instance_to_json(const Instance& instance);
void save_instance(const Instance& instance, const std::filesystem::path& path);

/// Solution files are JSON:
///   { "instance_id", "cost", "assignments": [{"event", "timeslot", "room"}] }
/// with assignments sorted by event id. Loading resolves the entries
/// against the given instance, recomputes the cost, and rejects the file
/// if the stored cost differs by more than 1e-9 or any id/timeslot does
/// not resolve. Hard feasibility is not checked here; use hard_violations.
Solution parse_solution_json(const std::string& text, const std::string& origin,
                             const ResolvedInstance& resolved);
Solution load_solution(const std::filesystem::path& path, const ResolvedInstance& resolved);

std::string solution_to_json(const Solution& solution);
void save_solution(const Solution& solution, const std::filesystem::path& path);

}  // namespace vnstt
