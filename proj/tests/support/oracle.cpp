#include "oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace oracle {

namespace {

const vnstt::Event& event_by_id(const vnstt::Instance& inst, const std::string& id) {
    for (const auto& e : inst.events) {
        if (e.id == id) return e;
    }
    throw std::runtime_error("oracle: unknown event '" + id + "'");
}

const vnstt::Room& room_by_id(const vnstt::Instance& inst, const std::string& id) {
    for (const auto& r : inst.rooms) {
        if (r.id == id) return r;
    }
    throw std::runtime_error("oracle: unknown room '" + id + "'");
}

bool share_group(const vnstt::Event& a, const vnstt::Event& b) {
    for (const auto& g : a.groups) {
        if (std::find(b.groups.begin(), b.groups.end(), g) != b.groups.end()) return true;
    }
    return false;
}

std::string fmt6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

}  // namespace

int attendee_count(const vnstt::Instance& inst, const vnstt::Event& event) {
    int total = 0;
    for (const auto& gid : event.groups) {
        for (const auto& g : inst.groups) {
            if (g.id == gid) total += g.size;
        }
    }
    return total;
}

double placement_penalty(const vnstt::Instance& inst, const vnstt::Event& event, int timeslot,
                         const vnstt::Room& room) {
    const int periods = inst.calendar.periods_per_day;
    const double late = periods > 1 ? double(timeslot % periods) / (periods - 1) : 0.0;
    const double slack = double(room.capacity - attendee_count(inst, event)) / room.capacity;
    const bool unpref = std::find(event.unpreferred_timeslots.begin(),
                                  event.unpreferred_timeslots.end(),
                                  timeslot) != event.unpreferred_timeslots.end();
    return inst.weights.w_late * late + inst.weights.w_slack * slack +
           inst.weights.w_unpref * (unpref ? 1.0 : 0.0);
}

double total_cost(const vnstt::Instance& inst, const std::vector<PlacedEntry>& placements) {
    double total = 0.0;
    for (const auto& p : placements) {
        total += placement_penalty(inst, event_by_id(inst, p.event), p.timeslot,
                                   room_by_id(inst, p.room));
    }
    return total;
}

bool feasible(const vnstt::Instance& inst, const std::vector<PlacedEntry>& placements,
              const vnstt::Event& event, int timeslot, const std::string& room_id) {
    if (attendee_count(inst, event) > room_by_id(inst, room_id).capacity) return false;
    for (const auto& p : placements) {
        if (p.timeslot != timeslot) continue;
        if (p.room == room_id) return false;
        const auto& other = event_by_id(inst, p.event);
        if (other.lecturer == event.lecturer) return false;
        if (share_group(other, event)) return false;
    }
    return true;
}

std::vector<std::pair<std::string, std::vector<std::string>>> violations(
    const vnstt::Instance& inst, const std::map<std::string, vnstt::SolutionEntry>& assignments,
    bool require_complete) {
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    std::vector<const std::pair<const std::string, vnstt::SolutionEntry>*> entries;
    for (const auto& item : assignments) entries.push_back(&item);

    for (std::size_t a = 0; a < entries.size(); ++a) {
        const auto& ea = event_by_id(inst, entries[a]->first);
        for (std::size_t b = a + 1; b < entries.size(); ++b) {
            if (entries[a]->second.timeslot != entries[b]->second.timeslot) continue;
            const auto& eb = event_by_id(inst, entries[b]->first);
            std::vector<std::string> pair{ea.id, eb.id};
            std::sort(pair.begin(), pair.end());
            if (ea.lecturer == eb.lecturer) out.push_back({"LECTURER_CLASH", pair});
            if (share_group(ea, eb)) out.push_back({"GROUP_CLASH", pair});
            if (entries[a]->second.room == entries[b]->second.room) out.push_back({"ROOM_CLASH", pair});
        }
        if (attendee_count(inst, ea) > room_by_id(inst, entries[a]->second.room).capacity) {
            out.push_back({"CAPACITY", {ea.id}});
        }
    }
    if (require_complete) {
        for (const auto& e : inst.events) {
            if (!assignments.count(e.id)) out.push_back({"UNASSIGNED", {e.id}});
        }
    }
    return out;
}

Construction construct(const vnstt::Instance& inst, const std::vector<std::string>& arrangement) {
    Construction result;
    for (const auto& e : inst.events) {
        if (e.fixed) result.placements.push_back({e.id, e.fixed->timeslot, e.fixed->room});
    }

    const int slots = inst.calendar.timeslot_count();
    double last_commit = 0.0;
    bool committed = false;

    for (const auto& event_id : arrangement) {
        const auto& event = event_by_id(inst, event_id);
        if (event.fixed) continue;

        int best_t = -1;
        std::string best_room;
        double best_cost = 0.0;
        for (int t = 0; t < slots; ++t) {
            // Room rule: cheapest-slack feasible room = minimal adequate
            // capacity, ties by id.
            const vnstt::Room* chosen = nullptr;
            for (const auto& room : inst.rooms) {
                if (!feasible(inst, result.placements, event, t, room.id)) continue;
                if (!chosen || room.capacity < chosen->capacity ||
                    (room.capacity == chosen->capacity && room.id < chosen->id)) {
                    chosen = &room;
                }
            }
            if (!chosen) continue;
            result.placements.push_back({event.id, t, chosen->id});
            const double c = total_cost(inst, result.placements);
            result.placements.pop_back();
            ++result.cost_evaluations;
            if (best_t < 0 || c < best_cost - 1e-9) {
                best_t = t;
                best_room = chosen->id;
                best_cost = c;
            }
        }
        if (best_t < 0) {
            result.failed_event = event.id;
            return result;
        }
        result.placements.push_back({event.id, best_t, best_room});
        last_commit = best_cost;
        committed = true;
    }

    result.success = true;
    result.cost = committed ? last_commit : total_cost(inst, result.placements);
    return result;
}

bool local_optimum(const vnstt::Instance& inst,
                   const std::map<std::string, vnstt::SolutionEntry>& assignments) {
    std::vector<PlacedEntry> placements;
    for (const auto& [id, entry] : assignments) placements.push_back({id, entry.timeslot, entry.room});
    const double base = total_cost(inst, placements);

    for (const auto& event : inst.events) {
        if (event.fixed) continue;
        std::vector<PlacedEntry> others;
        PlacedEntry original;
        for (const auto& p : placements) {
            if (p.event == event.id) {
                original = p;
            } else {
                others.push_back(p);
            }
        }
        for (int t = 0; t < inst.calendar.timeslot_count(); ++t) {
            for (const auto& room : inst.rooms) {
                if (t == original.timeslot && room.id == original.room) continue;
                if (!feasible(inst, others, event, t, room.id)) continue;
                auto moved = others;
                moved.push_back({event.id, t, room.id});
                if (total_cost(inst, moved) < base - 1e-9) return false;
            }
        }
    }
    return true;
}

Replay replay(const vnstt::Instance& inst, int k) {
    const std::size_t n = inst.events.size();
    std::vector<std::vector<std::string>> structures(k);
    const std::size_t base = n / k;
    const std::size_t remainder = n % k;
    std::size_t next = 0;
    for (int i = 0; i < k; ++i) {
        const std::size_t size = base + (static_cast<std::size_t>(i) < remainder ? 1 : 0);
        for (std::size_t j = 0; j < size; ++j) structures[i].push_back(inst.events[next++].id);
    }

    Replay result;
    result.trace_csv = "k,structure,rotation,leading_event,cost,feasible\n";
    auto concat = [&] {
        std::vector<std::string> all;
        for (const auto& s : structures) all.insert(all.end(), s.begin(), s.end());
        return all;
    };
    auto add_row = [&](const std::string& structure, int rotation, const std::string& leading,
                       const Construction& c) {
        result.trace_csv += std::to_string(k) + "," + structure + "," + std::to_string(rotation) +
                            "," + leading + "," + (c.success ? fmt6(c.cost) : "") + "," +
                            (c.success ? "true" : "false") + "\n";
    };

    for (int i = 0; i < k; ++i) {
        std::size_t best_r = 0;
        double best_cost = std::numeric_limits<double>::infinity();
        bool best_ok = false;
        const auto original = structures[i];
        for (std::size_t r = 0; r < original.size(); ++r) {
            auto rotated = original;
            std::rotate(rotated.begin(), rotated.begin() + r, rotated.end());
            structures[i] = rotated;
            const Construction c = construct(inst, concat());
            add_row(std::to_string(i + 1), static_cast<int>(r), rotated.front(), c);
            if (c.success && (!best_ok || c.cost < best_cost - 1e-9)) {
                best_ok = true;
                best_cost = c.cost;
                best_r = r;
            }
        }
        structures[i] = original;
        std::rotate(structures[i].begin(), structures[i].begin() + best_r, structures[i].end());
    }

    const auto final_arrangement = concat();
    const Construction final_pass = construct(inst, final_arrangement);
    add_row("final", 0, final_arrangement.front(), final_pass);

    result.success = final_pass.success;
    if (final_pass.success) {
        result.final_solution.instance_id = inst.id;
        for (const auto& p : final_pass.placements) {
            result.final_solution.assignments[p.event] = {p.timeslot, p.room};
        }
        result.final_solution.cost = final_pass.cost;
    }
    return result;
}

}  // namespace oracle
