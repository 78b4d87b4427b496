#include "vnstt/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vnstt/cost.hpp"

namespace vnstt {

namespace {

using json = nlohmann::ordered_json;

const json& field(const json& object, const char* key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end()) {
        throw ParseError(where + ": missing field '" + key + "'");
    }
    return *it;
}

std::string get_string(const json& object, const char* key, const std::string& where) {
    const json& value = field(object, key, where);
    if (!value.is_string()) throw ParseError(where + "." + key + ": expected a string");
    return value.get<std::string>();
}

int get_int(const json& object, const char* key, const std::string& where) {
    const json& value = field(object, key, where);
    if (!value.is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
    return value.get<int>();
}

double get_number(const json& object, const char* key, const std::string& where) {
    const json& value = field(object, key, where);
    if (!value.is_number()) throw ParseError(where + "." + key + ": expected a number");
    return value.get<double>();
}

const json& get_array(const json& object, const char* key, const std::string& where) {
    const json& value = field(object, key, where);
    if (!value.is_array()) throw ParseError(where + "." + key + ": expected an array");
    return value;
}

json parse_root(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);  // error message carries line and column
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!root.is_object()) throw ParseError(origin + ": expected a JSON object");
    return root;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace

Instance parse_instance_json(const std::string& text, const std::string& origin) {
    const json root = parse_root(text, origin);
    Instance instance;
    instance.id = get_string(root, "id", origin);

    const json& cal = field(root, "calendar", origin);
    instance.calendar.days = get_int(cal, "days", origin + ".calendar");
    instance.calendar.periods_per_day = get_int(cal, "periods_per_day", origin + ".calendar");

    std::size_t i = 0;
    for (const json& room : get_array(root, "rooms", origin)) {
        const std::string where = origin + ".rooms[" + std::to_string(i++) + "]";
        instance.rooms.push_back({get_string(room, "id", where), get_int(room, "capacity", where)});
    }
    i = 0;
    for (const json& lecturer : get_array(root, "lecturers", origin)) {
        const std::string where = origin + ".lecturers[" + std::to_string(i++) + "]";
        instance.lecturers.push_back({get_string(lecturer, "id", where)});
    }
    i = 0;
    for (const json& group : get_array(root, "groups", origin)) {
        const std::string where = origin + ".groups[" + std::to_string(i++) + "]";
        instance.groups.push_back({get_string(group, "id", where), get_int(group, "size", where)});
    }
    i = 0;
    for (const json& event : get_array(root, "events", origin)) {
        const std::string where = origin + ".events[" + std::to_string(i++) + "]";
        Event e;
        e.id = get_string(event, "id", where);
        e.lecturer = get_string(event, "lecturer", where);
        for (const json& gid : get_array(event, "groups", where)) {
            if (!gid.is_string()) throw ParseError(where + ".groups: expected strings");
            e.groups.push_back(gid.get<std::string>());
        }
        if (auto it = event.find("fixed"); it != event.end() && !it->is_null()) {
            e.fixed = FixedPlacement{get_int(*it, "timeslot", where + ".fixed"),
                                     get_string(*it, "room", where + ".fixed")};
        }
        if (auto it = event.find("unpreferred_timeslots"); it != event.end() && !it->is_null()) {
            if (!it->is_array()) throw ParseError(where + ".unpreferred_timeslots: expected an array");
            for (const json& t : *it) {
                if (!t.is_number_integer()) {
                    throw ParseError(where + ".unpreferred_timeslots: expected integers");
                }
                e.unpreferred_timeslots.push_back(t.get<int>());
            }
            std::sort(e.unpreferred_timeslots.begin(), e.unpreferred_timeslots.end());
            e.unpreferred_timeslots.erase(
                std::unique(e.unpreferred_timeslots.begin(), e.unpreferred_timeslots.end()),
                e.unpreferred_timeslots.end());
        }
        instance.events.push_back(std::move(e));
    }

    if (auto it = root.find("weights"); it != root.end() && !it->is_null()) {
        instance.weights.w_late = get_number(*it, "w_late", origin + ".weights");
        instance.weights.w_slack = get_number(*it, "w_slack", origin + ".weights");
        instance.weights.w_unpref = get_number(*it, "w_unpref", origin + ".weights");
    }
    return instance;
}

Instance load_instance(const std::filesystem::path& path) {
    return parse_instance_json(read_file(path), path.string());
}

std::string instance_to_json(const Instance& instance) {
    json root;
    root["id"] = instance.id;
    root["calendar"] = {{"days", instance.calendar.days},
                        {"periods_per_day", instance.calendar.periods_per_day}};
    root["rooms"] = json::array();
    for (const auto& room : instance.rooms) {
        root["rooms"].push_back({{"id", room.id}, {"capacity", room.capacity}});
    }
    root["lecturers"] = json::array();
    for (const auto& lecturer : instance.lecturers) {
        root["lecturers"].push_back({{"id", lecturer.id}});
    }
    root["groups"] = json::array();
    for (const auto& group : instance.groups) {
        root["groups"].push_back({{"id", group.id}, {"size", group.size}});
    }
    root["events"] = json::array();
    for (const auto& event : instance.events) {
        json e;
        e["id"] = event.id;
        e["lecturer"] = event.lecturer;
        e["groups"] = event.groups;
        if (event.fixed) {
            e["fixed"] = {{"timeslot", event.fixed->timeslot}, {"room", event.fixed->room}};
        }
        if (!event.unpreferred_timeslots.empty()) {
            e["unpreferred_timeslots"] = event.unpreferred_timeslots;
        }
        root["events"].push_back(std::move(e));
    }
    root["weights"] = {{"w_late", instance.weights.w_late},
                       {"w_slack", instance.weights.w_slack},
                       {"w_unpref", instance.weights.w_unpref}};
    return root.dump(2) + "\n";
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
    write_file(path, instance_to_json(instance));
}

Solution parse_solution_json(const std::string& text, const std::string& origin,
                             const ResolvedInstance& resolved) {
    const json root = parse_root(text, origin);
    Solution solution;
    solution.instance_id = get_string(root, "instance_id", origin);
    if (solution.instance_id != resolved.data().id) {
        throw ParseError(origin + ": instance_id '" + solution.instance_id +
                         "' does not match instance '" + resolved.data().id + "'");
    }
    const double stored_cost = get_number(root, "cost", origin);

    std::size_t i = 0;
    for (const json& entry : get_array(root, "assignments", origin)) {
        const std::string where = origin + ".assignments[" + std::to_string(i++) + "]";
        const std::string event_id = get_string(entry, "event", where);
        const int timeslot = get_int(entry, "timeslot", where);
        const std::string room_id = get_string(entry, "room", where);

        try {
            resolved.event_index(event_id);
            resolved.room_index(room_id);
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ": " + e.what());
        }
        if (timeslot < 0 || timeslot >= resolved.timeslot_count()) {
            throw ParseError(where + ": timeslot " + std::to_string(timeslot) + " outside [0, " +
                             std::to_string(resolved.timeslot_count()) + ")");
        }
        if (!solution.assignments.emplace(event_id, SolutionEntry{timeslot, room_id}).second) {
            throw ParseError(where + ": event '" + event_id + "' assigned twice");
        }
    }

    const double recomputed = assignment_cost(resolved, solution.assignments);
    if (std::abs(recomputed - stored_cost) > 1e-9) {
        throw ParseError(origin + ": stored cost " + std::to_string(stored_cost) +
                         " does not match recomputed cost " + std::to_string(recomputed));
    }
    solution.cost = recomputed;
    return solution;
}

Solution load_solution(const std::filesystem::path& path, const ResolvedInstance& resolved) {
    return parse_solution_json(read_file(path), path.string(), resolved);
}

std::string solution_to_json(const Solution& solution) {
    json root;
    root["instance_id"] = solution.instance_id;
    root["cost"] = solution.cost;
    root["assignments"] = json::array();
    for (const auto& [event_id, entry] : solution.assignments) {
        root["assignments"].push_back(
            {{"event", event_id}, {"timeslot", entry.timeslot}, {"room", entry.room}});
    }
    return root.dump(2) + "\n";
}

void save_solution(const Solution& solution, const std::filesystem::path& path) {
    write_file(path, solution_to_json(solution));
}

}  // namespace vnstt
