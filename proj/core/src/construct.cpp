#include "vnstt/construct.hpp"

#include <stdexcept>

namespace vnstt {

namespace {

void check_permutation(const ResolvedInstance& ri, std::span<const std::uint32_t> arrangement) {
    const std::uint32_t n = ri.event_count();
    if (arrangement.size() != n) {
        throw std::invalid_argument("arrangement must list all " + std::to_string(n) + " events");
    }
    std::vector<bool> seen(n, false);
    for (std::uint32_t e : arrangement) {
        if (e >= n || seen[e]) {
            throw std::invalid_argument("arrangement is not a permutation of the instance events");
        }
        seen[e] = true;
    }
}

/// Room rule: first free room in the (capacity, id)-sorted order whose
/// capacity fits the event, i.e. the feasible room of minimal slack.
std::uint32_t pick_room(const PartialAssignment& pa, const ResolvedInstance& ri, std::uint32_t event,
                        int timeslot) {
    const auto order = ri.rooms_by_capacity();
    for (std::size_t i = ri.first_adequate_pos(ri.attendees_of(event)); i < order.size(); ++i) {
        if (pa.room_occupant(order[i], timeslot) == PartialAssignment::kNone) return order[i];
    }
    return PartialAssignment::kNone;
}

}  // namespace

ConstructionResult construct(const ResolvedInstance& ri, std::span<const std::uint32_t> arrangement) {
    check_permutation(ri, arrangement);

    PartialAssignment pa(ri);
    EvalCounter counter;

    for (std::uint32_t e = 0; e < ri.event_count(); ++e) {
        const auto& fixed = ri.fixed_of(e);
        if (!fixed) continue;
        if (!is_feasible_placement(pa, e, *fixed)) {
            throw std::logic_error("fixed events of '" + ri.data().id +
                                   "' are infeasible; validate the instance first");
        }
        pa.place(e, *fixed);
    }

    const int slot_count = ri.timeslot_count();
    double last_commit_cost = 0.0;
    bool committed_any = false;

    for (std::uint32_t e : arrangement) {
        if (ri.fixed_of(e)) continue;

        int best_t = -1;
        std::uint32_t best_room = PartialAssignment::kNone;
        double best_cost = 0.0;

        const std::uint32_t lecturer = ri.lecturer_of(e);
        for (int t = 0; t < slot_count; ++t) {
            if (pa.lecturer_occupant(lecturer, t) != PartialAssignment::kNone) continue;
            bool group_busy = false;
            for (std::uint32_t g : ri.groups_of(e)) {
                if (pa.group_occupant(g, t) != PartialAssignment::kNone) {
                    group_busy = true;
                    break;
                }
            }
            if (group_busy) continue;
            const std::uint32_t room = pick_room(pa, ri, e, t);
            if (room == PartialAssignment::kNone) continue;

            pa.place(e, Placement{t, room});
            const double c = cost(pa, &counter);
            pa.unplace(e);
            if (best_t < 0 || c < best_cost - kCostEpsilon) {
                best_t = t;
                best_room = room;
                best_cost = c;
            }
        }

        if (best_t < 0) {
            return {std::nullopt, ri.event_id(e), counter.calls};
        }
        pa.place(e, Placement{best_t, best_room});
        last_commit_cost = best_cost;
        committed_any = true;
    }

    // With every event fixed there was nothing to scan; price the fixed set
    // directly (not a scan evaluation, so the counter is left alone).
    const double total = committed_any ? last_commit_cost : cost(pa);

    Solution solution;
    solution.instance_id = ri.data().id;
    solution.assignments = pa.to_map();
    solution.cost = total;
    return {std::move(solution), "", counter.calls};
}

ConstructionResult construct(const ResolvedInstance& ri, const std::vector<std::string>& arrangement_ids) {
    std::vector<std::uint32_t> arrangement;
    arrangement.reserve(arrangement_ids.size());
    for (const auto& id : arrangement_ids) arrangement.push_back(ri.event_index(id));
    return construct(ri, arrangement);
}

}  // namespace vnstt
