#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "vnstt/generate.hpp"
#include "vnstt/model.hpp"

using namespace vnstt;

namespace {

bool has_code(const std::vector<ValidationIssue>& issues, const std::string& code) {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const ValidationIssue& v) { return v.code == code; });
}

}  // namespace

TEST_CASE("calendar flattens timeslots day-major") {
    Calendar cal{5, 8};
    CHECK(cal.timeslot_count() == 40);
    CHECK(cal.day_of(0) == 0);
    CHECK(cal.period_of(0) == 0);
    CHECK(cal.day_of(17) == 2);
    CHECK(cal.period_of(17) == 1);
    CHECK(cal.day_of(39) == 4);
    CHECK(cal.period_of(39) == 7);
}

TEST_CASE("generated preset instance validates cleanly") {
    const Instance inst = generate(preset("N18", 7));
    CHECK(validate_instance(inst).empty());
}

TEST_CASE("unknown room in a fixed placement is flagged") {
    Instance inst = testsupport::independent_events(2, 1, 4);
    inst.events[0].fixed = FixedPlacement{1, "no-such-room"};
    const auto issues = validate_instance(inst);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].code == "UNKNOWN_ROOM");
}

TEST_CASE("fixed events sharing a lecturer and timeslot are flagged") {
    Instance inst = testsupport::independent_events(2, 1, 4);
    inst.rooms.push_back({"r2", 30});
    inst.events[1].lecturer = inst.events[0].lecturer;
    inst.events[0].fixed = FixedPlacement{2, "r1"};
    inst.events[1].fixed = FixedPlacement{2, "r2"};
    const auto issues = validate_instance(inst);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].code == "FIXED_CONFLICT");
}

TEST_CASE("structural defects each produce their code") {
    Instance inst = testsupport::independent_events(2, 1, 4);

    SUBCASE("unknown lecturer") {
        inst.events[1].lecturer = "ghost";
        CHECK(has_code(validate_instance(inst), "UNKNOWN_LECTURER"));
    }
    SUBCASE("unknown group") {
        inst.events[1].groups = {"ghost"};
        CHECK(has_code(validate_instance(inst), "UNKNOWN_GROUP"));
    }
    SUBCASE("empty group list") {
        inst.events[1].groups.clear();
        CHECK(has_code(validate_instance(inst), "EMPTY_GROUPS"));
    }
    SUBCASE("duplicate event id") {
        inst.events[1].id = inst.events[0].id;
        CHECK(has_code(validate_instance(inst), "DUPLICATE_ID"));
    }
    SUBCASE("fixed timeslot out of range") {
        inst.events[0].fixed = FixedPlacement{4, "r1"};
        CHECK(has_code(validate_instance(inst), "TIMESLOT_RANGE"));
    }
    SUBCASE("unpreferred timeslot out of range") {
        inst.events[0].unpreferred_timeslots = {-1};
        CHECK(has_code(validate_instance(inst), "TIMESLOT_RANGE"));
    }
    SUBCASE("fixed event overflowing its room") {
        inst.groups[0].size = 99;
        inst.events[0].fixed = FixedPlacement{0, "r1"};
        CHECK(has_code(validate_instance(inst), "FIXED_CAPACITY"));
    }
    SUBCASE("no events") {
        inst.events.clear();
        CHECK(has_code(validate_instance(inst), "NO_EVENTS"));
    }
    SUBCASE("bad calendar") {
        inst.calendar.days = 0;
        CHECK(has_code(validate_instance(inst), "BAD_CALENDAR"));
    }
    SUBCASE("negative weight") {
        inst.weights.w_slack = -0.5;
        CHECK(has_code(validate_instance(inst), "NEGATIVE_WEIGHT"));
    }
}

TEST_CASE("validation is pure") {
    Instance inst = testsupport::independent_events(3, 1, 2);
    inst.events[0].fixed = FixedPlacement{1, "nowhere"};
    CHECK(validate_instance(inst) == validate_instance(inst));
}

TEST_CASE("attendees sums the event's group sizes") {
    Instance inst = testsupport::independent_events(2, 1, 4);
    inst.groups[0].size = 12;
    inst.groups[1].size = 8;
    inst.events[0].groups = {"g1", "g2"};
    CHECK(attendees(inst, inst.events[0]) == 20);
    CHECK(attendees(inst, inst.events[1]) == 8);
}
