#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "test_support.hpp"
#include "vnstt/io.hpp"

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

CommandResult run_cli(const testsupport::TempDir& tmp, const std::string& args) {
    const auto log = tmp.path("cmd.log");
    const std::string command =
        std::string(VNSTT_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(command.c_str());
    CommandResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(log);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    return result;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace

TEST_CASE("gen writes byte-identical files for identical flags") {
    testsupport::TempDir tmp("cli-gen");
    const std::string a = "gen --preset N18 --seed 7 -o " + tmp.path("a.json").string();
    const std::string b = "gen --preset N18 --seed 7 -o " + tmp.path("b.json").string();
    CHECK(run_cli(tmp, a).exit_code == 0);
    CHECK(run_cli(tmp, b).exit_code == 0);
    const std::string bytes = read_file(tmp.path("a.json"));
    CHECK(bytes == read_file(tmp.path("b.json")));
    CHECK(bytes.find("\"id\": \"N18-s7\"") != std::string::npos);

    const vnstt::Instance inst = vnstt::load_instance(tmp.path("a.json"));
    CHECK(inst.events.size() == 18);
}

TEST_CASE("gen rejects unknown presets naming the valid ones") {
    testsupport::TempDir tmp("cli-genbad");
    const auto res = run_cli(tmp, "gen --preset BAD -o " + tmp.path("x.json").string());
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("N18") != std::string::npos);
    CHECK(res.output.find("N90") != std::string::npos);
    CHECK(res.output.find("N130") != std::string::npos);
}

TEST_CASE("solve writes the solution and a trace with one row per pass") {
    testsupport::TempDir tmp("cli-solve");
    REQUIRE(run_cli(tmp, "gen --preset N18 --seed 7 -o " + tmp.path("n18.json").string()).exit_code ==
            0);
    const auto res = run_cli(tmp, "solve -i " + tmp.path("n18.json").string() + " -k 2 -o " +
                                      tmp.path("sol.json").string() + " --trace " +
                                      tmp.path("trace.csv").string());
    CHECK(res.exit_code == 0);

    const std::string trace = read_file(tmp.path("trace.csv"));
    CHECK(count_lines(trace) == 1 + 18 + 1);  // header, 9+9 rotations, final
    CHECK(trace.find("2,final,0,") != std::string::npos);

    const auto cost = run_cli(tmp, "cost -i " + tmp.path("n18.json").string() + " -s " +
                                       tmp.path("sol.json").string());
    CHECK(cost.exit_code == 0);
    CHECK(cost.output.find("feasible") != std::string::npos);
}

TEST_CASE("solve rejects k below 2 citing the bound") {
    testsupport::TempDir tmp("cli-k1");
    REQUIRE(run_cli(tmp, "gen --preset N18 --seed 7 -o " + tmp.path("n18.json").string()).exit_code ==
            0);
    const auto res = run_cli(tmp, "solve -i " + tmp.path("n18.json").string() + " -k 1 -o " +
                                      tmp.path("sol.json").string());
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("2 <= k") != std::string::npos);
}

TEST_CASE("an unsatisfiable instance exits 4 with a trace but no solution") {
    testsupport::TempDir tmp("cli-unsat");
    // Four events, two per lecturer, one timeslot: nothing after the first
    // two can ever be placed.
    const std::string instance = R"({
      "id": "unsat",
      "calendar": {"days": 1, "periods_per_day": 1},
      "rooms": [{"id": "r1", "capacity": 10}, {"id": "r2", "capacity": 10},
                 {"id": "r3", "capacity": 10}, {"id": "r4", "capacity": 10}],
      "lecturers": [{"id": "l1"}, {"id": "l2"}],
      "groups": [{"id": "g1", "size": 5}, {"id": "g2", "size": 5},
                  {"id": "g3", "size": 5}, {"id": "g4", "size": 5}],
      "events": [
        {"id": "e1", "lecturer": "l1", "groups": ["g1"]},
        {"id": "e2", "lecturer": "l2", "groups": ["g2"]},
        {"id": "e3", "lecturer": "l1", "groups": ["g3"]},
        {"id": "e4", "lecturer": "l2", "groups": ["g4"]}
      ]
    })";
    {
        std::ofstream out(tmp.path("unsat.json"));
        out << instance;
    }
    const auto res = run_cli(tmp, "solve -i " + tmp.path("unsat.json").string() + " -k 2 -o " +
                                      tmp.path("sol.json").string() + " --trace " +
                                      tmp.path("trace.csv").string());
    CHECK(res.exit_code == 4);
    CHECK(res.output.find("ALL_CONSTRUCTIONS_FAILED") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(tmp.path("sol.json")));
    CHECK(std::filesystem::exists(tmp.path("trace.csv")));
    CHECK(read_file(tmp.path("trace.csv")).find(",,false") != std::string::npos);
}

TEST_CASE("validate flags violations with exit 5 and clean files with OK") {
    testsupport::TempDir tmp("cli-validate");
    REQUIRE(run_cli(tmp, "gen --preset N18 --seed 9 -o " + tmp.path("ok.json").string()).exit_code ==
            0);
    const auto ok = run_cli(tmp, "validate -i " + tmp.path("ok.json").string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("OK") != std::string::npos);

    std::string broken = read_file(tmp.path("ok.json"));
    broken.replace(broken.find("\"days\": 5"), 9, "\"days\": 0");
    {
        std::ofstream out(tmp.path("broken.json"));
        out << broken;
    }
    const auto bad = run_cli(tmp, "validate -i " + tmp.path("broken.json").string());
    CHECK(bad.exit_code == 5);

    const auto missing = run_cli(tmp, "validate -i " + tmp.path("nope.json").string());
    CHECK(missing.exit_code == 3);
}

TEST_CASE("cost reports hard violations with exit 5") {
    testsupport::TempDir tmp("cli-cost");
    const std::string instance = R"({
      "id": "clash",
      "calendar": {"days": 1, "periods_per_day": 2},
      "rooms": [{"id": "r1", "capacity": 10}, {"id": "r2", "capacity": 10}],
      "lecturers": [{"id": "l1"}],
      "groups": [{"id": "g1", "size": 5}, {"id": "g2", "size": 5}],
      "events": [
        {"id": "e1", "lecturer": "l1", "groups": ["g1"]},
        {"id": "e2", "lecturer": "l1", "groups": ["g2"]}
      ]
    })";
    // Both events at t0 under the same lecturer; cost of each: slack
    // 0.5 * 5/10 = 0.25.
    const std::string solution = R"({
      "instance_id": "clash",
      "cost": 0.5,
      "assignments": [
        {"event": "e1", "timeslot": 0, "room": "r1"},
        {"event": "e2", "timeslot": 0, "room": "r2"}
      ]
    })";
    {
        std::ofstream a(tmp.path("clash.json"));
        a << instance;
        std::ofstream b(tmp.path("sol.json"));
        b << solution;
    }
    const auto res = run_cli(tmp, "cost -i " + tmp.path("clash.json").string() + " -s " +
                                      tmp.path("sol.json").string());
    CHECK(res.exit_code == 5);
    CHECK(res.output.find("LECTURER_CLASH") != std::string::npos);

    // A stored cost off by 0.5 is an input-data error, not a finding.
    std::string wrong = solution;
    wrong.replace(wrong.find("0.5"), 3, "1.0");
    {
        std::ofstream out(tmp.path("wrong.json"));
        out << wrong;
    }
    const auto mismatch = run_cli(tmp, "cost -i " + tmp.path("clash.json").string() + " -s " +
                                           tmp.path("wrong.json").string());
    CHECK(mismatch.exit_code == 3);
}

TEST_CASE("sweep reports are byte-identical across job counts") {
    testsupport::TempDir tmp("cli-sweep");
    REQUIRE(run_cli(tmp, "gen --preset N18 --seed 5 -o " + tmp.path("n18.json").string()).exit_code ==
            0);

    const auto seq = run_cli(tmp, "sweep -i " + tmp.path("n18.json").string() +
                                      " --k-all-divisors --report " + tmp.path("r1.csv").string() +
                                      " --trace " + tmp.path("t1").string() + " --jobs 1");
    const auto par = run_cli(tmp, "sweep -i " + tmp.path("n18.json").string() +
                                      " --k-all-divisors --report " + tmp.path("r2.csv").string() +
                                      " --trace " + tmp.path("t2").string() + " --jobs 4");
    CHECK(seq.exit_code == 0);
    CHECK(par.exit_code == 0);
    CHECK(seq.output.find("arg-min k = ") != std::string::npos);

    CHECK(read_file(tmp.path("r1.csv")) == read_file(tmp.path("r2.csv")));
    for (int k : {2, 3, 6, 9}) {
        const std::string name = "k" + std::to_string(k) + ".csv";
        const std::string bytes = read_file(tmp.path("t1").string() + "/" + name);
        CHECK(!bytes.empty());
        CHECK(bytes == read_file(tmp.path("t2").string() + "/" + name));
    }

    const auto bad = run_cli(tmp, "sweep -i " + tmp.path("n18.json").string() +
                                      " --k-list 2,64 --report " + tmp.path("r3.csv").string());
    CHECK(bad.exit_code == 2);
}
