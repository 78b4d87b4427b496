// vnstt: generate, solve, sweep, validate, and price course-timetabling
// instances from the command line.
//
// Exit codes: 0 success, 2 usage error, 3 input-data error,
// 4 no feasible construction, 5 validation findings.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vnstt/construct.hpp"
#include "vnstt/cost.hpp"
#include "vnstt/generate.hpp"
#include "vnstt/io.hpp"
#include "vnstt/sweep.hpp"
#include "vnstt/vns.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitSolverFailed = 4;
constexpr int kExitFindings = 5;

std::string format_cost(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

struct GenOptions {
    std::string preset;
    vnstt::GenSpec spec;
    std::string output;
};

struct SolveOptions {
    std::string instance_path;
    int k = 0;
    std::string output;
    std::string trace_path;
    bool table = false;
};

struct SweepOptions {
    std::string instance_path;
    std::vector<int> k_list;
    bool all_divisors = false;
    std::string report_path;
    std::string trace_dir;
    int jobs = 1;
};

int report_validation(const std::vector<vnstt::ValidationIssue>& issues) {
    for (const auto& issue : issues) {
        std::cout << issue.code << ": " << issue.message << "\n";
    }
    if (issues.empty()) {
        std::cout << "OK\n";
        return kExitOk;
    }
    std::cout << issues.size() << " violation(s)\n";
    return kExitFindings;
}

vnstt::Instance load_validated_instance(const std::string& path) {
    vnstt::Instance instance = vnstt::load_instance(path);
    const auto issues = vnstt::validate_instance(instance);
    if (!issues.empty()) {
        std::cerr << path << ": invalid instance\n";
        for (const auto& issue : issues) std::cerr << "  " << issue.code << ": " << issue.message << "\n";
        throw vnstt::ParseError(path + ": instance failed validation");
    }
    return instance;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
}

int cmd_gen(const GenOptions& opt) {
    vnstt::GenSpec spec = opt.spec;
    if (!opt.preset.empty()) {
        vnstt::GenSpec preset_spec = vnstt::preset(opt.preset, opt.spec.seed);
        preset_spec.days = opt.spec.days;
        preset_spec.periods_per_day = opt.spec.periods_per_day;
        preset_spec.fixed_fraction = opt.spec.fixed_fraction;
        preset_spec.unpref_fraction = opt.spec.unpref_fraction;
        spec = preset_spec;
    }
    const vnstt::Instance instance = vnstt::generate(spec);
    vnstt::save_instance(instance, opt.output);
    std::cout << instance.id << ": N=" << instance.events.size() << " G=" << instance.groups.size()
              << " L=" << instance.lecturers.size() << " R=" << instance.rooms.size()
              << " T=" << instance.calendar.timeslot_count() << " -> " << opt.output << "\n";
    return kExitOk;
}

void print_table(const vnstt::VnsRun& run) {
    // One block per structure: leading-event row over cost row.
    int structure = 0;
    std::string ids, costs;
    auto flush = [&] {
        if (structure == 0) return;
        std::cout << "NS" << structure << "\n  #" << ids << "\n  C" << costs << "\n";
        ids.clear();
        costs.clear();
    };
    for (const auto& rec : run.trace) {
        if (rec.structure_index != structure) {
            flush();
            structure = rec.structure_index;
        }
        ids += "\t" + rec.leading_event;
        costs += "\t" + (rec.cost ? format_cost(*rec.cost) : std::string("-"));
    }
    flush();
}

int cmd_solve(const SolveOptions& opt) {
    const vnstt::Instance instance = load_validated_instance(opt.instance_path);
    const vnstt::ResolvedInstance resolved(instance);

    vnstt::VnsRun run;
    try {
        run = vnstt::solve_vns(resolved, opt.k);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid k: " << e.what() << "\n";
        return kExitUsage;
    }

    if (!opt.trace_path.empty()) {
        std::ostringstream csv;
        vnstt::write_trace_csv(csv, run);
        write_text_file(opt.trace_path, csv.str());
    }
    if (opt.table) print_table(run);

    std::cout << "instance " << run.instance_id << "  N=" << resolved.event_count()
              << " k=" << run.k << "\n";
    std::cout << "construct_calls " << run.construct_calls << "  cost_evaluations "
              << run.cost_evaluations << "  elapsed_ms " << format_cost(run.elapsed_ms) << "\n";

    if (!run.success()) {
        const bool any_success = std::any_of(run.trace.begin(), run.trace.end(),
                                             [](const auto& r) { return r.cost.has_value(); });
        std::cerr << (any_success ? "FINAL_CONSTRUCTION_FAILED" : "ALL_CONSTRUCTIONS_FAILED")
                  << ": no feasible construction for the final arrangement\n";
        return kExitSolverFailed;
    }
    vnstt::save_solution(*run.final_solution, opt.output);
    std::cout << "final cost " << format_cost(run.final_solution->cost) << " -> " << opt.output << "\n";
    return kExitOk;
}

int cmd_sweep(const SweepOptions& opt) {
    const vnstt::Instance instance = load_validated_instance(opt.instance_path);
    const vnstt::ResolvedInstance resolved(instance);

    std::vector<int> ks = opt.k_list;
    if (opt.all_divisors) {
        ks = vnstt::divisor_ks(resolved.event_count());
        if (ks.empty()) {
            std::cerr << "no divisor k with 2 <= k <= N/2 exists for N = " << resolved.event_count()
                      << "\n";
            return kExitUsage;
        }
    }

    vnstt::SweepResult result;
    try {
        result = vnstt::run_sweep(resolved, ks, opt.jobs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid k: " << e.what() << "\n";
        return kExitUsage;
    }

    {
        std::ostringstream csv;
        vnstt::write_sweep_csv(csv, result.report);
        write_text_file(opt.report_path, csv.str());
    }
    if (!opt.trace_dir.empty()) {
        std::filesystem::create_directories(opt.trace_dir);
        for (const auto& run : result.runs) {
            std::ostringstream csv;
            vnstt::write_trace_csv(csv, run);
            write_text_file(std::filesystem::path(opt.trace_dir) / ("k" + std::to_string(run.k) + ".csv"),
                            csv.str());
        }
    }

    std::cout << "instance " << result.report.instance_id << "  N=" << resolved.event_count() << "\n";
    std::cout << "k\tbest_cost\tconstruct_calls\tcost_evaluations\telapsed_ms\n";
    for (const auto& row : result.report.rows) {
        std::cout << row.k << '\t' << (row.success ? format_cost(row.best_cost) : "-") << '\t'
                  << row.construct_calls << '\t' << row.cost_evaluations << '\t'
                  << format_cost(row.elapsed_ms) << "\n";
    }
    if (!result.report.argmin_k) {
        std::cerr << "no k produced a solution\n";
        return kExitSolverFailed;
    }

    const int k = *result.report.argmin_k;
    const std::uint32_t n = resolved.event_count();
    const auto partition = vnstt::partition_events(resolved, k);
    const std::size_t largest = partition.structures.front().size();
    std::cout << "arg-min k = " << k << " (structure size " << largest << "/" << n << " = "
              << format_cost(100.0 * static_cast<double>(largest) / n) << "% of events)\n";
    std::cout << "report -> " << opt.report_path << "\n";
    return kExitOk;
}

int cmd_validate(const std::string& path) {
    const vnstt::Instance instance = vnstt::load_instance(path);
    return report_validation(vnstt::validate_instance(instance));
}

int cmd_cost(const std::string& instance_path, const std::string& solution_path) {
    const vnstt::Instance instance = load_validated_instance(instance_path);
    const vnstt::ResolvedInstance resolved(instance);
    const vnstt::Solution solution = vnstt::load_solution(solution_path, resolved);

    const auto violations = vnstt::hard_violations(resolved, solution.assignments,
                                                   /*require_complete=*/true);
    std::cout << "cost " << format_cost(solution.cost) << "\n";
    for (const auto& v : violations) {
        std::cout << vnstt::to_string(v.kind);
        if (!v.entity.empty()) std::cout << " " << v.entity;
        if (v.timeslot >= 0) std::cout << " @t" << v.timeslot;
        std::cout << ":";
        for (const auto& id : v.events) std::cout << " " << id;
        std::cout << "\n";
    }
    if (violations.empty()) {
        std::cout << "feasible\n";
        return kExitOk;
    }
    std::cout << violations.size() << " hard violation(s)\n";
    return kExitFindings;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Course timetabling by neighborhood-structure rotation"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic instance");
    gen_cmd->add_option("--preset", gen.preset, "Named shape: N18, N90, or N130");
    gen_cmd->add_option("--events", gen.spec.events, "Event count");
    gen_cmd->add_option("--students", gen.spec.students, "Total students");
    gen_cmd->add_option("--groups", gen.spec.groups, "Student group count");
    gen_cmd->add_option("--lecturers", gen.spec.lecturers, "Lecturer count");
    gen_cmd->add_option("--rooms", gen.spec.rooms, "Room count");
    gen_cmd->add_option("--days", gen.spec.days, "Days per week")->capture_default_str();
    gen_cmd->add_option("--periods", gen.spec.periods_per_day, "Periods per day")->capture_default_str();
    gen_cmd->add_option("--seed", gen.spec.seed, "Generator seed")->capture_default_str();
    gen_cmd->add_option("--fixed-fraction", gen.spec.fixed_fraction, "Share of pre-fixed events")
        ->capture_default_str();
    gen_cmd->add_option("--unpref-fraction", gen.spec.unpref_fraction,
                        "Share of unpreferred timeslots per event")
        ->capture_default_str();
    gen_cmd->add_option("-o,--output", gen.output, "Instance file to write")->required();

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance for one k");
    solve_cmd->add_option("-i,--instance", solve.instance_path, "Instance file")->required();
    solve_cmd->add_option("-k", solve.k, "Neighborhood structure count")->required();
    solve_cmd->add_option("-o,--output", solve.output, "Solution file to write")->required();
    solve_cmd->add_option("--trace", solve.trace_path, "Trace CSV to write");
    solve_cmd->add_flag("--table", solve.table, "Print the per-structure rotation table");

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Solve the same instance for several k");
    sweep_cmd->add_option("-i,--instance", sweep.instance_path, "Instance file")->required();
    auto* klist_opt =
        sweep_cmd->add_option("--k-list", sweep.k_list, "Comma-separated k values")->delimiter(',');
    auto* kdiv_opt = sweep_cmd->add_flag("--k-all-divisors", sweep.all_divisors,
                                         "Use every divisor of N in [2, N/2]");
    klist_opt->excludes(kdiv_opt);
    sweep_cmd->add_option("--report", sweep.report_path, "Report CSV to write")->required();
    sweep_cmd->add_option("--trace", sweep.trace_dir, "Directory for per-k trace CSVs");
    sweep_cmd->add_option("--jobs", sweep.jobs, "Concurrent solver runs")->capture_default_str();

    std::string validate_path;
    auto* validate_cmd = app.add_subcommand("validate", "Check an instance file");
    validate_cmd->add_option("-i,--instance", validate_path, "Instance file")->required();

    std::string cost_instance, cost_solution;
    auto* cost_cmd = app.add_subcommand("cost", "Re-price and feasibility-check a solution file");
    cost_cmd->add_option("-i,--instance", cost_instance, "Instance file")->required();
    cost_cmd->add_option("-s,--solution", cost_solution, "Solution file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) {
            if (gen.preset.empty() && gen.spec.events == 0) {
                std::cerr << "gen needs --preset or explicit --events/--students/--groups/"
                             "--lecturers/--rooms\n";
                return kExitUsage;
            }
            return cmd_gen(gen);
        }
        if (solve_cmd->parsed()) return cmd_solve(solve);
        if (sweep_cmd->parsed()) {
            if (!sweep.all_divisors && sweep.k_list.empty()) {
                std::cerr << "sweep needs --k-list or --k-all-divisors\n";
                return kExitUsage;
            }
            return cmd_sweep(sweep);
        }
        if (validate_cmd->parsed()) return cmd_validate(validate_path);
        if (cost_cmd->parsed()) return cmd_cost(cost_instance, cost_solution);
    } catch (const vnstt::UnsatisfiableSpec& e) {
        std::cerr << "UNSATISFIABLE_SPEC: " << e.what() << "\n";
        return kExitData;
    } catch (const vnstt::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
