// Experiment runner for the quantum maximum-finding simulator: seeded trial
// ensembles, recurrence tables, simulator-vs-closed-form sweeps and the
// classical baseline, emitting CSV or JSON.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmax/analysis.hpp"
#include "qmax/errors.hpp"
#include "qmax/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitInvariantError = 3;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw qmax::InputError("cannot open output file: " + path);
    }
    out << content;
}

struct CommonOptions {
    std::size_t n = 0;
    std::string table_path;
    std::string gen = "permutation";
    std::uint64_t seed = 0;
    std::string objective = "max";

    qmax::Objective parsed_objective() const {
        return objective == "min" ? qmax::Objective::minimize : qmax::Objective::maximize;
    }
};

void add_table_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--n", opts.n, "number of items in the generated table");
    cmd->add_option("--table", opts.table_path, "table file: one numeric value per line");
    cmd->add_option("--gen", opts.gen, "generator for --n tables")
        ->check(CLI::IsMember({"permutation"}));
    cmd->add_option("--seed", opts.seed, "master seed");
    cmd->add_option("--objective", opts.objective, "optimize for the maximum or the minimum")
        ->check(CLI::IsMember({"max", "min"}));
}

int run_simulate(const CommonOptions& common, std::size_t trials, const std::string& mode,
                 int k, const std::string& base, const std::string& out_path,
                 const std::string& format, unsigned jobs, std::uint64_t budget) {
    qmax::ExperimentConfig config;
    config.n_items = common.n;
    config.table_file = common.table_path;
    config.trials = trials;
    config.master_seed = common.seed;
    config.mode = mode == "oracle" ? qmax::TerminationMode::oracle_terminated
                                   : qmax::TerminationMode::budgeted;
    config.k_repetitions = k;
    config.base_preset = base == "six" ? qmax::BasePreset::six : qmax::BasePreset::pi4;
    config.format = format == "json" ? qmax::OutputFormat::json : qmax::OutputFormat::csv;
    config.jobs = jobs;
    config.budget_override = budget;
    config.objective = common.parsed_objective();

    const qmax::StatsReport report = qmax::run_experiment(config);
    write_output(out_path,
                 config.format == qmax::OutputFormat::json ? report.to_json() : report.to_csv());
    std::cerr << report.summary();
    return kExitOk;
}

int run_analyze(const std::vector<std::size_t>& sizes, const std::string& base,
                const std::string& out_path) {
    const qmax::BasePreset preset =
        base == "six" ? qmax::BasePreset::six : qmax::BasePreset::pi4;
    std::ostringstream out;
    qmax::write_recurrence_csv_header(out);
    for (const std::size_t n : sizes) {
        if (n < 2) {
            throw qmax::InputError("recurrence table needs N >= 2");
        }
        const auto params = qmax::RecurrenceParams::with_preset(n, n - 1, preset);
        qmax::write_recurrence_csv_rows(out, n, qmax::base_preset_name(preset),
                                        qmax::recurrence_table(params));
    }
    write_output(out_path, out.str());
    return kExitOk;
}

int run_verify(const std::vector<std::size_t>& sizes, std::uint64_t max_iterations,
               double tolerance, std::uint64_t seed) {
    const auto sweep = qmax::verify_grover_closed_form(sizes, max_iterations, tolerance, seed);
    std::printf("cells=%zu max_abs_error=%.3e tolerance=%.1e -> %s\n", sweep.cells,
                sweep.max_abs_error, tolerance, sweep.within_tolerance ? "ok" : "FAIL");
    return sweep.within_tolerance ? kExitOk : kExitInvariantError;
}

int run_baseline(const CommonOptions& common) {
    qmax::Table table = [&] {
        if (!common.table_path.empty()) {
            return qmax::Table::load_file(common.table_path, common.parsed_objective());
        }
        if (common.n == 0) {
            throw qmax::InputError("baseline needs --n >= 1 or a table file");
        }
        qmax::RandomStream stream(common.seed);
        return qmax::Table::random_permutation(common.n, stream, common.parsed_objective());
    }();
    const auto [index, comparisons] = qmax::classical_baseline(table);
    std::printf("index=%zu value=%.12g comparisons=%llu\n", index, table.value(index),
                static_cast<unsigned long long>(comparisons));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"statevector simulator and analysis toolkit for quantum maximum finding"};
    app.require_subcommand(1);

    CommonOptions common;
    std::size_t trials = 1;
    std::string mode = "budgeted";
    int k = 1;
    std::string base = "pi4";
    std::string out_path;
    std::string format = "csv";
    unsigned jobs = 1;
    std::uint64_t budget = 0;

    auto* simulate = app.add_subcommand("simulate", "run a seeded trial ensemble");
    add_table_options(simulate, common);
    simulate->add_option("--trials", trials, "number of independent trials");
    simulate->add_option("--mode", mode, "termination mode")
        ->check(CLI::IsMember({"budgeted", "oracle"}));
    simulate->add_option("--k", k, "repetitions per trial (keep the best result)");
    simulate->add_option("--base", base, "base preset for predicted expectations")
        ->check(CLI::IsMember({"six", "pi4"}));
    simulate->add_option("--out", out_path, "output path (default stdout)");
    simulate->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    simulate->add_option("--jobs", jobs, "concurrent trial workers");
    simulate->add_option("--budget", budget, "grover-query budget override per repetition");

    std::vector<std::size_t> analyze_sizes;
    std::string analyze_base = "pi4";
    std::string analyze_out;
    auto* analyze = app.add_subcommand("analyze", "emit the expectation recurrence table as CSV");
    analyze->add_option("--n", analyze_sizes, "table sizes N (repeatable)")->required();
    analyze->add_option("--base", analyze_base, "base preset for E(N,1)")
        ->check(CLI::IsMember({"six", "pi4"}));
    analyze->add_option("--out", analyze_out, "output path (default stdout)");

    std::vector<std::size_t> verify_sizes{4, 8, 16, 32};
    std::uint64_t verify_iterations = 10;
    double verify_tolerance = 1e-9;
    std::uint64_t verify_seed = 7;
    auto* verify =
        app.add_subcommand("verify", "sweep the simulator against the closed-form success law");
    verify->add_option("--n", verify_sizes, "space sizes to sweep (powers of two)");
    verify->add_option("--max-iterations", verify_iterations, "largest iteration count per cell");
    verify->add_option("--tolerance", verify_tolerance, "acceptance tolerance");
    verify->add_option("--seed", verify_seed, "seed for the random marked sets");

    auto* baseline = app.add_subcommand("baseline", "classical left-to-right scan");
    CommonOptions baseline_common;
    add_table_options(baseline, baseline_common);

    try {
        app.parse(argc, argv);
        if (simulate->parsed()) {
            return run_simulate(common, trials, mode, k, base, out_path, format, jobs, budget);
        }
        if (analyze->parsed()) {
            return run_analyze(analyze_sizes, analyze_base, analyze_out);
        }
        if (verify->parsed()) {
            return run_verify(verify_sizes, verify_iterations, verify_tolerance, verify_seed);
        }
        return run_baseline(baseline_common);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    } catch (const qmax::InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitInvariantError;
    } catch (const qmax::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}
