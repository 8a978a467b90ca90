#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qmax/analysis.hpp"
#include "qmax/maxfind.hpp"
#include "qmax/oracle.hpp"

namespace qmax {

enum class OutputFormat {
    csv,
    json,
};

struct ExperimentConfig {
    std::size_t n_items = 0;    // used when table_file is empty
    std::string table_file;     // empty -> generated permutation table
    std::size_t trials = 1;
    std::uint64_t master_seed = 0;
    TerminationMode mode = TerminationMode::budgeted;
    int k_repetitions = 1;
    BasePreset base_preset = BasePreset::pi4;
    OutputFormat format = OutputFormat::csv;
    unsigned jobs = 1;
    std::uint64_t budget_override = 0; // 0 -> ceil(13.6*sqrt(N)) per repetition
    Objective objective = Objective::maximize;
};

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t final_index = 0;
    bool succeeded = false;
    std::uint64_t grover_queries = 0;
    std::uint64_t verification_queries = 0;
    std::uint64_t total_queries = 0;
    std::uint64_t rounds = 0;
};

// Aggregates over total_queries, recomputable from the per-trial records.
// Percentiles use the nearest-rank rule on the sorted totals.
struct Aggregates {
    double mean = 0.0;
    double stddev = 0.0; // sample standard deviation
    double median = 0.0;
    double p90 = 0.0;
    double p99 = 0.0;
    double success_rate = 0.0;
};

struct Predictions {
    double bound_6_8 = 0.0;   // 6.8*sqrt(N)
    double budget_13_6 = 0.0; // 13.6*sqrt(N)
    double e_exact = 0.0;     // E(N, N-1), chosen base preset
    double e_bound = 0.0;     // bound at t = N-1, chosen base preset
};

struct Verdicts {
    bool mean_total_le_bound_6_8 = false;
    bool failure_rate_lt_half = false;
};

struct StatsReport {
    ExperimentConfig config;
    std::vector<TrialRecord> records;
    Aggregates aggregates;
    Predictions predictions;
    Verdicts verdicts;

    std::string to_csv() const;  // records only, plot-ready
    std::string to_json() const; // records + aggregates + predictions + verdicts
    std::string summary() const; // short human-readable digest
};

// Runs `trials` independent maximum-finding runs (boosted when k_repetitions
// > 1) on per-trial derived streams, judges success against the classical
// argmax, and aggregates. Trials run concurrently up to config.jobs; the
// reduction is ordered by trial index, so output is identical for any jobs.
StatsReport run_experiment(const ExperimentConfig& config);

// Single left-to-right scan: returns (best index, comparisons); comparisons
// is exactly item_count - 1.
std::pair<std::size_t, std::uint64_t> classical_baseline(const Table& table);

struct SweepResult {
    double max_abs_error = 0.0;
    std::size_t cells = 0;
    bool within_tolerance = false;
};

// Simulator-vs-closed-form sweep: for every space size in `space_sizes`
// (powers of two), every marked count t in [1, N/2] and every iteration count
// j in [0, max_iterations], compares the simulated marked-probability mass
// against the closed form. Marked sets are random t-subsets drawn from
// `seed`.
SweepResult verify_grover_closed_form(const std::vector<std::size_t>& space_sizes,
                                      std::uint64_t max_iterations, double tolerance,
                                      std::uint64_t seed);

} // namespace qmax
