#include "qmax/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qmax/errors.hpp"
#include "qmax/statevector.hpp"

namespace qmax {
namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Nearest-rank percentile on an already-sorted vector.
double percentile(const std::vector<std::uint64_t>& sorted, double pct) {
    const std::size_t n = sorted.size();
    std::size_t rank = static_cast<std::size_t>(std::ceil(pct / 100.0 * static_cast<double>(n)));
    if (rank == 0) {
        rank = 1;
    }
    return static_cast<double>(sorted[rank - 1]);
}

Aggregates aggregate(const std::vector<TrialRecord>& records) {
    Aggregates agg;
    const std::size_t n = records.size();
    std::vector<std::uint64_t> totals(n);
    std::size_t successes = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        totals[i] = records[i].total_queries;
        sum += static_cast<double>(totals[i]);
        successes += records[i].succeeded ? 1 : 0;
    }
    agg.mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const auto t : totals) {
        const double d = static_cast<double>(t) - agg.mean;
        ss += d * d;
    }
    agg.stddev = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    std::sort(totals.begin(), totals.end());
    agg.median = percentile(totals, 50.0);
    agg.p90 = percentile(totals, 90.0);
    agg.p99 = percentile(totals, 99.0);
    agg.success_rate = static_cast<double>(successes) / static_cast<double>(n);
    return agg;
}

Predictions predict(std::size_t n_items, BasePreset preset) {
    Predictions p;
    const double root_n = std::sqrt(static_cast<double>(n_items));
    p.bound_6_8 = 6.8 * root_n;
    p.budget_13_6 = 13.6 * root_n;
    if (n_items >= 2) {
        const auto params = RecurrenceParams::with_preset(n_items, n_items - 1, preset);
        p.e_exact = expected_exact(params, n_items - 1);
        p.e_bound = expected_bound(params, n_items - 1);
    }
    return p;
}

Table make_table(const ExperimentConfig& config) {
    if (!config.table_file.empty()) {
        return Table::load_file(config.table_file, config.objective);
    }
    if (config.n_items == 0) {
        throw InputError("experiment needs --n >= 1 or a table file");
    }
    RandomStream table_stream(config.master_seed);
    return Table::random_permutation(config.n_items, table_stream, config.objective);
}

} // namespace

StatsReport run_experiment(const ExperimentConfig& config) {
    if (config.trials < 1) {
        throw InputError("experiment needs at least one trial");
    }
    if (config.k_repetitions < 1) {
        throw InputError("repetition count k must be at least 1");
    }
    const Table table = make_table(config);
    const std::size_t n = table.item_count();
    const auto [best_index, comparisons] = classical_baseline(table);
    const double best_value = table.value(best_index);
    (void)comparisons;

    MaxConfig max_config;
    max_config.mode = config.mode;
    max_config.total_query_budget = config.budget_override;

    StatsReport report;
    report.config = config;
    report.records.resize(config.trials);

    const auto run_trial = [&](std::size_t index) {
        const std::uint64_t seed = derive_stream_seed(config.master_seed, index);
        RandomStream stream(seed);
        const MaxRun run = config.k_repetitions > 1
                               ? find_max_boosted(table, stream, max_config, config.k_repetitions)
                               : find_max(table, stream, max_config);
        TrialRecord& rec = report.records[index];
        rec.trial = index;
        rec.seed = seed;
        rec.n = n;
        rec.final_index = run.final_index;
        rec.succeeded = table.value(run.final_index) == best_value;
        rec.grover_queries = run.total_grover_queries;
        rec.verification_queries = run.total_verification_queries;
        rec.total_queries = run.total_queries();
        rec.rounds = run.rounds;
    };

    const unsigned jobs = std::max(1u, config.jobs);
    if (jobs == 1 || config.trials == 1) {
        for (std::size_t i = 0; i < config.trials; ++i) {
            run_trial(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const unsigned worker_count = static_cast<unsigned>(
            std::min<std::size_t>(jobs, config.trials));
        workers.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= config.trials) {
                        return;
                    }
                    run_trial(i);
                }
            });
        }
        for (auto& worker : workers) {
            worker.join();
        }
    }

    report.aggregates = aggregate(report.records);
    report.predictions = predict(n, config.base_preset);
    report.verdicts.mean_total_le_bound_6_8 = report.aggregates.mean <= report.predictions.bound_6_8;
    report.verdicts.failure_rate_lt_half = 1.0 - report.aggregates.success_rate < 0.5;
    return report;
}

std::pair<std::size_t, std::uint64_t> classical_baseline(const Table& table) {
    std::size_t best = 0;
    std::uint64_t comparisons = 0;
    for (std::size_t i = 1; i < table.item_count(); ++i) {
        ++comparisons;
        if (table.beats(i, best)) {
            best = i;
        }
    }
    return {best, comparisons};
}

std::string StatsReport::to_csv() const {
    std::ostringstream out;
    out << "trial,seed,n,final_index,succeeded,grover_queries,verification_queries,"
           "total_queries,rounds\n";
    for (const auto& r : records) {
        out << r.trial << ',' << r.seed << ',' << r.n << ',' << r.final_index << ','
            << (r.succeeded ? 1 : 0) << ',' << r.grover_queries << ',' << r.verification_queries
            << ',' << r.total_queries << ',' << r.rounds << '\n';
    }
    return out.str();
}

std::string StatsReport::to_json() const {
    nlohmann::json j;
    j["records"] = nlohmann::json::array();
    for (const auto& r : records) {
        j["records"].push_back({{"trial", r.trial},
                                {"seed", r.seed},
                                {"n", r.n},
                                {"final_index", r.final_index},
                                {"succeeded", r.succeeded},
                                {"grover_queries", r.grover_queries},
                                {"verification_queries", r.verification_queries},
                                {"total_queries", r.total_queries},
                                {"rounds", r.rounds}});
    }
    j["aggregates"] = {{"mean", aggregates.mean},           {"stddev", aggregates.stddev},
                       {"median", aggregates.median},       {"p90", aggregates.p90},
                       {"p99", aggregates.p99},             {"success_rate", aggregates.success_rate}};
    j["predictions"] = {{"bound_6_8", predictions.bound_6_8},
                        {"budget_13_6", predictions.budget_13_6},
                        {"E_exact", predictions.e_exact},
                        {"E_bound", predictions.e_bound}};
    j["verdicts"] = {{"mean_total_le_bound_6_8", verdicts.mean_total_le_bound_6_8},
                     {"failure_rate_lt_half", verdicts.failure_rate_lt_half}};
    return j.dump(2) + "\n";
}

std::string StatsReport::summary() const {
    std::ostringstream out;
    out << "trials=" << records.size() << " n=" << (records.empty() ? 0 : records.front().n)
        << " success_rate=" << format_double(aggregates.success_rate)
        << " mean_total=" << format_double(aggregates.mean)
        << " stddev=" << format_double(aggregates.stddev)
        << " median=" << format_double(aggregates.median) << " p90=" << format_double(aggregates.p90)
        << " p99=" << format_double(aggregates.p99) << '\n';
    out << "predictions: 6.8*sqrt(N)=" << format_double(predictions.bound_6_8)
        << " 13.6*sqrt(N)=" << format_double(predictions.budget_13_6)
        << " E_exact=" << format_double(predictions.e_exact)
        << " E_bound=" << format_double(predictions.e_bound) << '\n';
    out << "verdicts: mean_total<=6.8*sqrt(N): " << (verdicts.mean_total_le_bound_6_8 ? "yes" : "no")
        << "; failure_rate<1/2: " << (verdicts.failure_rate_lt_half ? "yes" : "no") << '\n';
    return out.str();
}

SweepResult verify_grover_closed_form(const std::vector<std::size_t>& space_sizes,
                                      std::uint64_t max_iterations, double tolerance,
                                      std::uint64_t seed) {
    SweepResult result;
    RandomStream rng(seed);
    for (const std::size_t n : space_sizes) {
        if (n < 2 || (n & (n - 1)) != 0) {
            throw InputError("sweep space sizes must be powers of two >= 2");
        }
        const int qubits = std::countr_zero(n);
        QuantumState state = QuantumState::uniform_superposition(qubits);
        for (std::size_t t = 1; t <= n / 2; ++t) {
            // Random t-subset via partial Fisher-Yates.
            std::vector<std::size_t> indices(n);
            for (std::size_t i = 0; i < n; ++i) {
                indices[i] = i;
            }
            std::vector<char> marked_flags(n, 0);
            for (std::size_t i = 0; i < t; ++i) {
                const std::size_t pick = i + rng.next_index(n - i);
                std::swap(indices[i], indices[pick]);
                marked_flags[indices[i]] = 1;
            }
            const auto marked = [&marked_flags](std::size_t i) { return marked_flags[i] != 0; };

            state.fill_uniform();
            QueryCounter scratch;
            for (std::uint64_t j = 0; j <= max_iterations; ++j) {
                if (j > 0) {
                    state.grover_power(marked, 1, scratch);
                }
                const double simulated = state.probability_mass(marked);
                const double closed_form = analytic_success_probability(n, t, j);
                result.max_abs_error =
                    std::max(result.max_abs_error, std::abs(simulated - closed_form));
                result.cells += 1;
            }
        }
    }
    result.within_tolerance = result.max_abs_error <= tolerance;
    return result;
}

} // namespace qmax
