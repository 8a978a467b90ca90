#pragma once

#include <cstdint>
#include <vector>

#include "qmax/oracle.hpp"
#include "qmax/rng.hpp"
#include "qmax/search.hpp"

namespace qmax {

// budgeted: run search rounds until the grover-query budget is spent, then
// return the current guess (the algorithm as executed for real: no way to
// certify t = 0 from queries alone).
// oracle_terminated: experiments only. Stop as soon as the classical marked
// set is empty, so completion cost can be measured without truncation bias.
// Ground truth steers nothing, it only decides when to stop counting.
enum class TerminationMode {
    budgeted,
    oracle_terminated,
};

struct MaxConfig {
    std::uint64_t total_query_budget = 0; // grover queries; 0 -> ceil(13.6*sqrt(n_items))
    SearchLimits limits{};
    TerminationMode mode = TerminationMode::budgeted;

    static std::uint64_t default_budget(std::size_t n_items);
    std::uint64_t resolved_budget(std::size_t n_items) const;
};

struct RoundRecord {
    std::uint64_t grover_queries = 0;
    std::uint64_t verification_queries = 0;
    bool accepted = false;

    bool operator==(const RoundRecord&) const = default;
};

// Full trace of one maximum-finding run.
struct MaxRun {
    std::size_t final_index = 0;
    std::vector<std::size_t> guess_trace; // accepted guesses, initial first
    std::uint64_t total_grover_queries = 0;
    std::uint64_t total_verification_queries = 0;
    std::uint64_t rounds = 0;
    bool succeeded = false; // judged by the harness against ground truth
    std::vector<RoundRecord> round_log;

    std::uint64_t total_queries() const { return total_grover_queries + total_verification_queries; }

    bool operator==(const MaxRun&) const = default;
};

// Top-level loop: draw a random initial guess, repeatedly search for a better
// element, accept each verified hit as the new guess, stop per `config.mode`.
MaxRun find_max(const Table& table, RandomStream& rng, const MaxConfig& config);

// Runs find_max k times on the same stream, each with the budgeted default,
// and keeps the run whose final value wins; counters and rounds are summed
// over all repetitions. Failure probability decays as (1/2)^k.
MaxRun find_max_boosted(const Table& table, RandomStream& rng, const MaxConfig& config, int k);

} // namespace qmax
