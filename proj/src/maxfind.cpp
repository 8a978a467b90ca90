#include "qmax/maxfind.hpp"

#include <cmath>

#include "qmax/errors.hpp"

namespace qmax {

std::uint64_t MaxConfig::default_budget(std::size_t n_items) {
    return static_cast<std::uint64_t>(std::ceil(13.6 * std::sqrt(static_cast<double>(n_items))));
}

std::uint64_t MaxConfig::resolved_budget(std::size_t n_items) const {
    return total_query_budget > 0 ? total_query_budget : default_budget(n_items);
}

MaxRun find_max(const Table& table, RandomStream& rng, const MaxConfig& config) {
    const std::size_t items = table.item_count();

    MaxRun run;
    std::size_t guess = rng.next_index(items);
    run.guess_trace.push_back(guess);
    run.final_index = guess;
    if (items == 1) {
        return run;
    }

    const std::uint64_t budget = config.resolved_budget(items);
    const SearchLimits limits = config.limits.resolved_for(table);
    QueryCounter counter;
    for (;;) {
        if (config.mode == TerminationMode::oracle_terminated) {
            if (marked_count(table, guess) == 0) {
                break;
            }
        } else if (counter.grover_queries >= budget) {
            break;
        }
        const SearchResult round = search_above(table, guess, rng, limits, counter);
        run.round_log.push_back(
            {round.grover_queries_spent, round.verification_queries_spent, round.found.has_value()});
        run.rounds += 1;
        run.total_grover_queries += round.grover_queries_spent;
        run.total_verification_queries += round.verification_queries_spent;
        if (round.found) {
            guess = *round.found;
            run.guess_trace.push_back(guess);
        }
    }
    run.final_index = guess;
    return run;
}

MaxRun find_max_boosted(const Table& table, RandomStream& rng, const MaxConfig& config, int k) {
    if (k < 1) {
        throw InputError("repetition count k must be at least 1");
    }
    MaxConfig repetition_config = config;
    repetition_config.mode = TerminationMode::budgeted;
    repetition_config.total_query_budget = config.resolved_budget(table.item_count());

    MaxRun best;
    std::uint64_t grover = 0;
    std::uint64_t verification = 0;
    std::uint64_t rounds = 0;
    std::vector<RoundRecord> log;
    for (int rep = 0; rep < k; ++rep) {
        MaxRun run = find_max(table, rng, repetition_config);
        grover += run.total_grover_queries;
        verification += run.total_verification_queries;
        rounds += run.rounds;
        log.insert(log.end(), run.round_log.begin(), run.round_log.end());
        if (rep == 0 || table.beats(run.final_index, best.final_index)) {
            best = std::move(run);
        }
    }
    best.total_grover_queries = grover;
    best.total_verification_queries = verification;
    best.rounds = rounds;
    best.round_log = std::move(log);
    return best;
}

} // namespace qmax
