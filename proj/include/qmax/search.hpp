#pragma once

#include <cstdint>
#include <optional>

#include "qmax/oracle.hpp"
#include "qmax/query_counter.hpp"
#include "qmax/rng.hpp"

namespace qmax {

// Knobs for the growing-cutoff schedule that finds a marked item when the
// number of marked items is unknown. Zero-valued fields are resolved from the
// table's padded size: m_cap = sqrt(padded_size) and
// round_query_budget = ceil(3*sqrt(padded_size)) + 10.
struct SearchLimits {
    double growth_factor = 1.2; // lambda = 6/5
    double m_cap = 0.0;
    std::uint64_t round_query_budget = 0;

    SearchLimits resolved_for(const Table& table) const;
};

// Outcome of one search_above call. `found`, when present, was verified
// classically against the oracle before being returned.
struct SearchResult {
    std::optional<std::size_t> found;
    std::uint64_t grover_queries_spent = 0;
    std::uint64_t verification_queries_spent = 0;
    std::uint64_t rounds = 0; // attempts (prepare, iterate, measure, verify)

    bool operator==(const SearchResult&) const = default;
};

// Grover search for any item beating the current guess, marked count unknown:
//   m <- 1; repeat { j ~ U{0..ceil(m)-1}; prepare |u>; j Grover iterations;
//   measure; verify classically; on failure m <- min(lambda*m, m_cap) }
// until a verified hit, or until grover queries spent in this call reach
// limits.round_query_budget (the only way out when nothing is marked).
// Measurements landing on pad indices are rejected and resampled; pads carry
// no value, so no oracle query is charged for them.
SearchResult search_above(const Table& table, std::size_t guess, RandomStream& rng,
                          const SearchLimits& limits, QueryCounter& counter);

} // namespace qmax
