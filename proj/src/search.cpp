#include "qmax/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmax/errors.hpp"
#include "qmax/statevector.hpp"

namespace qmax {
namespace {

// Bails out of pad rejection after this many redraws; the attempt then fails
// through normal verification. Reached only if the non-pad probability mass
// is vanishingly small, which cannot happen from a uniform start.
constexpr int kPadResampleCap = 64;

} // namespace

SearchLimits SearchLimits::resolved_for(const Table& table) const {
    SearchLimits resolved = *this;
    const double padded = static_cast<double>(table.padded_size());
    if (resolved.m_cap <= 0.0) {
        resolved.m_cap = std::sqrt(padded);
    }
    if (resolved.round_query_budget == 0) {
        resolved.round_query_budget = static_cast<std::uint64_t>(std::ceil(3.0 * std::sqrt(padded))) + 10;
    }
    if (resolved.growth_factor <= 1.0) {
        throw InputError("search growth factor must exceed 1");
    }
    if (resolved.m_cap < 1.0) {
        throw InputError("search m_cap must be at least 1");
    }
    return resolved;
}

SearchResult search_above(const Table& table, std::size_t guess, RandomStream& rng,
                          const SearchLimits& limits, QueryCounter& counter) {
    if (guess >= table.item_count()) {
        throw std::out_of_range("guess " + std::to_string(guess) + " out of range [0, " +
                                std::to_string(table.item_count()) + ")");
    }
    SearchResult result;
    if (table.padded_size() == 1) {
        // Single-index space: the only index is the guess itself, nothing to
        // search and no iterations to spend.
        return result;
    }
    const SearchLimits lim = limits.resolved_for(table);
    const std::size_t items = table.item_count();
    const auto marked = [&table, guess, items](std::size_t i) {
        return i < items && table.beats(i, guess);
    };

    QuantumState state = QuantumState::uniform_superposition(table.padded_qubits());
    double m = 1.0;
    for (;;) {
        const auto cutoff = static_cast<std::uint64_t>(std::ceil(m));
        const std::uint64_t j = rng.next_index(cutoff);

        state.fill_uniform();
        state.grover_power(marked, j, counter);
        result.grover_queries_spent += j;

        std::size_t measured = state.measure_index(rng);
        for (int redraw = 0; measured >= items && redraw < kPadResampleCap; ++redraw) {
            measured = state.measure_index(rng);
        }

        counter.verification_queries += 1;
        result.verification_queries_spent += 1;
        result.rounds += 1;
        if (is_marked(table, guess, measured)) {
            result.found = measured;
            return result;
        }
        if (result.grover_queries_spent >= lim.round_query_budget) {
            return result;
        }
        m = std::min(lim.growth_factor * m, lim.m_cap);
    }
}

} // namespace qmax
