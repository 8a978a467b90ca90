#pragma once

#include <cstdint>

namespace qmax {

// Oracle query accounting for one run. Grover queries count phase-flip
// applications inside the quantum subroutine; verification queries count
// classical oracle checks made after measurements. They are reported
// separately because the two kinds of "step" are not interchangeable, and the
// headline cost of a run is their sum.
struct QueryCounter {
    std::uint64_t grover_queries = 0;
    std::uint64_t verification_queries = 0;

    std::uint64_t total() const { return grover_queries + verification_queries; }
};

} // namespace qmax
