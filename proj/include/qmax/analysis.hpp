#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace qmax {

// E(N,1) is the one input the recurrence does not pin down, and the headline
// constant is sensitive to it:
//   six: E(N,1) = 6*sqrt(N), the literal base case (empty sum), under which
//        the bound at t = N-1 lands near 12*sqrt(N);
//   pi4: E(N,1) = (pi/4)*sqrt(N), the known-single-marked Grover cost, the
//        only base under which the bound at t = N-1 stays within 6.8*sqrt(N).
// Both are first-class so reports can show both readings side by side.
enum class BasePreset {
    six,
    pi4,
};

const char* base_preset_name(BasePreset preset);
double base_e1_value(BasePreset preset, std::size_t n);

struct RecurrenceParams {
    std::size_t n;     // >= 2
    std::size_t t_max; // in [1, n-1]
    double base_e1;    // E(N,1) > 0

    static RecurrenceParams with_preset(std::size_t n, std::size_t t_max, BasePreset preset);
};

// E(N,t) by direct recurrence with a running sum:
//   E(N,1) = base_e1;  E(N,t) = (1/t) * sum_{i=1}^{t-1} E(N,i) + 6*sqrt(N/t).
double expected_exact(const RecurrenceParams& params, std::size_t t);

// The telescoped closed form of the same quantity:
//   E(N,t) = base_e1 + 6*sqrt(N) * sum_{i=2}^{t} (1/i)(sqrt(i) - sqrt(i-1)).
double expected_telescoped(const RecurrenceParams& params, std::size_t t);

// The integral upper bound: base_e1 + 6*sqrt(N) * (1 - 1/sqrt(t)).
double expected_bound(const RecurrenceParams& params, std::size_t t);

// Markov tail: P(X >= k * E[X]) <= 1/k, clamped to a probability.
double markov_tail_bound(double k);

// Success probability of keeping the best of k independent repetitions,
// each failing with probability < 1/2: at least 1 - (1/2)^k.
double boosted_success_prob(int k);

struct RecurrenceRow {
    std::size_t t;
    double exact;
    double telescoped;
    double bound;
};

// All three columns for t = 1..t_max, computed incrementally in O(t_max).
using RecurrenceTable = std::vector<RecurrenceRow>;
RecurrenceTable recurrence_table(const RecurrenceParams& params);

// CSV with header "N,t,base_preset,E_exact,E_telescoped,E_bound".
void write_recurrence_csv_header(std::ostream& out);
void write_recurrence_csv_rows(std::ostream& out, std::size_t n, const std::string& preset_name,
                               const RecurrenceTable& table);

} // namespace qmax
