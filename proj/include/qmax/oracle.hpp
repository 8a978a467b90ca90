#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qmax/rng.hpp"

namespace qmax {

// Flipping the comparator turns maximum finding into minimum finding; there
// is no separate code path for the latter.
enum class Objective {
    maximize,
    minimize,
};

// Unsorted table of pairwise-distinct values, padded (virtually) to the least
// power of two >= item_count so the register preparation has dimension 2^n.
// Pad indices carry no value and are never marked by any oracle.
class Table {
public:
    static Table from_values(std::vector<double> values, Objective objective = Objective::maximize);

    // Values 0..n_items-1 shuffled by Fisher-Yates on `rng`. Every marked-set
    // size is then exactly known, which the experiments rely on.
    static Table random_permutation(std::size_t n_items, RandomStream& rng,
                                    Objective objective = Objective::maximize);

    // One numeric value per line, UTF-8, '#' starts a comment, blank lines
    // ignored. Throws InputError with a line number on parse failure and on
    // duplicate values.
    static Table load_file(const std::string& path, Objective objective = Objective::maximize);

    std::size_t item_count() const { return values_.size(); }
    std::size_t padded_size() const { return padded_size_; }
    int padded_qubits() const { return padded_qubits_; }
    Objective objective() const { return objective_; }
    std::span<const double> values() const { return values_; }

    double value(std::size_t index) const;

    // True iff item `a` strictly beats item `b` under the table's objective.
    // Both must be real item indices.
    bool beats(std::size_t a, std::size_t b) const;

private:
    Table(std::vector<double> values, Objective objective);

    std::vector<double> values_;
    std::size_t padded_size_ = 1;
    int padded_qubits_ = 0;
    Objective objective_ = Objective::maximize;
};

// The comparison oracle f_guess: 1 iff `index` names a real item that beats
// the current guess. Pad indices (item_count <= index < padded_size) are
// never marked. Throws std::out_of_range for a bad guess or index.
bool is_marked(const Table& table, std::size_t guess, std::size_t index);

// Classical ground truth: all marked indices, in increasing order. Its size
// is the t that the complexity recurrence is written in.
std::vector<std::size_t> marked_set(const Table& table, std::size_t guess);

std::size_t marked_count(const Table& table, std::size_t guess);

} // namespace qmax
