#include "qmax/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "qmax/errors.hpp"
#include "qmax/statevector.hpp"

namespace qmax {
namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

} // namespace

Table::Table(std::vector<double> values, Objective objective)
    : values_(std::move(values)), objective_(objective) {
    padded_size_ = std::bit_ceil(values_.size());
    padded_qubits_ = std::countr_zero(padded_size_);
}

Table Table::from_values(std::vector<double> values, Objective objective) {
    if (values.empty()) {
        throw InputError("table must contain at least one value");
    }
    if (values.size() > (std::size_t{1} << kMaxQubits)) {
        throw InputError("table of " + std::to_string(values.size()) +
                         " items exceeds the 2^" + std::to_string(kMaxQubits) + " cap");
    }
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw InputError("table values must be pairwise distinct (duplicate value " +
                         std::to_string(*dup) + ")");
    }
    return Table(std::move(values), objective);
}

Table Table::random_permutation(std::size_t n_items, RandomStream& rng, Objective objective) {
    if (n_items == 0) {
        throw InputError("table must contain at least one value");
    }
    std::vector<double> values(n_items);
    for (std::size_t i = 0; i < n_items; ++i) {
        values[i] = static_cast<double>(i);
    }
    for (std::size_t i = n_items - 1; i > 0; --i) {
        const std::size_t j = rng.next_index(i + 1);
        std::swap(values[i], values[j]);
    }
    return from_values(std::move(values), objective);
}

Table Table::load_file(const std::string& path, Objective objective) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open table file: " + path);
    }
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string token = trim(line);
        if (token.empty()) {
            continue;
        }
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw InputError(path + ":" + std::to_string(line_no) + ": cannot parse value '" +
                             token + "'");
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw InputError(path + ": table file contains no values");
    }
    return from_values(std::move(values), objective);
}

double Table::value(std::size_t index) const {
    if (index >= values_.size()) {
        throw std::out_of_range("table index " + std::to_string(index) + " out of range [0, " +
                                std::to_string(values_.size()) + ")");
    }
    return values_[index];
}

bool Table::beats(std::size_t a, std::size_t b) const {
    const double va = value(a);
    const double vb = value(b);
    return objective_ == Objective::maximize ? va > vb : va < vb;
}

bool is_marked(const Table& table, std::size_t guess, std::size_t index) {
    if (guess >= table.item_count()) {
        throw std::out_of_range("guess " + std::to_string(guess) + " out of range [0, " +
                                std::to_string(table.item_count()) + ")");
    }
    if (index >= table.padded_size()) {
        throw std::out_of_range("oracle index " + std::to_string(index) + " out of range [0, " +
                                std::to_string(table.padded_size()) + ")");
    }
    return index < table.item_count() && table.beats(index, guess);
}

std::vector<std::size_t> marked_set(const Table& table, std::size_t guess) {
    std::vector<std::size_t> marked;
    for (std::size_t i = 0; i < table.item_count(); ++i) {
        if (is_marked(table, guess, i)) {
            marked.push_back(i);
        }
    }
    return marked;
}

std::size_t marked_count(const Table& table, std::size_t guess) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < table.item_count(); ++i) {
        if (is_marked(table, guess, i)) {
            ++count;
        }
    }
    return count;
}

} // namespace qmax
