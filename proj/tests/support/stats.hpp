#pragma once

// Statistical acceptance helpers shared by the unit and acceptance suites.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qmax::testing {

// Pearson statistic against a uniform null over counts.size() categories.
inline double chi_square_uniform(const std::vector<std::uint64_t>& counts) {
    std::uint64_t total = 0;
    for (const auto c : counts) {
        total += c;
    }
    const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
    double stat = 0.0;
    for (const auto c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return stat;
}

// 0.99 quantile of chi-square with df degrees of freedom, Wilson-Hilferty
// approximation. Good to a fraction of a percent for df >= 2, which is all
// these suites use.
inline double chi_square_critical_99(std::size_t df) {
    constexpr double z99 = 2.3263478740408408; // standard normal 0.99 quantile
    const double k = static_cast<double>(df);
    const double h = 2.0 / (9.0 * k);
    const double base = 1.0 - h + z99 * std::sqrt(h);
    return k * base * base * base;
}

// Lowest success rate consistent (two-sided, 99%) with a true success
// probability of at least p0 over n trials, by normal approximation.
inline double binomial_lower_99(double p0, std::size_t n) {
    constexpr double z995 = 2.5758293035489004; // standard normal 0.995 quantile
    return p0 - z995 * std::sqrt(p0 * (1.0 - p0) / static_cast<double>(n));
}

} // namespace qmax::testing
