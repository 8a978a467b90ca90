#include "qmax/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace qmax {
namespace {

void validate(const RecurrenceParams& params, std::size_t t) {
    if (params.n < 2) {
        throw std::domain_error("recurrence needs N >= 2");
    }
    if (params.t_max < 1 || params.t_max >= params.n) {
        throw std::domain_error("t_max must lie in [1, N-1]");
    }
    if (!(params.base_e1 > 0.0)) {
        throw std::domain_error("base E(N,1) must be positive");
    }
    if (t < 1 || t > params.t_max) {
        throw std::domain_error("t out of range [1, t_max]");
    }
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

const char* base_preset_name(BasePreset preset) {
    return preset == BasePreset::six ? "six" : "pi4";
}

double base_e1_value(BasePreset preset, std::size_t n) {
    const double root_n = std::sqrt(static_cast<double>(n));
    return preset == BasePreset::six ? 6.0 * root_n : (std::numbers::pi / 4.0) * root_n;
}

RecurrenceParams RecurrenceParams::with_preset(std::size_t n, std::size_t t_max, BasePreset preset) {
    return RecurrenceParams{n, t_max, base_e1_value(preset, n)};
}

double expected_exact(const RecurrenceParams& params, std::size_t t) {
    validate(params, t);
    const double n = static_cast<double>(params.n);
    double value = params.base_e1;
    double sum = value; // sum_{i=1}^{current} E(N,i)
    for (std::size_t i = 2; i <= t; ++i) {
        const double di = static_cast<double>(i);
        value = sum / di + 6.0 * std::sqrt(n / di);
        sum += value;
    }
    return value;
}

double expected_telescoped(const RecurrenceParams& params, std::size_t t) {
    validate(params, t);
    const double six_root_n = 6.0 * std::sqrt(static_cast<double>(params.n));
    double series = 0.0;
    for (std::size_t i = 2; i <= t; ++i) {
        const double di = static_cast<double>(i);
        series += (std::sqrt(di) - std::sqrt(di - 1.0)) / di;
    }
    return params.base_e1 + six_root_n * series;
}

double expected_bound(const RecurrenceParams& params, std::size_t t) {
    validate(params, t);
    const double six_root_n = 6.0 * std::sqrt(static_cast<double>(params.n));
    return params.base_e1 + six_root_n * (1.0 - 1.0 / std::sqrt(static_cast<double>(t)));
}

double markov_tail_bound(double k) {
    if (!(k > 0.0)) {
        throw std::domain_error("Markov tail needs k > 0");
    }
    return std::min(1.0, 1.0 / k);
}

double boosted_success_prob(int k) {
    if (k < 1) {
        throw std::domain_error("repetition count k must be at least 1");
    }
    return 1.0 - std::ldexp(1.0, -k);
}

RecurrenceTable recurrence_table(const RecurrenceParams& params) {
    validate(params, params.t_max);
    const double n = static_cast<double>(params.n);
    const double six_root_n = 6.0 * std::sqrt(n);

    RecurrenceTable table;
    table.reserve(params.t_max);
    double exact = params.base_e1;
    double exact_sum = exact;
    double series = 0.0;
    table.push_back({1, exact, params.base_e1, params.base_e1});
    for (std::size_t t = 2; t <= params.t_max; ++t) {
        const double dt = static_cast<double>(t);
        exact = exact_sum / dt + 6.0 * std::sqrt(n / dt);
        exact_sum += exact;
        series += (std::sqrt(dt) - std::sqrt(dt - 1.0)) / dt;
        const double telescoped = params.base_e1 + six_root_n * series;
        const double bound = params.base_e1 + six_root_n * (1.0 - 1.0 / std::sqrt(dt));
        table.push_back({t, exact, telescoped, bound});
    }
    return table;
}

void write_recurrence_csv_header(std::ostream& out) {
    out << "N,t,base_preset,E_exact,E_telescoped,E_bound\n";
}

void write_recurrence_csv_rows(std::ostream& out, std::size_t n, const std::string& preset_name,
                               const RecurrenceTable& table) {
    for (const auto& row : table) {
        out << n << ',' << row.t << ',' << preset_name << ',' << format_double(row.exact) << ','
            << format_double(row.telescoped) << ',' << format_double(row.bound) << '\n';
    }
}

} // namespace qmax
