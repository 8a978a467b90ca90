#include "qmax/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qmax/errors.hpp"

namespace qmax {

QuantumState::QuantumState(int n_qubits)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {}

QuantumState QuantumState::uniform_superposition(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InputError("qubit count " + std::to_string(n_qubits) + " outside supported range [1, " +
                         std::to_string(kMaxQubits) + "]");
    }
    QuantumState state(n_qubits);
    state.fill_uniform();
    return state;
}

QuantumState QuantumState::from_amplitudes(std::vector<std::complex<double>> amplitudes) {
    const std::size_t n = amplitudes.size();
    if (n < 2 || (n & (n - 1)) != 0 || n > (std::size_t{1} << kMaxQubits)) {
        throw InputError("amplitude vector length " + std::to_string(n) +
                         " is not a power of two in [2, 2^" + std::to_string(kMaxQubits) + "]");
    }
    QuantumState state(std::countr_zero(n));
    state.amps_ = std::move(amplitudes);
    return state;
}

void QuantumState::fill_uniform() {
    const double amp = 1.0 / std::sqrt(static_cast<double>(amps_.size()));
    for (auto& a : amps_) {
        a = amp;
    }
}

void QuantumState::apply_diffusion() {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& a : amps_) {
        sum += a;
    }
    const std::complex<double> twice_mean = 2.0 * sum / static_cast<double>(amps_.size());
    for (auto& a : amps_) {
        a = twice_mean - a;
    }
}

double QuantumState::norm_squared() const {
    double total = 0.0;
    for (const auto& a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::size_t QuantumState::measure_index(RandomStream& rng) const {
    const double norm = norm_squared();
    if (std::abs(norm - 1.0) > 1e-6) {
        throw InvariantError("statevector norm " + std::to_string(norm) +
                             " deviates from 1 beyond 1e-6; refusing to measure");
    }
    const double u = rng.next_double();
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const double p = std::norm(amps_[i]);
        if (p > 0.0) {
            last_positive = i;
        }
        cumulative += p;
        if (u < cumulative) {
            return i;
        }
    }
    // u landed in the rounding sliver past the final cumulative sum.
    return last_positive;
}

double analytic_success_probability(std::size_t space_size, std::size_t marked_count,
                                    std::uint64_t iterations) {
    if (marked_count == 0) {
        return 0.0;
    }
    if (marked_count > space_size) {
        throw InputError("marked count exceeds search space size");
    }
    const double theta =
        std::asin(std::sqrt(static_cast<double>(marked_count) / static_cast<double>(space_size)));
    const double s = std::sin(static_cast<double>(2 * iterations + 1) * theta);
    return s * s;
}

} // namespace qmax
