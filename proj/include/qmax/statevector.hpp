#pragma once

#include <complex>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qmax/query_counter.hpp"
#include "qmax/rng.hpp"

namespace qmax {

// Largest supported register. 2^24 double-complex amplitudes is 256 MiB,
// plenty for every experiment this toolkit runs.
inline constexpr int kMaxQubits = 24;

// Dense complex statevector over N = 2^n basis states, with the three
// operators the search loop needs: uniform preparation, phase-flip oracle and
// diffusion (reflection about the uniform state). Measurement never mutates
// the state; the algorithm re-prepares a fresh superposition each round.
class QuantumState {
public:
    // State |u> with every amplitude 1/sqrt(N). Throws InputError if n_qubits
    // is outside [1, kMaxQubits].
    static QuantumState uniform_superposition(int n_qubits);

    // Adopts explicit amplitudes. The length must be a power of two in
    // [2, 2^kMaxQubits]; normalization is the caller's business and is only
    // enforced at measurement time.
    static QuantumState from_amplitudes(std::vector<std::complex<double>> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dimension() const { return amps_.size(); }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }
    std::complex<double> amplitude(std::size_t index) const { return amps_[index]; }

    // Reset to the uniform superposition without reallocating.
    void fill_uniform();

    // Negates the amplitude of every marked index. One full application is
    // one Grover oracle query; the caller owns that accounting.
    template <typename Pred>
        requires std::predicate<Pred, std::size_t>
    void apply_phase_flip(Pred&& marked) {
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (marked(i)) {
                amps_[i] = -amps_[i];
            }
        }
    }

    // a_i -> 2*mean - a_i, the reflection 2|u><u| - I about the uniform state.
    void apply_diffusion();

    // Applies (diffusion . phase_flip) exactly `iterations` times and charges
    // one grover query per iteration to `counter`.
    template <typename Pred>
        requires std::predicate<Pred, std::size_t>
    void grover_power(Pred&& marked, std::uint64_t iterations, QueryCounter& counter) {
        for (std::uint64_t k = 0; k < iterations; ++k) {
            apply_phase_flip(marked);
            apply_diffusion();
        }
        counter.grover_queries += iterations;
    }

    // Samples an index with probability |a_i|^2 using inverse-CDF over the
    // amplitudes in index order, consuming exactly one uniform draw. Throws
    // InvariantError if the norm has drifted more than 1e-6 from 1.
    std::size_t measure_index(RandomStream& rng) const;

    double norm_squared() const;

    // Total probability mass on marked indices.
    template <typename Pred>
        requires std::predicate<Pred, std::size_t>
    double probability_mass(Pred&& marked) const {
        double mass = 0.0;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (marked(i)) {
                mass += std::norm(amps_[i]);
            }
        }
        return mass;
    }

private:
    explicit QuantumState(int n_qubits);

    int n_qubits_;
    std::vector<std::complex<double>> amps_;
};

// Probability that measuring after `iterations` Grover iterations from the
// uniform state over `space_size` items, `marked_count` of them marked,
// yields a marked index: sin^2((2j+1)*theta) with sin(theta) = sqrt(t/N).
// marked_count = 0 returns 0.
double analytic_success_probability(std::size_t space_size, std::size_t marked_count,
                                    std::uint64_t iterations);

} // namespace qmax
