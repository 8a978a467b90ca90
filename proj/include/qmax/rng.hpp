#pragma once

#include <cstdint>
#include <random>

namespace qmax {

// SplitMix64 finalizer. Fully specified 64-bit mixing, used both for seed
// derivation and nowhere else; kept tiny so the splitting rule is auditable.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-trial stream seeds: stream_i = splitmix64(master + gamma * (i + 1)).
// Distinct trial indices give decorrelated, reproducible streams, so trial
// ensembles can run in parallel and still reduce deterministically.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream_index) {
    return splitmix64(master_seed + 0x9e3779b97f4a7c15ULL * (stream_index + 1));
}

// Seeded random stream backed by mt19937_64. The engine is bit-exact across
// platforms, and doubles/indices are generated from raw engine words directly
// (no std::*_distribution, whose output is implementation-defined).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_raw() { return engine_(); }

    // Uniform on [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on [0, bound), unbiased via rejection. bound must be >= 1.
    std::uint64_t next_index(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v = engine_();
        while (v >= limit) {
            v = engine_();
        }
        return v % bound;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace qmax
