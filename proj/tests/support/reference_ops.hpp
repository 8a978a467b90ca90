#pragma once

// Brute-force oracles for the statevector operators, independent of the
// library implementation: both reflections are realized as explicit dense
// N x N matrices applied by matvec. Only usable for small N, which is the
// point.

#include <complex>
#include <cstddef>
#include <vector>

namespace qmax::testing {

using Amplitudes = std::vector<std::complex<double>>;

inline Amplitudes matvec(const std::vector<Amplitudes>& matrix, const Amplitudes& v) {
    const std::size_t n = v.size();
    Amplitudes out(n, {0.0, 0.0});
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out[r] += matrix[r][c] * v[c];
        }
    }
    return out;
}

// 2|u><u| - I as a dense matrix: entries 2/N everywhere, minus 1 on the
// diagonal.
inline Amplitudes reference_diffusion(const Amplitudes& v) {
    const std::size_t n = v.size();
    std::vector<Amplitudes> matrix(n, Amplitudes(n, {2.0 / static_cast<double>(n), 0.0}));
    for (std::size_t i = 0; i < n; ++i) {
        matrix[i][i] -= 1.0;
    }
    return matvec(matrix, v);
}

// Diagonal +-1 oracle matrix applied by matvec.
inline Amplitudes reference_phase_flip(const Amplitudes& v, const std::vector<char>& marked) {
    const std::size_t n = v.size();
    std::vector<Amplitudes> matrix(n, Amplitudes(n, {0.0, 0.0}));
    for (std::size_t i = 0; i < n; ++i) {
        matrix[i][i] = marked[i] ? -1.0 : 1.0;
    }
    return matvec(matrix, v);
}

inline Amplitudes reference_grover(Amplitudes v, const std::vector<char>& marked,
                                   std::size_t iterations) {
    for (std::size_t k = 0; k < iterations; ++k) {
        v = reference_diffusion(reference_phase_flip(v, marked));
    }
    return v;
}

} // namespace qmax::testing
