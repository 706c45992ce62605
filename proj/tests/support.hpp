/*
 * Copyright 2026 The mpabs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Test-only helpers: random generators and oracles that share no code path
// with the library implementation.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "mpabs/algebra.hpp"
#include "mpabs/models.hpp"

namespace mpabs::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t uniform_int(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Matrix random_matrix(std::size_t dim, Rng& rng) {
    const auto n = static_cast<Eigen::Index>(dim);
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = Complex{uniform(rng, -1, 1), uniform(rng, -1, 1)};
        }
    }
    return m;
}

inline Operator random_hermitian(std::size_t dim, Rng& rng) {
    const Matrix m = random_matrix(dim, rng);
    return Operator(Matrix(0.5 * (m + m.adjoint())));
}

/// Full factorial in 128-bit arithmetic; exact for n <= 33.
inline unsigned __int128 full_factorial(unsigned n) {
    unsigned __int128 out = 1;
    for (unsigned k = 2; k <= n; ++k) {
        out *= k;
    }
    return out;
}

/// n!/(n-m)! from full factorials, 0 below the vacuum.
inline std::uint64_t naive_falling(unsigned n, unsigned m) {
    if (n < m) {
        return 0;
    }
    return static_cast<std::uint64_t>(full_factorial(n) / full_factorial(n - m));
}

inline std::uint64_t naive_rising(unsigned n, unsigned m) {
    return static_cast<std::uint64_t>(full_factorial(n + m) / full_factorial(n));
}

/// sum_{alpha=0}^{M-1} (n+alpha)!/(n-M+alpha+1)! with 1/(negative)! = 0.
inline std::uint64_t naive_gap_sum(unsigned n, unsigned m) {
    std::uint64_t out = 0;
    for (unsigned alpha = 0; alpha < m; ++alpha) {
        const int lower = static_cast<int>(n) - static_cast<int>(m) + static_cast<int>(alpha) + 1;
        if (lower < 0) {
            continue;
        }
        out += static_cast<std::uint64_t>(full_factorial(n + alpha) /
                                          full_factorial(static_cast<unsigned>(lower)));
    }
    return out;
}

/// Ladder matrix by repeated multiplication of the single-step operator,
/// built directly from sqrt(n) without the library.
inline Matrix repeated_lowering(std::size_t dim, unsigned power) {
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix a = Matrix::Zero(d, d);
    for (Eigen::Index n = 1; n < d; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    Matrix out = Matrix::Identity(d, d);
    for (unsigned k = 0; k < power; ++k) {
        out = out * a;
    }
    return out;
}

/// Eigenvalue difference of the Hermitian 2x2 [[p, c], [conj(c), q]].
inline double two_by_two_splitting(double p, double q, double coupling_abs) {
    return std::sqrt((p - q) * (p - q) + 4.0 * coupling_abs * coupling_abs);
}

inline TwoLevelParams random_two_level(Rng& rng, unsigned m, std::size_t dim) {
    TwoLevelParams p;
    p.omega = uniform(rng, 0.5, 2.0);
    p.omega0 = uniform(rng, 0.5, 2.5);
    p.g = uniform(rng, 0.02, 0.4);
    p.photons = m;
    p.fock_dim = ModeDim(dim);
    return p;
}

inline ThreeLevelParams random_three_level(Rng& rng, unsigned m, unsigned total, std::size_t dim1,
                                           std::size_t dim2) {
    ThreeLevelParams p;
    p.omega_l1 = uniform(rng, 0.5, 2.0);
    p.omega_l2 = uniform(rng, 0.5, 2.0);
    p.omega0 = uniform(rng, 0.5, 2.5);
    p.omega1 = uniform(rng, 0.5, 2.5);
    p.g = uniform(rng, 0.02, 0.4);
    p.photons_beam1 = m;
    p.total_photons = total;
    p.dim1 = ModeDim(dim1);
    p.dim2 = ModeDim(dim2);
    return p;
}

} // namespace mpabs::testing
