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

#include "mpabs/fock.hpp"

#include <cmath>
#include <string>

#include "mpabs/error.hpp"

namespace mpabs {

ModeDim::ModeDim(std::size_t dim) : dim_(dim) {
    if (dim < 2) {
        throw ValidationError("Fock truncation must be at least 2, got " + std::to_string(dim));
    }
}

Operator annihilation(ModeDim dim) { return ladder_power(dim, 1, Ladder::lower); }

Operator creation(ModeDim dim) { return ladder_power(dim, 1, Ladder::raise); }

Operator number_operator(ModeDim dim) {
    RealVector n(static_cast<Eigen::Index>(dim.value()));
    for (Eigen::Index k = 0; k < n.size(); ++k) {
        n(k) = static_cast<double>(k);
    }
    return Operator::diagonal(n, Factors{dim.value()});
}

Operator ladder_power(ModeDim dim, unsigned power, Ladder direction) {
    const std::size_t d = dim.value();
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t n = power; n < d; ++n) {
        // <n-M| a^M |n> = sqrt(n!/(n-M)!)
        const double element = std::sqrt(static_cast<double>(falling_ratio(n, power)));
        const auto lo = static_cast<Eigen::Index>(n - power);
        const auto hi = static_cast<Eigen::Index>(n);
        if (direction == Ladder::lower) {
            m(lo, hi) = element;
        } else {
            m(hi, lo) = element;
        }
    }
    return Operator(std::move(m), Factors{d});
}

namespace detail {

Count checked_add(Count a, Count b) {
    Count out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("factorial-ratio sum exceeds the 64-bit integer range");
    }
    return out;
}

Count checked_mul(Count a, Count b) {
    Count out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError("factorial-ratio product exceeds the 64-bit integer range");
    }
    return out;
}

} // namespace detail

using detail::checked_add;
using detail::checked_mul;

Count falling_ratio(Count n, unsigned m) {
    if (n < m) {
        return 0;
    }
    Count out = 1;
    for (unsigned k = 0; k < m; ++k) {
        out = checked_mul(out, n - k);
    }
    return out;
}

Count rising_ratio(Count n, unsigned m) {
    Count out = 1;
    for (unsigned k = 1; k <= m; ++k) {
        out = checked_mul(out, checked_add(n, k));
    }
    return out;
}

Count normal_antinormal_sum(Count n, unsigned m) {
    return checked_add(falling_ratio(n, m), rising_ratio(n, m));
}

Count ordering_gap_sum(Count n, unsigned m) {
    // (n+alpha)!/(n-M+alpha+1)! is the falling ratio of n+alpha with M-1 factors.
    Count out = 0;
    for (unsigned alpha = 0; alpha < m; ++alpha) {
        out = checked_add(out, falling_ratio(checked_add(n, alpha), m - 1));
    }
    return out;
}

namespace {

unsigned second_mode_photons(unsigned m, unsigned total) {
    if (m > total) {
        throw ValidationError("photons from the first beam (" + std::to_string(m) +
                              ") exceed the total (" + std::to_string(total) + ")");
    }
    return total - m;
}

} // namespace

Count two_mode_normal_antinormal_sum(Count n1, Count n2, unsigned m, unsigned total) {
    const unsigned k = second_mode_photons(m, total);
    return checked_add(checked_mul(falling_ratio(n1, m), falling_ratio(n2, k)),
                       checked_mul(rising_ratio(n1, m), rising_ratio(n2, k)));
}

Count two_mode_gap_sum(Count n1, Count n2, unsigned m, unsigned total) {
    const unsigned k = second_mode_photons(m, total);
    const Count first = checked_mul(checked_mul(m, falling_ratio(n2, k)), ordering_gap_sum(n1, m));
    const Count second = checked_mul(checked_mul(k, falling_ratio(n1, m)), ordering_gap_sum(n2, k));
    return checked_add(first, second);
}

} // namespace mpabs
