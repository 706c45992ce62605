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

#include <cstddef>
#include <cstdint>

#include "mpabs/algebra.hpp"

namespace mpabs {

/// Truncation of a bosonic mode to |0>..|dim-1>.
class ModeDim {
public:
    /// Throws ValidationError for dim < 2.
    explicit ModeDim(std::size_t dim);

    std::size_t value() const { return dim_; }

    friend bool operator==(ModeDim, ModeDim) = default;

private:
    std::size_t dim_;
};

Operator annihilation(ModeDim dim);
Operator creation(ModeDim dim);
Operator number_operator(ModeDim dim);

enum class Ladder { lower, raise };

/// a^M or (a^dagger)^M on the truncated mode, built element-wise from the
/// exact factorial ratios: a^M|n> = sqrt(n!/(n-M)!) |n-M>.
Operator ladder_power(ModeDim dim, unsigned power, Ladder direction);

// Exact factorial ratios ---------------------------------------------------
//
// All ratios are iterated integer products, never full factorials. Leaving the
// 64-bit range raises OverflowError. The reciprocal factorial of a negative
// integer is taken as zero, so annihilating below the vacuum gives 0.

using Count = std::uint64_t;

/// n(n-1)...(n-M+1); 0 for n < M; 1 for M = 0.
Count falling_ratio(Count n, unsigned m);

/// (n+1)(n+2)...(n+M); 1 for M = 0.
Count rising_ratio(Count n, unsigned m);

/// <n| a^dagger^M a^M + a^M a^dagger^M |n> = n!/(n-M)! + (n+M)!/n!
/// (the A2 coefficient of the two-level Rabi expression).
Count normal_antinormal_sum(Count n, unsigned m);

/// Sum over alpha = 0..M-1 of (n+alpha)!/(n-M+alpha+1)! (the B2 coefficient).
/// M times this equals rising_ratio(n, M) - falling_ratio(n, M).
Count ordering_gap_sum(Count n, unsigned m);

/// Two-mode analogue of normal_antinormal_sum with M photons drawn from mode 1
/// and total - M from mode 2 (the A3 coefficient). Requires M <= total.
Count two_mode_normal_antinormal_sum(Count n1, Count n2, unsigned m, unsigned total);

/// M * F(n2, total-M) * B2(n1, M) + (total-M) * F(n1, M) * B2(n2, total-M),
/// F = falling_ratio (the B3 coefficient). Requires M <= total. The second
/// sum is empty when total == M.
Count two_mode_gap_sum(Count n1, Count n2, unsigned m, unsigned total);

namespace detail {
Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);
} // namespace detail

} // namespace mpabs
