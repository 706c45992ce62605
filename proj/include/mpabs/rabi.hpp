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

#include <optional>
#include <string>
#include <vector>

#include "mpabs/fock.hpp"
#include "mpabs/models.hpp"

namespace mpabs {

// Closed-form Rabi frequencies. All of them return the signed square; the
// square may be negative and callers decide how to take the root.

struct TwoLevelRabiInput {
    Count n = 0;          ///< photon number eigenvalue
    Count excitation = 0; ///< eigenvalue of a^dagger a + M sigma_+ sigma_-
    TwoLevelParams params;
};

struct ThreeLevelRabiInput {
    Count n1 = 0;
    Count n2 = 0;
    ThreeLevelParams params;
};

/// (M w - w0)^2 + 2 g^2 [M A2(n) - B2(n) (M - 2 Neig + 2 n)].
///
/// The bracket is evaluated in exact integer arithmetic. Requires
/// Neig - n to be 0 or M (ValidationError otherwise); OverflowError when the
/// bracket leaves the 64-bit range.
double omega_r_squared(const TwoLevelRabiInput& input);

/// 2 (w0 + w1 - M wL1 - (N - M) wL2): twice the total multiphoton detuning.
double detuning_factor(const ThreeLevelParams& params);

/// Center-of-energies frequency squared:
/// -(eps/2)(w0 + w1 - M wL1) + (eps/2)(N - M) wL2 - g^2 A3(n1, n2).
double center_rabi_squared(const ThreeLevelRabiInput& input);

/// Relative-energy frequency squared: -(eps/2)(w1 - w0) - 2 g^2 B3(n1, n2).
double relative_rabi_squared(const ThreeLevelRabiInput& input);

/// sqrt(|x|), keeping the caller aware of the sign separately.
double signed_root_magnitude(double squared);

struct TwoLevelSweepRow {
    Count n = 0;
    Count excitation = 0;
    std::optional<double> omega_r_squared;
    std::string error; ///< set when the row overflowed
};

struct ThreeLevelSweepRow {
    Count n1 = 0;
    Count n2 = 0;
    std::optional<double> center_squared;
    std::optional<double> relative_squared;
    std::string error;
};

/// Rows n = n_min..n_max evaluated in the upper sector Neig = n + M.
std::vector<TwoLevelSweepRow> sweep_two_level(const TwoLevelParams& params, Count n_min,
                                              Count n_max);

/// Rows over the grid n1 in [n1_min, n1_max] (outer) x n2 in [n2_min, n2_max].
std::vector<ThreeLevelSweepRow> sweep_three_level(const ThreeLevelParams& params, Count n1_min,
                                                  Count n1_max, Count n2_min, Count n2_max);

} // namespace mpabs
