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

#include "mpabs/rabi.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "mpabs/error.hpp"

namespace mpabs {

namespace {

std::int64_t to_signed(Count value) {
    if (value > static_cast<Count>(INT64_MAX)) {
        throw OverflowError("factorial ratio exceeds the signed 64-bit range");
    }
    return static_cast<std::int64_t>(value);
}

std::int64_t signed_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError("Rabi bracket exceeds the signed 64-bit range");
    }
    return out;
}

std::int64_t signed_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw OverflowError("Rabi bracket exceeds the signed 64-bit range");
    }
    return out;
}

void require_range(Count lo, Count hi, const char* name) {
    if (lo > hi) {
        throw ValidationError(std::string(name) + " range is empty (min > max)");
    }
}

} // namespace

double omega_r_squared(const TwoLevelRabiInput& input) {
    const TwoLevelParams& p = input.params;
    const unsigned m = p.photons;
    if (input.excitation < input.n ||
        (input.excitation - input.n != 0 && input.excitation - input.n != m)) {
        throw ValidationError("excitation number minus photon number must be 0 or M (got Neig = " +
                              std::to_string(input.excitation) + ", n = " +
                              std::to_string(input.n) + ", M = " + std::to_string(m) + ")");
    }
    // M - 2 Neig + 2 n is either M or -M.
    const std::int64_t sector = input.excitation == input.n ? static_cast<std::int64_t>(m)
                                                            : -static_cast<std::int64_t>(m);
    const std::int64_t bracket =
        signed_sub(signed_mul(m, to_signed(normal_antinormal_sum(input.n, m))),
                   signed_mul(to_signed(ordering_gap_sum(input.n, m)), sector));
    const double detuning = static_cast<double>(m) * p.omega - p.omega0;
    return detuning * detuning + 2.0 * p.g * p.g * static_cast<double>(bracket);
}

double detuning_factor(const ThreeLevelParams& p) {
    return 2.0 * (p.omega0 + p.omega1 - static_cast<double>(p.photons_beam1) * p.omega_l1 -
                  static_cast<double>(p.photons_beam2()) * p.omega_l2);
}

double center_rabi_squared(const ThreeLevelRabiInput& input) {
    const ThreeLevelParams& p = input.params;
    const double eps = detuning_factor(p);
    const double a3 = static_cast<double>(
        two_mode_normal_antinormal_sum(input.n1, input.n2, p.photons_beam1, p.total_photons));
    return -0.5 * eps * (p.omega0 + p.omega1 - static_cast<double>(p.photons_beam1) * p.omega_l1) +
           0.5 * eps * static_cast<double>(p.photons_beam2()) * p.omega_l2 - p.g * p.g * a3;
}

double relative_rabi_squared(const ThreeLevelRabiInput& input) {
    const ThreeLevelParams& p = input.params;
    const double eps = detuning_factor(p);
    const double b3 = static_cast<double>(
        two_mode_gap_sum(input.n1, input.n2, p.photons_beam1, p.total_photons));
    return -0.5 * eps * (p.omega1 - p.omega0) - 2.0 * p.g * p.g * b3;
}

double signed_root_magnitude(double squared) { return std::sqrt(std::abs(squared)); }

std::vector<TwoLevelSweepRow> sweep_two_level(const TwoLevelParams& params, Count n_min,
                                              Count n_max) {
    require_range(n_min, n_max, "n");
    std::vector<TwoLevelSweepRow> rows;
    for (Count n = n_min;; ++n) {
        TwoLevelSweepRow row;
        row.n = n;
        try {
            row.excitation = detail::checked_add(n, params.photons);
            row.omega_r_squared = omega_r_squared({n, row.excitation, params});
        } catch (const OverflowError& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
        if (n == n_max) {
            break;
        }
    }
    return rows;
}

std::vector<ThreeLevelSweepRow> sweep_three_level(const ThreeLevelParams& params, Count n1_min,
                                                  Count n1_max, Count n2_min, Count n2_max) {
    require_range(n1_min, n1_max, "n1");
    require_range(n2_min, n2_max, "n2");
    std::vector<ThreeLevelSweepRow> rows;
    for (Count n1 = n1_min;; ++n1) {
        for (Count n2 = n2_min;; ++n2) {
            ThreeLevelSweepRow row;
            row.n1 = n1;
            row.n2 = n2;
            try {
                row.center_squared = center_rabi_squared({n1, n2, params});
                row.relative_squared = relative_rabi_squared({n1, n2, params});
            } catch (const OverflowError& e) {
                row.center_squared.reset();
                row.relative_squared.reset();
                row.error = e.what();
            }
            rows.push_back(std::move(row));
            if (n2 == n2_max) {
                break;
            }
        }
        if (n1 == n1_max) {
            break;
        }
    }
    return rows;
}

} // namespace mpabs
