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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpabs/algebra.hpp"
#include "mpabs/fock.hpp"
#include "mpabs/models.hpp"

namespace mpabs {

inline constexpr std::size_t kDefaultSamples = 4096;
inline constexpr double kDefaultPeriods = 6.0;

/// Uniform grid t_i = i * t_max / (samples - 1), i = 0..samples-1.
struct TimeGrid {
    double t_max = 1.0;
    std::size_t samples = kDefaultSamples;

    double step() const { return t_max / static_cast<double>(samples - 1); }
    std::vector<double> times() const;
    void validate() const;
};

/// Default grid covering kDefaultPeriods periods of the angular frequency
/// estimate; an estimate of zero falls back to unit frequency.
TimeGrid default_grid(double frequency_estimate);

struct TimeSeries {
    std::vector<double> times;
    std::vector<double> values;
};

struct NamedObservable {
    std::string name;
    Operator op;
};

struct Evolution {
    std::vector<std::string> names;
    std::vector<TimeSeries> series;
    /// max over the grid of | ||psi(t)|| - 1 |
    double max_norm_error = 0.0;

    const TimeSeries& at(std::string_view name) const;
};

/// |psi(t)> = V exp(-i lambda t) V^dagger |psi0> from the eigendecomposition
/// of H, with <O>(t) recorded for every named observable (real part; the
/// observables are expected to be Hermitian).
Evolution evolve(const Operator& hamiltonian, const Ket& psi0, const TimeGrid& grid,
                 const std::vector<NamedObservable>& observables);

struct SpectralPeak {
    double frequency = 0.0; ///< angular
    double amplitude = 0.0;
    double bin_width = 0.0; ///< 2 pi / (samples * step)
};

/// Highest non-DC peak of the Hann-windowed, mean-removed magnitude spectrum,
/// refined by a parabola through the log magnitudes of the peak bin and its
/// neighbours. Returns nullopt ("no oscillation") for a constant series.
/// Throws ValidationError for fewer than 64 samples or a non-uniform grid.
std::optional<SpectralPeak> dominant_frequency(const TimeSeries& series);

/// |a - b| / |b|, or nullopt when b == 0.
std::optional<double> relative_difference(double a, double b);

struct TwoLevelComparison {
    Count n = 0;
    double exact_splitting = 0.0;
    double formula_squared = 0.0;
    double formula_frequency = 0.0; ///< sqrt(|formula_squared|)
    std::optional<SpectralPeak> measured;
    double bin_width = 0.0;
    std::optional<double> formula_vs_exact;
    std::optional<double> measured_vs_exact;
    std::optional<double> measured_vs_formula;
    TimeGrid grid;
    double max_norm_error = 0.0;
    double energy_drift = 0.0;
    double excitation_drift = 0.0;
};

/// Evolves |n, e> and compares the measured <sigma_z> frequency with the
/// exact 2x2 splitting of its invariant block and the closed-form Rabi
/// frequency at (n, n + M). Requires n + 2M + 1 <= dim.
TwoLevelComparison rabi_compare(const TwoLevelParams& params, Count n,
                                std::optional<TimeGrid> grid = std::nullopt);

struct ThreeLevelComparison {
    Count n1 = 0;
    Count n2 = 0;
    std::optional<double> exact_splitting; ///< absent when |n1, n2, bottom> is uncoupled
    double center_squared = 0.0;
    double relative_squared = 0.0;
    double center_frequency = 0.0;
    double relative_frequency = 0.0;
    std::optional<SpectralPeak> s_peak;
    std::optional<SpectralPeak> s2_peak;
    double bin_width = 0.0;
    std::optional<double> s_peak_vs_exact;
    std::optional<double> center_vs_exact;
    /// Largest deviation of <S^2>(t) from its initial value; S^2 commutes with H3.
    double s2_spread = 0.0;
    TimeGrid grid;
    double max_norm_error = 0.0;
    double conserved1_drift = 0.0;
    double conserved2_drift = 0.0;
};

/// Evolves |n1, n2, bottom> and tabulates the <S> and <S^2> frequencies
/// against the exact block splitting and both closed-form frequencies.
/// Requires (n1, n2) inside the buffered range.
ThreeLevelComparison three_level_compare(const ThreeLevelParams& params, Count n1, Count n2,
                                         std::optional<TimeGrid> grid = std::nullopt);

/// Largest |x(t) - x(0)| of a series.
double drift(const TimeSeries& series);

} // namespace mpabs
