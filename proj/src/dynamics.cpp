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

#include "mpabs/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/FFT>

#include "mpabs/error.hpp"
#include "mpabs/rabi.hpp"

namespace mpabs {

namespace {

constexpr std::size_t kMinSamples = 64;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Eigencomponents below this weight do not contribute to any expectation.
constexpr double kSupportCutoff = 1e-15;

} // namespace

std::vector<double> TimeGrid::times() const {
    validate();
    std::vector<double> t(samples);
    const double dt = step();
    for (std::size_t i = 0; i < samples; ++i) {
        t[i] = static_cast<double>(i) * dt;
    }
    return t;
}

void TimeGrid::validate() const {
    if (!(std::isfinite(t_max) && t_max > 0.0)) {
        throw ValidationError("time grid length must be finite and > 0");
    }
    if (samples < 2) {
        throw ValidationError("time grid needs at least 2 samples");
    }
}

TimeGrid default_grid(double frequency_estimate) {
    const double f = frequency_estimate > 0.0 && std::isfinite(frequency_estimate)
                         ? frequency_estimate
                         : 1.0;
    return TimeGrid{kDefaultPeriods * kTwoPi / f, kDefaultSamples};
}

const TimeSeries& Evolution::at(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
            return series[i];
        }
    }
    throw ValidationError("no observable named '" + std::string(name) + "'");
}

Evolution evolve(const Operator& hamiltonian, const Ket& psi0, const TimeGrid& grid,
                 const std::vector<NamedObservable>& observables) {
    if (psi0.dim() != hamiltonian.dim()) {
        throw DimensionError("evolve: initial state and Hamiltonian dimensions differ");
    }
    const EigenSystem eig = eig_hermitian(hamiltonian);
    const Vector coeffs = eig.vectors.adjoint() * psi0.amplitudes();

    std::vector<Eigen::Index> support;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        if (std::norm(coeffs(k)) > kSupportCutoff * kSupportCutoff) {
            support.push_back(k);
        }
    }
    const auto s = static_cast<Eigen::Index>(support.size());
    Matrix basis(eig.vectors.rows(), s);
    Vector c(s);
    RealVector energies(s);
    for (Eigen::Index j = 0; j < s; ++j) {
        basis.col(j) = eig.vectors.col(support[static_cast<std::size_t>(j)]);
        c(j) = coeffs(support[static_cast<std::size_t>(j)]);
        energies(j) = eig.values(support[static_cast<std::size_t>(j)]);
    }

    std::vector<Matrix> projected;
    projected.reserve(observables.size());
    for (const NamedObservable& o : observables) {
        if (o.op.dim() != hamiltonian.dim()) {
            throw DimensionError("evolve: observable '" + o.name + "' has the wrong dimension");
        }
        projected.push_back(basis.adjoint() * o.op.matrix() * basis);
    }

    const std::vector<double> times = grid.times();
    Evolution out;
    for (const NamedObservable& o : observables) {
        out.names.push_back(o.name);
        out.series.push_back(TimeSeries{times, std::vector<double>(times.size())});
    }

    Vector phased(s);
    for (std::size_t i = 0; i < times.size(); ++i) {
        for (Eigen::Index j = 0; j < s; ++j) {
            phased(j) = std::polar(1.0, -energies(j) * times[i]) * c(j);
        }
        const double norm = (basis * phased).norm();
        out.max_norm_error = std::max(out.max_norm_error, std::abs(norm - 1.0));
        for (std::size_t k = 0; k < projected.size(); ++k) {
            out.series[k].values[i] = phased.dot(projected[k] * phased).real();
        }
    }
    return out;
}

std::optional<SpectralPeak> dominant_frequency(const TimeSeries& series) {
    const std::size_t n = series.values.size();
    if (n < kMinSamples || series.times.size() != n) {
        throw ValidationError("dominant_frequency needs at least 64 samples with matching times");
    }
    const double dt = series.times[1] - series.times[0];
    if (!(dt > 0.0)) {
        throw ValidationError("dominant_frequency: times must be strictly increasing");
    }
    for (std::size_t i = 1; i < n; ++i) {
        const double step = series.times[i] - series.times[i - 1];
        if (std::abs(step - dt) > 1e-9 * dt) {
            throw ValidationError("dominant_frequency: time grid is not uniform");
        }
    }
    const double span = static_cast<double>(n) * dt;
    const double bin_width = kTwoPi / span;

    const auto [lo, hi] = std::minmax_element(series.values.begin(), series.values.end());
    const double scale = std::max({1.0, std::abs(*lo), std::abs(*hi)});
    if (*hi - *lo <= 1e-10 * scale) {
        return std::nullopt;
    }

    std::vector<double> window(n);
    double weight = 0.0;
    double weighted_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        window[i] = 0.5 * (1.0 - std::cos(kTwoPi * static_cast<double>(i) /
                                          static_cast<double>(n - 1)));
        weight += window[i];
        weighted_sum += window[i] * series.values[i];
    }
    const double mean = weighted_sum / weight;
    std::vector<double> input(n);
    for (std::size_t i = 0; i < n; ++i) {
        input[i] = (series.values[i] - mean) * window[i];
    }

    Eigen::FFT<double> fft;
    std::vector<Complex> spectrum;
    fft.fwd(spectrum, input);

    const std::size_t last = n / 2;
    std::vector<double> mag(last + 1);
    for (std::size_t k = 0; k <= last; ++k) {
        mag[k] = std::abs(spectrum[k]);
    }
    std::size_t peak = 1;
    for (std::size_t k = 2; k <= last; ++k) {
        if (mag[k] > mag[peak]) {
            peak = k;
        }
    }

    double offset = 0.0;
    if (peak < last) {
        const double left = mag[peak - 1];
        const double mid = mag[peak];
        const double right = mag[peak + 1];
        double a = left;
        double b = mid;
        double c = right;
        if (left > 0.0 && right > 0.0) {
            a = std::log(left);
            b = std::log(mid);
            c = std::log(right);
        }
        const double curvature = a - 2.0 * b + c;
        if (curvature < 0.0) {
            offset = std::clamp(0.5 * (a - c) / curvature, -0.5, 0.5);
        }
    }
    return SpectralPeak{(static_cast<double>(peak) + offset) * bin_width,
                        2.0 * mag[peak] / weight, bin_width};
}

std::optional<double> relative_difference(double a, double b) {
    if (b == 0.0) {
        return std::nullopt;
    }
    return std::abs(a - b) / std::abs(b);
}

double drift(const TimeSeries& series) {
    double worst = 0.0;
    for (double v : series.values) {
        worst = std::max(worst, std::abs(v - series.values.front()));
    }
    return worst;
}

TwoLevelComparison rabi_compare(const TwoLevelParams& params, Count n,
                                std::optional<TimeGrid> grid) {
    params.validate();
    const unsigned m = params.photons;
    if (n + 2 * static_cast<Count>(m) + 1 > params.fock_dim.value()) {
        throw ValidationError("rabi_compare: n + 2M + 1 must not exceed the Fock dimension (n = " +
                              std::to_string(n) + ", M = " + std::to_string(m) + ", dim = " +
                              std::to_string(params.fock_dim.value()) + ")");
    }
    const TwoLevelModel model = build_two_level(params);
    const std::array<std::size_t, 2> excited{static_cast<std::size_t>(n), 0};
    const std::size_t start = basis_index(excited, model.hamiltonian.factors());

    TwoLevelComparison out;
    out.n = n;
    const auto blocks = invariant_blocks(model);
    const InvariantBlock& block = block_containing(blocks, start);
    if (!block.splitting) {
        throw NumericalError("rabi_compare: |n, e> is not in a 2x2 invariant block");
    }
    out.exact_splitting = *block.splitting;
    out.formula_squared = omega_r_squared({n, n + m, params});
    out.formula_frequency = signed_root_magnitude(out.formula_squared);

    const double detuning = static_cast<double>(m) * params.omega - params.omega0;
    out.grid = grid.value_or(default_grid(std::max(
        std::abs(detuning), 2.0 * params.g * std::sqrt(static_cast<double>(rising_ratio(n, m))))));

    const Evolution ev = evolve(model.hamiltonian, Ket::basis(model.hamiltonian.dim(), start),
                                out.grid,
                                {{"sigma_z", model.sigma_z},
                                 {"energy", model.hamiltonian},
                                 {"excitation", model.excitation_number}});
    out.max_norm_error = ev.max_norm_error;
    out.energy_drift = drift(ev.at("energy"));
    out.excitation_drift = drift(ev.at("excitation"));
    out.measured = dominant_frequency(ev.at("sigma_z"));
    out.bin_width = kTwoPi / (static_cast<double>(out.grid.samples) * out.grid.step());

    out.formula_vs_exact = relative_difference(out.formula_frequency, out.exact_splitting);
    if (out.measured) {
        out.measured_vs_exact = relative_difference(out.measured->frequency, out.exact_splitting);
        out.measured_vs_formula =
            relative_difference(out.measured->frequency, out.formula_frequency);
    }
    return out;
}

ThreeLevelComparison three_level_compare(const ThreeLevelParams& params, Count n1, Count n2,
                                         std::optional<TimeGrid> grid) {
    params.validate();
    const unsigned m = params.photons_beam1;
    const unsigned k = params.photons_beam2();
    if (n1 + m + 1 > params.dim1.value() || n2 + k + 1 > params.dim2.value()) {
        throw ValidationError("three_level_compare: (n1, n2) must satisfy n1 + M < dim1 and "
                              "n2 + N - M < dim2");
    }
    const ThreeLevelModel model = build_three_level(params);
    constexpr std::size_t kBottom = 2;
    const std::array<std::size_t, 3> label{static_cast<std::size_t>(n1),
                                           static_cast<std::size_t>(n2), kBottom};
    const std::size_t start = basis_index(label, model.hamiltonian.factors());

    ThreeLevelComparison out;
    out.n1 = n1;
    out.n2 = n2;
    const auto blocks = invariant_blocks(model);
    out.exact_splitting = block_containing(blocks, start).splitting;
    out.center_squared = center_rabi_squared({n1, n2, params});
    out.relative_squared = relative_rabi_squared({n1, n2, params});
    out.center_frequency = signed_root_magnitude(out.center_squared);
    out.relative_frequency = signed_root_magnitude(out.relative_squared);

    const double coupling =
        2.0 * params.g *
        std::sqrt(static_cast<double>(falling_ratio(n1, m)) * static_cast<double>(falling_ratio(n2, k)));
    out.grid = grid.value_or(
        default_grid(std::max(std::abs(0.5 * detuning_factor(params)), coupling)));

    const Evolution ev =
        evolve(model.hamiltonian, Ket::basis(model.hamiltonian.dim(), start), out.grid,
               {{"S", model.level_s},
                {"S2", model.level_s2},
                {"N1", model.conserved1},
                {"N2", model.conserved2}});
    out.max_norm_error = ev.max_norm_error;
    out.conserved1_drift = drift(ev.at("N1"));
    out.conserved2_drift = drift(ev.at("N2"));
    out.s2_spread = drift(ev.at("S2"));
    out.s_peak = dominant_frequency(ev.at("S"));
    out.s2_peak = dominant_frequency(ev.at("S2"));
    out.bin_width = kTwoPi / (static_cast<double>(out.grid.samples) * out.grid.step());
    if (out.exact_splitting) {
        out.center_vs_exact = relative_difference(out.center_frequency, *out.exact_splitting);
        if (out.s_peak) {
            out.s_peak_vs_exact = relative_difference(out.s_peak->frequency, *out.exact_splitting);
        }
    }
    return out;
}

} // namespace mpabs
