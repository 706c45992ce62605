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

#include "mpabs/models.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "mpabs/error.hpp"

namespace mpabs {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_frequency(double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0) {
        throw ValidationError(std::string(name) + " must be finite and >= 0, got " +
                              std::to_string(value));
    }
}

Operator level_unit(std::size_t row, std::size_t col, std::size_t levels) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(levels), static_cast<Eigen::Index>(levels));
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
    return Operator(std::move(m));
}

Operator level_s_matrix() {
    RealVector d(3);
    d << 1.0, 0.0, -1.0;
    return Operator::diagonal(d, Factors{3});
}

} // namespace

const char* to_string(SpinNorm norm) {
    switch (norm) {
    case SpinNorm::pauli:
        return "pauli";
    case SpinNorm::half:
        return "half";
    }
    return "unknown";
}

SpinMatrices spin_matrices(SpinNorm norm) {
    const double scale = norm == SpinNorm::pauli ? 1.0 : 0.5;
    RealVector z(2);
    z << scale, -scale;
    return SpinMatrices{Operator::diagonal(z, Factors{2}), level_unit(0, 1, 2),
                        level_unit(1, 0, 2)};
}

void TwoLevelParams::validate() const {
    require_frequency(omega, "omega");
    require_frequency(omega0, "omega0");
    require_frequency(g, "g");
    if (photons < 1) {
        throw ValidationError("photon multiplicity M must be >= 1");
    }
    if (fock_dim.value() < photons + 2) {
        throw ValidationError("Fock dimension " + std::to_string(fock_dim.value()) +
                              " too small for M = " + std::to_string(photons) + "; need >= " +
                              std::to_string(photons + 2));
    }
}

void ThreeLevelParams::validate() const {
    require_frequency(omega_l1, "omega_l1");
    require_frequency(omega_l2, "omega_l2");
    require_frequency(omega0, "omega0");
    require_frequency(omega1, "omega1");
    require_frequency(g, "g");
    if (photons_beam1 < 1) {
        throw ValidationError("photon multiplicity M must be >= 1");
    }
    if (photons_beam1 > total_photons) {
        throw ValidationError("M = " + std::to_string(photons_beam1) +
                              " exceeds total photon number N = " +
                              std::to_string(total_photons));
    }
    if (dim1.value() < photons_beam1 + 2) {
        throw ValidationError("mode-1 dimension " + std::to_string(dim1.value()) +
                              " too small; need >= M + 2 = " + std::to_string(photons_beam1 + 2));
    }
    if (dim2.value() < photons_beam2() + 2) {
        throw ValidationError("mode-2 dimension " + std::to_string(dim2.value()) +
                              " too small; need >= N - M + 2 = " +
                              std::to_string(photons_beam2() + 2));
    }
}

TwoLevelModel build_two_level(const TwoLevelParams& params, SpinNorm norm) {
    params.validate();
    const ModeDim d = params.fock_dim;
    const unsigned m = params.photons;
    const Operator id_mode = Operator::identity(Factors{d.value()});
    const Operator id_spin = Operator::identity(Factors{2});
    const SpinMatrices spin = spin_matrices(norm);

    Operator n = kron(number_operator(d), id_spin);
    Operator sz = kron(id_mode, spin.sigma_z);
    Operator sp = kron(id_mode, spin.sigma_plus);
    Operator sm = kron(id_mode, spin.sigma_minus);
    Operator raise = kron(ladder_power(d, m, Ladder::raise), id_spin);
    Operator lower = kron(ladder_power(d, m, Ladder::lower), id_spin);

    Operator h = params.omega * n + (0.5 * params.omega0) * sz +
                 (kI * params.g) * (raise * sm - lower * sp);
    Operator excitation = n + static_cast<double>(m) * (sp * sm);

    const std::array<std::size_t, 2> excursion{m, 0};
    Subspace buffered = buffered_subspace(h.factors(), excursion);

    return TwoLevelModel{params,
                         std::move(h),
                         std::move(excitation),
                         std::move(n),
                         std::move(sz),
                         std::move(sp),
                         std::move(sm),
                         kron(annihilation(d), id_spin),
                         std::move(raise),
                         std::move(lower),
                         std::move(buffered)};
}

ThreeLevelModel build_three_level(const ThreeLevelParams& params) {
    params.validate();
    const unsigned m = params.photons_beam1;
    const unsigned k = params.photons_beam2();
    const LevelBasis levels = level_basis();

    const Operator id1 = Operator::identity(Factors{params.dim1.value()});
    const Operator id2 = Operator::identity(Factors{params.dim2.value()});
    const Operator id3 = Operator::identity(Factors{3});
    const Operator modes = kron(id1, id2);

    // Sigma_+ = S2 S6 = E13, Sigma_- = S8 S4 = E31.
    const Operator level_raise = levels.generator(2) * levels.generator(6);
    const Operator level_lower = levels.generator(8) * levels.generator(4);

    Operator n1 = kron(kron(number_operator(params.dim1), id2), id3);
    Operator n2 = kron(kron(id1, number_operator(params.dim2)), id3);
    Operator s = kron(modes, levels.s);
    Operator s2 = s * s;
    Operator sigma_plus = kron(modes, level_raise);
    Operator sigma_minus = kron(modes, level_lower);

    const Operator photons_up = kron(ladder_power(params.dim1, m, Ladder::raise),
                                     ladder_power(params.dim2, k, Ladder::raise));
    const Operator photons_down = kron(ladder_power(params.dim1, m, Ladder::lower),
                                       ladder_power(params.dim2, k, Ladder::lower));

    Operator h = params.omega_l1 * n1 + params.omega_l2 * n2 +
                 (0.5 * (params.omega0 + params.omega1)) * s -
                 (0.5 * (params.omega0 - params.omega1)) * s2 +
                 (kI * params.g) *
                     (kron(photons_up, level_lower) - kron(photons_down, level_raise));

    Operator conserved1 = n1 + (0.5 * static_cast<double>(m)) * s;
    Operator conserved2 = n2 + (0.5 * static_cast<double>(k)) * s;

    const std::array<std::size_t, 3> excursion{m, k, 0};
    Subspace buffered = buffered_subspace(h.factors(), excursion);

    return ThreeLevelModel{params,
                           std::move(h),
                           std::move(n1),
                           std::move(n2),
                           std::move(conserved1),
                           std::move(conserved2),
                           std::move(s),
                           std::move(s2),
                           std::move(sigma_plus),
                           std::move(sigma_minus),
                           std::move(buffered)};
}

LevelBasis level_basis() {
    auto unit = [](std::size_t k) { return level_unit(k / 3, k % 3, 3); };
    LevelBasis basis{level_s_matrix(),
                     unit(4),
                     {unit(0), unit(1), unit(2), unit(3), unit(4), unit(5), unit(6), unit(7),
                      unit(8)},
                     {}};
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            const Operator c = commutator(basis.generators[i], basis.generators[j]);
            for (std::size_t k = 0; k < 9; ++k) {
                // The matrix units are orthonormal under tr(A^dagger B).
                basis.structure[i][j][k] =
                    (basis.generators[k].matrix().adjoint() * c.matrix()).trace();
            }
        }
    }
    return basis;
}

double structure_closure_residual(const LevelBasis& basis) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            Operator expansion = Operator::zero(Factors{3});
            for (std::size_t k = 0; k < 9; ++k) {
                expansion += basis.structure[i][j][k] * basis.generators[k];
            }
            const Operator diff =
                commutator(basis.generators[i], basis.generators[j]) - expansion;
            worst = std::max(worst, diff.frobenius_norm());
        }
    }
    return worst;
}

LevelGauge gauge_decompose(double e1, double e2, double e3) {
    return LevelGauge{e2 - e1, e3 - e2, e2};
}

Operator level_hamiltonian(const LevelGauge& gauge) {
    const Operator s = level_s_matrix();
    return gauge.shift * Operator::identity(Factors{3}) +
           (0.5 * (gauge.omega0 + gauge.omega1)) * s -
           (0.5 * (gauge.omega0 - gauge.omega1)) * (s * s);
}

std::vector<InvariantBlock> block_decompose(const Operator& hamiltonian,
                                            const std::vector<Operator>& conserved) {
    const double h_norm = hamiltonian.frobenius_norm();
    for (const Operator& c : conserved) {
        if (c.dim() != hamiltonian.dim()) {
            throw DimensionError("block_decompose: conserved operator dimension mismatch");
        }
        if (!c.is_diagonal()) {
            throw ValidationError("block_decompose: conserved operator is not diagonal");
        }
        const double residual = commutator(c, hamiltonian).frobenius_norm();
        if (residual > 1e-12 * h_norm) {
            throw ValidationError("block_decompose: conserved operator does not commute with H "
                                  "(residual " + std::to_string(residual) + ")");
        }
    }

    // Conserved eigenvalues are integers or half-integers; a fine grid makes
    // them exact map keys.
    std::map<std::vector<long long>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < hamiltonian.dim(); ++i) {
        std::vector<long long> key;
        key.reserve(conserved.size());
        for (const Operator& c : conserved) {
            key.push_back(std::llround(c(i, i).real() * 1e9));
        }
        groups[key].push_back(i);
    }

    std::vector<InvariantBlock> blocks;
    blocks.reserve(groups.size());
    for (auto& [key, indices] : groups) {
        InvariantBlock b;
        b.indices = std::move(indices);
        b.block = restrict(hamiltonian, Subspace{b.indices});
        for (std::size_t i : b.indices) {
            b.labels.push_back(basis_label(i, hamiltonian.factors()));
        }
        for (const Operator& c : conserved) {
            b.conserved_values.push_back(c(b.indices.front(), b.indices.front()).real());
        }
        if (b.indices.size() == 2) {
            Eigen::SelfAdjointEigenSolver<Matrix> solver(b.block, Eigen::EigenvaluesOnly);
            b.splitting = solver.eigenvalues()(1) - solver.eigenvalues()(0);
        }
        blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end(), [](const InvariantBlock& a, const InvariantBlock& b) {
        return a.indices.front() < b.indices.front();
    });
    return blocks;
}

std::vector<InvariantBlock> invariant_blocks(const TwoLevelModel& model) {
    return block_decompose(model.hamiltonian, {model.excitation_number});
}

std::vector<InvariantBlock> invariant_blocks(const ThreeLevelModel& model) {
    return block_decompose(model.hamiltonian, {model.conserved1, model.conserved2, model.level_s2});
}

const InvariantBlock& block_containing(const std::vector<InvariantBlock>& blocks,
                                       std::size_t index) {
    for (const InvariantBlock& b : blocks) {
        if (std::find(b.indices.begin(), b.indices.end(), index) != b.indices.end()) {
            return b;
        }
    }
    throw DimensionError("no invariant block contains basis index " + std::to_string(index));
}

} // namespace mpabs
