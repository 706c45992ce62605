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

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "mpabs/algebra.hpp"
#include "mpabs/fock.hpp"

namespace mpabs {

// Conventions used throughout (hbar = 1, frequencies in rad per unit time):
//
//  * Two-level factor ordering is (mode, level) with level 0 = excited and
//    level 1 = ground, so sigma_z = diag(1, -1) and sigma_+ = |e><g|.
//  * Three-level factor ordering is (mode 1, mode 2, level) with levels
//    (top, middle, bottom), so S = diag(1, 0, -1).
//  * The dipole element beta multiplying (a^dagger^M sigma_- - a^M sigma_+)
//    only gives a Hermitian Hamiltonian when it is imaginary. The models take
//    a real coupling g >= 0 and use beta = i g; every closed-form expression
//    depends on |beta|^2 = g^2 only.

/// Realization of the two-level sigma_z.
enum class SpinNorm {
    pauli, ///< sigma_z = diag(1, -1)
    half,  ///< sigma_z = diag(1, -1) / 2
};

const char* to_string(SpinNorm norm);

struct SpinMatrices {
    Operator sigma_z;
    Operator sigma_plus;
    Operator sigma_minus;
};

SpinMatrices spin_matrices(SpinNorm norm);

struct TwoLevelParams {
    double omega = 1.0;  ///< laser frequency
    double omega0 = 1.0; ///< transition frequency
    double g = 0.1;      ///< coupling, beta = i g
    unsigned photons = 1;
    ModeDim fock_dim{8};

    /// Throws ValidationError unless frequencies are finite and >= 0,
    /// photons >= 1 and fock_dim >= photons + 2.
    void validate() const;
};

struct ThreeLevelParams {
    double omega_l1 = 1.0; ///< beam 1 frequency
    double omega_l2 = 1.0; ///< beam 2 frequency
    double omega0 = 1.0;   ///< lower transition (E2 - E1)
    double omega1 = 1.0;   ///< upper transition (E3 - E2)
    double g = 0.1;        ///< coupling, beta = i g
    unsigned photons_beam1 = 1;
    unsigned total_photons = 2;
    ModeDim dim1{6};
    ModeDim dim2{6};

    unsigned photons_beam2() const { return total_photons - photons_beam1; }

    /// Throws ValidationError unless frequencies are finite and >= 0,
    /// 1 <= photons_beam1 <= total_photons, dim1 >= photons_beam1 + 2 and
    /// dim2 >= photons_beam2() + 2.
    void validate() const;
};

struct TwoLevelModel {
    TwoLevelParams params;
    Operator hamiltonian;
    /// a^dagger a + M sigma_+ sigma_-, conserved.
    Operator excitation_number;
    Operator photon_number;
    Operator sigma_z;
    Operator sigma_plus;
    Operator sigma_minus;
    Operator annihilation;
    Operator raise_m; ///< a^dagger^M (x) I
    Operator lower_m; ///< a^M (x) I
    /// States with n <= dim - 1 - M, where truncation does not touch identities.
    Subspace buffered;
};

/// H2 = omega n + (omega0/2) sigma_z + i g (a^dagger^M sigma_- - a^M sigma_+).
/// The spin norm selects the sigma_z realization used inside H2 as well.
TwoLevelModel build_two_level(const TwoLevelParams& params, SpinNorm norm = SpinNorm::pauli);

struct ThreeLevelModel {
    ThreeLevelParams params;
    Operator hamiltonian;
    Operator n1;
    Operator n2;
    Operator conserved1; ///< n1 + (M/2) S
    Operator conserved2; ///< n2 + ((N-M)/2) S
    Operator level_s;    ///< S = diag(1, 0, -1) on the level factor
    Operator level_s2;   ///< S^2
    Operator raise_levels; ///< |top><bottom|
    Operator lower_levels; ///< |bottom><top|
    Subspace buffered;
};

/// H3 = wL1 n1 + wL2 n2 + (w0+w1)/2 S - (w0-w1)/2 S^2
///      + i g (a1^dagger^M a2^dagger^(N-M) Sigma_- - a1^M a2^(N-M) Sigma_+),
/// with Sigma_+ = S2 S6 = |top><bottom| and Sigma_- = S8 S4 = |bottom><top|.
ThreeLevelModel build_three_level(const ThreeLevelParams& params);

// U(3) level basis -------------------------------------------------------

/// Matrix-unit generators of U(3) on (top, middle, bottom).
///
/// Generator k (0-based, k = 0..8) is E_ij = |i><j| with i = k / 3 and
/// j = k % 3. In 1-based numbering S_k this is S_1 = E_11, S_2 = E_12,
/// S_3 = E_13, S_4 = E_21, S_5 = E_22, S_6 = E_23, S_7 = E_31, S_8 = E_32,
/// S_9 = E_33; in particular S_5 = diag(0, 1, 0).
struct LevelBasis {
    Operator s;
    Operator s5;
    std::array<Operator, 9> generators;
    /// [g_i, g_j] = sum_k structure[i][j][k] g_k.
    std::array<std::array<std::array<Complex, 9>, 9>, 9> structure{};

    const Operator& generator(std::size_t one_based) const { return generators.at(one_based - 1); }
};

/// Builds the generators and computes the structure constants by brute force
/// (commutator followed by Hilbert-Schmidt projection).
LevelBasis level_basis();

/// Largest ||[g_i, g_j] - sum_k C^k_ij g_k||_F over all 81 pairs.
double structure_closure_residual(const LevelBasis& basis);

struct LevelGauge {
    double omega0; ///< E2 - E1
    double omega1; ///< E3 - E2
    double shift;  ///< E2
};

LevelGauge gauge_decompose(double e1, double e2, double e3);

/// shift I + (w0+w1)/2 S - (w0-w1)/2 S^2, which is diag(E3, E2, E1).
Operator level_hamiltonian(const LevelGauge& gauge);

// Invariant blocks -----------------------------------------------------------

struct InvariantBlock {
    std::vector<std::size_t> indices;
    std::vector<std::vector<std::size_t>> labels; ///< basis_label of each index
    std::vector<double> conserved_values;
    Matrix block;
    /// Eigenvalue difference, only for 2x2 blocks.
    std::optional<double> splitting;
};

/// Groups basis states by their joint conserved eigenvalues and restricts H
/// to each group. Blocks come ordered by their first basis index.
///
/// Every conserved operator must be diagonal in the computational basis and
/// commute with H to 1e-12 relative; ValidationError otherwise.
std::vector<InvariantBlock> block_decompose(const Operator& hamiltonian,
                                            const std::vector<Operator>& conserved);

/// Blocks of H2 keyed by the excitation number.
std::vector<InvariantBlock> invariant_blocks(const TwoLevelModel& model);

/// Blocks of H3 keyed by (N1, N2, S^2). S^2 is conserved as well and keeps the
/// uncoupled middle level out of the top/bottom pairs when M and N - M are
/// both even.
std::vector<InvariantBlock> invariant_blocks(const ThreeLevelModel& model);

/// The block containing a given basis index.
const InvariantBlock& block_containing(const std::vector<InvariantBlock>& blocks,
                                       std::size_t index);

} // namespace mpabs
