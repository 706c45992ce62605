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

#include <string>
#include <utility>
#include <vector>

#include "mpabs/algebra.hpp"
#include "mpabs/models.hpp"

namespace mpabs {

// Residual tolerance tiers.
inline constexpr double kExactTolerance = 1e-12;           // linear-algebra identities
inline constexpr double kDoubleCommutatorTolerance = 1e-10; // second-derivative identities
inline constexpr double kLevelIdentityTolerance = 1e-8;     // three-level identity search

/// A sign/normalization reading of an identity: the spin realization and
/// one +/-1 flag per right-hand-side term.
struct Convention {
    SpinNorm spin_norm = SpinNorm::pauli;
    std::vector<int> term_signs;

    /// e.g. "pauli(+,+,-,-)".
    std::string to_string() const;

    friend bool operator==(const Convention&, const Convention&) = default;
};

struct IdentityReport {
    std::string identity;
    double residual = 0.0;
    /// First convention in search order under tolerance, else the minimizer.
    Convention best_convention;
    /// Every searched convention in search order (lexicographic, '+' first).
    std::vector<std::pair<Convention, double>> residuals_all;
    double tolerance = 0.0;

    bool matched() const { return residual < tolerance; }
    /// One-line verdict; states explicitly when no variant matches.
    std::string verdict() const;
};

/// ||P(A - B)P||_F / max(||P A P||_F, 1) on a subspace P.
double relative_residual(const Operator& lhs, const Operator& rhs, const Subspace& subspace);

/// ||P(i[H, X] - rhs)P||_F / max(||P rhs P||_F, 1): how far rhs is from dX/dt.
double heisenberg_residual(const Operator& hamiltonian, const Operator& observable,
                           const Operator& rhs, const Subspace& subspace);

/// ||P[C, H]P||_F / max(||P H P||_F, 1) for each conserved candidate C.
std::vector<double> check_constants(const Operator& hamiltonian,
                                    const std::vector<Operator>& conserved,
                                    const Subspace& subspace);

// Two-level spin algebra ----------------------------------------------------

struct SpinRelation {
    std::string relation;
    double residual_pauli = 0.0;
    double residual_half = 0.0;
};

struct SpinRelationReport {
    std::vector<SpinRelation> relations;
    /// True when one normalization satisfies every listed relation.
    bool consistent = false;
    std::string verdict;
};

/// [sz, s+] = s+, [sz, s-] = -s-, [s+, s-] = sz, {s+, s-} = I under both
/// sigma_z normalizations. No 2x2 realization satisfies all four.
SpinRelationReport check_spin_relations();

/// The three Heisenberg equations for sigma_z, sigma_+ and a, each searched
/// over both spin normalizations and the sign of each of its two terms.
std::vector<IdentityReport> check_heisenberg(const TwoLevelParams& params);

/// Second time derivative of sigma_z, -[[sz, H], H], against the assembled
///   -2 D (H - w (N - M/2)) - D^2 sz + 2 g^2 M A2(n) sz + 2 g^2 M B2(n) sz^2,
/// D = M w - w0, with one sign flag per term and both normalizations.
IdentityReport check_spin_acceleration(const TwoLevelParams& params);

/// Same check with the Hamiltonian built from `model` and every scalar of the
/// right-hand side taken from `formula`; used for sensitivity controls.
IdentityReport check_spin_acceleration(const TwoLevelParams& model, const TwoLevelParams& formula);

/// Second time derivative of S, -[[S, H3], H3], against
///   s0 eps (H3 - wL1 N1 - wL2 N2) + s1 Wc^2(n1, n2) S + s2 Wr^2(n1, n2) S^2
/// over the eight sign choices (s0, s1, s2).
IdentityReport check_level_acceleration(const ThreeLevelParams& params);

IdentityReport check_level_acceleration(const ThreeLevelParams& model,
                                        const ThreeLevelParams& formula);

/// For N = M = 1: largest relative difference between the 2x2 block
/// splittings of H3 and those of the two-level model it collapses to as
/// w1 = wL1 -> 0 (omega = 0, omega0 = w0, same g). Blocks are paired by the
/// photon number of their upper state.
double check_effective_two_level(const ThreeLevelParams& params);

} // namespace mpabs
