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

#include "mpabs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "mpabs/error.hpp"
#include "mpabs/fock.hpp"
#include "mpabs/rabi.hpp"

namespace mpabs {

namespace {

constexpr Complex kI{0.0, 1.0};

double restricted_norm(const Operator& op, const Subspace& subspace) {
    return restrict(op, subspace).norm();
}

double gap(const Operator& a, const Operator& b, const Subspace& subspace) {
    if (a.dim() != b.dim()) {
        throw DimensionError("residual: dimension mismatch");
    }
    return restrict(a - b, subspace).norm();
}

/// Diagonal operator whose entry at each basis state is f(label).
Operator label_diagonal(const Factors& factors,
                        const std::function<double(const std::vector<std::size_t>&)>& f) {
    std::size_t dim = 1;
    for (std::size_t d : factors) {
        dim *= d;
    }
    RealVector values(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        values(static_cast<Eigen::Index>(i)) = f(basis_label(i, factors));
    }
    return Operator::diagonal(values, factors);
}

struct Candidate {
    Operator lhs;
    std::vector<Operator> terms;
};

using CandidateBuilder = std::function<Candidate(SpinNorm)>;
using ResidualFn = std::function<double(const Operator& lhs, const Operator& rhs)>;

/// Exhaustive search, lexicographic order (norm, then signs with '+' < '-').
/// Reports the first convention under tolerance, else the minimal residual.
IdentityReport search_conventions(std::string identity, const std::vector<SpinNorm>& norms,
                                  const CandidateBuilder& build, const ResidualFn& residual,
                                  double tolerance) {
    IdentityReport report;
    report.identity = std::move(identity);
    report.tolerance = tolerance;
    report.residual = std::numeric_limits<double>::infinity();
    for (SpinNorm norm : norms) {
        const Candidate c = build(norm);
        const std::size_t n_terms = c.terms.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << n_terms); ++mask) {
            Convention conv{norm, {}};
            Operator rhs = Operator::zero(c.lhs.factors());
            for (std::size_t t = 0; t < n_terms; ++t) {
                const int sign = (mask >> (n_terms - 1 - t)) & 1U ? -1 : 1;
                conv.term_signs.push_back(sign);
                rhs += static_cast<double>(sign) * c.terms[t];
            }
            const double r = residual(c.lhs, rhs);
            report.residuals_all.emplace_back(conv, r);
            const bool locked = report.residual < tolerance;
            if (!locked && r < report.residual) {
                report.residual = r;
                report.best_convention = conv;
            }
        }
    }
    return report;
}

Operator double_commutator(const Operator& x, const Operator& h) {
    return -commutator(commutator(x, h), h);
}

} // namespace

std::string Convention::to_string() const {
    std::string out = mpabs::to_string(spin_norm);
    out += '(';
    for (std::size_t i = 0; i < term_signs.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += term_signs[i] > 0 ? '+' : '-';
    }
    out += ')';
    return out;
}

std::string IdentityReport::verdict() const {
    std::ostringstream os;
    os.precision(3);
    if (matched()) {
        os << identity << ": reproduced, residual " << residual << " < " << tolerance << " under "
           << best_convention.to_string();
    } else {
        os << identity << ": no convention variant reproduces the identity; minimal residual "
           << residual << " under " << best_convention.to_string() << " (tolerance "
           << tolerance << ")";
    }
    return os.str();
}

double relative_residual(const Operator& lhs, const Operator& rhs, const Subspace& subspace) {
    return gap(lhs, rhs, subspace) / std::max(restricted_norm(lhs, subspace), 1.0);
}

double heisenberg_residual(const Operator& hamiltonian, const Operator& observable,
                           const Operator& rhs, const Subspace& subspace) {
    const Operator derivative = kI * commutator(hamiltonian, observable);
    return gap(derivative, rhs, subspace) / std::max(restricted_norm(rhs, subspace), 1.0);
}

std::vector<double> check_constants(const Operator& hamiltonian,
                                    const std::vector<Operator>& conserved,
                                    const Subspace& subspace) {
    const double scale = std::max(restricted_norm(hamiltonian, subspace), 1.0);
    std::vector<double> out;
    out.reserve(conserved.size());
    for (const Operator& c : conserved) {
        out.push_back(restricted_norm(commutator(c, hamiltonian), subspace) / scale);
    }
    return out;
}

SpinRelationReport check_spin_relations() {
    const SpinMatrices p = spin_matrices(SpinNorm::pauli);
    const SpinMatrices h = spin_matrices(SpinNorm::half);
    const Subspace all = Subspace::full(2);
    const Operator id = Operator::identity(Factors{2});

    auto both = [&](const char* name, auto&& lhs, auto&& rhs) {
        return SpinRelation{name, gap(lhs(p), rhs(p), all), gap(lhs(h), rhs(h), all)};
    };

    SpinRelationReport report;
    report.relations = {
        both("[sz,s+] = s+", [](const SpinMatrices& s) { return commutator(s.sigma_z, s.sigma_plus); },
             [](const SpinMatrices& s) { return s.sigma_plus; }),
        both("[sz,s-] = -s-", [](const SpinMatrices& s) { return commutator(s.sigma_z, s.sigma_minus); },
             [](const SpinMatrices& s) { return -s.sigma_minus; }),
        both("[s+,s-] = sz", [](const SpinMatrices& s) { return commutator(s.sigma_plus, s.sigma_minus); },
             [](const SpinMatrices& s) { return s.sigma_z; }),
        both("{s+,s-} = I", [](const SpinMatrices& s) { return anticommutator(s.sigma_plus, s.sigma_minus); },
             [&](const SpinMatrices&) { return id; }),
    };
    bool pauli_ok = true;
    bool half_ok = true;
    for (const SpinRelation& r : report.relations) {
        pauli_ok = pauli_ok && r.residual_pauli < kExactTolerance;
        half_ok = half_ok && r.residual_half < kExactTolerance;
    }
    report.consistent = pauli_ok || half_ok;
    report.verdict = report.consistent
                         ? std::string("spin relations consistent under ") +
                               (pauli_ok ? "pauli" : "half") + " normalization"
                         : "spin relations inconsistent: pauli normalization fails [sz,s+-] = "
                           "+-s+-, half normalization fails [s+,s-] = sz (factor 2)";
    return report;
}

std::vector<IdentityReport> check_heisenberg(const TwoLevelParams& params) {
    params.validate();
    const unsigned m = params.photons;
    const Complex beta = kI * params.g;
    const std::vector<SpinNorm> norms{SpinNorm::pauli, SpinNorm::half};
    // Subspace is independent of the spin norm.
    const Subspace buffered = build_two_level(params).buffered;

    // Candidate.lhs carries i[H, X]; the residual is normalized by the rhs.
    const ResidualFn heisenberg = [&](const Operator& derivative, const Operator& rhs) {
        return gap(derivative, rhs, buffered) / std::max(restricted_norm(rhs, buffered), 1.0);
    };

    std::vector<IdentityReport> reports;
    reports.push_back(search_conventions(
        "d(sigma_z)/dt = 2i beta (a^+M s- + a^M s+)", norms,
        [&](SpinNorm norm) {
            const TwoLevelModel mdl = build_two_level(params, norm);
            return Candidate{kI * commutator(mdl.hamiltonian, mdl.sigma_z),
                             {(2.0 * kI * beta) * (mdl.raise_m * mdl.sigma_minus),
                              (2.0 * kI * beta) * (mdl.lower_m * mdl.sigma_plus)}};
        },
        heisenberg, kExactTolerance));
    reports.push_back(search_conventions(
        "d(sigma_+)/dt = i (w0 s+ - beta a^+M sz)", norms,
        [&](SpinNorm norm) {
            const TwoLevelModel mdl = build_two_level(params, norm);
            return Candidate{kI * commutator(mdl.hamiltonian, mdl.sigma_plus),
                             {(kI * params.omega0) * mdl.sigma_plus,
                              (-kI * beta) * (mdl.raise_m * mdl.sigma_z)}};
        },
        heisenberg, kExactTolerance));
    reports.push_back(search_conventions(
        "da/dt = -i (beta M a^+(M-1) s- + w a)", norms,
        [&](SpinNorm norm) {
            const TwoLevelModel mdl = build_two_level(params, norm);
            const Operator raise_m1 =
                kron(ladder_power(params.fock_dim, m - 1, Ladder::raise),
                     Operator::identity(Factors{2}));
            return Candidate{kI * commutator(mdl.hamiltonian, mdl.annihilation),
                             {(-kI * beta * static_cast<double>(m)) * (raise_m1 * mdl.sigma_minus),
                              (-kI * params.omega) * mdl.annihilation}};
        },
        heisenberg, kExactTolerance));
    return reports;
}

IdentityReport check_spin_acceleration(const TwoLevelParams& params) {
    return check_spin_acceleration(params, params);
}

IdentityReport check_spin_acceleration(const TwoLevelParams& model, const TwoLevelParams& formula) {
    model.validate();
    formula.validate();
    if (model.photons != formula.photons || model.fock_dim != formula.fock_dim) {
        throw ValidationError("model and formula parameters must share M and the Fock dimension");
    }
    const unsigned m = formula.photons;
    const double detuning = static_cast<double>(m) * formula.omega - formula.omega0;
    const double g2 = formula.g * formula.g;
    const Subspace buffered = build_two_level(model).buffered;

    return search_conventions(
        "d2(sigma_z)/dt2 two-level identity", {SpinNorm::pauli, SpinNorm::half},
        [&](SpinNorm norm) {
            const TwoLevelModel mdl = build_two_level(model, norm);
            const Factors& f = mdl.hamiltonian.factors();
            const Operator a2 = label_diagonal(f, [m](const std::vector<std::size_t>& l) {
                return static_cast<double>(normal_antinormal_sum(l[0], m));
            });
            const Operator b2 = label_diagonal(f, [m](const std::vector<std::size_t>& l) {
                return static_cast<double>(ordering_gap_sum(l[0], m));
            });
            const Operator id = Operator::identity(f);
            const Operator shifted =
                mdl.hamiltonian -
                formula.omega * (mdl.excitation_number - (0.5 * static_cast<double>(m)) * id);
            return Candidate{
                double_commutator(mdl.sigma_z, mdl.hamiltonian),
                {(-2.0 * detuning) * shifted, (-detuning * detuning) * mdl.sigma_z,
                 (2.0 * g2 * static_cast<double>(m)) * (a2 * mdl.sigma_z),
                 (2.0 * g2 * static_cast<double>(m)) * (b2 * (mdl.sigma_z * mdl.sigma_z))}};
        },
        [&](const Operator& lhs, const Operator& rhs) {
            return relative_residual(lhs, rhs, buffered);
        },
        kDoubleCommutatorTolerance);
}

IdentityReport check_level_acceleration(const ThreeLevelParams& params) {
    return check_level_acceleration(params, params);
}

IdentityReport check_level_acceleration(const ThreeLevelParams& model,
                                        const ThreeLevelParams& formula) {
    model.validate();
    formula.validate();
    if (model.photons_beam1 != formula.photons_beam1 ||
        model.total_photons != formula.total_photons || model.dim1 != formula.dim1 ||
        model.dim2 != formula.dim2) {
        throw ValidationError("model and formula parameters must share M, N and dimensions");
    }
    const ThreeLevelModel mdl = build_three_level(model);
    const Factors& f = mdl.hamiltonian.factors();
    const double eps = detuning_factor(formula);
    const Operator center = label_diagonal(f, [&](const std::vector<std::size_t>& l) {
        return center_rabi_squared({l[0], l[1], formula});
    });
    const Operator relative = label_diagonal(f, [&](const std::vector<std::size_t>& l) {
        return relative_rabi_squared({l[0], l[1], formula});
    });
    const Operator shifted = mdl.hamiltonian - formula.omega_l1 * mdl.conserved1 -
                             formula.omega_l2 * mdl.conserved2;
    const Candidate candidate{double_commutator(mdl.level_s, mdl.hamiltonian),
                              {eps * shifted, center * mdl.level_s, relative * mdl.level_s2}};

    return search_conventions(
        "d2(S)/dt2 three-level identity", {SpinNorm::pauli},
        [&](SpinNorm) { return candidate; },
        [&](const Operator& lhs, const Operator& rhs) {
            return relative_residual(lhs, rhs, mdl.buffered);
        },
        kLevelIdentityTolerance);
}

double check_effective_two_level(const ThreeLevelParams& params) {
    params.validate();
    if (params.photons_beam1 != 1 || params.total_photons != 1) {
        throw ValidationError("effective two-level reduction requires N = M = 1");
    }
    const ThreeLevelModel three = build_three_level(params);
    TwoLevelParams matched;
    matched.omega = 0.0;
    matched.omega0 = params.omega0;
    matched.g = params.g;
    matched.photons = 1;
    matched.fock_dim = params.dim1;
    const TwoLevelModel two = build_two_level(matched);

    const auto blocks3 = invariant_blocks(three);
    const auto blocks2 = invariant_blocks(two);

    constexpr std::size_t kTop = 0;
    constexpr std::size_t kExcited = 0;
    double worst = 0.0;
    for (std::size_t n = 0; n + 2 <= params.dim1.value(); ++n) {
        const std::array<std::size_t, 2> label2{n, kExcited};
        const InvariantBlock& b2 =
            block_containing(blocks2, basis_index(label2, two.hamiltonian.factors()));
        for (std::size_t n2 = 0; n2 < params.dim2.value(); ++n2) {
            const std::array<std::size_t, 3> label3{n, n2, kTop};
            const InvariantBlock& b3 =
                block_containing(blocks3, basis_index(label3, three.hamiltonian.factors()));
            if (!b2.splitting || !b3.splitting) {
                throw NumericalError("effective two-level reduction: expected coupled 2x2 blocks");
            }
            const double diff = std::abs(*b3.splitting - *b2.splitting);
            const double scale = std::abs(*b2.splitting);
            if (diff > 0.0) {
                worst = std::max(worst, scale > 0.0 ? diff / scale
                                                    : std::numeric_limits<double>::infinity());
            }
        }
    }
    return worst;
}

} // namespace mpabs
