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


#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "mpabs/cli.hpp"
#include "mpabs/dynamics.hpp"
#include "mpabs/error.hpp"
#include "mpabs/rabi.hpp"
#include "mpabs/verify.hpp"

namespace mpabs::cli {

namespace {

constexpr double kEvolveDefaultTime = 50.0;
constexpr std::size_t kEvolveDefaultSamples = 1024;

Cell optional_cell(const std::optional<double>& v) {
    return v ? Cell(*v) : Cell();
}

Cell count_cell(Count v) {
    return std::uint64_t{v};
}

void add_identity(const IdentityReport& r, Table& identities, Table& search) {
    identities.rows.push_back({r.identity, r.best_convention.to_string(), r.residual, r.tolerance,
                               r.matched(), r.verdict()});
    for (const auto& [conv, residual] : r.residuals_all) {
        search.rows.push_back({r.identity, conv.to_string(), residual});
    }
}

std::vector<Table> verify_two_level(const TwoLevelParams& p) {
    Table relations{"spin_relations", {"relation", "residual_pauli", "residual_half"}, {}};
    Table notes{"notes", {"topic", "text"}, {}};
    const SpinRelationReport spin = check_spin_relations();
    for (const SpinRelation& r : spin.relations) {
        relations.rows.push_back({r.relation, r.residual_pauli, r.residual_half});
    }
    notes.rows.push_back({std::string("spin_relations"), spin.verdict});

    Table identities{"identities",
                     {"identity", "convention", "residual", "tolerance", "matched", "verdict"},
                     {}};
    Table search{"convention_search", {"identity", "convention", "residual"}, {}};
    for (const IdentityReport& r : check_heisenberg(p)) {
        add_identity(r, identities, search);
    }
    add_identity(check_spin_acceleration(p), identities, search);

    const TwoLevelModel mdl = build_two_level(p);
    Table constants{"constants", {"quantity", "residual", "tolerance", "conserved"}, {}};
    const double r = check_constants(mdl.hamiltonian, {mdl.excitation_number}, mdl.buffered)[0];
    constants.rows.push_back({std::string("excitation_number"), r, kExactTolerance,
                              r < kExactTolerance});
    return {relations, identities, search, constants, notes};
}

std::vector<Table> verify_three_level(const ThreeLevelParams& p) {
    Table identities{"identities",
                     {"identity", "convention", "residual", "tolerance", "matched", "verdict"},
                     {}};
    Table search{"convention_search", {"identity", "convention", "residual"}, {}};
    add_identity(check_level_acceleration(p), identities, search);

    const ThreeLevelModel mdl = build_three_level(p);
    Table constants{"constants", {"quantity", "residual", "tolerance", "conserved"}, {}};
    const auto r = check_constants(mdl.hamiltonian, {mdl.conserved1, mdl.conserved2, mdl.level_s2},
                                   mdl.buffered);
    const std::array<const char*, 3> names{"conserved1", "conserved2", "level_s2"};
    for (std::size_t i = 0; i < names.size(); ++i) {
        constants.rows.push_back({std::string(names[i]), r[i], kExactTolerance, r[i] < kExactTolerance});
    }

    Table algebra{"level_algebra", {"check", "residual"}, {}};
    const LevelBasis basis = level_basis();
    algebra.rows.push_back({std::string("structure_closure"), structure_closure_residual(basis)});
    const Operator id = Operator::identity(Factors{3});
    algebra.rows.push_back(
        {std::string("s5_equals_identity_minus_s_squared"),
         (basis.s5 - (id - basis.s * basis.s)).frobenius_norm()});

    std::vector<Table> out{identities, search, constants, algebra};
    if (p.photons_beam1 == 1 && p.total_photons == 1) {
        Table reduction{"reduction", {"case", "max_relative_splitting_difference"}, {}};
        reduction.rows.push_back({std::string("given parameters"), check_effective_two_level(p)});
        ThreeLevelParams limit = p;
        limit.omega1 = 0.0;
        limit.omega_l1 = 0.0;
        reduction.rows.push_back({std::string("omega1 = omega-l1 = 0"), check_effective_two_level(limit)});
        out.push_back(reduction);
    }
    return out;
}

Table rabi_two_level(const RunConfig& c) {
    const Count excitation = c.excitation_set ? c.excitation : c.n + c.two_level.photons;
    const double sq = omega_r_squared({c.n, excitation, c.two_level});
    Table t{"rabi", {"n", "neig", "omega_r_squared", "omega_r_magnitude"}, {}};
    t.rows.push_back({count_cell(c.n), count_cell(excitation), sq, signed_root_magnitude(sq)});
    return t;
}

Table rabi_three_level(const ThreeLevelParams& p, Count n1, Count n2) {
    const double center = center_rabi_squared({n1, n2, p});
    const double relative = relative_rabi_squared({n1, n2, p});
    Table t{"rabi",
            {"n1", "n2", "detuning_factor", "center_squared", "relative_squared",
             "center_magnitude", "relative_magnitude"},
            {}};
    t.rows.push_back({count_cell(n1), count_cell(n2), detuning_factor(p), center, relative,
                      signed_root_magnitude(center), signed_root_magnitude(relative)});
    return t;
}

Table sweep_table(const RunConfig& c) {
    if (c.model == ModelKind::two_level) {
        Table t{"sweep", {"n", "neig", "omega_r_squared", "error"}, {}};
        for (const auto& row : sweep_two_level(c.two_level, c.n_min, c.n_max)) {
            t.rows.push_back({count_cell(row.n), count_cell(row.excitation),
                              optional_cell(row.omega_r_squared),
                              row.error.empty() ? Cell() : Cell(row.error)});
        }
        return t;
    }
    Table t{"sweep", {"n1", "n2", "center_squared", "relative_squared", "error"}, {}};
    for (const auto& row :
         sweep_three_level(c.three_level, c.n1_min, c.n1_max, c.n2_min, c.n2_max)) {
        t.rows.push_back({count_cell(row.n1), count_cell(row.n2), optional_cell(row.center_squared),
                          optional_cell(row.relative_squared),
                          row.error.empty() ? Cell() : Cell(row.error)});
    }
    return t;
}

Table evolve_table(const RunConfig& c) {
    const TimeGrid grid{c.t_max > 0.0 ? c.t_max : kEvolveDefaultTime,
                        c.samples > 0 ? c.samples : kEvolveDefaultSamples};
    grid.validate();
    Operator hamiltonian = Operator::zero(Factors{2});
    std::vector<std::size_t> label;
    std::vector<NamedObservable> observables;
    if (c.model == ModelKind::two_level) {
        const TwoLevelModel m = build_two_level(c.two_level);
        if (c.n >= m.params.fock_dim.value()) {
            throw ValidationError("evolve: --n must be below --dim");
        }
        hamiltonian = m.hamiltonian;
        label = {static_cast<std::size_t>(c.n), c.level == "g" ? std::size_t{1} : std::size_t{0}};
        observables = {{"sigma_z", m.sigma_z},
                       {"photons", m.photon_number},
                       {"excitation", m.excitation_number},
                       {"energy", m.hamiltonian}};
    } else {
        const ThreeLevelModel m = build_three_level(c.three_level);
        if (c.n1 >= m.params.dim1.value() || c.n2 >= m.params.dim2.value()) {
            throw ValidationError("evolve: --n1 and --n2 must be below --dim1 and --dim2");
        }
        hamiltonian = m.hamiltonian;
        const std::size_t level = c.level == "top" ? 0 : c.level == "middle" ? 1 : 2;
        label = {static_cast<std::size_t>(c.n1), static_cast<std::size_t>(c.n2), level};
        observables = {{"S", m.level_s},    {"S2", m.level_s2},
                       {"N1", m.conserved1}, {"N2", m.conserved2},
                       {"energy", m.hamiltonian}};
    }
    const Ket psi0 = Ket::basis(hamiltonian.dim(), basis_index(label, hamiltonian.factors()));
    const Evolution ev = evolve(hamiltonian, psi0, grid, observables);

    Table t{"evolve", {"t"}, {}};
    for (const std::string& name : ev.names) {
        t.columns.push_back(name);
    }
    for (std::size_t i = 0; i < grid.samples; ++i) {
        std::vector<Cell> row{ev.series.front().times[i]};
        for (const TimeSeries& s : ev.series) {
            row.emplace_back(s.values[i]);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table spectrum_table(const RunConfig& c) {
    std::optional<TimeGrid> grid;
    if (c.t_max > 0.0) {
        grid = TimeGrid{c.t_max, c.samples > 0 ? c.samples : kDefaultSamples};
    }
    if (c.model == ModelKind::two_level) {
        const TwoLevelComparison r = rabi_compare(c.two_level, c.n, grid);
        Table t{"spectrum",
                {"n", "exact_splitting", "formula_squared", "formula_frequency",
                 "measured_frequency", "measured_amplitude", "bin_width", "formula_vs_exact",
                 "measured_vs_exact", "measured_vs_formula", "t_max", "samples",
                 "max_norm_error", "energy_drift", "excitation_drift"},
                {}};
        t.rows.push_back({count_cell(r.n), r.exact_splitting, r.formula_squared,
                          r.formula_frequency,
                          r.measured ? Cell(r.measured->frequency) : Cell(),
                          r.measured ? Cell(r.measured->amplitude) : Cell(), r.bin_width,
                          optional_cell(r.formula_vs_exact), optional_cell(r.measured_vs_exact),
                          optional_cell(r.measured_vs_formula), r.grid.t_max,
                          std::uint64_t{r.grid.samples}, r.max_norm_error, r.energy_drift,
                          r.excitation_drift});
        return t;
    }
    const ThreeLevelComparison r = three_level_compare(c.three_level, c.n1, c.n2, grid);
    Table t{"spectrum",
            {"n1", "n2", "exact_splitting", "center_squared", "relative_squared",
             "center_frequency", "relative_frequency", "s_peak_frequency", "s2_peak_frequency",
             "bin_width", "s_peak_vs_exact", "center_vs_exact", "s2_spread", "t_max", "samples",
             "max_norm_error", "conserved1_drift", "conserved2_drift"},
            {}};
    t.rows.push_back({count_cell(r.n1), count_cell(r.n2), optional_cell(r.exact_splitting),
                      r.center_squared, r.relative_squared, r.center_frequency,
                      r.relative_frequency, r.s_peak ? Cell(r.s_peak->frequency) : Cell(),
                      r.s2_peak ? Cell(r.s2_peak->frequency) : Cell(), r.bin_width,
                      optional_cell(r.s_peak_vs_exact), optional_cell(r.center_vs_exact),
                      r.s2_spread, r.grid.t_max, std::uint64_t{r.grid.samples},
                      r.max_norm_error, r.conserved1_drift, r.conserved2_drift});
    return t;
}

std::filesystem::path resolve_output(const std::string& output) {
    std::filesystem::path path(output);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("MPABS_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            path = std::filesystem::path(dir) / path;
        }
    }
    return path;
}

} // namespace

Document execute(const RunConfig& c) {
    validate(c);
    Document doc;
    doc.command = c.command;
    doc.config = echo_config(c);
    const bool two = c.model == ModelKind::two_level;
    switch (c.command) {
    case Command::verify:
        doc.results = two ? verify_two_level(c.two_level) : verify_three_level(c.three_level);
        break;
    case Command::rabi:
        doc.results = {two ? rabi_two_level(c) : rabi_three_level(c.three_level, c.n1, c.n2)};
        break;
    case Command::sweep:
        doc.results = {sweep_table(c)};
        break;
    case Command::evolve:
        doc.results = {evolve_table(c)};
        break;
    case Command::spectrum:
        doc.results = {spectrum_table(c)};
        break;
    }
    return doc;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandLine parser;
    try {
        const RunConfig config = parser.parse(args);
        const Document doc = execute(config);
        std::ostringstream text;
        if (config.format == Format::json) {
            write_json(doc, text);
        } else {
            write_csv(doc, text);
        }
        if (config.output.empty()) {
            out << text.str();
        } else {
            const std::filesystem::path path = resolve_output(config.output);
            std::ofstream file(path, std::ios::binary);
            if (!file || !(file << text.str()) || !file.flush()) {
                throw ValidationError("cannot write output file '" + path.string() + "'");
            }
        }
        return 0;
    } catch (const HelpRequested& help) {
        out << help.text;
        return 0;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n\n" << parser.usage();
        return 1;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace mpabs::cli
