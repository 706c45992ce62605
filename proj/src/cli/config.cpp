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


#include <algorithm>

#include "CLI11.hpp"
#include "mpabs/cli.hpp"
#include "mpabs/error.hpp"

namespace mpabs::cli {

const char* to_string(Command command) {
    switch (command) {
    case Command::verify:
        return "verify";
    case Command::rabi:
        return "rabi";
    case Command::sweep:
        return "sweep";
    case Command::evolve:
        return "evolve";
    case Command::spectrum:
        return "spectrum";
    }
    return "?";
}

const char* to_string(ModelKind model) {
    return model == ModelKind::two_level ? "two-level" : "three-level";
}

struct CommandLine::Impl {
    CLI::App app{"Multiphoton absorption models: identity checks, Rabi frequencies, dynamics",
                 "mpabs"};
    RunConfig cfg;
    std::size_t dim = 8;
    std::size_t dim1 = 6;
    std::size_t dim2 = 6;
    unsigned photons = 1;
    double omega0 = 1.0;
    double g = 0.1;
    std::string model;
    std::string format = "json";
    CLI::Option* n = nullptr;
    CLI::Option* neig = nullptr;
    CLI::Option* n1 = nullptr;
    CLI::Option* n2 = nullptr;
    std::vector<std::pair<CLI::App*, Command>> commands;

    Impl() {
        app.require_subcommand(1);
        app.set_config("--config", "", "flat 'key = value' file; command-line flags take precedence");
        app.allow_config_extras(CLI::config_extras_mode::error);

        app.add_option("--model", model, "two-level or three-level")
            ->check(CLI::IsMember({"two-level", "three-level"}));
        app.add_option("--g", g, "coupling strength, dipole element i g");
        app.add_option("--M", photons, "photons absorbed from beam 1");
        app.add_option("--omega0", omega0, "lower transition frequency");
        app.add_option("--omega", cfg.two_level.omega, "laser frequency (two-level)");
        app.add_option("--dim", dim, "Fock dimension (two-level)");
        app.add_option("--omega-l1", cfg.three_level.omega_l1, "beam 1 frequency (three-level)");
        app.add_option("--omega-l2", cfg.three_level.omega_l2, "beam 2 frequency (three-level)");
        app.add_option("--omega1", cfg.three_level.omega1, "upper transition frequency (three-level)");
        app.add_option("--ntot", cfg.three_level.total_photons, "total photons per excitation (three-level)");
        app.add_option("--dim1", dim1, "mode 1 Fock dimension (three-level)");
        app.add_option("--dim2", dim2, "mode 2 Fock dimension (three-level)");

        n = app.add_option("--n", cfg.n, "photon number (two-level rabi, evolve, spectrum)");
        neig = app.add_option("--neig", cfg.excitation, "excitation number, default n + M (two-level rabi)");
        n1 = app.add_option("--n1", cfg.n1, "mode 1 photon number (three-level)");
        n2 = app.add_option("--n2", cfg.n2, "mode 2 photon number (three-level)");
        app.add_option("--level", cfg.level, "initial level for evolve: e, g / top, middle, bottom");
        app.add_option("--n-min", cfg.n_min, "sweep start (two-level)");
        app.add_option("--n-max", cfg.n_max, "sweep end (two-level)");
        app.add_option("--n1-min", cfg.n1_min, "mode 1 sweep start (three-level)");
        app.add_option("--n1-max", cfg.n1_max, "mode 1 sweep end (three-level)");
        app.add_option("--n2-min", cfg.n2_min, "mode 2 sweep start (three-level)");
        app.add_option("--n2-max", cfg.n2_max, "mode 2 sweep end (three-level)");
        app.add_option("--t-max", cfg.t_max, "evolution time; 0 picks an automatic grid");
        app.add_option("--samples", cfg.samples, "time samples; 0 picks the default");

        app.add_option("--format", format, "json (default) or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        app.add_option("--output", cfg.output, "output file; relative paths resolve against "
                                               "$MPABS_OUTPUT_DIR when set");

        const std::pair<const char*, const char*> subs[] = {
            {"verify", "commutator identities, conserved quantities and limits"},
            {"rabi", "closed-form Rabi frequencies at given quantum numbers"},
            {"sweep", "Rabi frequency tables over photon-number ranges"},
            {"evolve", "time series of observables from a basis state"},
            {"spectrum", "measured oscillation frequency against exact and closed forms"},
        };
        for (std::size_t i = 0; i < std::size(subs); ++i) {
            CLI::App* sub = app.add_subcommand(subs[i].first, subs[i].second);
            sub->fallthrough();
            commands.emplace_back(sub, static_cast<Command>(i));
        }
    }
};

CommandLine::CommandLine() : impl_(std::make_unique<Impl>()) {}
CommandLine::~CommandLine() = default;

std::string CommandLine::usage() const {
    return impl_->app.help();
}

RunConfig CommandLine::parse(const std::vector<std::string>& args) {
    Impl& s = *impl_;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        s.app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{s.app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{s.app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw ValidationError(e.what());
    }
    if (s.app.count("--model") == 0) {
        throw ValidationError("--model is required (two-level or three-level)");
    }

    RunConfig cfg = s.cfg;
    cfg.model = s.model == "two-level" ? ModelKind::two_level : ModelKind::three_level;
    cfg.format = s.format == "csv" ? Format::csv : Format::json;
    for (const auto& [sub, command] : s.commands) {
        if (sub->parsed()) {
            cfg.command = command;
        }
    }
    cfg.n_set = s.n->count() > 0;
    cfg.excitation_set = s.neig->count() > 0;
    cfg.n1_set = s.n1->count() > 0;
    cfg.n2_set = s.n2->count() > 0;

    cfg.two_level.omega0 = s.omega0;
    cfg.two_level.g = s.g;
    cfg.two_level.photons = s.photons;
    cfg.two_level.fock_dim = ModeDim(s.dim);
    cfg.three_level.omega0 = s.omega0;
    cfg.three_level.g = s.g;
    cfg.three_level.photons_beam1 = s.photons;
    cfg.three_level.dim1 = ModeDim(s.dim1);
    cfg.three_level.dim2 = ModeDim(s.dim2);
    return cfg;
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ValidationError(message);
    }
}

} // namespace

void validate(const RunConfig& c) {
    const std::string where = std::string(to_string(c.command)) + " --model " + to_string(c.model);
    const bool two = c.model == ModelKind::two_level;
    if (two) {
        c.two_level.validate();
    } else {
        c.three_level.validate();
    }
    switch (c.command) {
    case Command::verify:
        break;
    case Command::rabi:
        if (two) {
            require(c.n_set, where + " needs --n");
        } else {
            require(c.n1_set && c.n2_set, where + " needs --n1 and --n2");
        }
        break;
    case Command::sweep:
        if (two) {
            require(c.n_min <= c.n_max, "--n-min must not exceed --n-max");
        } else {
            require(c.n1_min <= c.n1_max, "--n1-min must not exceed --n1-max");
            require(c.n2_min <= c.n2_max, "--n2-min must not exceed --n2-max");
        }
        break;
    case Command::evolve:
    case Command::spectrum:
        if (two) {
            require(c.n_set, where + " needs --n");
        } else {
            require(c.n1_set && c.n2_set, where + " needs --n1 and --n2");
        }
        require(c.t_max >= 0.0, "--t-max must be >= 0");
        require(c.samples == 0 || c.samples >= 64, "--samples must be 0 (default) or >= 64");
        require(c.command != Command::spectrum || c.samples == 0 || c.t_max > 0.0,
                "spectrum --samples needs --t-max");
        break;
    }
    if (!c.level.empty()) {
        require(c.command == Command::evolve, "--level only applies to evolve");
        const std::vector<std::string> allowed =
            two ? std::vector<std::string>{"e", "g"}
                : std::vector<std::string>{"top", "middle", "bottom"};
        require(std::find(allowed.begin(), allowed.end(), c.level) != allowed.end(),
                "--level must be " + std::string(two ? "e or g" : "top, middle or bottom"));
    }
}

} // namespace mpabs::cli
