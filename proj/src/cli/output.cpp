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


#include <charconv>
#include <cmath>
#include <ostream>

#include "json.hpp"
#include "mpabs/cli.hpp"

namespace mpabs::cli {

namespace {

using Json = nlohmann::ordered_json;

template <typename... F>
struct Overloaded : F... {
    using F::operator()...;
};
template <typename... F>
Overloaded(F...) -> Overloaded<F...>;

Json to_json(const Cell& cell) {
    return std::visit(Overloaded{
                          [](std::monostate) { return Json(nullptr); },
                          [](bool b) { return Json(b); },
                          [](std::int64_t v) { return Json(v); },
                          [](std::uint64_t v) { return Json(v); },
                          [](double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); },
                          [](const std::string& s) { return Json(s); },
                      },
                      cell);
}

std::string to_text(const Cell& cell) {
    return std::visit(Overloaded{
                          [](std::monostate) { return std::string(); },
                          [](bool b) { return std::string(b ? "true" : "false"); },
                          [](std::int64_t v) { return std::to_string(v); },
                          [](std::uint64_t v) { return std::to_string(v); },
                          [](double v) { return std::isfinite(v) ? format_double(v) : std::string(); },
                          [](const std::string& s) { return s; },
                      },
                      cell);
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc() ? std::string(buf, end) : std::string();
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    out += '"';
    return out;
}

std::vector<std::pair<std::string, Cell>> echo_config(const RunConfig& c) {
    std::vector<std::pair<std::string, Cell>> out;
    out.emplace_back("model", std::string(to_string(c.model)));
    if (c.model == ModelKind::two_level) {
        const TwoLevelParams& p = c.two_level;
        out.emplace_back("omega", p.omega);
        out.emplace_back("omega0", p.omega0);
        out.emplace_back("g", p.g);
        out.emplace_back("M", std::uint64_t{p.photons});
        out.emplace_back("dim", std::uint64_t{p.fock_dim.value()});
    } else {
        const ThreeLevelParams& p = c.three_level;
        out.emplace_back("omega-l1", p.omega_l1);
        out.emplace_back("omega-l2", p.omega_l2);
        out.emplace_back("omega0", p.omega0);
        out.emplace_back("omega1", p.omega1);
        out.emplace_back("g", p.g);
        out.emplace_back("M", std::uint64_t{p.photons_beam1});
        out.emplace_back("ntot", std::uint64_t{p.total_photons});
        out.emplace_back("dim1", std::uint64_t{p.dim1.value()});
        out.emplace_back("dim2", std::uint64_t{p.dim2.value()});
    }
    const bool two = c.model == ModelKind::two_level;
    switch (c.command) {
    case Command::verify:
        break;
    case Command::rabi:
    case Command::evolve:
    case Command::spectrum:
        if (two) {
            out.emplace_back("n", std::uint64_t{c.n});
            if (c.command == Command::rabi) {
                out.emplace_back("neig", std::uint64_t{c.excitation_set ? c.excitation
                                                                        : c.n + c.two_level.photons});
            }
        } else {
            out.emplace_back("n1", std::uint64_t{c.n1});
            out.emplace_back("n2", std::uint64_t{c.n2});
        }
        if (c.command == Command::evolve) {
            out.emplace_back("level", c.level.empty() ? std::string(two ? "e" : "bottom") : c.level);
        }
        if (c.command != Command::rabi) {
            out.emplace_back("t-max", c.t_max);
            out.emplace_back("samples", std::uint64_t{c.samples});
        }
        break;
    case Command::sweep:
        if (two) {
            out.emplace_back("n-min", std::uint64_t{c.n_min});
            out.emplace_back("n-max", std::uint64_t{c.n_max});
        } else {
            out.emplace_back("n1-min", std::uint64_t{c.n1_min});
            out.emplace_back("n1-max", std::uint64_t{c.n1_max});
            out.emplace_back("n2-min", std::uint64_t{c.n2_min});
            out.emplace_back("n2-max", std::uint64_t{c.n2_max});
        }
        break;
    }
    out.emplace_back("format", std::string(c.format == Format::json ? "json" : "csv"));
    return out;
}

void write_json(const Document& doc, std::ostream& out) {
    Json root;
    root["schema_version"] = kSchemaVersion;
    root["command"] = to_string(doc.command);
    Json config = Json::object();
    for (const auto& [key, value] : doc.config) {
        config[key] = to_json(value);
    }
    root["config"] = std::move(config);
    Json results = Json::object();
    for (const Table& t : doc.results) {
        Json rows = Json::array();
        for (const auto& row : t.rows) {
            Json obj = Json::object();
            for (std::size_t i = 0; i < t.columns.size(); ++i) {
                obj[t.columns[i]] = i < row.size() ? to_json(row[i]) : Json(nullptr);
            }
            rows.push_back(std::move(obj));
        }
        results[t.name] = std::move(rows);
    }
    root["results"] = std::move(results);
    out << root.dump(2) << '\n';
}

void write_csv(const Document& doc, std::ostream& out) {
    out << "# schema_version=" << kSchemaVersion << '\n';
    out << "# command=" << to_string(doc.command) << '\n';
    for (const auto& [key, value] : doc.config) {
        out << "# " << key << '=' << to_text(value) << '\n';
    }
    for (const Table& t : doc.results) {
        out << "# table=" << t.name << '\n';
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            out << (i ? "," : "") << csv_field(t.columns[i]);
        }
        out << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < t.columns.size(); ++i) {
                out << (i ? "," : "") << csv_field(i < row.size() ? to_text(row[i]) : std::string());
            }
            out << '\n';
        }
    }
}

} // namespace mpabs::cli
