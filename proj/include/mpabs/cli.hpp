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

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mpabs/fock.hpp"
#include "mpabs/models.hpp"

namespace mpabs::cli {

inline constexpr int kSchemaVersion = 1;

enum class Command { verify, rabi, sweep, evolve, spectrum };
enum class ModelKind { two_level, three_level };
enum class Format { json, csv };

const char* to_string(Command command);
const char* to_string(ModelKind model);

/// Everything one invocation needs, after flags, config file and defaults
/// have been merged.
struct RunConfig {
    Command command = Command::verify;
    ModelKind model = ModelKind::two_level;
    TwoLevelParams two_level;
    ThreeLevelParams three_level;

    // quantum numbers; *_set records whether the value was supplied
    Count n = 0;
    bool n_set = false;
    Count excitation = 0;
    bool excitation_set = false;
    Count n1 = 0;
    bool n1_set = false;
    Count n2 = 0;
    bool n2_set = false;
    std::string level; ///< initial level for evolve; empty picks the model default

    Count n_min = 0;
    Count n_max = 20;
    Count n1_min = 0;
    Count n1_max = 10;
    Count n2_min = 0;
    Count n2_max = 10;

    double t_max = 0.0; ///< 0 picks the automatic grid
    std::size_t samples = 0;

    Format format = Format::json;
    std::string output; ///< empty writes to the output stream
};

/// Raised for --help; carries the text to print.
struct HelpRequested {
    std::string text;
};

/// Command-line grammar. Throws HelpRequested for --help and ValidationError
/// for anything unparsable, including bad config files.
class CommandLine {
public:
    CommandLine();
    ~CommandLine();
    CommandLine(const CommandLine&) = delete;
    CommandLine& operator=(const CommandLine&) = delete;

    RunConfig parse(const std::vector<std::string>& args);
    std::string usage() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Model-specific checks on a parsed config: required quantum numbers, ranges,
/// parameter validation. Throws ValidationError.
void validate(const RunConfig& config);

// Output ------------------------------------------------------------------

using Cell = std::variant<std::monostate, bool, std::int64_t, std::uint64_t, double, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct Document {
    Command command = Command::verify;
    std::vector<std::pair<std::string, Cell>> config;
    std::vector<Table> results;
};

/// Shortest round-trip decimal form.
std::string format_double(double value);

/// RFC 4180 quoting when needed.
std::string csv_field(const std::string& text);

/// The effective config in a fixed order, restricted to keys the model uses.
std::vector<std::pair<std::string, Cell>> echo_config(const RunConfig& config);

/// One object {schema_version, command, config, results}; non-finite
/// numbers become null.
void write_json(const Document& doc, std::ostream& out);

/// "# key=value" header lines, then per table a "# table=name" line, a header
/// row and the data rows.
void write_csv(const Document& doc, std::ostream& out);

/// Runs the workflow a config describes. Throws ValidationError or
/// NumericalError.
Document execute(const RunConfig& config);

/// Full front end. Exit codes: 0 success, 1 usage or validation error,
/// 2 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mpabs::cli
