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

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mpabs/cli.hpp"

using namespace mpabs;
using namespace mpabs::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "mpabs_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("double formatting round-trips") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-2.5e-13) == "-2.5e-13");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("CSV quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("usage errors exit 1") {
    CHECK(invoke({"rabi", "--n", "3"}).code == 1);
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"rabi", "--model", "two-level"}).code == 1);
    CHECK(invoke({"rabi", "--model", "two-level", "--n", "3", "--bogus"}).code == 1);
    CHECK(invoke({"rabi", "--model", "four-level", "--n", "3"}).code == 1);
    CHECK(invoke({"verify", "--model", "two-level", "--M", "2", "--dim", "3"}).code == 1);
    CHECK(invoke({"sweep", "--model", "two-level", "--n-min", "5", "--n-max", "2"}).code == 1);
    CHECK(invoke({"rabi", "--model", "two-level", "--n", "-1"}).code == 1);
    const Outcome missing = invoke({"rabi", "--model", "three-level", "--n1", "2"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("--n2") != std::string::npos);
    CHECK(missing.err.find("Usage") != std::string::npos);
}

TEST_CASE("help exits 0") {
    const Outcome help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("overflow exits 2") {
    const Outcome o =
        invoke({"rabi", "--model", "two-level", "--M", "3", "--dim", "5", "--n", "4194304"});
    CHECK(o.code == 2);
    CHECK(o.err.find("64-bit") != std::string::npos);
}

TEST_CASE("verify reports residuals and conventions") {
    const Outcome o = invoke({"verify", "--model", "two-level", "--M", "1", "--dim", "12",
                              "--omega", "1", "--omega0", "1.7", "--g", "0.2"});
    REQUIRE(o.code == 0);
    const auto j = nlohmann::json::parse(o.out);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["command"] == "verify");
    CHECK(j["config"]["M"] == 1);
    const auto& ids = j["results"]["identities"];
    REQUIRE(ids.size() == 4);
    CHECK(ids[3]["convention"] == "pauli(+,+,-,-)");
    CHECK(ids[3]["matched"] == true);
    CHECK(j["results"]["convention_search"].size() == 3 * 8 + 32);
    CHECK(j["results"]["constants"][0]["conserved"] == true);

    const Outcome three = invoke({"verify", "--model", "three-level", "--M", "1", "--ntot", "1",
                                  "--dim1", "10", "--dim2", "3"});
    REQUIRE(three.code == 0);
    const auto k = nlohmann::json::parse(three.out);
    CHECK(k["results"]["identities"][0]["verdict"].get<std::string>().find(
              "no convention variant reproduces") != std::string::npos);
    CHECK(k["results"]["reduction"][1]["max_relative_splitting_difference"].get<double>() < 1e-12);
}

TEST_CASE("rabi prints the one-photon value") {
    const Outcome o = invoke({"rabi", "--model", "two-level", "--M", "1", "--n", "3", "--omega",
                              "1.2", "--omega0", "0.9", "--g", "0.1"});
    REQUIRE(o.code == 0);
    const auto j = nlohmann::json::parse(o.out);
    const double expected = (1.2 - 0.9) * (1.2 - 0.9) + 4 * 0.1 * 0.1 * 4;
    CHECK(j["results"]["rabi"][0]["omega_r_squared"].get<double>() == expected);
    CHECK(j["results"]["rabi"][0]["neig"] == 4);
}

TEST_CASE("CSV output layout") {
    const Outcome o = invoke({"sweep", "--model", "two-level", "--M", "2", "--n-min", "0",
                              "--n-max", "3", "--format", "csv"});
    REQUIRE(o.code == 0);
    std::istringstream lines(o.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "# schema_version=1");
    std::getline(lines, line);
    CHECK(line == "# command=sweep");
    std::vector<std::string> rest;
    while (std::getline(lines, line)) {
        rest.push_back(line);
    }
    REQUIRE(rest.size() >= 6);
    CHECK(rest[rest.size() - 6] == "# table=sweep");
    CHECK(rest[rest.size() - 5] == "n,neig,omega_r_squared,error");
    CHECK(rest.back().rfind("3,5,", 0) == 0);
}

TEST_CASE("overflowing sweep rows carry an error and no number") {
    const Outcome o = invoke({"sweep", "--model", "two-level", "--M", "3", "--dim", "5",
                              "--n-min", "4194300", "--n-max", "4194304"});
    REQUIRE(o.code == 0);
    const auto j = nlohmann::json::parse(o.out);
    const auto& last = j["results"]["sweep"].back();
    CHECK(last["omega_r_squared"].is_null());
    CHECK(last["error"].is_string());
}

TEST_CASE("identical configs give identical bytes") {
    const std::vector<std::string> verify{"verify", "--model", "two-level", "--M", "2", "--dim", "16",
                                          "--g", "0.3", "--omega0", "1.4"};
    CHECK(invoke(verify).out == invoke(verify).out);
    const std::vector<std::string> sweep{"sweep", "--model", "three-level", "--M", "1", "--ntot",
                                         "3", "--format", "csv"};
    CHECK(invoke(sweep).out == invoke(sweep).out);
}

TEST_CASE("config file sits between flags and defaults") {
    const auto path = scratch("params.conf");
    {
        std::ofstream f(path);
        f << "# two-photon resonance\n"
          << "model = two-level\n"
          << "M = 2\n"
          << "omega = 0.5\n"
          << "omega0 = 1.0\n"
          << "g = 0.25\n";
    }
    const Outcome from_file = invoke({"rabi", "--config", path.string(), "--n", "0"});
    REQUIRE(from_file.code == 0);
    const auto j = nlohmann::json::parse(from_file.out);
    CHECK(j["config"]["omega"] == 0.5);
    CHECK(j["config"]["g"] == 0.25);
    CHECK(j["config"]["dim"] == 8);

    const Outcome flagged = invoke({"rabi", "--config", path.string(), "--n", "0", "--g", "0.5"});
    REQUIRE(flagged.code == 0);
    CHECK(nlohmann::json::parse(flagged.out)["config"]["g"] == 0.5);

    {
        std::ofstream f(path);
        f << "model = two-level\nunknown_key = 3\n";
    }
    CHECK(invoke({"rabi", "--config", path.string(), "--n", "0"}).code == 1);
    CHECK(invoke({"rabi", "--config", scratch("absent.conf").string(), "--n", "0"}).code == 1);
}

TEST_CASE("output file and directory override") {
    const auto dir = scratch("outdir");
    std::filesystem::create_directories(dir);
    ::setenv("MPABS_OUTPUT_DIR", dir.string().c_str(), 1);
    const Outcome o = invoke({"rabi", "--model", "two-level", "--n", "1", "--output", "r.json"});
    ::unsetenv("MPABS_OUTPUT_DIR");
    REQUIRE(o.code == 0);
    CHECK(o.out.empty());
    std::ifstream f(dir / "r.json");
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(nlohmann::json::parse(buf.str())["command"] == "rabi");
}

TEST_CASE("evolve and spectrum") {
    const Outcome ev = invoke({"evolve", "--model", "two-level", "--n", "2", "--t-max", "10",
                               "--samples", "64", "--format", "csv"});
    REQUIRE(ev.code == 0);
    CHECK(ev.out.find("t,sigma_z,photons,excitation,energy") != std::string::npos);

    const Outcome sp = invoke({"spectrum", "--model", "two-level", "--M", "1", "--n", "1",
                               "--dim", "8", "--omega0", "0.9"});
    REQUIRE(sp.code == 0);
    const auto row = nlohmann::json::parse(sp.out)["results"]["spectrum"][0];
    CHECK(row["measured_vs_exact"].get<double>() < 0.01);

    const Outcome sp3 = invoke({"spectrum", "--model", "three-level", "--n1", "2", "--n2", "2"});
    REQUIRE(sp3.code == 0);
    CHECK(nlohmann::json::parse(sp3.out)["results"]["spectrum"][0]["s2_spread"].get<double>() < 1e-10);

    CHECK(invoke({"evolve", "--model", "two-level", "--n", "2", "--level", "top"}).code == 1);
    CHECK(invoke({"spectrum", "--model", "two-level", "--n", "2", "--samples", "128"}).code == 1);
}
