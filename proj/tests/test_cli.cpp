// Copyright 2026 The swkernel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "swkernel/cli.hpp"

namespace swk {
namespace {

using cli::Command;
using cli::Format;
using cli::RunConfig;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const RunConfig& cfg) {
    std::ostringstream out, err;
    const int code = cli::run(cfg, out, err);
    return {code, out.str(), err.str()};
}

RunConfig spectrum_cfg(int n) {
    RunConfig c;
    c.command = Command::Spectrum;
    c.n = n;
    return c;
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

std::vector<double> split_numbers(const std::string& line) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
    return out;
}

TEST(CliSpectrum, TopQutritEndpointFromTruncatedNu) {
    auto cfg = spectrum_cfg(3);
    cfg.nu = -0.3333333333;
    const auto o = run(cfg);
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = io::Json::parse(o.out);
    EXPECT_NEAR(j["spectrum"][0].get<double>(), 5.0 / 3, 1e-12);
    EXPECT_NEAR(j["spectrum"][1].get<double>(), -1.0 / 3, 1e-12);
    EXPECT_NEAR(j["spectrum"][2].get<double>(), -1.0 / 3, 1e-12);
    EXPECT_EQ(j["multiplicities"], io::Json::parse("[1,2]"));
    EXPECT_EQ(j["flag_dim"], 4);
    EXPECT_NEAR(j["det_invariant"].get<double>(), -16.0 / 27, 1e-12);
    EXPECT_LT(j["master_residuals"]["purity"].get<double>(), 1e-12);
}

TEST(CliSpectrum, Qubit) {
    const auto o = run(spectrum_cfg(2));
    ASSERT_EQ(o.code, 0);
    const auto j = io::Json::parse(o.out);
    EXPECT_NEAR(j["spectrum"][0].get<double>(), (1 + std::sqrt(3.0)) / 2, 1e-15);
    EXPECT_NEAR(j["spectrum"][1].get<double>(), (1 - std::sqrt(3.0)) / 2, 1e-15);
    EXPECT_TRUE(j["nu"].is_null());
    EXPECT_FALSE(j.contains("det_invariant"));
}

TEST(CliSpectrum, NuOutOfRange) {
    auto cfg = spectrum_cfg(3);
    cfg.nu = 0.5;
    const auto o = run(cfg);
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("nu outside [-1,-1/3]"), std::string::npos);
    EXPECT_TRUE(o.out.empty());
}

TEST(CliSpectrum, KernelSelectionRules) {
    auto cfg = spectrum_cfg(3);
    EXPECT_EQ(run(cfg).code, 2);
    cfg.nu = -0.5;
    cfg.mu = std::vector<double>{0.6, 0.8};
    EXPECT_EQ(run(cfg).code, 2);
    cfg.nu.reset();
    EXPECT_EQ(run(cfg).code, 0);
    cfg.mu = std::vector<double>{0.6, 0.9};
    EXPECT_EQ(run(cfg).code, 2);
    auto qubit = spectrum_cfg(2);
    qubit.nu = -0.5;
    EXPECT_EQ(run(qubit).code, 2);
    auto four = spectrum_cfg(4);
    four.mu = std::vector<double>{1.0, 0.0};
    EXPECT_EQ(run(four).code, 2);
    four.mu = std::vector<double>{0.0, 0.0, 1.0};
    EXPECT_EQ(run(four).code, 0);
}

TEST(CliSpectrum, CsvAndJsonCarryTheSameNumbers) {
    auto cfg = spectrum_cfg(3);
    cfg.nu = -0.62;
    const auto j = io::Json::parse(run(cfg).out);
    cfg.format = Format::Csv;
    const auto lines = split_lines(run(cfg).out);
    ASSERT_EQ(lines[0], "field,value");
    std::map<std::string, std::string> kv;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto comma = lines[i].find(',');
        kv[lines[i].substr(0, comma)] = lines[i].substr(comma + 1);
    }
    for (int i = 0; i < 3; ++i)
        EXPECT_EQ(std::stod(kv["spectrum." + std::to_string(i)]), j["spectrum"][i].get<double>());
    EXPECT_EQ(std::stod(kv["mu.0"]), j["mu"][0].get<double>());
    EXPECT_EQ(std::stod(kv["nu"]), -0.62);
    EXPECT_EQ(kv["flag_dim"], "6");
}

RunConfig wigner_cfg(int n, const std::string& state) {
    RunConfig c;
    c.command = Command::WignerEval;
    c.n = n;
    c.state = state;
    return c;
}

TEST(CliWigner, QubitMeridian) {
    auto cfg = wigner_cfg(2, "0,0,1");
    cfg.grid = {cli::parse_grid_axis("beta=0:pi:21"), cli::parse_grid_axis("alpha=0")};
    cfg.format = Format::Csv;
    const auto o = run(cfg);
    ASSERT_EQ(o.code, 0) << o.err;
    const auto lines = split_lines(o.out);
    ASSERT_EQ(lines.size(), 22u);
    EXPECT_EQ(lines[0], "beta,alpha,W");
    const auto first = split_numbers(lines[1]);
    const auto last = split_numbers(lines.back());
    EXPECT_NEAR(first[2], (1 + std::sqrt(3.0)) / 2, 1e-15);
    EXPECT_NEAR(last[0], kPi, 1e-15);
    EXPECT_NEAR(last[2], (1 - std::sqrt(3.0)) / 2, 1e-15);
}

TEST(CliWigner, QutritFourAngleGrid) {
    auto cfg = wigner_cfg(3, "0.1,0,0.2,0,0,0.1,0,0.3");
    cfg.nu = -1.0;
    for (const char* ax : {"alpha=0:pi:3", "beta=0:pi:2", "gamma=0:1:2", "theta=0:pi/2:3"})
        cfg.grid.push_back(cli::parse_grid_axis(ax));
    const auto o = run(cfg);
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = io::Json::parse(o.out);
    EXPECT_EQ(j["columns"].size(), 5u);
    EXPECT_EQ(j["rows"].size(), 36u);
    EXPECT_EQ(j["rows"][0].size(), 5u);
    // first axis varies slowest
    EXPECT_EQ(j["rows"][0][0], 0.0);
    EXPECT_EQ(j["rows"][11][0], 0.0);
    EXPECT_NEAR(j["rows"][12][0].get<double>(), kPi / 2, 1e-15);
}

TEST(CliWigner, MaximallyMixedIsFlat) {
    auto cfg = wigner_cfg(3, "0,0,0,0,0,0,0,0");
    cfg.nu = -0.7;
    cfg.grid = {cli::parse_grid_axis("theta=0:pi:7"), cli::parse_grid_axis("b=0:2*pi:5")};
    const auto j = io::Json::parse(run(cfg).out);
    for (const auto& row : j["rows"]) EXPECT_NEAR(row.back().get<double>(), 1.0 / 3, 1e-15);
}

TEST(CliWigner, GenericMuUsesTraceForm) {
    auto cfg = wigner_cfg(3, "0.1,0,0.2,0,0,0.1,0,0.3");
    cfg.mu = std::vector<double>{0.6, 0.8};
    cfg.grid = {cli::parse_grid_axis("theta=0:1:3")};
    EXPECT_EQ(run(cfg).code, 0);
}

TEST(CliWigner, Errors) {
    auto cfg = wigner_cfg(2, "0,0,1.5");
    cfg.grid = {cli::parse_grid_axis("beta=0:pi:3")};
    EXPECT_EQ(run(cfg).code, 2);
    cfg.state = "0,0";
    EXPECT_EQ(run(cfg).code, 2);
    cfg.state = "0,0,1";
    cfg.grid = {cli::parse_grid_axis("theta=0:pi:3")};
    EXPECT_EQ(run(cfg).code, 2);
    cfg.grid = {cli::parse_grid_axis("beta=0:pi:3"), cli::parse_grid_axis("beta=0")};
    EXPECT_EQ(run(cfg).code, 2);
    cfg.grid.clear();
    EXPECT_EQ(run(cfg).code, 2);
    cfg.state = "/nonexistent/state.json";
    cfg.grid = {cli::parse_grid_axis("beta=0")};
    EXPECT_EQ(run(cfg).code, 2);
    auto four = wigner_cfg(4, "0");
    four.mu = std::vector<double>{0, 0, 1};
    four.grid = {cli::parse_grid_axis("beta=0")};
    EXPECT_EQ(run(four).code, 2);
}

TEST(CliParse, AnglesAndAxes) {
    EXPECT_DOUBLE_EQ(cli::parse_angle("pi"), kPi);
    EXPECT_DOUBLE_EQ(cli::parse_angle("-pi/2"), -kPi / 2);
    EXPECT_DOUBLE_EQ(cli::parse_angle("2*pi"), 2 * kPi);
    EXPECT_DOUBLE_EQ(cli::parse_angle("0.25"), 0.25);
    EXPECT_THROW(cli::parse_angle("2pi"), cli::UsageError);
    EXPECT_THROW(cli::parse_angle("pi/0"), cli::UsageError);
    EXPECT_THROW(cli::parse_angle(""), cli::UsageError);
    const auto ax = cli::parse_grid_axis("gamma=1:2:5");
    EXPECT_EQ(ax.angle, "gamma");
    EXPECT_EQ(ax.count, 5);
    EXPECT_THROW(cli::parse_grid_axis("gamma"), cli::UsageError);
    EXPECT_THROW(cli::parse_grid_axis("gamma=1:2"), cli::UsageError);
    EXPECT_THROW(cli::parse_grid_axis("gamma=1:2:x"), cli::UsageError);
    EXPECT_THROW(cli::parse_list("1,abc"), cli::UsageError);
}

TEST(CliState, JsonFileRoundTrip) {
    const std::string path = ::testing::TempDir() + "swk_state.json";
    {
        RealVector xi(3);
        xi << 0.3, -0.2, 0.5;
        std::ofstream f(path);
        f << io::state_to_json(rho_from_bloch(2, xi)).dump();
    }
    auto file_cfg = wigner_cfg(2, path);
    file_cfg.grid = {cli::parse_grid_axis("beta=0:pi:4"), cli::parse_grid_axis("alpha=0:1:3")};
    auto inline_cfg = wigner_cfg(2, "0.3,-0.2,0.5");
    inline_cfg.grid = file_cfg.grid;
    const auto a = run(file_cfg), b = run(inline_cfg);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto mismatch = wigner_cfg(3, path);
    mismatch.nu = -0.5;
    mismatch.grid = {cli::parse_grid_axis("beta=0")};
    EXPECT_EQ(run(mismatch).code, 2);
}

TEST(CliReconstruct, QutritMixedAndQubitPure) {
    RunConfig cfg;
    cfg.command = Command::Reconstruct;
    cfg.n = 3;
    cfg.nu = -0.5;
    cfg.state = "0,0,0,0,0,0,0,0";
    cfg.samples = 100000;
    auto o = run(cfg);
    ASSERT_EQ(o.code, 0) << o.err;
    auto j = io::Json::parse(o.out);
    EXPECT_LT(j["frobenius_error"].get<double>(), 5e-2);
    EXPECT_EQ(j["rho_real"].size(), 3u);
    EXPECT_EQ(j["rho_imag"][0].size(), 3u);
    cfg.n = 2;
    cfg.nu.reset();
    cfg.state = "0,0,1";
    j = io::Json::parse(run(cfg).out);
    EXPECT_LT(j["frobenius_error"].get<double>(), 5e-2);
    EXPECT_NEAR(j["rho_real"][0][0].get<double>(), 1.0, 5e-2);
}

TEST(CliReconstruct, ZeroSamplesIsUsageError) {
    RunConfig cfg;
    cfg.command = Command::Reconstruct;
    cfg.n = 2;
    cfg.state = "0,0,1";
    cfg.samples = 0;
    EXPECT_EQ(run(cfg).code, 2);
    cfg.samples = 5000;
    cfg.state.reset();
    EXPECT_EQ(run(cfg).code, 2);
}

TEST(CliModuli, FourLevelFraction) {
    RunConfig cfg;
    cfg.command = Command::ModuliSample;
    cfg.n = 4;
    cfg.samples = 200000;
    const auto o = run(cfg);
    ASSERT_EQ(o.code, 0);
    const auto r = io::report_from_json(io::Json::parse(o.out));
    EXPECT_NEAR(r.target, 1.0 / 24, 1e-16);
    EXPECT_TRUE(r.pass);
    EXPECT_LE(std::abs(r.mc - r.target), 3 * r.sigma);
}

TEST(CliVerify, QutritAllPass) {
    RunConfig cfg;
    cfg.command = Command::Verify;
    cfg.n = 3;
    cfg.nu = -0.5;
    cfg.samples = 100000;
    cfg.seed = 7;
    const auto o = run(cfg);
    EXPECT_EQ(o.code, 0);
    const auto arr = io::Json::parse(o.out);
    EXPECT_GE(arr.size(), 15u);
    for (const auto& rec : arr) EXPECT_TRUE(rec["pass"].get<bool>()) << rec.dump();
}

TEST(CliVerify, QubitAllPassIncludingFourthOrder) {
    RunConfig cfg;
    cfg.command = Command::Verify;
    cfg.n = 2;
    cfg.samples = 100000;
    cfg.format = Format::Csv;
    const auto o = run(cfg);
    EXPECT_EQ(o.code, 0);
    int fourth = 0;
    for (const auto& line : split_lines(o.out)) {
        if (line.rfind("weingarten4", 0) == 0) {
            ++fourth;
            EXPECT_EQ(line.back(), '1') << line;
        }
    }
    EXPECT_GT(fourth, 0);
}

TEST(CliVerify, FourLevelReportsModuliFraction) {
    RunConfig cfg;
    cfg.command = Command::Verify;
    cfg.n = 4;
    cfg.mu = std::vector<double>{0.8, 0.5, std::sqrt(1 - 0.89)};
    cfg.samples = 20000;
    const auto arr = io::Json::parse(run(cfg).out);
    bool found = false;
    for (const auto& rec : arr)
        if (rec["check"] == "moduli_domain_fraction") {
            found = true;
            EXPECT_NEAR(rec["target"].get<double>(), 1.0 / 24, 1e-16);
            EXPECT_NEAR(rec["mc"].get<double>(), 1.0 / 24, 4 * rec["sigma"].get<double>());
        }
    EXPECT_TRUE(found);
}

TEST(CliVerify, TooFewSamples) {
    RunConfig cfg;
    cfg.command = Command::Verify;
    cfg.n = 2;
    cfg.samples = 100;
    EXPECT_EQ(run(cfg).code, 2);
}

TEST(CliVerify, ReportRoundTripsThroughJson) {
    RunConfig cfg;
    cfg.command = Command::Verify;
    cfg.n = 2;
    cfg.samples = 10000;
    const auto arr = io::Json::parse(run(cfg).out);
    cfg.format = Format::Csv;
    const auto lines = split_lines(run(cfg).out);
    ASSERT_EQ(lines.size(), arr.size() + 1);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto r = io::report_from_json(arr[i]);
        EXPECT_EQ(io::to_json(r), arr[i]);
        EXPECT_EQ(io::report_csv({r}), lines[0] + "\n" + lines[i + 1] + "\n");
    }
}

TEST(CliDeterminism, IdenticalConfigGivesIdenticalBytes) {
    RunConfig cfg;
    cfg.command = Command::Reconstruct;
    cfg.n = 3;
    cfg.mu = std::vector<double>{0.6, 0.8};
    cfg.state = "0.1,0,0.2,0,0,0.1,0,0.3";
    cfg.samples = 5000;
    cfg.seed = 99;
    const auto a = run(cfg);
    cfg.threads = 3;
    const auto b = run(cfg);
    EXPECT_EQ(a.out, b.out);
    cfg.seed = 100;
    EXPECT_NE(run(cfg).out, a.out);
}

TEST(CliOutput, WritesFile) {
    auto cfg = spectrum_cfg(2);
    cfg.output = ::testing::TempDir() + "swk_spectrum.json";
    const auto o = run(cfg);
    ASSERT_EQ(o.code, 0);
    EXPECT_TRUE(o.out.empty());
    std::ifstream f(*cfg.output);
    const auto j = io::Json::parse(f);
    EXPECT_EQ(j["flag_dim"], 2);
}

}  // namespace
}  // namespace swk
