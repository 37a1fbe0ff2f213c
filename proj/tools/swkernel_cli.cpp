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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swkernel/cli.hpp"

namespace {

struct Flags {
    int n = 2;
    std::string nu;
    std::string mu;
    std::uint64_t seed = 1;
    long long samples = 100000;
    std::vector<std::string> grid;
    std::string state;
    std::string output;
    std::string format = "json";
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, Flags& f, bool kernel, bool sampling) {
    cmd->add_option("--n", f.n, "Hilbert-space dimension")->capture_default_str();
    if (kernel) {
        cmd->add_option("--nu", f.nu, "qutrit family parameter in [-1,-1/3]");
        cmd->add_option("--mu", f.mu, "comma-separated unit vector of Cartan coefficients");
    }
    if (sampling) {
        cmd->add_option("--seed", f.seed, "master seed")->capture_default_str();
        cmd->add_option("--samples", f.samples, "Haar samples")->capture_default_str();
        cmd->add_option("--threads", f.threads, "worker threads (0 = hardware)")->capture_default_str();
    }
    cmd->add_option("--output,-o", f.output, "write to this file instead of stdout");
    cmd->add_option("--format", f.format, "json or csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
}

swk::cli::RunConfig to_config(const Flags& f, swk::cli::Command c) {
    using namespace swk::cli;
    RunConfig cfg;
    cfg.command = c;
    cfg.n = f.n;
    if (!f.nu.empty()) cfg.nu = parse_number(f.nu);
    if (!f.mu.empty()) cfg.mu = parse_list(f.mu);
    cfg.seed = f.seed;
    if (f.samples < 0) throw UsageError("--samples must be non-negative");
    cfg.samples = static_cast<std::size_t>(f.samples);
    for (const auto& g : f.grid) cfg.grid.push_back(parse_grid_axis(g));
    if (!f.state.empty()) cfg.state = f.state;
    if (!f.output.empty()) cfg.output = f.output;
    cfg.format = f.format == "csv" ? Format::Csv : Format::Json;
    cfg.threads = f.threads;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stratonovich-Weyl kernels and Wigner functions for N-level systems"};
    app.require_subcommand(1);
    Flags f;

    auto* spectrum = app.add_subcommand("spectrum", "kernel spectrum, flag dimension and master-equation residuals");
    add_common(spectrum, f, true, false);

    auto* moduli = app.add_subcommand("moduli-sample", "Monte Carlo fraction of the canonical moduli domain");
    add_common(moduli, f, false, true);

    auto* wigner = app.add_subcommand("wigner-eval", "evaluate a Wigner function on an Euler-angle grid");
    add_common(wigner, f, true, false);
    wigner->add_option("--grid", f.grid, "angle=start:stop:count (repeatable; angles accept pi)")->required();
    wigner->add_option("--state", f.state, "Bloch vector \"x,y,...\" or state JSON file")->required();

    auto* reconstruct = app.add_subcommand("reconstruct", "reconstruct a state from its sampled Wigner function");
    add_common(reconstruct, f, true, true);
    reconstruct->add_option("--state", f.state, "Bloch vector \"x,y,...\" or state JSON file")->required();

    auto* verify = app.add_subcommand("verify", "run the full postulate verification suite");
    add_common(verify, f, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return swk::cli::kUsage;
    }

    using swk::cli::Command;
    Command c = Command::Spectrum;
    if (moduli->parsed()) c = Command::ModuliSample;
    if (wigner->parsed()) c = Command::WignerEval;
    if (reconstruct->parsed()) c = Command::Reconstruct;
    if (verify->parsed()) c = Command::Verify;

    swk::cli::RunConfig cfg;
    try {
        cfg = to_config(f, c);
    } catch (const swk::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return swk::cli::kUsage;
    }
    return swk::cli::run(cfg, std::cout, std::cerr);
}
