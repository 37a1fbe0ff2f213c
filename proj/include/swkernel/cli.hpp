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

#ifndef SWKERNEL_CLI_HPP
#define SWKERNEL_CLI_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "swkernel/io.hpp"
#include "swkernel/swkernel.hpp"

namespace swk::cli {

enum class Command { Spectrum, ModuliSample, WignerEval, Reconstruct, Verify };
enum class Format { Json, Csv };

/// Inclusive sweep of one Euler angle.
struct GridAxis {
    std::string angle;
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
};

struct RunConfig {
    Command command = Command::Spectrum;
    int n = 2;
    std::optional<double> nu;
    std::optional<std::vector<double>> mu;
    std::uint64_t seed = 1;
    std::size_t samples = 100000;
    std::vector<GridAxis> grid;
    std::optional<std::string> state;  // inline "x,y,..." Bloch vector or path to a state JSON file
    std::optional<std::string> output;
    Format format = Format::Json;
    unsigned threads = 0;
};

/// Bad flags or values; reported with exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsage = 2 };

struct CommandResult {
    std::string payload;
    int exit_code = kSuccess;
};

// ---- config resolution -------------------------------------------------------------

/// ν within this distance of an interval endpoint is snapped onto it, so
/// command-line values such as −0.3333333333 select the degenerate kernel.
inline constexpr double kNuSnap = 1e-9;
/// Command-line μ may deviate from unit norm by this much before being rescaled.
inline constexpr double kMuNormSlack = 1e-6;

inline double snap_nu(double nu) {
    if (std::abs(nu - kQutritNuMin) <= kNuSnap) return kQutritNuMin;
    if (std::abs(nu - kQutritNuMax) <= kNuSnap) return kQutritNuMax;
    return nu;
}

/// The kernel family member selected by the config, plus ν when it was given.
struct KernelChoice {
    ModuliPoint moduli;
    std::optional<double> nu;
};

inline KernelChoice resolve_kernel(const RunConfig& cfg) {
    if (cfg.n < 2) throw UsageError("--n must be >= 2");
    if (cfg.nu && cfg.mu) throw UsageError("give either --nu or --mu, not both");
    if (cfg.nu) {
        if (cfg.n != 3) throw UsageError("--nu is only defined for n = 3");
        const double nu = snap_nu(*cfg.nu);
        if (!(nu >= kQutritNuMin && nu <= kQutritNuMax)) throw UsageError("nu outside [-1,-1/3]");
        return {qutrit_mu(nu), nu};
    }
    if (cfg.mu) {
        RealVector v(static_cast<Eigen::Index>(cfg.mu->size()));
        for (std::size_t i = 0; i < cfg.mu->size(); ++i) v[static_cast<Eigen::Index>(i)] = (*cfg.mu)[i];
        if (v.size() != cfg.n - 1) throw UsageError("--mu needs n-1 components");
        if (std::abs(v.norm() - 1.0) > kMuNormSlack) throw UsageError("--mu must be a unit vector");
        return {ModuliPoint::normalized(cfg.n, v), std::nullopt};
    }
    if (cfg.n == 2) return {qubit_moduli(), std::nullopt};
    throw UsageError("n >= 3 needs a kernel: give --nu (n = 3) or --mu");
}

inline std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw UsageError("cannot parse number '" + item + "'");
        }
        if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos)
            throw UsageError("cannot parse number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

inline double parse_number(const std::string& text) {
    const auto v = parse_list(text);
    if (v.size() != 1) throw UsageError("expected one number, got '" + text + "'");
    return v[0];
}

/// Parses an angle such as "1.5", "pi", "-pi/2" or "2*pi".
inline double parse_angle(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (ch != ' ') t += ch;
    const auto pos = t.find("pi");
    if (pos == std::string::npos) return parse_number(t);
    std::string head = t.substr(0, pos), tail = t.substr(pos + 2);
    double scale = 1.0;
    if (head == "-") scale = -1.0;
    else if (!head.empty() && head != "+") {
        if (head.back() != '*') throw UsageError("cannot parse angle '" + text + "'");
        scale = parse_number(head.substr(0, head.size() - 1));
    }
    if (!tail.empty()) {
        if (tail.front() != '/') throw UsageError("cannot parse angle '" + text + "'");
        const double d = parse_number(tail.substr(1));
        if (d == 0.0) throw UsageError("cannot parse angle '" + text + "'");
        scale /= d;
    }
    return scale * kPi;
}

/// Parses "angle=start:stop:count"; a bare "angle=value" fixes the angle.
inline GridAxis parse_grid_axis(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("grid axis must look like name=start:stop:count");
    GridAxis ax;
    ax.angle = text.substr(0, eq);
    std::vector<std::string> parts;
    std::stringstream ss(text.substr(eq + 1));
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() == 1) {
        ax.start = ax.stop = parse_angle(parts[0]);
        ax.count = 1;
    } else if (parts.size() == 3) {
        ax.start = parse_angle(parts[0]);
        ax.stop = parse_angle(parts[1]);
        try {
            std::size_t used = 0;
            ax.count = std::stoi(parts[2], &used);
            if (used != parts[2].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw UsageError("grid count must be an integer in '" + text + "'");
        }
    } else {
        throw UsageError("grid axis must look like name=start:stop:count");
    }
    return ax;
}

inline bool looks_inline(const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789+-.eE, \t") == std::string::npos;
}

inline DensityState resolve_state(const RunConfig& cfg, const GellMannBasis& basis) {
    if (!cfg.state) throw UsageError("this command needs --state");
    if (looks_inline(*cfg.state)) {
        const auto v = parse_list(*cfg.state);
        RealVector xi(static_cast<Eigen::Index>(v.size()));
        for (std::size_t i = 0; i < v.size(); ++i) xi[static_cast<Eigen::Index>(i)] = v[i];
        if (xi.size() != basis.size())
            throw UsageError("--state needs n^2-1 = " + std::to_string(basis.size()) + " Bloch components");
        return rho_from_bloch(basis, xi);
    }
    std::ifstream in(*cfg.state);
    if (!in) throw UsageError("cannot open state file " + *cfg.state);
    io::Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw UsageError(std::string("state file is not valid JSON: ") + e.what());
    }
    DensityState s = io::state_from_json(j);
    if (s.dim() != cfg.n) throw UsageError("state file dimension does not match --n");
    return s;
}

inline std::vector<double> to_std(const RealVector& v) { return {v.data(), v.data() + v.size()}; }

// ---- spectrum ------------------------------------------------------------------------

inline io::Json spectrum_document(const RunConfig& cfg) {
    const auto choice = resolve_kernel(cfg);
    const GellMannBasis basis(cfg.n);
    const KernelSpectrum spec = spectrum_from_moduli(choice.moduli, basis);
    io::Json doc = io::kernel_descriptor(choice.moduli, choice.nu, spec);
    doc["flag_dims"] = spec.flag_dims;
    doc["flag_dim"] = isotropy_signature(spec).flag_dim;
    doc["degenerate"] = spec.degenerate;
    doc["canonical"] = is_canonical(choice.moduli, basis);
    if (cfg.n == 3) doc["det_invariant"] = qutrit_det_invariant(spec);
    const auto res = verify_master(spec);
    doc["master_residuals"] = {{"trace", res.trace}, {"purity", res.purity}};
    return doc;
}

inline CommandResult cmd_spectrum(const RunConfig& cfg) {
    const auto doc = spectrum_document(cfg);
    return {cfg.format == Format::Json ? doc.dump(2) + "\n" : io::flat_csv(doc)};
}

// ---- moduli-sample -------------------------------------------------------------------------

inline double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline io::ReportRecord moduli_fraction_record(int n, const std::vector<double>& moduli, std::size_t samples,
                                               std::uint64_t seed, unsigned threads) {
    io::ReportRecord r;
    r.check = "moduli_domain_fraction";
    r.n = n;
    r.moduli = moduli;
    r.samples = n == 2 ? 2 : samples;
    r.seed = seed;
    r.mc = moduli_domain_fraction(n, samples, seed, threads);
    r.target = 1.0 / factorial(n);
    r.sigma = n == 2 ? 0.0 : binomial_sigma(r.target, samples);
    r.z = r.sigma > 0 ? (r.mc - r.target) / r.sigma : 0.0;
    r.pass = n == 2 ? r.mc == r.target : std::abs(r.mc - r.target) <= 3.0 * r.sigma;
    return r;
}

inline CommandResult cmd_moduli_sample(const RunConfig& cfg) {
    if (cfg.n < 2) throw UsageError("--n must be >= 2");
    if (cfg.n > 2 && cfg.samples < 1000) throw UsageError("--samples must be >= 1000");
    const auto rec = moduli_fraction_record(cfg.n, {}, cfg.samples, cfg.seed, cfg.threads);
    if (cfg.format == Format::Json) return {io::to_json(rec).dump(2) + "\n"};
    return {io::report_csv({rec})};
}

// ---- wigner-eval ---------------------------------------------------------------------------

inline double* angle_slot(int n, const std::string& name, EulerSU2& e2, EulerSU3& e3) {
    if (n == 2) {
        if (name == "alpha") return &e2.alpha;
        if (name == "beta") return &e2.beta;
        return nullptr;
    }
    if (name == "alpha") return &e3.alpha;
    if (name == "beta") return &e3.beta;
    if (name == "gamma") return &e3.gamma;
    if (name == "a") return &e3.a;
    if (name == "b") return &e3.b;
    if (name == "c") return &e3.c;
    if (name == "theta") return &e3.theta;
    if (name == "phi") return &e3.phi;
    return nullptr;
}

inline double axis_value(const GridAxis& ax, int i) {
    if (ax.count == 1) return ax.start;
    return ax.start + (ax.stop - ax.start) * static_cast<double>(i) / static_cast<double>(ax.count - 1);
}

struct WignerGrid {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Rows of (angles…, W); the first axis varies slowest.
inline WignerGrid wigner_grid(const RunConfig& cfg) {
    if (cfg.n != 2 && cfg.n != 3) throw UsageError("wigner-eval supports the Euler charts of n = 2 and n = 3");
    if (cfg.grid.empty()) throw UsageError("wigner-eval needs at least one --grid axis");
    const auto choice = resolve_kernel(cfg);
    const GellMannBasis basis(cfg.n);
    const DensityState state = resolve_state(cfg, basis);

    EulerSU2 e2;
    EulerSU3 e3;
    WignerGrid g;
    std::vector<double*> slots;
    for (const auto& ax : cfg.grid) {
        if (ax.count < 1) throw UsageError("grid axis '" + ax.angle + "' needs count >= 1");
        double* slot = angle_slot(cfg.n, ax.angle, e2, e3);
        if (!slot) throw UsageError("unknown angle '" + ax.angle + "' for n = " + std::to_string(cfg.n));
        for (double* s : slots)
            if (s == slot) throw UsageError("angle '" + ax.angle + "' gridded twice");
        slots.push_back(slot);
        g.columns.push_back(ax.angle);
    }
    g.columns.push_back("W");

    const bool qubit_closed = cfg.n == 2 && choice.moduli.mu()[0] > 0.0;
    auto evaluate = [&]() -> double {
        if (qubit_closed) return qubit_wf(state.bloch().head<3>(), e2);
        if (cfg.n == 3 && choice.nu) return qutrit_wf(state.bloch(), *choice.nu, e3, basis);
        const Matrix u = cfg.n == 2 ? su2_coset_matrix(e2) : su3_euler_matrix(e3, basis);
        return wigner_value(state, assemble_kernel(choice.moduli, u, basis));
    };

    std::vector<int> idx(cfg.grid.size(), 0);
    while (true) {
        std::vector<double> row;
        for (std::size_t k = 0; k < cfg.grid.size(); ++k) {
            *slots[k] = axis_value(cfg.grid[k], idx[k]);
            row.push_back(*slots[k]);
        }
        row.push_back(evaluate());
        g.rows.push_back(std::move(row));
        std::size_t k = cfg.grid.size();
        while (k > 0) {
            --k;
            if (++idx[k] < cfg.grid[k].count) break;
            idx[k] = 0;
            if (k == 0) return g;
        }
    }
}

inline CommandResult cmd_wigner_eval(const RunConfig& cfg) {
    const auto g = wigner_grid(cfg);
    if (cfg.format == Format::Csv) return {io::table_csv(g.columns, g.rows)};
    io::Json doc;
    doc["n"] = cfg.n;
    doc["columns"] = g.columns;
    doc["rows"] = g.rows;
    return {doc.dump(2) + "\n"};
}

// ---- reconstruct ------------------------------------------------------------------------------

inline io::Json reconstruct_document(const RunConfig& cfg) {
    if (cfg.samples < 1000) throw UsageError("--samples must be >= 1000");
    const auto choice = resolve_kernel(cfg);
    const GellMannBasis basis(cfg.n);
    const DensityState truth = resolve_state(cfg, basis);
    const auto rec = reconstruct_state(state_sampler(truth, choice.moduli), choice.moduli, cfg.samples, cfg.seed,
                                       cfg.threads);
    io::Json re = io::Json::array(), im = io::Json::array();
    for (int i = 0; i < cfg.n; ++i) {
        io::Json rr = io::Json::array(), ii = io::Json::array();
        for (int j = 0; j < cfg.n; ++j) {
            rr.push_back(rec.rho_hat(i, j).real());
            ii.push_back(rec.rho_hat(i, j).imag());
        }
        re.push_back(rr);
        im.push_back(ii);
    }
    io::Json doc;
    doc["n"] = cfg.n;
    doc["moduli"] = to_std(choice.moduli.mu());
    doc["samples"] = cfg.samples;
    doc["seed"] = cfg.seed;
    doc["rho_real"] = re;
    doc["rho_imag"] = im;
    doc["frobenius_error"] = (rec.rho_hat - truth.rho()).norm();
    doc["standard_error"] = rec.standard_error;
    doc["anti_hermitian_residue"] = rec.anti_hermitian_residue;
    return doc;
}

inline CommandResult cmd_reconstruct(const RunConfig& cfg) {
    const auto doc = reconstruct_document(cfg);
    return {cfg.format == Format::Json ? doc.dump(2) + "\n" : io::flat_csv(doc)};
}

// ---- verify --------------------------------------------------------------------------------------

namespace detail {

inline io::ReportRecord algebraic(const std::string& name, int n, const std::vector<double>& mu, std::size_t count,
                                  std::uint64_t seed, double value, double tol) {
    io::ReportRecord r;
    r.check = name;
    r.n = n;
    r.moduli = mu;
    r.samples = count;
    r.seed = seed;
    r.mc = value;
    r.target = 0.0;
    r.pass = value <= tol;
    return r;
}

inline io::ReportRecord statistical(const std::string& name, int n, const std::vector<double>& mu,
                                    std::size_t samples, std::uint64_t seed, const McCheck& c) {
    io::ReportRecord r;
    r.check = name;
    r.n = n;
    r.moduli = mu;
    r.samples = samples;
    r.seed = seed;
    r.mc = c.mc;
    r.target = c.target;
    r.sigma = c.sigma;
    r.z = c.z();
    r.pass = c.passes();
    return r;
}

inline io::ReportRecord moment(const std::string& name, int n, const std::vector<double>& mu, std::size_t samples,
                               std::uint64_t seed, const MomentCheck& c) {
    io::ReportRecord r;
    r.check = name;
    r.n = n;
    r.moduli = mu;
    r.samples = samples;
    r.seed = seed;
    r.mc = c.mc.real();
    r.target = c.closed;
    r.sigma = c.sigma_re;
    r.z = c.z();
    r.pass = c.passes();
    return r;
}

}  // namespace detail

/// Runs every postulate check for one kernel family member.
inline std::vector<io::ReportRecord> verify_suite(const RunConfig& cfg) {
    if (cfg.samples < 10000) throw UsageError("verify needs --samples >= 10000");
    const auto choice = resolve_kernel(cfg);
    const int n = cfg.n;
    const GellMannBasis basis(n);
    const ModuliPoint& moduli = choice.moduli;
    const auto mu = to_std(moduli.mu());
    const std::size_t m = cfg.samples;
    const unsigned th = cfg.threads;
    // Each check draws from its own master seed.
    auto seed_for = [&](std::uint64_t k) { return SplitMix64::mix(cfg.seed * 0x100000001B3ULL + k); };
    constexpr std::size_t kPoints = 100;

    std::vector<io::ReportRecord> out;

    {
        const auto res = verify_master(spectrum_from_moduli(moduli, basis));
        out.push_back(detail::algebraic("master_equations", n, mu, 1, cfg.seed, std::max(res.trace, res.purity),
                                        kTol.algebraic));
    }
    {
        double worst = 0.0;
        const RealVector d = kernel_diagonal(moduli, basis);
        for (std::size_t k = 0; k < kPoints; ++k) {
            auto rng = substream(seed_for(1), k);
            const Matrix u = haar_unitary(n, rng);
            const Matrix delta = u * d.cast<Complex>().asDiagonal() * u.adjoint();
            worst = std::max({worst, max_abs(delta - delta.adjoint()), std::abs(delta.trace().real() - 1.0),
                              std::abs((delta * delta).trace().real() - n)});
        }
        out.push_back(detail::algebraic("hermiticity", n, mu, kPoints, seed_for(1), worst, kTol.algebraic));
    }
    {
        double worst = 0.0;
        for (std::size_t k = 0; k < kPoints; ++k) {
            auto rng = substream(seed_for(2), k);
            const DensityState s = random_state(basis, rng);
            const PhasePoint p(haar_unitary(n, rng));
            const Matrix g = haar_unitary(n, rng);
            worst = std::max(worst, check_covariance(s, p, moduli, g));
        }
        out.push_back(detail::algebraic("covariance", n, mu, kPoints, seed_for(2), worst, kTol.algebraic));
    }
    {
        double worst = 0.0;
        for (std::size_t k = 0; k < kPoints; ++k) {
            auto rng = substream(seed_for(3), k);
            const DensityState s = random_state(basis, rng);
            const PhasePoint p(haar_unitary(n, rng));
            const double trace_form = wigner_value(s, assemble_kernel(moduli, p.u(), basis));
            worst = std::max(worst, std::abs(wigner_closed_form(s.bloch(), moduli, p, basis) - trace_form));
            if (n == 2 && moduli.mu()[0] > 0) {
                std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
                const EulerSU2 e{ang(rng), ang(rng) / 2};
                const double tf = wigner_value(s, assemble_kernel(moduli, su2_coset_matrix(e), basis));
                worst = std::max(worst, std::abs(qubit_wf(s.bloch().head<3>(), e) - tf));
            }
            if (n == 3 && choice.nu) {
                std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
                EulerSU3 e{ang(rng), ang(rng), ang(rng), ang(rng), ang(rng), ang(rng), ang(rng), ang(rng)};
                const double tf = wigner_value(s, assemble_kernel(moduli, su3_euler_matrix(e, basis), basis));
                worst = std::max(worst, std::abs(qutrit_wf(s.bloch(), *choice.nu, e, basis) - tf));
            }
        }
        out.push_back(detail::algebraic("closed_form_equality", n, mu, kPoints, seed_for(3), worst, kTol.algebraic));
    }
    {
        auto rng = substream(seed_for(4), 0);
        const DensityState s = random_state(basis, rng);
        out.push_back(detail::statistical("norm", n, mu, m, seed_for(5), check_norm(s, moduli, m, seed_for(5), th)));
    }
    {
        const Matrix id = Matrix::Identity(n, n);
        out.push_back(detail::statistical("standardisation_identity", n, mu, m, seed_for(6),
                                          check_standardisation(id, moduli, m, seed_for(6), th)));
        out.push_back(detail::statistical("standardisation_generator", n, mu, m, seed_for(7),
                                          check_standardisation(basis[basis.size()], moduli, m, seed_for(7), th)));
        auto rng = substream(seed_for(8), 0);
        const Matrix a = random_hermitian(n, rng);
        out.push_back(detail::statistical("standardisation_random", n, mu, m, seed_for(9),
                                          check_standardisation(a, moduli, m, seed_for(9), th)));
    }
    {
        auto rng = substream(seed_for(10), 0);
        const DensityState pure = random_pure_state(basis, rng);
        out.push_back(detail::statistical("traciality_purity", n, mu, m, seed_for(11),
                                          check_traciality(pure.rho(), pure.rho(), moduli, m, seed_for(11), th)));
        out.push_back(detail::statistical("traciality_orthogonal", n, mu, m, seed_for(12),
                                          check_traciality(basis[1], basis[basis.size()], moduli, m, seed_for(12), th)));
        const Matrix a = random_hermitian(n, rng), b = random_hermitian(n, rng);
        out.push_back(detail::statistical("traciality_random", n, mu, m, seed_for(13),
                                          check_traciality(a, b, moduli, m, seed_for(13), th)));
    }
    {
        auto rng = substream(seed_for(14), 0);
        const DensityState s = random_state(basis, rng);
        const auto rec = reconstruct_state(state_sampler(s, moduli), moduli, m, seed_for(15), th);
        McCheck c{(rec.rho_hat - s.rho()).norm(), 0.0, rec.standard_error};
        out.push_back(detail::statistical("reconstruction", n, mu, m, seed_for(15), c));
    }
    {
        const int top = n;
        const std::array<std::array<int, 4>, 3> p2{{{1, 1, 1, 1}, {1, top, top, 1}, {1, 1, 1, top}}};
        for (std::size_t k = 0; k < p2.size(); ++k)
            out.push_back(detail::moment("weingarten2_" + std::to_string(k), n, mu, m, seed_for(16 + k),
                                         weingarten2_check(n, p2[k], m, seed_for(16 + k), th)));
        const std::array<std::array<int, 8>, 4> p4{{{1, 1, 1, 1, 1, 1, 1, 1},
                                                    {1, 1, top, top, 1, 1, top, top},
                                                    {1, 1, top, top, top, 1, 1, top},
                                                    {1, 1, 1, 1, 1, top, 1, top}}};
        for (std::size_t k = 0; k < p4.size(); ++k)
            out.push_back(detail::moment("weingarten4_" + std::to_string(k), n, mu, m, seed_for(20 + k),
                                         weingarten4_check(n, p4[k], m, seed_for(20 + k), th)));
    }
    out.push_back(moduli_fraction_record(n, mu, m, seed_for(30), th));
    return out;
}

inline CommandResult cmd_verify(const RunConfig& cfg) {
    const auto records = verify_suite(cfg);
    bool all = true;
    for (const auto& r : records) all = all && r.pass;
    std::string payload;
    if (cfg.format == Format::Json) {
        io::Json arr = io::Json::array();
        for (const auto& r : records) arr.push_back(io::to_json(r));
        payload = arr.dump(2) + "\n";
    } else {
        payload = io::report_csv(records);
    }
    return {payload, all ? kSuccess : kVerificationFailed};
}

// ---- dispatch ---------------------------------------------------------------------------------------------

inline CommandResult dispatch(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::Spectrum: return cmd_spectrum(cfg);
        case Command::ModuliSample: return cmd_moduli_sample(cfg);
        case Command::WignerEval: return cmd_wigner_eval(cfg);
        case Command::Reconstruct: return cmd_reconstruct(cfg);
        case Command::Verify: return cmd_verify(cfg);
    }
    throw UsageError("unknown command");
}

/// Runs a command, writing its payload to cfg.output (or `out`). Returns the exit code.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    CommandResult result;
    try {
        result = dispatch(cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidStateError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (cfg.output) {
        std::ofstream f(*cfg.output, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << *cfg.output << "\n";
            return kUsage;
        }
        f << result.payload;
    } else {
        out << result.payload;
    }
    return result.exit_code;
}

}  // namespace swk::cli

#endif  // SWKERNEL_CLI_HPP
