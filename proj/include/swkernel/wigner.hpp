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

#ifndef SWKERNEL_WIGNER_HPP
#define SWKERNEL_WIGNER_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>

#include "swkernel/algebra.hpp"
#include "swkernel/config.hpp"
#include "swkernel/group.hpp"
#include "swkernel/kernel.hpp"
#include "swkernel/linalg.hpp"
#include "swkernel/montecarlo.hpp"
#include "swkernel/random.hpp"
#include "swkernel/states.hpp"

namespace swk {

/// Symbol W_A = tr[A Δ] of an operator A. The imaginary part must vanish for Hermitian A.
inline double symbol_value(const Matrix& a, const KernelMatrix& kernel, double tol = kTol.algebraic) {
    if (a.rows() != kernel.dim() || a.cols() != kernel.dim())
        throw ValidationError("symbol_value: dimension mismatch");
    const Complex w = (a * kernel.delta()).trace();
    if (std::abs(w.imag()) > tol)
        throw NumericalIntegrityError("Wigner value has imaginary residue " + std::to_string(w.imag()));
    return w.real();
}

/// W_ρ(Ω) = tr[ρ Δ(Ω)].
inline double wigner_value(const DensityState& state, const KernelMatrix& kernel, double tol = kTol.algebraic) {
    return symbol_value(state.rho(), kernel, tol);
}

/// W = (1/N)[1 + ((N²−1)/√(N+1)) (n, ξ)] with n = Σ_s μ_{s²−1} n^(s²−1).
inline double wigner_closed_form(const RealVector& xi, const ModuliPoint& p, const PhasePoint& point,
                                 const GellMannBasis& basis) {
    const int n = basis.dim();
    if (xi.size() != basis.size() || p.dim() != n || point.dim() != n)
        throw ValidationError("wigner_closed_form: dimension mismatch");
    RealVector dir = RealVector::Zero(basis.size());
    for (int s = 2; s <= n; ++s) dir += p.mu()[s - 2] * adjoint_vector(point, s * s - 1, basis);
    const double nn = static_cast<double>(n);
    return (1.0 + (nn * nn - 1.0) / std::sqrt(nn + 1.0) * dir.dot(xi)) / nn;
}

/// Unit vector n(α, β) = (−cos α sin β, sin α sin β, cos β) of the qubit chart.
inline Eigen::Vector3d qubit_direction(const EulerSU2& e) {
    return {-std::cos(e.alpha) * std::sin(e.beta), std::sin(e.alpha) * std::sin(e.beta), std::cos(e.beta)};
}

/// W = 1/2 + (√3/2)(r, n).
inline double qubit_wf(const Eigen::Vector3d& r, const EulerSU2& e, double tol = kTol.positivity) {
    if (r.norm() > 1.0 + tol)
        throw InvalidStateError("qubit_wf: Bloch vector longer than 1", 0.5 * (1.0 - r.norm()));
    return 0.5 + std::sqrt(3.0) / 2.0 * r.dot(qubit_direction(e));
}

namespace detail {

inline void require_qutrit_state(const RealVector& xi, const GellMannBasis& basis) {
    if (basis.dim() != 3 || xi.size() != 8) throw ValidationError("qutrit Wigner function needs an 8-vector");
    static const SymmetricStructureTensor d = symmetric_structure_constants(GellMannBasis(3));
    const auto c = qutrit_bloch_constraints(xi, d);
    if (!c.ok) throw InvalidStateError("qutrit Bloch vector violates the positivity constraints", -c.c1);
}

}  // namespace detail

/// W = 1/3 + (4/3)[μ_3 (n^(3), ξ) + μ_8 (n^(8), ξ)] from the Euler closed forms.
/// The endpoints use their degenerate forms: ν = −1 gives 1/3 + (4/3)(n^(8), ξ),
/// ν = −1/3 gives 1/3 + (2/√3)(n^(3) + n^(8)/√3, ξ).
inline double qutrit_wf(const RealVector& xi, double nu, const EulerSU3& e, const GellMannBasis& basis) {
    detail::require_qutrit_state(xi, basis);
    const ModuliPoint mu = qutrit_mu(nu);  // validates ν
    const RealVector n8 = n8_closed_form(e);
    if (nu == kQutritNuMin) return 1.0 / 3.0 + 4.0 / 3.0 * n8.dot(xi);
    const RealVector n3 = n3_closed_form(e);
    if (std::abs(nu - kQutritNuMax) <= 1e-15) {
        const double r3 = std::sqrt(3.0);
        return 1.0 / 3.0 + 2.0 / r3 * (n3 + n8 / r3).dot(xi);
    }
    return 1.0 / 3.0 + 4.0 / 3.0 * (mu.mu()[0] * n3.dot(xi) + mu.mu()[1] * n8.dot(xi));
}

/// ν = −1/3 Wigner function in the adapted chart: 1/3 + (4/3)(n′, ξ).
inline double qutrit_wf_adapted(const RealVector& xi, const AdaptedEulerSU3& e, const GellMannBasis& basis) {
    detail::require_qutrit_state(xi, basis);
    return 1.0 / 3.0 + 4.0 / 3.0 * nprime_closed_form(e).dot(xi);
}

// ---- Monte Carlo verification over Haar samples --------------------------------------------

/// Statistical check result: estimate, exact target and standard error.
struct McCheck {
    double mc = 0.0;
    double target = 0.0;
    double sigma = 0.0;

    /// Signed pull; 0 when the deviation is at round-off level.
    double z() const {
        const double dev = mc - target;
        return sigma > 0.0 && std::abs(dev) > kTol.spectral ? dev / sigma : 0.0;
    }

    /// |mc − target| ≤ k σ. The floor covers integrands that are constant up to round-off.
    bool passes(double k = 3.0, double floor = kTol.spectral) const {
        return std::abs(mc - target) <= k * sigma + floor;
    }
};

namespace detail {

inline void require_samples(std::size_t samples, const char* who) {
    if (samples < 1000) throw DomainError(std::string(who) + ": need at least 1000 samples");
}

inline Matrix kernel_at(const RealVector& diag, const Matrix& u) {
    Matrix delta = u * diag.cast<Complex>().asDiagonal() * u.adjoint();
    return (delta + delta.adjoint()) / 2.0;
}

/// N · mean of f(Δ(U_k)) over Haar samples.
template <class F>
McCheck haar_average(const ModuliPoint& moduli, std::size_t samples, std::uint64_t seed, double target, F f,
                     unsigned threads) {
    const int n = moduli.dim();
    const GellMannBasis basis(n);
    const RealVector diag = kernel_diagonal(moduli, basis);
    const auto stats = accumulate_samples(
        samples, ScalarStats{},
        [&](std::size_t k, ScalarStats& acc) {
            auto rng = substream(seed, k);
            acc.add(n * f(kernel_at(diag, haar_unitary(n, rng))));
        },
        threads);
    return {stats.mean, target, stats.std_error()};
}

}  // namespace detail

/// N ∫ dμ W_A = tr A.
inline McCheck check_standardisation(const Matrix& a, const ModuliPoint& moduli, std::size_t samples,
                                     std::uint64_t seed, unsigned threads = 0) {
    detail::require_samples(samples, "check_standardisation");
    if (a.rows() != moduli.dim() || !is_hermitian(a, kTol.algebraic))
        throw ValidationError("check_standardisation: operator must be Hermitian N x N");
    return detail::haar_average(
        moduli, samples, seed, a.trace().real(), [&](const Matrix& delta) { return (a * delta).trace().real(); },
        threads);
}

/// N ∫ dμ W_A W_B = tr[AB] for symbols built from the same kernel family member.
inline McCheck check_traciality(const Matrix& a, const Matrix& b, const ModuliPoint& moduli, std::size_t samples,
                                std::uint64_t seed, unsigned threads = 0) {
    detail::require_samples(samples, "check_traciality");
    const int n = moduli.dim();
    if (a.rows() != n || b.rows() != n || a.cols() != n || b.cols() != n)
        throw ValidationError("check_traciality: dimension mismatch");
    if (!is_hermitian(a, kTol.algebraic) || !is_hermitian(b, kTol.algebraic))
        throw ValidationError("check_traciality: operators must be Hermitian");
    return detail::haar_average(
        moduli, samples, seed, (a * b).trace().real(),
        [&](const Matrix& delta) { return (a * delta).trace().real() * (b * delta).trace().real(); }, threads);
}

/// N ∫ dμ W_ρ = tr ρ = 1.
inline McCheck check_norm(const DensityState& state, const ModuliPoint& moduli, std::size_t samples,
                          std::uint64_t seed, unsigned threads = 0) {
    detail::require_samples(samples, "check_norm");
    if (state.dim() != moduli.dim()) throw ValidationError("check_norm: dimension mismatch");
    return detail::haar_average(
        moduli, samples, seed, 1.0, [&](const Matrix& delta) { return (state.rho() * delta).trace().real(); },
        threads);
}

/// |tr[(gρg†) Δ(U)] − tr[ρ (g†Δ(U)g)]|, zero up to round-off.
inline double check_covariance(const DensityState& state, const PhasePoint& point, const ModuliPoint& moduli,
                               const Matrix& g) {
    const int n = state.dim();
    if (point.dim() != n || moduli.dim() != n || g.rows() != n) throw ValidationError("check_covariance: dimension mismatch");
    if (!is_special_unitary(g, kTol.spectral)) throw ValidationError("check_covariance: g is not special unitary");
    const GellMannBasis basis(n);
    const Matrix delta = assemble_kernel(moduli, point.u(), basis).delta();
    const Complex lhs = (g * state.rho() * g.adjoint() * delta).trace();
    const Complex rhs = (state.rho() * (g.adjoint() * delta * g)).trace();
    return std::abs(lhs - rhs);
}

/// Callable returning the Wigner function at a phase-space point. Must be
/// safe to call concurrently when threads > 1.
using WignerSampler = std::function<double(const Matrix& u)>;

struct Reconstruction {
    Matrix rho_hat;                       // Hermitized estimate (M + M†)/2
    double standard_error = 0.0;          // entrywise standard errors combined in Frobenius norm
    double anti_hermitian_residue = 0.0;  // ‖(M − M†)/2‖_F of the raw estimate
};

/// ρ̂ = N · mean_k Δ(U_k) W(U_k) over Haar samples U_k.
inline Reconstruction reconstruct_state(const WignerSampler& wf, const ModuliPoint& moduli, std::size_t samples,
                                        std::uint64_t seed, unsigned threads = 0) {
    detail::require_samples(samples, "reconstruct_state");
    const int n = moduli.dim();
    const GellMannBasis basis(n);
    const RealVector diag = kernel_diagonal(moduli, basis);
    const auto stats = accumulate_samples(
        samples, MatrixStats(n),
        [&](std::size_t k, MatrixStats& acc) {
            auto rng = substream(seed, k);
            const Matrix u = haar_unitary(n, rng);
            acc.add(static_cast<double>(n) * wf(u) * detail::kernel_at(diag, u));
        },
        threads);
    const Matrix raw = stats.mean();
    Reconstruction r;
    r.rho_hat = (raw + raw.adjoint()) / 2.0;
    r.anti_hermitian_residue = ((raw - raw.adjoint()) / 2.0).norm();
    r.standard_error = stats.std_error().norm();
    return r;
}

/// Sampler for the Wigner function of a known state with the kernel family member `moduli`.
inline WignerSampler state_sampler(const DensityState& state, const ModuliPoint& moduli) {
    const RealVector diag = kernel_diagonal(moduli, GellMannBasis(moduli.dim()));
    const Matrix rho = state.rho();
    return [rho, diag](const Matrix& u) { return (rho * detail::kernel_at(diag, u)).trace().real(); };
}

}  // namespace swk

#endif  // SWKERNEL_WIGNER_HPP
