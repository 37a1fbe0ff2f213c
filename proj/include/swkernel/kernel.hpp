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

#ifndef SWKERNEL_KERNEL_HPP
#define SWKERNEL_KERNEL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "swkernel/algebra.hpp"
#include "swkernel/config.hpp"
#include "swkernel/linalg.hpp"
#include "swkernel/montecarlo.hpp"
#include "swkernel/random.hpp"

namespace swk {

/// κ = √(N(N²−1)/2), the scale of the Cartan part of the kernel.
inline double kernel_kappa(int n) { return std::sqrt(n * (n * n - 1.0) / 2.0); }

/// Point μ on the unit sphere S_{N−2}: mu[s−2] is the coefficient of λ_{s²−1}.
class ModuliPoint {
public:
    /// Throws DomainError unless |μ| = 1 within `tol`.
    ModuliPoint(int n, RealVector mu, double tol = kTol.algebraic) : n_(n), mu_(std::move(mu)) {
        if (n < 2) throw DomainError("ModuliPoint: n must be >= 2");
        if (mu_.size() != n - 1)
            throw DomainError("ModuliPoint: mu must have n-1 = " + std::to_string(n - 1) + " components");
        if (std::abs(mu_.squaredNorm() - 1.0) > tol)
            throw DomainError("ModuliPoint: mu is not on the unit sphere (|mu|^2 = " +
                              std::to_string(mu_.squaredNorm()) + ")");
    }

    /// Rescales a nonzero vector onto the sphere.
    static ModuliPoint normalized(int n, const RealVector& v) {
        const double norm = v.norm();
        if (!(norm > 0.0) || !std::isfinite(norm)) throw DomainError("ModuliPoint: cannot normalize a zero vector");
        return ModuliPoint(n, v / norm);
    }

    int dim() const { return n_; }
    const RealVector& mu() const { return mu_; }

    /// Coefficient of the Cartan generator with label s²−1.
    double coefficient(int cartan_label) const {
        const int s = static_cast<int>(std::lround(std::sqrt(cartan_label + 1.0)));
        if (s * s - 1 != cartan_label || s < 2 || s > n_)
            throw DomainError("ModuliPoint: " + std::to_string(cartan_label) + " is not a Cartan label");
        return mu_[s - 2];
    }

    bool operator==(const ModuliPoint& o) const { return n_ == o.n_ && mu_ == o.mu_; }

private:
    int n_;
    RealVector mu_;
};

/// Diagonal of P = (1/N)[I + κ Σ μ_s λ_s] in the order fixed by μ (not sorted).
inline RealVector kernel_diagonal(const ModuliPoint& p, const GellMannBasis& basis) {
    const int n = p.dim();
    const double kappa = kernel_kappa(n);
    RealVector d = RealVector::Ones(n);
    for (int s = 2; s <= n; ++s) {
        const Matrix& h = basis[s * s - 1];
        for (int i = 0; i < n; ++i) d[i] += kappa * p.mu()[s - 2] * h(i, i).real();
    }
    return d / static_cast<double>(n);
}

/// Eigenvalues of a kernel, sorted descending, with their degeneracy pattern.
struct KernelSpectrum {
    RealVector eigenvalues;           // π_1 ≥ … ≥ π_N
    std::vector<int> multiplicities;  // k(π_i) of each distinct value
    std::vector<int> flag_dims;       // partial sums d_1 < … < d_r (d_{r+1} = N omitted)
    bool degenerate = false;          // some multiplicity exceeds 1 (gaps under tolerance)

    int dim() const { return static_cast<int>(eigenvalues.size()); }

    static KernelSpectrum from_values(RealVector values, double gap = kTol.degeneracy) {
        std::sort(values.data(), values.data() + values.size(), std::greater<>());
        KernelSpectrum s;
        s.eigenvalues = std::move(values);
        const auto n = s.eigenvalues.size();
        int run = 1;
        for (Eigen::Index i = 1; i <= n; ++i) {
            if (i < n && s.eigenvalues[i - 1] - s.eigenvalues[i] <= gap) {
                ++run;
                continue;
            }
            s.multiplicities.push_back(run);
            run = 1;
        }
        int acc = 0;
        for (std::size_t k = 0; k + 1 < s.multiplicities.size(); ++k) {
            acc += s.multiplicities[k];
            s.flag_dims.push_back(acc);
        }
        s.degenerate = s.multiplicities.size() < static_cast<std::size_t>(n);
        return s;
    }
};

struct MasterResiduals {
    double trace = 0.0;   // |Σπ − 1|
    double purity = 0.0;  // |Σπ² − N|
};

/// Residuals of tr Δ = 1 and tr Δ² = N for any candidate spectrum.
inline MasterResiduals verify_master(const RealVector& values) {
    const double n = static_cast<double>(values.size());
    return {std::abs(values.sum() - 1.0), std::abs(values.squaredNorm() - n)};
}

inline MasterResiduals verify_master(const KernelSpectrum& s) { return verify_master(s.eigenvalues); }

inline KernelSpectrum spectrum_from_moduli(const ModuliPoint& p, const GellMannBasis& basis) {
    if (basis.dim() != p.dim()) throw ValidationError("spectrum_from_moduli: dimension mismatch");
    return KernelSpectrum::from_values(kernel_diagonal(p, basis));
}

inline ModuliPoint qubit_moduli() { return ModuliPoint(2, RealVector::Ones(1)); }

// ---- qutrit family ------------------------------------------------------

inline constexpr double kQutritNuMin = -1.0;
inline constexpr double kQutritNuMax = -1.0 / 3.0;

namespace detail {

inline void require_qutrit_nu(double nu, const char* who) {
    // Allow round-off at the endpoints (−1/3 typed as −0.3333333333 is accepted upstream by the CLI).
    if (!(nu >= kQutritNuMin - 1e-15 && nu <= kQutritNuMax + 1e-15))
        throw DomainError(std::string(who) + ": nu outside [-1,-1/3]");
}

}  // namespace detail

/// Generic kernel spectrum {(1−ν+δ)/2, (1−ν−δ)/2, ν}, δ = √((1+ν)(5−3ν)), re-sorted.
inline KernelSpectrum qutrit_spectrum(double nu) {
    detail::require_qutrit_nu(nu, "qutrit_spectrum");
    const double delta = std::sqrt(std::max(0.0, (1.0 + nu) * (5.0 - 3.0 * nu)));
    RealVector v(3);
    v << (1.0 - nu + delta) / 2.0, (1.0 - nu - delta) / 2.0, nu;
    return KernelSpectrum::from_values(v);
}

/// (μ_3, μ_8) = ((√3/4)√((1+ν)(5−3ν)), (1−3ν)/4).
inline ModuliPoint qutrit_mu(double nu) {
    detail::require_qutrit_nu(nu, "qutrit_mu");
    RealVector mu(2);
    mu << std::sqrt(3.0) / 4.0 * std::sqrt(std::max(0.0, (1.0 + nu) * (5.0 - 3.0 * nu))), (1.0 - 3.0 * nu) / 4.0;
    return ModuliPoint(3, mu);
}

/// ν = 1/3 − (4/3) cos ζ for ζ ∈ [0, π/3].
inline double zeta_to_nu(double zeta) {
    if (!(zeta >= 0.0 && zeta <= kPi / 3.0 + 1e-15)) throw DomainError("zeta_to_nu: zeta outside [0, pi/3]");
    return 1.0 / 3.0 - 4.0 / 3.0 * std::cos(zeta);
}

inline double nu_to_zeta(double nu) {
    detail::require_qutrit_nu(nu, "nu_to_zeta");
    return std::acos(std::clamp((1.0 - 3.0 * nu) / 4.0, -1.0, 1.0));
}

/// det(I/3 − Δ) = Π (1/3 − π_i); equals (16/27) cos 3ζ on the qutrit family.
inline double qutrit_det_invariant(const KernelSpectrum& s) {
    if (s.dim() != 3) throw DomainError("qutrit_det_invariant: spectrum must have 3 eigenvalues");
    double prod = 1.0;
    for (int i = 0; i < 3; ++i) prod *= 1.0 / 3.0 - s.eigenvalues[i];
    return prod;
}

// ---- moduli space ----------------------------------------------------------

/// μ reproducing a given diagonal of P: μ_s = (N / 2κ) Σ_i d_i (λ_s)_ii.
inline ModuliPoint moduli_from_diagonal(const RealVector& diag, const GellMannBasis& basis) {
    const int n = basis.dim();
    const double scale = n / (2.0 * kernel_kappa(n));
    RealVector mu(n - 1);
    for (int s = 2; s <= n; ++s) {
        const Matrix& h = basis[s * s - 1];
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += diag[i] * h(i, i).real();
        mu[s - 2] = scale * acc;
    }
    return ModuliPoint(n, mu, kTol.spectral);
}

/// True when the diagonal of P(μ) is already in descending order.
inline bool is_canonical(const ModuliPoint& p, const GellMannBasis& basis) {
    const RealVector d = kernel_diagonal(p, basis);
    for (Eigen::Index i = 1; i < d.size(); ++i)
        if (d[i - 1] < d[i]) return false;
    return true;
}

struct CanonicalModuli {
    ModuliPoint point;
    std::vector<int> permutation;  // canonical diagonal entry i = original entry permutation[i]
};

/// Representative of μ inside the descending-order fundamental domain.
inline CanonicalModuli moduli_canonicalize(const ModuliPoint& p, const GellMannBasis& basis) {
    const RealVector d = kernel_diagonal(p, basis);
    std::vector<int> perm(static_cast<std::size_t>(d.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return d[a] > d[b]; });
    bool identity = true;
    for (std::size_t i = 0; i < perm.size(); ++i) identity = identity && perm[i] == static_cast<int>(i);
    if (identity) return {p, perm};
    RealVector sorted(d.size());
    for (std::size_t i = 0; i < perm.size(); ++i) sorted[static_cast<Eigen::Index>(i)] = d[perm[i]];
    return {moduli_from_diagonal(sorted, basis), perm};
}

/// Fraction of uniform points on S_{N−2} that lie in the canonical domain.
/// Sample k uses substream(seed, k). For N = 2 the sphere is {−1, +1} and the
/// fraction is exactly 1/2.
inline double moduli_domain_fraction(int n, std::size_t samples, std::uint64_t seed, unsigned threads = 0) {
    if (n < 2) throw DomainError("moduli_domain_fraction: n must be >= 2");
    const GellMannBasis basis(n);
    if (n == 2) {
        const int hits = is_canonical(ModuliPoint(2, RealVector::Constant(1, 1.0)), basis) +
                         is_canonical(ModuliPoint(2, RealVector::Constant(1, -1.0)), basis);
        return hits / 2.0;
    }
    if (samples < 1000) throw DomainError("moduli_domain_fraction: need at least 1000 samples");
    const auto stats = accumulate_samples(
        samples, ScalarStats{},
        [&](std::size_t k, ScalarStats& acc) {
            auto rng = substream(seed, k);
            std::normal_distribution<double> normal;
            RealVector v(n - 1);
            for (int i = 0; i < n - 1; ++i) v[i] = normal(rng);
            acc.add(is_canonical(ModuliPoint::normalized(n, v), basis) ? 1.0 : 0.0);
        },
        threads);
    return stats.mean;
}

/// Binomial standard error of a fraction estimate with success probability p.
inline double binomial_sigma(double p, std::size_t samples) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

struct IsotropySignature {
    std::vector<int> multiplicities;
    int flag_dim = 0;  // N² − Σ k_i², the real dimension of U(N)/H
};

inline IsotropySignature isotropy_signature(const KernelSpectrum& s) {
    IsotropySignature sig;
    sig.multiplicities = s.multiplicities;
    int sq = 0;
    for (int k : s.multiplicities) sq += k * k;
    sig.flag_dim = s.dim() * s.dim() - sq;
    return sig;
}

// ---- kernel matrices ---------------------------------------------------------

/// Hermitian SW kernel Δ with tr Δ = 1 and tr Δ² = N.
class KernelMatrix {
public:
    KernelMatrix(Matrix delta, const Tolerances& tol = kTol) : delta_(std::move(delta)) {
        const int n = static_cast<int>(delta_.rows());
        if (!is_hermitian(delta_, tol.algebraic)) throw ValidationError("KernelMatrix: not Hermitian");
        if (std::abs(delta_.trace().real() - 1.0) > tol.spectral)
            throw ValidationError("KernelMatrix: tr(delta) != 1");
        if (std::abs((delta_ * delta_).trace().real() - n) > tol.spectral)
            throw ValidationError("KernelMatrix: tr(delta^2) != N");
    }

    int dim() const { return static_cast<int>(delta_.rows()); }
    const Matrix& delta() const { return delta_; }

private:
    Matrix delta_;
};

/// Δ = U P(μ) U†. Conjugation is symmetrized so Δ is Hermitian to the last bit.
inline KernelMatrix assemble_kernel(const ModuliPoint& p, const Matrix& u, const GellMannBasis& basis,
                                    const Tolerances& tol = kTol) {
    if (u.rows() != p.dim() || basis.dim() != p.dim()) throw ValidationError("assemble_kernel: dimension mismatch");
    if (!is_special_unitary(u, tol.spectral)) throw ValidationError("assemble_kernel: u is not special unitary");
    const RealVector d = kernel_diagonal(p, basis);
    Matrix delta = u * d.cast<Complex>().asDiagonal() * u.adjoint();
    delta = (delta + delta.adjoint()) / 2.0;
    return KernelMatrix(std::move(delta), tol);
}

}  // namespace swk

#endif  // SWKERNEL_KERNEL_HPP
