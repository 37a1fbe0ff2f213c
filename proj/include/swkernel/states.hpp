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

#ifndef SWKERNEL_STATES_HPP
#define SWKERNEL_STATES_HPP

#include <cmath>
#include <string>

#include "swkernel/algebra.hpp"
#include "swkernel/config.hpp"
#include "swkernel/linalg.hpp"
#include "swkernel/random.hpp"

namespace swk {

/// Prefactor √(N(N−1)/2) linking the Bloch vector to ρ = (1/N)(I + c (ξ, λ)).
inline double bloch_prefactor(int n) { return std::sqrt(n * (n - 1.0) / 2.0); }

/// Density matrix together with its Bloch vector (entry a−1 ↔ λ_a).
class DensityState {
public:
    int dim() const { return n_; }
    const Matrix& rho() const { return rho_; }
    const RealVector& bloch() const { return bloch_; }
    double purity() const { return (rho_ * rho_).trace().real(); }

private:
    DensityState(int n, Matrix rho, RealVector bloch) : n_(n), rho_(std::move(rho)), bloch_(std::move(bloch)) {}

    friend DensityState rho_from_bloch(const GellMannBasis&, const RealVector&, const Tolerances&);
    friend DensityState state_from_matrix(const Matrix&, const GellMannBasis&, const Tolerances&);

    int n_;
    Matrix rho_;
    RealVector bloch_;
};

namespace detail {

inline void require_positive(const Matrix& rho, const Tolerances& tol) {
    const double lo = hermitian_eigenvalues(rho).minCoeff();
    if (lo < -tol.positivity)
        throw InvalidStateError("state is not positive semidefinite: min eigenvalue " + std::to_string(lo), lo);
}

}  // namespace detail

/// ρ = (1/N)(I + √(N(N−1)/2) (ξ, λ)). Throws InvalidStateError when ρ is not PSD.
inline DensityState rho_from_bloch(const GellMannBasis& basis, const RealVector& xi,
                                   const Tolerances& tol = kTol) {
    const int n = basis.dim();
    if (xi.size() != basis.size())
        throw ValidationError("rho_from_bloch: Bloch vector must have length " + std::to_string(basis.size()));
    Matrix rho = (Matrix::Identity(n, n) + bloch_prefactor(n) * basis.combine(xi)) / static_cast<double>(n);
    detail::require_positive(rho, tol);
    return DensityState(n, std::move(rho), xi);
}

inline DensityState rho_from_bloch(int n, const RealVector& xi, const Tolerances& tol = kTol) {
    return rho_from_bloch(GellMannBasis(n), xi, tol);
}

/// Validates ρ (Hermitian, unit trace, PSD) and attaches its Bloch vector.
inline DensityState state_from_matrix(const Matrix& rho, const GellMannBasis& basis,
                                      const Tolerances& tol = kTol) {
    const int n = basis.dim();
    if (rho.rows() != n || rho.cols() != n) throw ValidationError("density matrix has wrong dimension");
    if (!is_hermitian(rho, tol.algebraic)) throw ValidationError("density matrix is not Hermitian");
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tol.algebraic)
        throw ValidationError("density matrix does not have unit trace");
    detail::require_positive(rho, tol);
    const double scale = n / (2.0 * bloch_prefactor(n));
    RealVector xi(basis.size());
    for (int a = 1; a <= basis.size(); ++a) xi[a - 1] = scale * (rho * basis[a]).trace().real();
    return DensityState(n, rho, std::move(xi));
}

/// Inverse of rho_from_bloch.
inline RealVector bloch_from_rho(const Matrix& rho, const GellMannBasis& basis, const Tolerances& tol = kTol) {
    return state_from_matrix(rho, basis, tol).bloch();
}

/// Quadratic and cubic Bloch-ball constraints of a qutrit and their joint verdict.
struct QutritConstraints {
    double c1 = 0.0;  // Σ ξ²
    double c2 = 0.0;  // Σ ξ² − (2/√3) Σ d_{μνκ} ξ_μ ξ_ν ξ_κ
    bool ok = false;  // 0 ≤ c1 ≤ 1 and 0 ≤ c2 ≤ 1/3
};

inline QutritConstraints qutrit_bloch_constraints(const RealVector& xi, const SymmetricStructureTensor& d,
                                                  double slack = kTol.positivity) {
    if (xi.size() != 8 || d.dim() != 3)
        throw ValidationError("qutrit_bloch_constraints: expects an 8-vector and su(3) constants");
    QutritConstraints r;
    r.c1 = xi.squaredNorm();
    r.c2 = r.c1 - 2.0 / std::sqrt(3.0) * d.cubic_form(xi);
    r.ok = r.c1 >= -slack && r.c1 <= 1.0 + slack && r.c2 >= -slack && r.c2 <= 1.0 / 3.0 + slack;
    return r;
}

/// Full-rank random state G G† / tr(G G†) from a Ginibre matrix.
template <class Engine>
DensityState random_state(const GellMannBasis& basis, Engine& rng) {
    const Matrix g = ginibre(basis.dim(), rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = (rho + rho.adjoint()) / 2.0;
    return state_from_matrix(rho, basis);
}

/// Random pure state |ψ⟩⟨ψ|.
template <class Engine>
DensityState random_pure_state(const GellMannBasis& basis, Engine& rng) {
    Eigen::VectorXcd psi(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) psi[i] = complex_gaussian(rng);
    psi.normalize();
    Matrix rho = psi * psi.adjoint();
    rho = (rho + rho.adjoint()) / 2.0;
    return state_from_matrix(rho, basis);
}

}  // namespace swk

#endif  // SWKERNEL_STATES_HPP
