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

#ifndef SWKERNEL_LINALG_HPP
#define SWKERNEL_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace swk {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

inline Matrix dagger(const Matrix& m) { return m.adjoint(); }

/// Largest absolute entry; 0 for an empty operand.
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().maxCoeff());
}

inline bool is_hermitian(const Matrix& m, double tol) {
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

/// Max-entry deviations of u from unitarity and from unit determinant.
struct UnitarityResidual {
    double unitarity = 0.0;
    double determinant = 0.0;
};

inline UnitarityResidual unitarity_residual(const Matrix& u) {
    const Matrix id = Matrix::Identity(u.rows(), u.cols());
    return {max_abs(u.adjoint() * u - id), std::abs(u.determinant() - Complex(1.0, 0.0))};
}

inline bool is_special_unitary(const Matrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    const auto r = unitarity_residual(u);
    return r.unitarity <= tol && r.determinant <= tol;
}

/// exp(i t h) for Hermitian h, computed through its spectral decomposition.
inline Matrix expi_hermitian(const Matrix& h, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const RealVector& w = es.eigenvalues();
    Eigen::VectorXcd phases(w.size());
    for (Eigen::Index k = 0; k < w.size(); ++k) phases[k] = std::polar(1.0, t * w[k]);
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// Ascending eigenvalues of a Hermitian matrix.
inline RealVector hermitian_eigenvalues(const Matrix& h) {
    return Eigen::SelfAdjointEigenSolver<Matrix>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

inline double frobenius(const Matrix& m) { return m.norm(); }

}  // namespace swk

#endif  // SWKERNEL_LINALG_HPP
