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

#ifndef SWKERNEL_ALGEBRA_HPP
#define SWKERNEL_ALGEBRA_HPP

#include <cmath>
#include <string>
#include <vector>

#include "swkernel/config.hpp"
#include "swkernel/linalg.hpp"

namespace swk {

/// Generalized Gell-Mann basis of su(N), normalized to tr(λ_a λ_b) = 2 δ_ab.
///
/// Generators are labelled 1..N²−1 as in the physics literature. They are
/// built block by block: for s = 2..N, the symmetric/antisymmetric pair for
/// each (j, s) with j < s, followed by the diagonal generator
/// diag(1,…,1,−(s−1),0,…,0)·sqrt(2/(s(s−1))). The diagonal generator of block
/// s therefore carries label s²−1, and for N = 3 the ordering is the
/// textbook λ_1..λ_8.
class GellMannBasis {
public:
    explicit GellMannBasis(int n) : n_(n) {
        if (n < 2) throw DomainError("gell_mann_basis: n must be >= 2, got " + std::to_string(n));
        const Complex i(0.0, 1.0);
        gens_.reserve(static_cast<std::size_t>(n * n - 1));
        for (int s = 2; s <= n; ++s) {
            const int col = s - 1;
            for (int row = 0; row < col; ++row) {
                Matrix sym = Matrix::Zero(n, n);
                sym(row, col) = 1.0;
                sym(col, row) = 1.0;
                gens_.push_back(sym);
                Matrix anti = Matrix::Zero(n, n);
                anti(row, col) = -i;
                anti(col, row) = i;
                gens_.push_back(anti);
            }
            Matrix diag = Matrix::Zero(n, n);
            const double scale = std::sqrt(2.0 / (s * (s - 1.0)));
            for (int k = 0; k < col; ++k) diag(k, k) = scale;
            diag(col, col) = -(s - 1.0) * scale;
            gens_.push_back(diag);
            cartan_.push_back(s * s - 1);
        }
    }

    int dim() const { return n_; }
    int size() const { return static_cast<int>(gens_.size()); }

    /// Generator λ_label, label in 1..N²−1.
    const Matrix& operator[](int label) const { return gens_.at(static_cast<std::size_t>(label - 1)); }
    const std::vector<Matrix>& generators() const { return gens_; }

    /// Labels s²−1, s = 2..N, of the diagonal (Cartan) generators.
    const std::vector<int>& cartan_indices() const { return cartan_; }

    bool is_cartan(int label) const {
        for (int c : cartan_)
            if (c == label) return true;
        return false;
    }

    /// Σ_a c_a λ_a for a coefficient vector indexed from 0 (entry a−1 ↔ λ_a).
    Matrix combine(const RealVector& coeffs) const {
        if (coeffs.size() != size())
            throw ValidationError("GellMannBasis::combine: coefficient vector has wrong length");
        Matrix m = Matrix::Zero(n_, n_);
        for (int a = 0; a < size(); ++a) m += coeffs[a] * gens_[static_cast<std::size_t>(a)];
        return m;
    }

private:
    int n_;
    std::vector<Matrix> gens_;
    std::vector<int> cartan_;
};

inline GellMannBasis gell_mann_basis(int n) { return GellMannBasis(n); }

/// d_{μνκ} = ¼ tr({λ_μ, λ_ν} λ_κ), stored densely; labels are 1-based.
class SymmetricStructureTensor {
public:
    SymmetricStructureTensor() = default;
    SymmetricStructureTensor(int n, std::vector<double> values) : n_(n), m_(n * n - 1), d_(std::move(values)) {}

    int dim() const { return n_; }
    int size() const { return m_; }

    double operator()(int mu, int nu, int kappa) const {
        return d_[static_cast<std::size_t>(((mu - 1) * m_ + (nu - 1)) * m_ + (kappa - 1))];
    }

    /// Σ d_{μνκ} x_μ x_ν x_κ over 0-indexed coefficient vector x.
    double cubic_form(const RealVector& x) const {
        double acc = 0.0;
        for (int a = 0; a < m_; ++a) {
            if (x[a] == 0.0) continue;
            for (int b = 0; b < m_; ++b) {
                if (x[b] == 0.0) continue;
                const double* row = &d_[static_cast<std::size_t>((a * m_ + b) * m_)];
                double inner = 0.0;
                for (int c = 0; c < m_; ++c) inner += row[c] * x[c];
                acc += x[a] * x[b] * inner;
            }
        }
        return acc;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<double> d_;
};

inline SymmetricStructureTensor symmetric_structure_constants(const GellMannBasis& basis) {
    const int m = basis.size();
    std::vector<double> d(static_cast<std::size_t>(m) * m * m, 0.0);
    for (int a = 1; a <= m; ++a)
        for (int b = a; b <= m; ++b) {
            const Matrix anti = basis[a] * basis[b] + basis[b] * basis[a];
            for (int c = b; c <= m; ++c) {
                const double v = 0.25 * (anti * basis[c]).trace().real();
                const int p[6][3] = {{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}};
                for (const auto& q : p)
                    d[static_cast<std::size_t>(((q[0] - 1) * m + (q[1] - 1)) * m + (q[2] - 1))] = v;
            }
        }
    return SymmetricStructureTensor(basis.dim(), std::move(d));
}

/// m = trace_part·I + Σ_a coeffs[a−1] λ_a for Hermitian m.
struct BasisExpansion {
    double trace_part = 0.0;  // tr(m)/N
    RealVector coeffs;        // c_a = ½ tr(m λ_a)
};

inline BasisExpansion expand_in_basis(const Matrix& m, const GellMannBasis& basis,
                                      double tol = kTol.algebraic) {
    const int n = basis.dim();
    if (m.rows() != n || m.cols() != n) throw ValidationError("expand_in_basis: dimension mismatch");
    if (!is_hermitian(m, tol)) throw ValidationError("expand_in_basis: matrix is not Hermitian");
    BasisExpansion e;
    e.trace_part = m.trace().real() / n;
    e.coeffs.resize(basis.size());
    for (int a = 1; a <= basis.size(); ++a) e.coeffs[a - 1] = 0.5 * (m * basis[a]).trace().real();
    return e;
}

inline Matrix reconstruct(const BasisExpansion& e, const GellMannBasis& basis) {
    const int n = basis.dim();
    return e.trace_part * Matrix::Identity(n, n) + basis.combine(e.coeffs);
}

}  // namespace swk

#endif  // SWKERNEL_ALGEBRA_HPP
