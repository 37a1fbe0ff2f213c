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

#ifndef SWKERNEL_GROUP_HPP
#define SWKERNEL_GROUP_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swkernel/algebra.hpp"
#include "swkernel/config.hpp"
#include "swkernel/linalg.hpp"
#include "swkernel/montecarlo.hpp"
#include "swkernel/random.hpp"

namespace swk {

/// Coset chart of SU(2)/U(1): X = e^{i(α/2)σ3} e^{i(β/2)σ2} e^{−i(α/2)σ3}.
struct EulerSU2 {
    double alpha = 0.0;  // [0, 2π]
    double beta = 0.0;   // [0, π]
};

/// Generalized Euler angles of SU(3):
/// U = V(α,β,γ) e^{iθλ5} V(a,b,c) e^{iφλ8}, V(a,b,c) = e^{i(a/2)λ3} e^{i(b/2)λ2} e^{i(c/2)λ3}.
struct EulerSU3 {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    double a = 0.0, b = 0.0, c = 0.0;
    double theta = 0.0, phi = 0.0;
};

/// Euler angles for the lower-corner embedding su(2) = span{λ6, λ7, −½λ3 + (√3/2)λ8}:
/// U′ = V′(α′,β′,γ′) e^{iθ′λ5} V′(a′,b′,c′) e^{iφ′((√3/2)λ3 + ½λ8)} with
/// V′(a,b,c) = e^{−i(a/2)M} e^{i(b/2)λ7} e^{−i(c/2)M}, M = ½λ3 − (√3/2)λ8.
/// Equivalently U′(angles) = T U(−angles) T with T the 1↔3 permutation.
struct AdaptedEulerSU3 {
    EulerSU3 angles;
};

using EulerChart = std::variant<EulerSU2, EulerSU3, AdaptedEulerSU3>;

/// A phase-space point, stored as the special-unitary matrix diagonalizing the kernel.
class PhasePoint {
public:
    explicit PhasePoint(Matrix u, std::optional<EulerChart> chart = std::nullopt, double tol = kTol.spectral)
        : u_(std::move(u)), chart_(std::move(chart)) {
        if (u_.rows() < 2 || !is_special_unitary(u_, tol))
            throw ValidationError("PhasePoint: matrix is not special unitary");
    }

    int dim() const { return static_cast<int>(u_.rows()); }
    const Matrix& u() const { return u_; }
    const std::optional<EulerChart>& chart() const { return chart_; }

private:
    Matrix u_;
    std::optional<EulerChart> chart_;
};

// ---- Haar measure --------------------------------------------------------------

/// Haar-distributed SU(N) element: QR of a Ginibre matrix with the R-diagonal phases
/// moved into Q (Haar on U(N)), then column 0 multiplied by det⁻¹. The column fix
/// commutes with left multiplication by SU(N), so the result is left-invariant on
/// SU(N), hence Haar.
template <class Engine>
Matrix haar_unitary(int n, Engine& rng) {
    const Matrix z = ginibre(n, rng);
    const Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    const Matrix& r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        if (mag > 0.0) q.col(j) *= d / mag;
    }
    const Complex det = q.determinant();
    q.col(0) *= std::conj(det) / std::abs(det);
    return q;
}

/// Haar sample number `index` of the stream with master seed `seed`.
inline PhasePoint haar_sample(int n, std::uint64_t seed, std::uint64_t index = 0) {
    if (n < 2) throw DomainError("haar_sample: n must be >= 2");
    auto rng = substream(seed, index);
    return PhasePoint(haar_unitary(n, rng));
}

// ---- Euler charts --------------------------------------------------------------

inline Matrix su2_coset_matrix(const EulerSU2& e) {
    const Complex i(0.0, 1.0);
    Matrix rz(2, 2), ry(2, 2), rzi(2, 2);
    rz << std::exp(i * (e.alpha / 2)), 0.0, 0.0, std::exp(-i * (e.alpha / 2));
    rzi = rz.adjoint();
    const double cb = std::cos(e.beta / 2), sb = std::sin(e.beta / 2);
    ry << cb, sb, -sb, cb;  // e^{i(β/2)σ2}
    return rz * ry * rzi;
}

inline PhasePoint su2_coset(const EulerSU2& e) { return PhasePoint(su2_coset_matrix(e), EulerChart{e}); }

/// Angles outside their documented ranges. The chart is used for unrestricted
/// sweeps too, so these are reported rather than rejected.
inline std::vector<std::string> chart_range_warnings(const EulerSU3& e) {
    std::vector<std::string> w;
    auto check = [&](const char* name, double v, double hi) {
        if (v < 0.0 || v > hi) w.push_back(std::string(name) + " outside [0, " + std::to_string(hi) + "]");
    };
    check("alpha", e.alpha, 2 * kPi);
    check("a", e.a, 2 * kPi);
    check("beta", e.beta, kPi);
    check("b", e.b, kPi);
    check("gamma", e.gamma, 4 * kPi);
    check("c", e.c, 4 * kPi);
    check("theta", e.theta, kPi / 2);
    check("phi", e.phi, std::sqrt(3.0) * kPi);
    return w;
}

inline std::vector<std::string> chart_range_warnings(const EulerSU2& e) {
    std::vector<std::string> w;
    if (e.alpha < 0.0 || e.alpha > 2 * kPi) w.push_back("alpha outside [0, 2pi]");
    if (e.beta < 0.0 || e.beta > kPi) w.push_back("beta outside [0, pi]");
    return w;
}

inline Matrix su3_euler_matrix(const EulerSU3& e, const GellMannBasis& basis) {
    if (basis.dim() != 3) throw DomainError("su3_from_euler: needs the su(3) basis");
    auto v = [&](double a, double b, double c) -> Matrix {
        return expi_hermitian(basis[3], a / 2) * expi_hermitian(basis[2], b / 2) * expi_hermitian(basis[3], c / 2);
    };
    return v(e.alpha, e.beta, e.gamma) * expi_hermitian(basis[5], e.theta) * v(e.a, e.b, e.c) *
           expi_hermitian(basis[8], e.phi);
}

inline PhasePoint su3_from_euler(const EulerSU3& e, const GellMannBasis& basis) {
    return PhasePoint(su3_euler_matrix(e, basis), EulerChart{e});
}

inline Matrix su3_adapted_matrix(const AdaptedEulerSU3& adapted, const GellMannBasis& basis) {
    if (basis.dim() != 3) throw DomainError("su3_from_adapted_euler: needs the su(3) basis");
    const double r3 = std::sqrt(3.0);
    const Matrix m = 0.5 * basis[3] - r3 / 2 * basis[8];
    const Matrix phi_gen = r3 / 2 * basis[3] + 0.5 * basis[8];
    auto v = [&](double a, double b, double c) -> Matrix {
        return expi_hermitian(m, -a / 2) * expi_hermitian(basis[7], b / 2) * expi_hermitian(m, -c / 2);
    };
    const EulerSU3& e = adapted.angles;
    return v(e.alpha, e.beta, e.gamma) * expi_hermitian(basis[5], e.theta) * v(e.a, e.b, e.c) *
           expi_hermitian(phi_gen, e.phi);
}

inline PhasePoint su3_from_adapted_euler(const AdaptedEulerSU3& e, const GellMannBasis& basis) {
    return PhasePoint(su3_adapted_matrix(e, basis), EulerChart{e});
}

// ---- adjoint representation --------------------------------------------------------------

/// Coefficients of U h U† in the basis: ½ tr(U h U† λ_μ), entry μ−1.
inline RealVector adjoint_coefficients(const Matrix& u, const Matrix& h, const GellMannBasis& basis) {
    const Matrix rotated = u * h * u.adjoint();
    RealVector out(basis.size());
    for (int mu = 1; mu <= basis.size(); ++mu) out[mu - 1] = 0.5 * (rotated * basis[mu]).trace().real();
    return out;
}

/// n^(s²−1)_μ = ½ tr(U λ_{s²−1} U† λ_μ).
inline RealVector adjoint_vector(const PhasePoint& p, int cartan_label, const GellMannBasis& basis) {
    if (p.dim() != basis.dim()) throw ValidationError("adjoint_vector: dimension mismatch");
    if (!basis.is_cartan(cartan_label))
        throw DomainError("adjoint_vector: " + std::to_string(cartan_label) + " is not a Cartan label");
    return adjoint_coefficients(p.u(), basis[cartan_label], basis);
}

/// Matrix of the adjoint action on coefficient vectors, M_{μν} = ½ tr(V λ_ν V† λ_μ),
/// so that V (c, λ) V† = (M c, λ) and adjoint_vector(V·U) = M · adjoint_vector(U).
inline RealMatrix adjoint_matrix(const Matrix& v, const GellMannBasis& basis) {
    const int m = basis.size();
    RealMatrix out(m, m);
    for (int nu = 1; nu <= m; ++nu) out.col(nu - 1) = adjoint_coefficients(v, basis[nu], basis);
    return out;
}

/// Orthonormal pair (n^(3), n^(8)) of an SU(3) element.
struct AdjointFrame {
    RealVector n3;
    RealVector n8;
};

inline AdjointFrame adjoint_frame(const PhasePoint& p, const GellMannBasis& basis) {
    return {adjoint_vector(p, 3, basis), adjoint_vector(p, 8, basis)};
}

/// Permutation swapping the first and third basis states (det −1).
inline Matrix permutation_t() {
    Matrix t = Matrix::Zero(3, 3);
    t(0, 2) = t(1, 1) = t(2, 0) = 1.0;
    return t;
}

/// −T, the phase-fixed version of T inside SU(3).
inline Matrix permutation_t_su3() { return -permutation_t(); }

/// Ad_T with T λ_μ T = Σ_ν (Ad_T)_{μν} λ_ν (symmetric and involutive).
inline RealMatrix ad_t_matrix() {
    const double h = std::sqrt(3.0) / 2.0;
    RealMatrix o(8, 8);
    // clang-format off
    o << 0, 0,  0,   0,  0, 1,  0,  0,
         0, 0,  0,   0,  0, 0, -1,  0,
         0, 0,  0.5, 0,  0, 0,  0, -h,
         0, 0,  0,   1,  0, 0,  0,  0,
         0, 0,  0,   0, -1, 0,  0,  0,
         1, 0,  0,   0,  0, 0,  0,  0,
         0, -1, 0,   0,  0, 0,  0,  0,
         0, 0, -h,   0,  0, 0,  0, -0.5;
    // clang-format on
    return o;
}

// ---- closed forms of the SU(3) adjoint vectors -----------------------------------------------------

/// n^(3) in Euler angles; depends on {α, β, γ, a, b, θ}.
inline RealVector n3_closed_form(const EulerSU3& e) {
    using std::cos;
    using std::sin;
    const double al = e.alpha, be = e.beta, ga = e.gamma, a = e.a, b = e.b, th = e.theta;
    const double ag = a + ga;
    const double k1 = sin(b) * cos(th);
    const double k2 = cos(b) * (1.0 - 0.5 * sin(th) * sin(th));
    const double hm = (al - ga) / 2, hp = (al + ga) / 2;
    RealVector n(8);
    n[0] = (sin(al) * sin(ag) - cos(al) * cos(be) * cos(ag)) * k1 - cos(al) * sin(be) * k2;
    n[1] = (cos(al) * sin(ag) + sin(al) * cos(be) * cos(ag)) * k1 + sin(al) * sin(be) * k2;
    n[2] = -cos(ag) * sin(be) * k1 + cos(be) * k2;
    n[3] = cos(hm - a) * sin(be / 2) * sin(b) * sin(th) - 0.5 * cos(hp) * cos(be / 2) * cos(b) * sin(2 * th);
    n[4] = -sin(hm - a) * sin(be / 2) * sin(b) * sin(th) + 0.5 * sin(hp) * cos(be / 2) * cos(b) * sin(2 * th);
    n[5] = cos(hp + a) * cos(be / 2) * sin(b) * sin(th) + 0.5 * cos(hm) * sin(be / 2) * cos(b) * sin(2 * th);
    n[6] = sin(hp + a) * cos(be / 2) * sin(b) * sin(th) + 0.5 * sin(hm) * sin(be / 2) * cos(b) * sin(2 * th);
    n[7] = -std::sqrt(3.0) / 2 * cos(b) * sin(th) * sin(th);
    return n;
}

/// n^(8) in Euler angles; depends only on {α, β, γ, θ}.
inline RealVector n8_closed_form(const EulerSU3& e) {
    using std::cos;
    using std::sin;
    const double h = std::sqrt(3.0) / 2;
    const double al = e.alpha, be = e.beta, ga = e.gamma, th = e.theta;
    const double s2 = sin(th) * sin(th), d2 = sin(2 * th);
    RealVector n(8);
    n[0] = h * cos(al) * sin(be) * s2;
    n[1] = -h * sin(al) * sin(be) * s2;
    n[2] = -h * cos(be) * s2;
    n[3] = -h * cos((al + ga) / 2) * cos(be / 2) * d2;
    n[4] = h * sin((al + ga) / 2) * cos(be / 2) * d2;
    n[5] = h * cos((al - ga) / 2) * sin(be / 2) * d2;
    n[6] = h * sin((al - ga) / 2) * sin(be / 2) * d2;
    n[7] = 1.0 - 1.5 * s2;
    return n;
}

/// Cartan element (√3/2)λ3 + ½λ8 of the ν = −1/3 kernel.
inline Matrix top_cartan_element(const GellMannBasis& basis) {
    return std::sqrt(3.0) / 2 * basis[3] + 0.5 * basis[8];
}

/// n′ of the ν = −1/3 kernel in the adapted chart; depends only on {α′, β′, γ′, θ′}.
inline RealVector nprime_closed_form(const AdaptedEulerSU3& adapted) {
    using std::cos;
    using std::sin;
    const double h = std::sqrt(3.0) / 2;
    const EulerSU3& e = adapted.angles;
    const double al = e.alpha, be = e.beta, ga = e.gamma, th = e.theta;
    const double s2 = sin(th) * sin(th), d2 = sin(2 * th);
    RealVector n(8);
    n[0] = -h * cos((al - ga) / 2) * sin(be / 2) * d2;
    n[1] = -h * sin((al - ga) / 2) * sin(be / 2) * d2;
    n[2] = h * (cos(th) * cos(th) - sin(be / 2) * sin(be / 2) * s2);
    n[3] = -h * cos((al + ga) / 2) * cos(be / 2) * d2;
    n[4] = h * sin((al + ga) / 2) * cos(be / 2) * d2;
    n[5] = h * cos(al) * sin(be) * s2;
    n[6] = -h * sin(al) * sin(be) * s2;
    n[7] = 0.5 * (1.0 - 3.0 * cos(be / 2) * cos(be / 2) * s2);
    return n;
}

/// n′ from its definition ½ tr(U′ K U′† λ_μ) with K the ν = −1/3 Cartan element.
inline RealVector nprime_trace_form(const AdaptedEulerSU3& e, const GellMannBasis& basis) {
    return adjoint_coefficients(su3_adapted_matrix(e, basis), top_cartan_element(basis), basis);
}

/// The rotation relating n′ to n^(8): n′(α′,β′,γ′,θ′) = −Ad_T n^(8)(−α′,−β′,−γ′,−θ′).
/// (T maps λ8 to −K, hence the overall sign; the angle reflection comes from
/// U′(angles) = T U(−angles) T.)
inline RealVector nprime_from_n8(const AdaptedEulerSU3& adapted) {
    EulerSU3 reflected;
    reflected.alpha = -adapted.angles.alpha;
    reflected.beta = -adapted.angles.beta;
    reflected.gamma = -adapted.angles.gamma;
    reflected.theta = -adapted.angles.theta;
    return -(ad_t_matrix() * n8_closed_form(reflected));
}

// ---- Weingarten oracles --------------------------------------------------------------

// Moments with as many U as U† factors are the same for SU(N) and U(N): the
// extra U(1) phase of U(N) cancels between U and U†. The U(N) Weingarten
// formulas are therefore used as-is for every N >= 2, including SU(2).
// Indices are 1-based; U†_{kl} = conj(U_{lk}).

/// ∫ U_{i j} U†_{k l} = (1/N) δ_{il} δ_{jk}; indices (i, j, k, l).
inline double weingarten2_closed(int n, const std::array<int, 4>& idx) {
    const auto [i, j, k, l] = idx;
    return (i == l && j == k) ? 1.0 / n : 0.0;
}

/// ∫ U_{i1 j1} U_{i2 j2} U†_{k1 l1} U†_{k2 l2}; indices (i1, j1, i2, j2, k1, l1, k2, l2).
inline double weingarten4_closed(int n, const std::array<int, 8>& idx) {
    const auto [i1, j1, i2, j2, k1, l1, k2, l2] = idx;
    auto d = [](int x, int y) { return x == y ? 1.0 : 0.0; };
    const double nn = static_cast<double>(n);
    const double plus = d(i1, l1) * d(i2, l2) * d(j1, k1) * d(j2, k2) + d(i1, l2) * d(i2, l1) * d(j1, k2) * d(j2, k1);
    const double minus = d(i1, l1) * d(i2, l2) * d(j1, k2) * d(j2, k1) + d(i1, l2) * d(i2, l1) * d(j1, k1) * d(j2, k2);
    return plus / (nn * nn - 1.0) - minus / (nn * (nn * nn - 1.0));
}

/// Monte Carlo moment against its closed form. Real and imaginary parts are
/// judged separately against their own standard errors.
struct MomentCheck {
    Complex mc;
    double closed = 0.0;
    double sigma_re = 0.0;
    double sigma_im = 0.0;

    double sigma() const { return std::hypot(sigma_re, sigma_im); }
    double z() const {
        const double zr = sigma_re > 0 ? std::abs(mc.real() - closed) / sigma_re : 0.0;
        const double zi = sigma_im > 0 ? std::abs(mc.imag()) / sigma_im : 0.0;
        return std::max(zr, zi);
    }
    bool passes(double k = 3.0, double floor = kTol.spectral) const {
        return std::abs(mc.real() - closed) <= k * sigma_re + floor && std::abs(mc.imag()) <= k * sigma_im + floor;
    }
};

namespace detail {

template <std::size_t K>
void require_indices(int n, const std::array<int, K>& idx, const char* who) {
    for (int v : idx)
        if (v < 1 || v > n) throw DomainError(std::string(who) + ": index out of range 1..N");
}

template <class Product>
MomentCheck moment_check(int n, std::size_t samples, std::uint64_t seed, double closed, Product product,
                         unsigned threads) {
    if (samples < 10000) throw DomainError("weingarten check: need at least 10^4 samples");
    const auto stats = accumulate_samples(
        samples, ComplexStats{},
        [&](std::size_t k, ComplexStats& acc) {
            auto rng = substream(seed, k);
            acc.add(product(haar_unitary(n, rng)));
        },
        threads);
    return {stats.mean(), closed, stats.re.std_error(), stats.im.std_error()};
}

}  // namespace detail

inline MomentCheck weingarten2_check(int n, const std::array<int, 4>& idx, std::size_t samples, std::uint64_t seed,
                                     unsigned threads = 0) {
    detail::require_indices(n, idx, "weingarten2_check");
    const auto [i, j, k, l] = idx;
    return detail::moment_check(
        n, samples, seed, weingarten2_closed(n, idx),
        [=](const Matrix& u) { return u(i - 1, j - 1) * std::conj(u(l - 1, k - 1)); }, threads);
}

inline MomentCheck weingarten4_check(int n, const std::array<int, 8>& idx, std::size_t samples, std::uint64_t seed,
                                     unsigned threads = 0) {
    detail::require_indices(n, idx, "weingarten4_check");
    const auto [i1, j1, i2, j2, k1, l1, k2, l2] = idx;
    return detail::moment_check(
        n, samples, seed, weingarten4_closed(n, idx),
        [=](const Matrix& u) {
            return u(i1 - 1, j1 - 1) * u(i2 - 1, j2 - 1) * std::conj(u(l1 - 1, k1 - 1)) *
                   std::conj(u(l2 - 1, k2 - 1));
        },
        threads);
}

}  // namespace swk

#endif  // SWKERNEL_GROUP_HPP
