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

#include "swkernel/algebra.hpp"
#include "swkernel/random.hpp"

namespace swk {
namespace {

const double kR3 = std::sqrt(3.0);

TEST(GellMann, QutritCartanGenerators) {
    const GellMannBasis b(3);
    ASSERT_EQ(b.size(), 8);
    Matrix l3 = Matrix::Zero(3, 3);
    l3(0, 0) = 1;
    l3(1, 1) = -1;
    Matrix l8 = Matrix::Zero(3, 3);
    l8(0, 0) = l8(1, 1) = 1 / kR3;
    l8(2, 2) = -2 / kR3;
    EXPECT_LT(max_abs(b[3] - l3), 1e-15);
    EXPECT_LT(max_abs(b[8] - l8), 1e-15);
}

TEST(GellMann, QutritMatchesStandardTable) {
    const GellMannBasis b(3);
    const Complex i(0, 1);
    Matrix l2 = Matrix::Zero(3, 3);
    l2(0, 1) = -i;
    l2(1, 0) = i;
    Matrix l5 = Matrix::Zero(3, 3);
    l5(0, 2) = -i;
    l5(2, 0) = i;
    Matrix l6 = Matrix::Zero(3, 3);
    l6(1, 2) = l6(2, 1) = 1;
    Matrix l7 = Matrix::Zero(3, 3);
    l7(1, 2) = -i;
    l7(2, 1) = i;
    EXPECT_LT(max_abs(b[2] - l2), 1e-15);
    EXPECT_LT(max_abs(b[5] - l5), 1e-15);
    EXPECT_LT(max_abs(b[6] - l6), 1e-15);
    EXPECT_LT(max_abs(b[7] - l7), 1e-15);
}

TEST(GellMann, QubitIsPauli) {
    const GellMannBasis b(2);
    ASSERT_EQ(b.size(), 3);
    Matrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    sz << 1, 0, 0, -1;
    EXPECT_LT(max_abs(b[1] - sx), 1e-15);
    EXPECT_LT(max_abs(b[2] - sy), 1e-15);
    EXPECT_LT(max_abs(b[3] - sz), 1e-15);
}

class GellMannDims : public ::testing::TestWithParam<int> {};

TEST_P(GellMannDims, TraceOrthonormalHermitianTraceless) {
    const int n = GetParam();
    const GellMannBasis b(n);
    ASSERT_EQ(b.size(), n * n - 1);
    for (int a = 1; a <= b.size(); ++a) {
        EXPECT_TRUE(is_hermitian(b[a], 0.0));
        EXPECT_LT(std::abs(b[a].trace()), 1e-14);
        for (int c = 1; c <= b.size(); ++c) {
            const Complex t = (b[a] * b[c]).trace();
            EXPECT_NEAR(t.real(), a == c ? 2.0 : 0.0, 1e-14) << a << "," << c;
            EXPECT_NEAR(t.imag(), 0.0, 1e-14);
        }
    }
}

TEST_P(GellMannDims, CartanIndicesAreDiagonal) {
    const int n = GetParam();
    const GellMannBasis b(n);
    ASSERT_EQ(static_cast<int>(b.cartan_indices().size()), n - 1);
    for (int s = 2; s <= n; ++s) EXPECT_EQ(b.cartan_indices()[s - 2], s * s - 1);
    for (int a = 1; a <= b.size(); ++a) {
        const Matrix off = b[a] - Matrix(b[a].diagonal().asDiagonal());
        EXPECT_EQ(b.is_cartan(a), max_abs(off) == 0.0) << a;
    }
}

INSTANTIATE_TEST_SUITE_P(Dims, GellMannDims, ::testing::Values(2, 3, 4, 5));

TEST(GellMann, FourLevelCartanLabels) {
    const GellMannBasis b(4);
    EXPECT_EQ(b.size(), 15);
    EXPECT_EQ(b.cartan_indices(), (std::vector<int>{3, 8, 15}));
}

TEST(GellMann, RejectsBadDimensionAndLabel) {
    EXPECT_THROW(GellMannBasis(1), DomainError);
    const GellMannBasis b(2);
    EXPECT_THROW(b[0], std::out_of_range);
    EXPECT_THROW(b[4], std::out_of_range);
}

TEST(StructureConstants, QutritKnownValues) {
    const auto d = symmetric_structure_constants(GellMannBasis(3));
    EXPECT_NEAR(d(1, 1, 8), 1 / kR3, 1e-15);
    EXPECT_NEAR(d(1, 2, 3), 0.0, 1e-15);
    EXPECT_NEAR(d(1, 4, 6), 0.5, 1e-15);
    EXPECT_NEAR(d(8, 8, 8), -1 / kR3, 1e-15);
}

TEST(StructureConstants, QubitVanishes) {
    const auto d = symmetric_structure_constants(GellMannBasis(2));
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) EXPECT_EQ(d(a, b, c), 0.0);
}

TEST(StructureConstants, MatchesAnticommutatorTraceAndIsSymmetric) {
    const GellMannBasis b(4);
    const auto d = symmetric_structure_constants(b);
    for (int x = 1; x <= b.size(); x += 2)
        for (int y = 1; y <= b.size(); ++y)
            for (int z = 1; z <= b.size(); z += 3) {
                const double direct = 0.25 * ((b[x] * b[y] + b[y] * b[x]) * b[z]).trace().real();
                EXPECT_NEAR(d(x, y, z), direct, 1e-14);
                EXPECT_EQ(d(x, y, z), d(y, z, x));
                EXPECT_EQ(d(x, y, z), d(z, y, x));
            }
}

TEST(StructureConstants, CubicFormEqualsExplicitSum) {
    const GellMannBasis b(3);
    const auto d = symmetric_structure_constants(b);
    RealVector x(8);
    x << 0.1, -0.2, 0.3, 0.05, -0.15, 0.25, 0.0, 0.4;
    double direct = 0;
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j)
            for (int k = 1; k <= 8; ++k) direct += d(i, j, k) * x[i - 1] * x[j - 1] * x[k - 1];
    EXPECT_NEAR(d.cubic_form(x), direct, 1e-15);
}

TEST(Expansion, IdentityIsPureTrace) {
    const GellMannBasis b(3);
    const auto e = expand_in_basis(Matrix::Identity(3, 3), b);
    EXPECT_NEAR(e.trace_part, 1.0, 1e-15);
    EXPECT_LT(max_abs(e.coeffs), 1e-15);
}

TEST(Expansion, GeneratorPicksItsCoefficient) {
    const GellMannBasis b(3);
    const auto e = expand_in_basis(b[3], b);
    EXPECT_NEAR(e.trace_part, 0.0, 1e-15);
    for (int a = 1; a <= 8; ++a) EXPECT_NEAR(e.coeffs[a - 1], a == 3 ? 1.0 : 0.0, 1e-15);
}

TEST(Expansion, RandomHermitianRoundTrip) {
    for (int n = 2; n <= 5; ++n) {
        const GellMannBasis b(n);
        for (std::uint64_t k = 0; k < 50; ++k) {
            auto rng = substream(100 + n, k);
            const Matrix m = random_hermitian(n, rng);
            EXPECT_LT(max_abs(reconstruct(expand_in_basis(m, b), b) - m), 1e-12);
        }
    }
}

TEST(Expansion, RejectsNonHermitian) {
    const GellMannBasis b(2);
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1;
    EXPECT_THROW(expand_in_basis(m, b), ValidationError);
    EXPECT_THROW(expand_in_basis(Matrix::Identity(3, 3), b), ValidationError);
}

}  // namespace
}  // namespace swk
