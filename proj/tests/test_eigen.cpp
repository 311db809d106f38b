// Copyright 2026 The qtdm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qtdm {
namespace {

using testing::Rng;

const complex I(0.0, 1.0);

void expect_eigenvalues(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], want[k], tol) << "k=" << k;
}

TEST(HermitianEig, DiagonalSortsAscending) {
  const EigenSystem es = hermitian_eig(ComplexMatrix::diagonal({3.0, 1.0, 2.0}));
  expect_eigenvalues(es.eigenvalues, {1.0, 2.0, 3.0}, 0.0);
  // column 0 is e_1, column 1 is e_2, column 2 is e_0
  EXPECT_EQ(std::abs(es.eigenvectors(1, 0)), 1.0);
  EXPECT_EQ(std::abs(es.eigenvectors(2, 1)), 1.0);
  EXPECT_EQ(std::abs(es.eigenvectors(0, 2)), 1.0);
}

TEST(HermitianEig, TiesKeepColumnOrder) {
  const EigenSystem es = hermitian_eig(ComplexMatrix::diagonal({2.0, 1.0, 2.0, 1.0}));
  expect_eigenvalues(es.eigenvalues, {1.0, 1.0, 2.0, 2.0}, 0.0);
  EXPECT_EQ(std::abs(es.eigenvectors(1, 0)), 1.0);
  EXPECT_EQ(std::abs(es.eigenvectors(3, 1)), 1.0);
  EXPECT_EQ(std::abs(es.eigenvectors(0, 2)), 1.0);
  EXPECT_EQ(std::abs(es.eigenvectors(2, 3)), 1.0);
}

TEST(HermitianEig, SigmaX) {
  expect_eigenvalues(eigenvalues_hermitian(ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0})), {-1.0, 1.0}, 1e-15);
}

TEST(HermitianEig, RejectsNonHermitian) {
  EXPECT_THROW(hermitian_eig(ComplexMatrix(2, {0.0, 1.0, 0.0, 0.0})), NotHermitianError);
  EXPECT_THROW(hermitian_eig(ComplexMatrix(2, {I, 0.0, 0.0, 0.0})), NotHermitianError);
}

TEST(HermitianEig, AbsorbsRoundOffAsymmetry) {
  ComplexMatrix a(2, {1.0, 0.5, 0.5, 2.0});
  a(0, 1) += 1e-14;
  EXPECT_NO_THROW(hermitian_eig(a));
}

// H_BC at d_x = 0.2 (GM-23). On qutrit levels {0,1} the two terms are
// commuting involutions (their product is sigma_x (x) sigma_x), so the
// spectrum is 0.2 * {-2, 0, 0, 2} plus two zeros from qutrit level 2; the
// characteristic polynomial is lambda^6 - 0.16 lambda^4.
TEST(HermitianEig, DmHamiltonianMatchesCharacteristicPolynomial) {
  const ComplexMatrix h = build_hamiltonian_bc({0.2, Convention::GM23});

  const auto poly = testing::characteristic_polynomial(h);
  const std::vector<double> frozen_poly{0.0, 0.0, 0.0, 0.0, -0.16, 0.0, 1.0};
  for (std::size_t k = 0; k < poly.size(); ++k) EXPECT_NEAR(std::abs(poly[k] - frozen_poly[k]), 0.0, 1e-12);

  const EigenSystem es = hermitian_eig(h);
  expect_eigenvalues(es.eigenvalues, {-0.4, 0.0, 0.0, 0.0, 0.0, 0.4}, 1e-10);
  for (double l : es.eigenvalues) EXPECT_LE(std::abs(testing::eval_poly(poly, l)), 1e-12);
}

TEST(HermitianEig, RandomMatrixMatchesPolynomialRoots) {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix h = testing::random_hermitian(rng, 6, 2.0);
    auto roots = testing::polynomial_roots(testing::characteristic_polynomial(h));
    std::vector<double> want;
    for (const auto& r : roots) {
      EXPECT_LE(std::abs(r.imag()), 1e-9);
      want.push_back(r.real());
    }
    std::sort(want.begin(), want.end());
    expect_eigenvalues(eigenvalues_hermitian(h), want, 1e-9);
  }
}

TEST(HermitianEig, ReconstructionAndUnitarityProperty) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + trial % 12;
    const double norm = 0.1 + 0.1 * (trial % 200);
    const ComplexMatrix a = testing::random_hermitian(rng, dim, norm);
    const EigenSystem es = hermitian_eig(a);
    EXPECT_TRUE(std::is_sorted(es.eigenvalues.begin(), es.eigenvalues.end()));
    EXPECT_LE(frobenius_distance(es.reconstruct(), a), 1e-10 * std::max(1.0, norm));
    const ComplexMatrix vv = mat_mul(adjoint(es.eigenvectors), es.eigenvectors);
    EXPECT_LE(frobenius_distance(vv, ComplexMatrix::identity(dim)), 1e-10);
  }
}

TEST(ExpmIHermitian, ZeroAngleIsIdentity) {
  Rng rng(1);
  const ComplexMatrix h = testing::random_hermitian(rng, 5);
  EXPECT_LE(frobenius_distance(expm_i_hermitian(h, 0.0), ComplexMatrix::identity(5)), 1e-14);
}

TEST(ExpmIHermitian, DiagonalGenerator) {
  const ComplexMatrix u = expm_i_hermitian(ComplexMatrix::diagonal({1.0, -1.0}), std::numbers::pi / 2);
  const ComplexMatrix want(2, {std::polar(1.0, -std::numbers::pi / 2), 0.0, 0.0,
                               std::polar(1.0, std::numbers::pi / 2)});
  EXPECT_LE(frobenius_distance(u, want), 1e-15);
}

TEST(ExpmIHermitian, DmHamiltonianMatchesSeriesOracle) {
  for (Convention c : {Convention::GM23, Convention::SPIN1}) {
    const ComplexMatrix h = build_hamiltonian_bc({0.2, c});
    EXPECT_LE(frobenius_distance(expm_i_hermitian(h, 1.0), expm_series_oracle(h, 1.0)), 1e-9);
  }
}

TEST(ExpmIHermitian, RandomizedProperties) {
  Rng rng(99);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = 1 + trial % 12;
    double theta = uni(rng) * 4.0;
    if (std::abs(theta) < 1e-2) theta = 1.0;
    const double scaled_norm = 19.9 * std::abs(uni(rng));  // ||theta h||_F
    const ComplexMatrix h = testing::random_hermitian(rng, dim, scaled_norm / std::abs(theta) + 1e-3);
    const ComplexMatrix u = expm_i_hermitian(h, theta);
    const ComplexMatrix id = ComplexMatrix::identity(dim);

    EXPECT_LE(frobenius_distance(mat_mul(u, adjoint(u)), id), 1e-10);
    EXPECT_LE(frobenius_distance(u, expm_series_oracle(h, theta)), 1e-9);

    const double t1 = 0.3 * theta, t2 = 0.7 * theta;
    EXPECT_LE(frobenius_distance(mat_mul(expm_i_hermitian(h, t1), expm_i_hermitian(h, t2)), u), 1e-9);
  }
}

TEST(ExpmSeriesOracle, TrivialCases) {
  Rng rng(4);
  const ComplexMatrix h = testing::random_hermitian(rng, 4);
  EXPECT_LE(frobenius_distance(expm_series_oracle(h, 0.0), ComplexMatrix::identity(4)), 1e-15);
  EXPECT_LE(frobenius_distance(expm_series_oracle(ComplexMatrix(3), 17.0), ComplexMatrix::identity(3)), 0.0);
}

TEST(ExpmSeriesOracle, SigmaXHalfPeriod) {
  const ComplexMatrix u = expm_series_oracle(ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}), std::numbers::pi);
  EXPECT_LE(frobenius_distance(u, ComplexMatrix::identity(2) * complex(-1.0, 0.0)), 1e-12);
}

TEST(ExpmSeriesOracle, AcceptsNonHermitian) {
  // exp(-i theta N) = I - i theta N for nilpotent N
  const ComplexMatrix n(2, {0.0, 1.0, 0.0, 0.0});
  const ComplexMatrix want(2, {1.0, complex(0.0, -2.0), 0.0, 1.0});
  EXPECT_LE(frobenius_distance(expm_series_oracle(n, 2.0), want), 1e-14);
}

TEST(TraceNorm, Values) {
  EXPECT_NEAR(trace_norm_hermitian(ComplexMatrix::diagonal({0.5, -0.5})), 1.0, 1e-15);
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial)
    EXPECT_NEAR(trace_norm_hermitian(testing::random_density(rng, 6)), 1.0, 1e-12);
}

TEST(TraceNorm, PartialTransposeOfEntangledFamilyMember) {
  // (alpha, gamma) = (0, 3/4), beta = 1/12: partial-transpose eigenvalues are
  // {-1/4, 0, 0, 5/12, 5/12, 5/12}, so ||rho^TA||_1 = 3/2 and the negativity
  // ||rho^TA||_1 - 1 = 1/2 = 2(0 + 3/4) - 1.
  const ComplexMatrix pt = partial_transpose(build_two_param_state(0.0, 0.75), kQubitA);
  EXPECT_NEAR(trace_norm_hermitian(pt), 1.5, 1e-12);
}

}  // namespace
}  // namespace qtdm
