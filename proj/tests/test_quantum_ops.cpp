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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qtdm {
namespace {

using testing::Rng;

DensityMatrix bell_phi_plus_2x2() {
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<complex, 4> v{r, 0.0, 0.0, r};
  return DensityMatrix(outer(v), {2, 2});
}

TEST(DensityMatrix, DimsMustMultiplyToMatrixSize) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(6), {2, 2}), DimensionError);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(6), {}), DimensionError);
  EXPECT_NO_THROW(DensityMatrix(ComplexMatrix::identity(6), {2, 3}));
}

TEST(DensityMatrix, ValidityReport) {
  EXPECT_TRUE(check_validity(build_two_param_state(0.1, 0.3)).ok());
  EXPECT_FALSE(check_validity(DensityMatrix(ComplexMatrix::identity(2), {2})).ok());
  EXPECT_FALSE(check_validity(DensityMatrix(ComplexMatrix::diagonal({1.5, -0.5}), {2})).ok());
}

TEST(TensorProduct, Identities) {
  EXPECT_EQ(tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(3)), ComplexMatrix::identity(6));
}

TEST(TensorProduct, TraceIsMultiplicative) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = testing::random_matrix(rng, 2 + trial % 3);
    const ComplexMatrix b = testing::random_matrix(rng, 1 + trial % 4);
    EXPECT_LE(std::abs(trace(tensor_product(a, b)) - trace(a) * trace(b)), 1e-12 * (1.0 + std::abs(trace(a) * trace(b))));
  }
}

TEST(TensorProduct, CompositeStateDims) {
  const DensityMatrix rho = tensor_product(build_two_param_state(0.0, 1.0), build_aux_qubit(1.0, 0.0));
  EXPECT_EQ(rho.dim(), 12u);
  EXPECT_EQ(rho.dims(), (std::vector<std::size_t>{2, 3, 2}));
  EXPECT_NEAR(trace(rho.matrix()).real(), 1.0, 1e-15);
}

TEST(PartialTrace, ProductStateIsExact) {
  Rng rng(12);
  const DensityMatrix a(testing::random_density(rng, 2), {2});
  const DensityMatrix c(ComplexMatrix::diagonal({1.0, 0.0}), {2});
  const DensityMatrix r = partial_trace(tensor_product(a, c), 1);
  EXPECT_EQ(r.dims(), (std::vector<std::size_t>{2}));
  EXPECT_LE(frobenius_distance(r.matrix(), a.matrix()), 1e-16);
}

TEST(PartialTrace, MaximallyEntangledGivesMaximallyMixed) {
  const DensityMatrix phi = bell_phi_plus_2x2();
  for (std::size_t side : {0u, 1u})
    EXPECT_LE(frobenius_distance(partial_trace(phi, side).matrix(), ComplexMatrix::diagonal({0.5, 0.5})), 1e-15);
}

TEST(PartialTrace, MatchesIndexSummationOracle) {
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const DensityMatrix rho(testing::random_density(rng, 12), {2, 3, 2});
    const DensityMatrix ab = partial_trace(rho, 2);
    EXPECT_EQ(ab.dims(), (std::vector<std::size_t>{2, 3}));
    EXPECT_NEAR(trace(ab.matrix()).real(), 1.0, 1e-13);
    EXPECT_LE(frobenius_distance(ab.matrix(), testing::trace_out_last_of_232(rho.matrix())), 1e-13);

    const DensityMatrix bc = partial_trace(rho, 0);
    EXPECT_EQ(bc.dims(), (std::vector<std::size_t>{3, 2}));
    EXPECT_LE(frobenius_distance(bc.matrix(), testing::trace_out_first_of_232(rho.matrix())), 1e-13);
    EXPECT_LE(hermiticity_defect(partial_trace(rho, 1).matrix()), 1e-13);
  }
}

TEST(PartialTrace, BadSubsystem) {
  const DensityMatrix rho = build_two_param_state(0.1, 0.1);
  EXPECT_THROW(partial_trace(rho, 2), std::out_of_range);
  EXPECT_THROW(partial_trace(build_aux_qubit(1.0, 0.0), 0), DimensionError);
}

TEST(PartialTranspose, DiagonalIsFixed) {
  const DensityMatrix rho(ComplexMatrix::diagonal({0.1, 0.2, 0.3, 0.15, 0.15, 0.1}), {2, 3});
  EXPECT_EQ(partial_transpose(rho, 0), rho.matrix());
  EXPECT_EQ(partial_transpose(rho, 1), rho.matrix());
}

TEST(PartialTranspose, BellStateHasNegativeEigenvalue) {
  const auto ev = eigenvalues_hermitian(partial_transpose(bell_phi_plus_2x2(), 0));
  // rho^TA = SWAP / 2: eigenvalues -1/2, 1/2, 1/2, 1/2
  EXPECT_NEAR(ev.front(), -0.5, 1e-14);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(ev[k], 0.5, 1e-14);
}

TEST(PartialTranspose, InvolutionAndTrace) {
  Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho(testing::random_density(rng, 12), {2, 3, 2});
    for (std::size_t s = 0; s < 3; ++s) {
      const ComplexMatrix pt = partial_transpose(rho, s);
      EXPECT_LE(hermiticity_defect(pt), 1e-15);
      EXPECT_NEAR(std::abs(trace(pt) - trace(rho.matrix())), 0.0, 1e-15);
      EXPECT_EQ(partial_transpose(DensityMatrix(pt, rho.dims()), s), rho.matrix());
    }
  }
}

TEST(PartialTranspose, ElementMapping) {
  // Explicit check of (a b),(a' b') -> (a' b),(a b') on a 2x3 matrix.
  Rng rng(15);
  const ComplexMatrix m = testing::random_matrix(rng, 6);
  const ComplexMatrix pt = partial_transpose(DensityMatrix(m, {2, 3}), 0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 3; ++bp) EXPECT_EQ(pt(a * 3 + b, ap * 3 + bp), m(ap * 3 + b, a * 3 + bp));
}

TEST(PartialTranspose, BadSubsystem) {
  EXPECT_THROW(partial_transpose(build_two_param_state(0.1, 0.1), 5), std::out_of_range);
}

TEST(Negativity, ClosedFormPoints) {
  EXPECT_NEAR(negativity(build_two_param_state(0.0, 1.0), kQubitA), 1.0, 1e-12);
  EXPECT_EQ(negativity(build_two_param_state(0.25, 0.25), kQubitA), 0.0);
  EXPECT_NEAR(negativity(build_two_param_state(0.0, 0.75), kQubitA), 0.5, 1e-12);
}

TEST(Negativity, MatchesClosedFormOverTriangle) {
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j) {
      const double alpha = 0.5 * i / 40.0, gamma = j / 40.0;
      if (2.0 * alpha + gamma > 1.0 + 1e-15) continue;
      EXPECT_NEAR(negativity(build_two_param_state(alpha, gamma), kQubitA),
                  closed_form_negativity(alpha, gamma), 1e-10)
          << alpha << ", " << gamma;
    }
}

TEST(Negativity, SameFromEitherSide) {
  const DensityMatrix rho = build_two_param_state(0.1, 0.6);
  EXPECT_NEAR(negativity(rho, 0), negativity(rho, 1), 1e-12);
}

TEST(Negativity, InvariantUnderLocalUnitaries) {
  Rng rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    const double alpha = 0.05 * (trial % 5), gamma = 0.4 + 0.025 * (trial % 7);
    const DensityMatrix rho = build_two_param_state(alpha, gamma);
    const ComplexMatrix u = kron(testing::random_unitary(rng, 2), testing::random_unitary(rng, 3));
    const DensityMatrix rotated(mat_mul(mat_mul(u, rho.matrix()), adjoint(u)), {2, 3});
    EXPECT_NEAR(negativity(rotated, kQubitA), negativity(rho, kQubitA), 1e-9);
  }
}

TEST(Negativity, ZeroOnProductStates) {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const DensityMatrix a(testing::random_density(rng, 2), {2});
    const DensityMatrix b(testing::random_density(rng, 3), {3});
    const double n = negativity(tensor_product(a, b), 0);
    EXPECT_GE(n, 0.0);
    EXPECT_EQ(n, 0.0);
  }
}

}  // namespace
}  // namespace qtdm
