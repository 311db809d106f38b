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

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtdm/matrix.hpp"

namespace qtdm {

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigenpairs of a Hermitian matrix. Eigenvalues ascend; column k of
/// `eigenvectors` belongs to eigenvalues[k].
struct EigenSystem {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  /// V diag(f(lambda)) V^dagger
  template <typename F>
  ComplexMatrix synthesize(F&& f) const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix scaled = eigenvectors;
    for (std::size_t k = 0; k < n; ++k) {
      const complex w = f(eigenvalues[k]);
      for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= w;
    }
    const ComplexMatrix& v = eigenvectors;
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        complex s{};
        for (std::size_t k = 0; k < n; ++k) s += scaled(i, k) * std::conj(v(j, k));
        r(i, j) = s;
      }
    return r;
  }

  ComplexMatrix reconstruct() const {
    return synthesize([](double l) { return complex(l, 0.0); });
  }
};

namespace jacobi {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kOffDiagonalTolerance = 1e-14;
inline constexpr int kMaxSweeps = 100;

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

/// Annihilates a(p, q) with the unitary J = D R D^dagger, where D rephases
/// column q so the pivot becomes real and R is the classic real rotation.
inline void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const complex phase = apq / mag;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const complex jpp = c, jqq = c;
  const complex jpq = s * phase;
  const complex jqp = -s * std::conj(phase);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }

  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
}

}  // namespace jacobi

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// The input is symmetrized as (a + a^dagger)/2 first, so round-off from
/// repeated products does not leak into the spectrum. Throws
/// NotHermitianError if ||a - a^dagger||_F exceeds 1e-12 (scaled by
/// max(1, ||a||_F)), and ConvergenceError after 100 sweeps.
inline EigenSystem hermitian_eig(const ComplexMatrix& input) {
  const std::size_t n = input.dim();
  const double scale = std::max(1.0, frobenius_norm(input));
  const double defect = hermiticity_defect(input);
  if (defect > jacobi::kHermitianTolerance * scale)
    throw NotHermitianError("hermitian_eig: input is not Hermitian (defect " +
                            std::to_string(defect) + ")");

  ComplexMatrix a = (input + adjoint(input)) * complex(0.5, 0.0);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = jacobi::kOffDiagonalTolerance * scale;
  bool converged = jacobi::off_diagonal_norm(a) < threshold;
  for (int sweep = 0; sweep < jacobi::kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi::rotate(a, v, p, q);
    converged = jacobi::off_diagonal_norm(a) < threshold;
  }
  if (!converged)
    throw ConvergenceError("hermitian_eig: no convergence after " +
                           std::to_string(jacobi::kMaxSweeps) + " sweeps");

  // Stable sort keeps first-occurrence column order among ties.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenSystem es{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    es.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) es.eigenvectors(i, k) = v(i, order[k]);
  }
  return es;
}

inline std::vector<double> eigenvalues_hermitian(const ComplexMatrix& a) {
  return hermitian_eig(a).eigenvalues;
}

/// exp(-i * theta * lambda) applied through precomputed eigenpairs.
inline ComplexMatrix expm_i_hermitian(const EigenSystem& es, double theta) {
  return es.synthesize([theta](double l) { return std::polar(1.0, -theta * l); });
}

/// exp(-i * theta * h) for Hermitian h via eigendecomposition.
inline ComplexMatrix expm_i_hermitian(const ComplexMatrix& h, double theta) {
  return expm_i_hermitian(hermitian_eig(h), theta);
}

/// exp(-i * theta * h) by scaling and squaring of a truncated Taylor series.
///
/// Shares no code with the eigensolver and accepts any square matrix. The
/// argument is scaled until its Frobenius norm is at most 1/2, and terms
/// are summed until the next one drops below 1e-18 (which bounds the tail
/// well under 1e-12 at that norm).
inline ComplexMatrix expm_series_oracle(const ComplexMatrix& h, double theta) {
  const std::size_t n = h.dim();
  ComplexMatrix arg = h * complex(0.0, -theta);
  const double norm = frobenius_norm(arg);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  arg *= complex(std::ldexp(1.0, -squarings), 0.0);

  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 60; ++k) {
    term = mat_mul(term, arg) * complex(1.0 / k, 0.0);
    sum += term;
    if (frobenius_norm(term) < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) sum = mat_mul(sum, sum);
  return sum;
}

/// Sum of absolute eigenvalues.
inline double trace_norm_hermitian(const ComplexMatrix& a) {
  double s = 0.0;
  for (double l : hermitian_eig(a).eigenvalues) s += std::abs(l);
  return s;
}

}  // namespace qtdm
