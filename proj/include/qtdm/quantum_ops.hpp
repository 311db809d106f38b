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
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "qtdm/eigen.hpp"
#include "qtdm/matrix.hpp"

namespace qtdm {

/// A matrix together with its tensor factorization, e.g. dims {2, 3, 2}
/// for qubit A, qutrit B, qubit C. Composite index is row-major over the
/// dims list: for {2, 3, 2} it is a*6 + b*2 + c.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix mat, std::vector<std::size_t> dims)
      : mat_(std::move(mat)), dims_(std::move(dims)) {
    if (dims_.empty()) throw DimensionError("DensityMatrix: empty subsystem list");
    const std::size_t prod =
        std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
    if (prod != mat_.dim())
      throw DimensionError("DensityMatrix: subsystem dimensions multiply to " +
                           std::to_string(prod) + ", matrix is " + std::to_string(mat_.dim()));
  }

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return mat_.dim(); }

 private:
  ComplexMatrix mat_;
  std::vector<std::size_t> dims_;
};

struct ValidityReport {
  double trace_error = 0.0;
  double hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;

  bool ok(double trace_tol = 1e-10, double herm_tol = 1e-10, double psd_tol = 1e-9) const {
    return trace_error <= trace_tol && hermiticity_defect <= herm_tol && min_eigenvalue >= -psd_tol;
  }
};

inline ValidityReport check_validity(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  ValidityReport r;
  r.trace_error = std::abs(trace(m) - complex(1.0, 0.0));
  r.hermiticity_defect = hermiticity_defect(m);
  const ComplexMatrix sym = (m + adjoint(m)) * complex(0.5, 0.0);
  r.min_eigenvalue = hermitian_eig(sym).eigenvalues.front();
  return r;
}

inline ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return kron(a, b);
}

inline DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<std::size_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(kron(a.matrix(), b.matrix()), std::move(dims));
}

namespace detail {

inline void require_subsystem(const DensityMatrix& rho, std::size_t subsystem, const char* what) {
  if (subsystem >= rho.dims().size())
    throw std::out_of_range(std::string(what) + ": subsystem index " + std::to_string(subsystem) +
                            " out of range for " + std::to_string(rho.dims().size()) +
                            " subsystems");
}

/// Splits a composite index into (outer, local, inner) around one subsystem:
/// index = (outer * d + local) * inner_size + inner.
struct Split {
  std::size_t inner_size;
  std::size_t local_dim;

  std::size_t outer(std::size_t idx) const { return idx / (inner_size * local_dim); }
  std::size_t local(std::size_t idx) const { return (idx / inner_size) % local_dim; }
  std::size_t inner(std::size_t idx) const { return idx % inner_size; }
  std::size_t join(std::size_t o, std::size_t l, std::size_t i) const {
    return (o * local_dim + l) * inner_size + i;
  }
};

inline Split split_at(const std::vector<std::size_t>& dims, std::size_t subsystem) {
  std::size_t inner = 1;
  for (std::size_t k = subsystem + 1; k < dims.size(); ++k) inner *= dims[k];
  return {inner, dims[subsystem]};
}

}  // namespace detail

/// Traces out one subsystem; remaining factors keep their order.
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t subsystem) {
  detail::require_subsystem(rho, subsystem, "partial_trace");
  const auto& dims = rho.dims();
  if (dims.size() == 1) throw DimensionError("partial_trace: cannot trace out the only subsystem");

  const detail::Split sp = detail::split_at(dims, subsystem);
  const std::size_t d = sp.local_dim;
  const std::size_t out_dim = rho.dim() / d;
  const std::size_t inner = sp.inner_size;
  const ComplexMatrix& m = rho.matrix();

  ComplexMatrix r(out_dim);
  for (std::size_t row = 0; row < out_dim; ++row) {
    const std::size_t ro = row / inner, ri = row % inner;
    for (std::size_t col = 0; col < out_dim; ++col) {
      const std::size_t co = col / inner, ci = col % inner;
      complex s{};
      for (std::size_t k = 0; k < d; ++k) s += m(sp.join(ro, k, ri), sp.join(co, k, ci));
      r(row, col) = s;
    }
  }

  std::vector<std::size_t> out_dims;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (k != subsystem) out_dims.push_back(dims[k]);
  return DensityMatrix(std::move(r), std::move(out_dims));
}

/// Transposes the indices of one subsystem, leaving the rest alone. The
/// result is Hermitian but in general not positive semidefinite.
inline ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
  detail::require_subsystem(rho, subsystem, "partial_transpose");
  const detail::Split sp = detail::split_at(rho.dims(), subsystem);
  const std::size_t n = rho.dim();
  const ComplexMatrix& m = rho.matrix();

  ComplexMatrix r(n);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t col = 0; col < n; ++col) {
      const std::size_t src_row = sp.join(sp.outer(row), sp.local(col), sp.inner(row));
      const std::size_t src_col = sp.join(sp.outer(col), sp.local(row), sp.inner(col));
      r(row, col) = m(src_row, src_col);
    }
  return r;
}

inline constexpr double kNegativityClamp = 1e-12;

/// ||rho^{T_sub}||_1 - 1, i.e. twice the magnitude of the negative part of
/// the partial transpose. Normalized so a maximally entangled qubit pair
/// (and the singlet embedded in 2x3) scores 1, which makes the
/// two-parameter family read max(0, 2(alpha + gamma) - 1). Values with
/// |N| < 1e-12 are flushed to zero.
inline double negativity(const DensityMatrix& rho, std::size_t subsystem) {
  const double n = trace_norm_hermitian(partial_transpose(rho, subsystem)) - 1.0;
  if (std::abs(n) < kNegativityClamp) return 0.0;
  return std::max(0.0, n);
}

}  // namespace qtdm
