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

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtdm {

using complex = std::complex<double>;

/// Raised when operand shapes do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense square complex matrix, row-major.
///
/// Value type; never resizes after construction. Every constructor checks
/// that the entry count equals dim * dim.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) throw DimensionError("ComplexMatrix: dimension must be positive");
  }

  ComplexMatrix(std::size_t dim, std::vector<complex> entries)
      : dim_(dim), data_(std::move(entries)) {
    if (dim == 0) throw DimensionError("ComplexMatrix: dimension must be positive");
    if (data_.size() != dim * dim)
      throw DimensionError("ComplexMatrix: expected " + std::to_string(dim * dim) +
                           " entries, got " + std::to_string(data_.size()));
  }

  ComplexMatrix(std::size_t dim, std::initializer_list<complex> entries)
      : ComplexMatrix(dim, std::vector<complex>(entries)) {}

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  static ComplexMatrix diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
  }

  std::size_t dim() const noexcept { return dim_; }
  std::span<const complex> entries() const noexcept { return data_; }

  complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
  const complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  ComplexMatrix& operator+=(const ComplexMatrix& other) {
    require_same_dim(other, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& other) {
    require_same_dim(other, "operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
  }

  ComplexMatrix& operator*=(complex scale) noexcept {
    for (auto& x : data_) x *= scale;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, complex s) { return a *= s; }
  friend ComplexMatrix operator*(complex s, ComplexMatrix a) { return a *= s; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void require_same_dim(const ComplexMatrix& other, const char* what) const {
    if (other.dim_ != dim_)
      throw DimensionError(std::string(what) + ": dimension mismatch " + std::to_string(dim_) +
                           " vs " + std::to_string(other.dim_));
  }

  std::size_t dim_ = 0;
  std::vector<complex> data_;
};

inline ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw DimensionError("mat_mul: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const complex aik = a(i, k);
      if (aik == complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return mat_mul(a, b);
}

/// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

inline ComplexMatrix transpose(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(j, i) = a(i, j);
  return r;
}

inline complex trace(const ComplexMatrix& a) {
  complex t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& x : a.entries()) s += std::norm(x);
  return std::sqrt(s);
}

inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return frobenius_norm(a - b);
}

/// ||a - a^dagger||_F, zero for exactly Hermitian input.
inline double hermiticity_defect(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(s);
}

/// Kronecker product; row index of the result is i_a * b.dim() + i_b.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix r(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const complex aij = a(i, j);
      if (aij == complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return r;
}

/// |v><v| for a column vector v.
inline ComplexMatrix outer(std::span<const complex> v) {
  ComplexMatrix r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r(i, j) = v[i] * std::conj(v[j]);
  return r;
}

}  // namespace qtdm
