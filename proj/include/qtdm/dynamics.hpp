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
#include <cstddef>
#include <string>
#include <vector>

#include "qtdm/eigen.hpp"
#include "qtdm/model.hpp"
#include "qtdm/quantum_ops.hpp"

namespace qtdm {

/// Uniform grid of `steps` points on [0, t_max], both ends included.
inline std::vector<double> uniform_grid(double t_max, std::size_t steps) {
  std::vector<double> g(steps);
  for (std::size_t k = 0; k < steps; ++k)
    g[k] = static_cast<double>(k) * t_max / static_cast<double>(steps - 1);
  return g;
}

struct EvolutionSpec {
  TwoParamState state{0.0, 1.0};
  PureQubit aux{1.0, 0.0};
  DMCoupling coupling{};
  double t_max = 15.0;
  std::size_t t_steps = 600;

  void validate() const {
    if (!std::isfinite(coupling.d_x)) throw ParameterError("evolution: d_x must be finite");
    if (!(t_max > 0.0) || !std::isfinite(t_max))
      throw ParameterError("evolution: t_max must be positive");
    if (t_steps < 2) throw ParameterError("evolution: t_steps must be at least 2");
  }

  std::vector<double> times() const { return uniform_grid(t_max, t_steps); }
};

struct NegativityTrace {
  std::vector<double> times;
  std::vector<double> values;
};

/// U(t) = exp(-i H t) for a fixed Hamiltonian, diagonalized once.
class Propagator {
 public:
  explicit Propagator(const ComplexMatrix& hamiltonian) : eig_(hermitian_eig(hamiltonian)) {}

  ComplexMatrix unitary(double t) const { return expm_i_hermitian(eig_, t); }
  const EigenSystem& eigensystem() const noexcept { return eig_; }
  std::size_t dim() const noexcept { return eig_.eigenvalues.size(); }

 private:
  EigenSystem eig_;
};

/// U rho U^dagger keeping rho's factorization.
inline DensityMatrix conjugate(const ComplexMatrix& u, const DensityMatrix& rho) {
  if (u.dim() != rho.dim())
    throw DimensionError("conjugate: operator is " + std::to_string(u.dim()) + "x" +
                         std::to_string(u.dim()) + ", state is " + std::to_string(rho.dim()));
  return DensityMatrix(mat_mul(mat_mul(u, rho.matrix()), adjoint(u)), rho.dims());
}

inline DensityMatrix evolve_full(const DensityMatrix& rho0, const ComplexMatrix& h_full, double t) {
  return conjugate(expm_i_hermitian(h_full, t), rho0);
}

inline DensityMatrix initial_composite(const EvolutionSpec& spec) {
  return tensor_product(build_two_param_state(spec.state), build_aux_qubit(spec.aux));
}

inline ComplexMatrix full_hamiltonian(const DMCoupling& coupling) {
  return embed_full(build_hamiltonian_bc(coupling));
}

/// Pair state after evolving for t and discarding the auxiliary qubit.
inline DensityMatrix reduce_to_pair(const ComplexMatrix& u, const DensityMatrix& rho0) {
  return partial_trace(conjugate(u, rho0), kAuxC);
}

inline DensityMatrix reduced_ab(const EvolutionSpec& spec, double t) {
  spec.validate();
  const Propagator prop(full_hamiltonian(spec.coupling));
  return reduce_to_pair(prop.unitary(t), initial_composite(spec));
}

inline NegativityTrace negativity_trace(const EvolutionSpec& spec) {
  spec.validate();
  const Propagator prop(full_hamiltonian(spec.coupling));
  const DensityMatrix rho0 = initial_composite(spec);
  NegativityTrace out{spec.times(), {}};
  out.values.reserve(out.times.size());
  for (double t : out.times)
    out.values.push_back(negativity(reduce_to_pair(prop.unitary(t), rho0), kQubitA));
  return out;
}

}  // namespace qtdm
