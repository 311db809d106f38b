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

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qtdm/matrix.hpp"
#include "qtdm/quantum_ops.hpp"

namespace qtdm {

/// Raised for physically invalid model parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Subsystem positions in the composite A(2) x B(3) x C(2) ordering.
inline constexpr std::size_t kQubitA = 0;
inline constexpr std::size_t kQutritB = 1;
inline constexpr std::size_t kAuxC = 2;

/// Point (alpha, gamma) of the two-parameter qubit-qutrit family. beta is
/// fixed by the trace condition 2 alpha + 3 beta + gamma = 1.
class TwoParamState {
 public:
  static constexpr double kTolerance = 1e-12;

  TwoParamState(double alpha, double gamma) : alpha_(alpha), gamma_(gamma) {
    if (!std::isfinite(alpha) || !std::isfinite(gamma))
      throw ParameterError("two-parameter state: alpha and gamma must be finite");
    if (alpha < -kTolerance || gamma < -kTolerance || 2.0 * alpha + gamma > 1.0 + kTolerance)
      throw ParameterError("two-parameter state: (alpha=" + std::to_string(alpha) +
                           ", gamma=" + std::to_string(gamma) +
                           ") outside alpha>=0, gamma>=0, 2*alpha+gamma<=1");
    beta_ = std::max(0.0, (1.0 - 2.0 * alpha - gamma) / 3.0);
  }

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }

 private:
  double alpha_;
  double beta_ = 0.0;
  double gamma_;
};

/// Real-amplitude pure qubit c0|0> + c1|1>.
class PureQubit {
 public:
  static constexpr double kTolerance = 1e-12;

  PureQubit(double c0, double c1) : c0_(c0), c1_(c1) {
    if (!std::isfinite(c0) || !std::isfinite(c1) ||
        std::abs(c0 * c0 + c1 * c1 - 1.0) > kTolerance)
      throw ParameterError("aux qubit: c0^2 + c1^2 must equal 1 (got " +
                           std::to_string(c0 * c0 + c1 * c1) + ")");
  }

  /// c1 = +sqrt(1 - c0^2)
  static PureQubit from_c0(double c0) {
    if (!std::isfinite(c0) || std::abs(c0) > 1.0)
      throw ParameterError("aux qubit: |c0| must not exceed 1");
    return PureQubit(c0, std::sqrt(std::max(0.0, 1.0 - c0 * c0)));
  }

  double c0() const noexcept { return c0_; }
  double c1() const noexcept { return c1_; }

 private:
  double c0_;
  double c1_;
};

/// Which 3x3 operators play the qutrit "Y" and "Z" roles.
enum class Convention {
  GM23,   ///< Gell-Mann lambda_2, lambda_3
  SPIN1,  ///< spin-1 S_y, S_z
};

inline std::string_view to_string(Convention c) {
  return c == Convention::GM23 ? "gm23" : "spin1";
}

inline std::optional<Convention> parse_convention(std::string_view s) {
  if (s == "gm23") return Convention::GM23;
  if (s == "spin1") return Convention::SPIN1;
  return std::nullopt;
}

struct DMCoupling {
  double d_x = 0.0;
  Convention convention = Convention::GM23;
};

struct GeneratorSet {
  ComplexMatrix qutrit_y;
  ComplexMatrix qutrit_z;
  ComplexMatrix pauli_y;
  ComplexMatrix pauli_z;
};

inline GeneratorSet generators(Convention convention) {
  const complex i(0.0, 1.0);
  GeneratorSet g;
  g.pauli_y = ComplexMatrix(2, {0.0, -i, i, 0.0});
  g.pauli_z = ComplexMatrix::diagonal({1.0, -1.0});
  switch (convention) {
    case Convention::GM23:
      g.qutrit_y = ComplexMatrix(3, {0.0, -i, 0.0, i, 0.0, 0.0, 0.0, 0.0, 0.0});
      g.qutrit_z = ComplexMatrix::diagonal({1.0, -1.0, 0.0});
      break;
    case Convention::SPIN1: {
      const complex a = i / std::sqrt(2.0);
      g.qutrit_y = ComplexMatrix(3, {0.0, -a, 0.0, a, 0.0, -a, 0.0, a, 0.0});
      g.qutrit_z = ComplexMatrix::diagonal({1.0, 0.0, -1.0});
      break;
    }
  }
  return g;
}

using Ket6 = std::array<complex, 6>;

struct BellLikeKets {
  Ket6 phi_plus, phi_minus, psi_plus, psi_minus;
};

/// |phi+-> = (|00> +- |11>)/sqrt2, |psi+-> = (|01> +- |10>)/sqrt2 in the
/// qubit-qutrit pair index a*3 + b; only qutrit levels 0 and 1 appear.
inline BellLikeKets bell_like_kets() {
  const double r = 1.0 / std::sqrt(2.0);
  BellLikeKets k{};
  k.phi_plus[0] = r;
  k.phi_plus[4] = r;
  k.phi_minus[0] = r;
  k.phi_minus[4] = -r;
  k.psi_plus[1] = r;
  k.psi_plus[3] = r;
  k.psi_minus[1] = r;
  k.psi_minus[3] = -r;
  return k;
}

inline DensityMatrix build_two_param_state(const TwoParamState& s) {
  const BellLikeKets k = bell_like_kets();
  ComplexMatrix rho(6);
  rho(2, 2) = s.alpha();  // |02>
  rho(5, 5) = s.alpha();  // |12>
  rho += outer(k.phi_plus) * complex(s.beta(), 0.0);
  rho += outer(k.phi_minus) * complex(s.beta(), 0.0);
  rho += outer(k.psi_plus) * complex(s.beta(), 0.0);
  rho += outer(k.psi_minus) * complex(s.gamma(), 0.0);
  return DensityMatrix(std::move(rho), {2, 3});
}

inline DensityMatrix build_two_param_state(double alpha, double gamma) {
  return build_two_param_state(TwoParamState(alpha, gamma));
}

inline DensityMatrix build_aux_qubit(const PureQubit& q) {
  const std::array<complex, 2> v{q.c0(), q.c1()};
  return DensityMatrix(outer(v), {2});
}

inline DensityMatrix build_aux_qubit(double c0, double c1) { return build_aux_qubit(PureQubit(c0, c1)); }

/// d_x (Y_B (x) sigma_z - Z_B (x) sigma_y) on the qutrit-aux space, index b*2 + c.
inline ComplexMatrix build_hamiltonian_bc(const DMCoupling& coupling) {
  const GeneratorSet g = generators(coupling.convention);
  ComplexMatrix h = kron(g.qutrit_y, g.pauli_z) - kron(g.qutrit_z, g.pauli_y);
  return h * complex(coupling.d_x, 0.0);
}

/// I_2 (x) h_bc: qubit A is uncoupled.
inline ComplexMatrix embed_full(const ComplexMatrix& h_bc) {
  if (h_bc.dim() != 6)
    throw DimensionError("embed_full: expected a 6x6 qutrit-aux operator, got " +
                         std::to_string(h_bc.dim()));
  return kron(ComplexMatrix::identity(2), h_bc);
}

inline double closed_form_negativity(const TwoParamState& s) {
  return std::max(0.0, 2.0 * (s.alpha() + s.gamma()) - 1.0);
}

inline double closed_form_negativity(double alpha, double gamma) {
  return closed_form_negativity(TwoParamState(alpha, gamma));
}

enum class RegionLabel {
  SEPARABLE_INTERIOR,
  NONSEPARABLE_INTERIOR,
  BOUNDARY_BC,
  BOUNDARY_BA,
  BOUNDARY_AC,
  BOUNDARY_CD,
  BOUNDARY_AD,
  INVALID,
};

inline std::string_view to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::SEPARABLE_INTERIOR: return "SEPARABLE_INTERIOR";
    case RegionLabel::NONSEPARABLE_INTERIOR: return "NONSEPARABLE_INTERIOR";
    case RegionLabel::BOUNDARY_BC: return "BOUNDARY_BC";
    case RegionLabel::BOUNDARY_BA: return "BOUNDARY_BA";
    case RegionLabel::BOUNDARY_AC: return "BOUNDARY_AC";
    case RegionLabel::BOUNDARY_CD: return "BOUNDARY_CD";
    case RegionLabel::BOUNDARY_AD: return "BOUNDARY_AD";
    case RegionLabel::INVALID: return "INVALID";
  }
  return "INVALID";
}

inline bool is_separable(RegionLabel r) {
  return r == RegionLabel::SEPARABLE_INTERIOR || r == RegionLabel::BOUNDARY_BC ||
         r == RegionLabel::BOUNDARY_BA || r == RegionLabel::BOUNDARY_AC;
}

inline constexpr double kRegionTolerance = 1e-9;

/// Locates (alpha, gamma) in the state triangle with vertices B=(0,0),
/// A=(1/2,0), C=(0,1/2), D=(0,1) written as (alpha, gamma). Boundaries
/// win over interiors and are checked in the order BC, BA, AC, CD, AD, so
/// vertices take the first edge that contains them.
inline RegionLabel classify_region(double alpha, double gamma, double tol = kRegionTolerance) {
  if (!std::isfinite(alpha) || !std::isfinite(gamma)) return RegionLabel::INVALID;
  if (alpha < -tol || gamma < -tol || 2.0 * alpha + gamma > 1.0 + tol) return RegionLabel::INVALID;

  const double sum = alpha + gamma;
  const bool on_alpha0 = std::abs(alpha) <= tol;
  if (on_alpha0 && gamma <= 0.5 + tol) return RegionLabel::BOUNDARY_BC;
  if (std::abs(gamma) <= tol && alpha <= 0.5 + tol) return RegionLabel::BOUNDARY_BA;
  if (std::abs(sum - 0.5) <= tol) return RegionLabel::BOUNDARY_AC;
  if (on_alpha0) return RegionLabel::BOUNDARY_CD;
  if (std::abs(2.0 * alpha + gamma - 1.0) <= tol) return RegionLabel::BOUNDARY_AD;
  return sum < 0.5 ? RegionLabel::SEPARABLE_INTERIOR : RegionLabel::NONSEPARABLE_INTERIOR;
}

}  // namespace qtdm
