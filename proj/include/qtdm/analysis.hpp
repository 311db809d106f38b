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
#include <cstddef>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtdm/dynamics.hpp"
#include "qtdm/model.hpp"

namespace qtdm {

enum class Path { BC, BA, AC, CD, AD };
enum class Region { ABC, ACD };

inline std::string_view to_string(Path p) {
  switch (p) {
    case Path::BC: return "BC";
    case Path::BA: return "BA";
    case Path::AC: return "AC";
    case Path::CD: return "CD";
    case Path::AD: return "AD";
  }
  return "?";
}

inline std::string_view to_string(Region r) { return r == Region::ABC ? "ABC" : "ACD"; }

inline std::optional<Path> parse_path(std::string_view s) {
  if (s == "BC") return Path::BC;
  if (s == "BA") return Path::BA;
  if (s == "AC") return Path::AC;
  if (s == "CD") return Path::CD;
  if (s == "AD") return Path::AD;
  return std::nullopt;
}

inline std::optional<Region> parse_region(std::string_view s) {
  if (s == "ABC") return Region::ABC;
  if (s == "ACD") return Region::ACD;
  return std::nullopt;
}

inline constexpr double kDefaultEsdEps = 1e-7;

/// k-th of `steps` equally spaced (alpha, gamma) points along a triangle edge.
inline std::pair<double, double> boundary_params(Path path, std::size_t k, std::size_t steps) {
  if (steps < 2) throw ParameterError("boundary_params: need at least 2 steps");
  if (k >= steps) throw std::out_of_range("boundary_params: index past end of path");
  const double u = static_cast<double>(k) * 0.5 / static_cast<double>(steps - 1);
  switch (path) {
    case Path::BC: return {0.0, u};
    case Path::BA: return {u, 0.0};
    case Path::AC: return {u, 0.5 - u};
    case Path::CD: return {0.0, 0.5 + u};
    case Path::AD: return {u, 1.0 - 2.0 * u};
  }
  return {0.0, 0.0};
}

/// Along-path coordinate reported on the parameter axis: gamma for paths
/// with alpha fixed at 0 (BC, CD), alpha otherwise.
inline double path_coordinate(Path path, std::pair<double, double> ag) {
  return (path == Path::BC || path == Path::CD) ? ag.second : ag.first;
}

struct PathSweepSpec {
  Path path = Path::BC;
  std::size_t param_steps = 50;
  DMCoupling coupling{};
  double t_max = 15.0;
  std::size_t t_steps = 600;
  PureQubit aux{1.0, 0.0};

  void validate() const {
    if (param_steps < 2) throw ParameterError("sweep: param_steps must be at least 2");
    if (t_steps < 2) throw ParameterError("sweep: t_steps must be at least 2");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ParameterError("sweep: t_max must be positive");
    if (!std::isfinite(coupling.d_x)) throw ParameterError("sweep: d_x must be finite");
  }
};

/// Negativity over (parameter, time), row-major with one row per parameter.
struct NegativityField {
  std::vector<double> param_axis;
  std::vector<double> time_axis;
  std::vector<double> values;

  std::size_t rows() const noexcept { return param_axis.size(); }
  std::size_t cols() const noexcept { return time_axis.size(); }
  double at(std::size_t row, std::size_t col) const { return values[row * cols() + col]; }
  double& at(std::size_t row, std::size_t col) { return values[row * cols() + col]; }
  bool empty() const noexcept { return values.empty(); }
};

struct ESDZone {
  double param_lo = 0.0, param_hi = 0.0;
  double t_lo = 0.0, t_hi = 0.0;
};

inline NegativityField sweep_path(const PathSweepSpec& spec) {
  spec.validate();
  NegativityField f;
  f.time_axis = uniform_grid(spec.t_max, spec.t_steps);

  std::vector<DensityMatrix> initial;
  initial.reserve(spec.param_steps);
  const DensityMatrix aux = build_aux_qubit(spec.aux);
  for (std::size_t i = 0; i < spec.param_steps; ++i) {
    const auto ag = boundary_params(spec.path, i, spec.param_steps);
    f.param_axis.push_back(path_coordinate(spec.path, ag));
    initial.push_back(tensor_product(build_two_param_state(ag.first, ag.second), aux));
  }

  f.values.assign(f.rows() * f.cols(), 0.0);
  const Propagator prop(full_hamiltonian(spec.coupling));
  for (std::size_t k = 0; k < f.cols(); ++k) {
    const ComplexMatrix u = prop.unitary(f.time_axis[k]);
    for (std::size_t i = 0; i < f.rows(); ++i)
      f.at(i, k) = negativity(reduce_to_pair(u, initial[i]), kQubitA);
  }
  return f;
}

/// Zero regions of a (parameter x time) field.
///
/// Cells below eps are grouped into 4-connected components. A component is
/// reported only if one of its cells is preceded, in its own parameter
/// row, by a cell >= eps: entanglement that died, as opposed to a row that
/// was never entangled. Zones are bounding boxes in axis units, sorted by
/// (t_lo, param_lo).
inline std::vector<ESDZone> detect_esd_zones(const NegativityField& field, double eps = kDefaultEsdEps) {
  if (field.empty()) throw std::invalid_argument("detect_esd_zones: empty field");
  if (!(eps > 0.0)) throw std::invalid_argument("detect_esd_zones: eps must be positive");
  const std::size_t rows = field.rows(), cols = field.cols();

  std::vector<std::size_t> first_alive(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k)
      if (field.at(i, k) >= eps) {
        first_alive[i] = k;
        break;
      }

  std::vector<char> seen(rows * cols, 0);
  std::vector<ESDZone> zones;
  std::queue<std::pair<std::size_t, std::size_t>> frontier;
  for (std::size_t i0 = 0; i0 < rows; ++i0)
    for (std::size_t k0 = 0; k0 < cols; ++k0) {
      if (seen[i0 * cols + k0] || field.at(i0, k0) >= eps) continue;
      std::size_t rlo = i0, rhi = i0, clo = k0, chi = k0;
      bool qualifies = false;
      seen[i0 * cols + k0] = 1;
      frontier.emplace(i0, k0);
      while (!frontier.empty()) {
        const auto [i, k] = frontier.front();
        frontier.pop();
        rlo = std::min(rlo, i);
        rhi = std::max(rhi, i);
        clo = std::min(clo, k);
        chi = std::max(chi, k);
        qualifies = qualifies || first_alive[i] < k;
        auto visit = [&](std::size_t ni, std::size_t nk) {
          if (seen[ni * cols + nk] || field.at(ni, nk) >= eps) return;
          seen[ni * cols + nk] = 1;
          frontier.emplace(ni, nk);
        };
        if (i > 0) visit(i - 1, k);
        if (i + 1 < rows) visit(i + 1, k);
        if (k > 0) visit(i, k - 1);
        if (k + 1 < cols) visit(i, k + 1);
      }
      if (qualifies)
        zones.push_back({field.param_axis[rlo], field.param_axis[rhi], field.time_axis[clo],
                         field.time_axis[chi]});
    }

  std::sort(zones.begin(), zones.end(), [](const ESDZone& a, const ESDZone& b) {
    return std::pair(a.t_lo, a.param_lo) < std::pair(b.t_lo, b.param_lo);
  });
  return zones;
}

struct FieldSummary {
  double max_value = 0.0;
  double argmax_param = 0.0;
  double argmax_t = 0.0;
  std::size_t zone_count = 0;
};

inline FieldSummary field_summary(const NegativityField& field) {
  if (field.empty()) throw std::invalid_argument("field_summary: empty field");
  std::size_t best = 0;
  for (std::size_t n = 1; n < field.values.size(); ++n)
    if (field.values[n] > field.values[best]) best = n;
  FieldSummary s;
  s.max_value = field.values[best];
  s.argmax_param = field.param_axis[best / field.cols()];
  s.argmax_t = field.time_axis[best % field.cols()];
  s.zone_count = detect_esd_zones(field).size();
  return s;
}

// ---------------------------------------------------------------------------
// Region sweeps at a fixed product d_x * t.

struct RegionSweepSpec {
  Region region = Region::ABC;
  std::size_t param_steps = 60;
  double dxt = 0.0;
  Convention convention = Convention::GM23;
  PureQubit aux{1.0, 0.0};

  void validate() const {
    if (param_steps < 2) throw ParameterError("sweep: param_steps must be at least 2");
    if (!std::isfinite(dxt)) throw ParameterError("sweep: dxt must be finite");
  }
};

struct RegionCell {
  double alpha = 0.0;
  double gamma = 0.0;
  double value = 0.0;
};

/// Extremes of the negativity along one line alpha + gamma = sum.
struct SumLine {
  double sum = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

struct RegionField {
  double dxt = 0.0;
  std::vector<RegionCell> cells;  // alpha-major, then gamma
  std::vector<SumLine> lines;     // ascending sum
};

/// Evaluates every grid point of the region at time dxt with d_x = 1.
///
/// The grid is alpha_i = i/(2(n-1)), gamma_j = j/(n-1), so alpha + gamma =
/// (i + 2j)/(2(n-1)) and cells fall exactly onto constant-sum lines. ABC
/// keeps i + 2j <= n-1 (the AC line included); ACD keeps i + 2j >= n and
/// i + j <= n-1, which drops AC by half a line spacing.
inline RegionField sweep_region(const RegionSweepSpec& spec) {
  spec.validate();
  const std::size_t n = spec.param_steps;
  const double step = 1.0 / static_cast<double>(n - 1);
  const Propagator prop(full_hamiltonian({1.0, spec.convention}));
  const ComplexMatrix u = prop.unitary(spec.dxt);
  const DensityMatrix aux = build_aux_qubit(spec.aux);

  RegionField f;
  f.dxt = spec.dxt;
  std::vector<std::optional<SumLine>> by_key(3 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t key = i + 2 * j;
      const bool keep = spec.region == Region::ABC ? key <= n - 1 : (key >= n && i + j <= n - 1);
      if (!keep) continue;
      const double alpha = 0.5 * static_cast<double>(i) * step;
      const double gamma = static_cast<double>(j) * step;
      const DensityMatrix rho0 = tensor_product(build_two_param_state(alpha, gamma), aux);
      const double v = negativity(reduce_to_pair(u, rho0), kQubitA);
      f.cells.push_back({alpha, gamma, v});

      auto& line = by_key[key];
      if (!line) line = SumLine{0.5 * static_cast<double>(key) * step, v, v, 0};
      line->min = std::min(line->min, v);
      line->max = std::max(line->max, v);
      ++line->count;
    }
  for (const auto& line : by_key)
    if (line) f.lines.push_back(*line);
  return f;
}

/// Runs of constant-sum lines whose maximum is below eps, as zones on the
/// alpha + gamma axis (t_lo = t_hi = dxt). Nothing is reported for a field
/// that is below eps everywhere.
inline std::vector<ESDZone> detect_region_zones(const RegionField& field, double eps = kDefaultEsdEps) {
  if (field.lines.empty()) throw std::invalid_argument("detect_region_zones: empty field");
  const bool any_alive = std::any_of(field.lines.begin(), field.lines.end(),
                                     [eps](const SumLine& l) { return l.max >= eps; });
  std::vector<ESDZone> zones;
  if (!any_alive) return zones;
  for (std::size_t a = 0; a < field.lines.size();) {
    if (field.lines[a].max >= eps) {
      ++a;
      continue;
    }
    std::size_t b = a;
    while (b + 1 < field.lines.size() && field.lines[b + 1].max < eps) ++b;
    zones.push_back({field.lines[a].sum, field.lines[b].sum, field.dxt, field.dxt});
    a = b + 1;
  }
  return zones;
}

struct RegionSummary {
  double max_value = 0.0;
  double min_value = 0.0;
  double argmax_alpha = 0.0;
  double argmax_gamma = 0.0;
  std::size_t zone_count = 0;
};

inline RegionSummary region_summary(const RegionField& field) {
  if (field.cells.empty()) throw std::invalid_argument("region_summary: empty field");
  RegionSummary s;
  auto best = field.cells.begin();
  s.min_value = best->value;
  for (auto it = field.cells.begin(); it != field.cells.end(); ++it) {
    if (it->value > best->value) best = it;
    s.min_value = std::min(s.min_value, it->value);
  }
  s.max_value = best->value;
  s.argmax_alpha = best->alpha;
  s.argmax_gamma = best->gamma;
  s.zone_count = detect_region_zones(field).size();
  return s;
}

struct CollapseResult {
  bool collapses = false;
  double deviation = 0.0;
};

/// Whether negativity depends on (alpha, gamma) only through alpha + gamma.
inline CollapseResult collapse_check(const RegionField& field, double tol) {
  CollapseResult r;
  for (const auto& line : field.lines) r.deviation = std::max(r.deviation, line.max - line.min);
  r.collapses = r.deviation <= tol;
  return r;
}

inline CollapseResult collapse_check(Region region, double dxt, double tol,
                                     Convention convention = Convention::GM23,
                                     std::size_t param_steps = 60) {
  RegionSweepSpec spec;
  spec.region = region;
  spec.dxt = dxt;
  spec.convention = convention;
  spec.param_steps = param_steps;
  return collapse_check(sweep_region(spec), tol);
}

}  // namespace qtdm
