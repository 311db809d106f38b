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

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qtdm/analysis.hpp"
#include "qtdm/dynamics.hpp"

namespace qtdm::io {

/// Shortest %g form (at most 12 significant digits) that reads back as the
/// same double; otherwise the 12-digit rounding. Negative zero prints as 0.
inline std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  for (int prec = 1; prec <= 12; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  return buf;
}

using Metadata = std::vector<std::pair<std::string, std::string>>;

inline void write_metadata(std::ostream& os, const Metadata& meta) {
  for (const auto& [key, value] : meta) os << "# " << key << '=' << value << '\n';
}

inline void write_trace_csv(std::ostream& os, const NegativityTrace& trace, const Metadata& meta) {
  write_metadata(os, meta);
  os << "t,negativity\n";
  for (std::size_t k = 0; k < trace.times.size(); ++k)
    os << format_number(trace.times[k]) << ',' << format_number(trace.values[k]) << '\n';
}

inline void write_field_csv(std::ostream& os, const NegativityField& field, const Metadata& meta) {
  write_metadata(os, meta);
  os << "param,t,negativity\n";
  for (std::size_t i = 0; i < field.rows(); ++i)
    for (std::size_t k = 0; k < field.cols(); ++k)
      os << format_number(field.param_axis[i]) << ',' << format_number(field.time_axis[k]) << ','
         << format_number(field.at(i, k)) << '\n';
}

inline void write_region_csv(std::ostream& os, const RegionField& field, const Metadata& meta) {
  write_metadata(os, meta);
  os << "alpha,gamma,negativity\n";
  for (const auto& c : field.cells)
    os << format_number(c.alpha) << ',' << format_number(c.gamma) << ',' << format_number(c.value)
       << '\n';
}

inline nlohmann::ordered_json zones_json(const std::vector<ESDZone>& zones) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& z : zones)
    arr.push_back({{"param_lo", z.param_lo}, {"param_hi", z.param_hi}, {"t_lo", z.t_lo}, {"t_hi", z.t_hi}});
  return arr;
}

inline nlohmann::ordered_json field_summary_json(const NegativityField& field, double eps,
                                                 std::string_view convention) {
  const auto zones = detect_esd_zones(field, eps);
  const FieldSummary s = field_summary(field);
  return {{"convention", convention},
          {"zones", zones_json(zones)},
          {"max_value", s.max_value},
          {"argmax", {{"param", s.argmax_param}, {"t", s.argmax_t}}}};
}

inline nlohmann::ordered_json region_summary_json(const RegionField& field, double eps,
                                                  std::string_view convention) {
  const auto zones = detect_region_zones(field, eps);
  const RegionSummary s = region_summary(field);
  return {{"convention", convention},
          {"zones", zones_json(zones)},
          {"max_value", s.max_value},
          {"min_value", s.min_value},
          {"argmax", {{"alpha", s.argmax_alpha}, {"gamma", s.argmax_gamma}}}};
}

}  // namespace qtdm::io
