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

// qtdm: negativity, time traces and parameter sweeps for the qubit-qutrit
// pair with an x-directed DM coupling to an auxiliary qubit.
//
// Exit codes: 0 success, 2 invalid input, 3 output failure, 1 internal error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "qtdm/io.hpp"
#include "qtdm/qtdm.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<double> alpha, gamma, dx, dxt;
  double c0 = 1.0;
  double t_max = 15.0;
  std::size_t t_steps = 600;
  std::optional<std::size_t> param_steps;
  std::optional<std::string> path, region;
  std::string convention = "gm23";
  double eps = qtdm::kDefaultEsdEps;
  std::string format = "csv";
  std::string out = "-";
};

using qtdm::io::format_number;

qtdm::Convention convention_of(const Options& o) {
  auto c = qtdm::parse_convention(o.convention);
  if (!c) throw ValidationError("--convention must be gm23 or spin1");
  return *c;
}

double require(const std::optional<double>& v, const char* flag) {
  if (!v) throw ValidationError(std::string(flag) + " is required");
  if (!std::isfinite(*v)) throw ValidationError(std::string(flag) + " must be finite");
  return *v;
}

qtdm::TwoParamState state_of(const Options& o) {
  return qtdm::TwoParamState(require(o.alpha, "--alpha"), require(o.gamma, "--gamma"));
}

void check_format(const Options& o) {
  if (o.format != "csv" && o.format != "json") throw ValidationError("--format must be csv or json");
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open output file " + path);
  f << text;
  f.close();
  if (!f) throw IoError("failed writing output file " + path);
}

void run_negativity(const Options& o) {
  check_format(o);
  const qtdm::Convention conv = convention_of(o);
  const qtdm::TwoParamState s = state_of(o);
  const double closed = qtdm::closed_form_negativity(s);
  const double numeric = qtdm::negativity(qtdm::build_two_param_state(s), qtdm::kQubitA);

  std::ostringstream os;
  if (o.format == "json") {
    nlohmann::ordered_json j = {{"convention", qtdm::to_string(conv)},
                                {"alpha", s.alpha()},
                                {"gamma", s.gamma()},
                                {"closed_form", closed},
                                {"numeric", numeric},
                                {"difference", numeric - closed}};
    os << j.dump(2) << '\n';
  } else {
    os << "# convention=" << qtdm::to_string(conv) << '\n'
       << "closed_form=" << format_number(closed) << " numeric=" << format_number(numeric)
       << " difference=" << format_number(numeric - closed) << '\n';
  }
  write_output(o.out, os.str());
}

void run_evolve(const Options& o) {
  check_format(o);
  qtdm::EvolutionSpec spec;
  spec.state = state_of(o);
  spec.aux = qtdm::PureQubit::from_c0(o.c0);
  spec.coupling = {require(o.dx, "--dx"), convention_of(o)};
  spec.t_max = o.t_max;
  spec.t_steps = o.t_steps;
  spec.validate();

  const qtdm::NegativityTrace trace = qtdm::negativity_trace(spec);
  std::ostringstream os;
  if (o.format == "json") {
    nlohmann::ordered_json j = {{"convention", qtdm::to_string(spec.coupling.convention)},
                                {"times", trace.times},
                                {"negativity", trace.values}};
    os << j.dump(2) << '\n';
  } else {
    qtdm::io::write_trace_csv(os, trace,
                              {{"convention", std::string(qtdm::to_string(spec.coupling.convention))},
                               {"alpha", format_number(spec.state.alpha())},
                               {"gamma", format_number(spec.state.gamma())},
                               {"dx", format_number(spec.coupling.d_x)},
                               {"c0", format_number(spec.aux.c0())},
                               {"c1", format_number(spec.aux.c1())},
                               {"t_max", format_number(spec.t_max)},
                               {"t_steps", std::to_string(spec.t_steps)}});
  }
  write_output(o.out, os.str());
}

void run_sweep(const Options& o) {
  check_format(o);
  if (o.path.has_value() == o.region.has_value())
    throw ValidationError("sweep needs exactly one of --path or --region");
  if (!(o.eps > 0.0)) throw ValidationError("--eps must be positive");
  const qtdm::Convention conv = convention_of(o);
  const std::string conv_name(qtdm::to_string(conv));

  std::ostringstream csv;
  nlohmann::ordered_json summary;
  if (o.path) {
    const auto path = qtdm::parse_path(*o.path);
    if (!path) throw ValidationError("--path must be one of BC, BA, AC, CD, AD");
    if (o.dxt) throw ValidationError("--dxt applies to region sweeps; use --dx with --path");
    qtdm::PathSweepSpec spec;
    spec.path = *path;
    spec.param_steps = o.param_steps.value_or(50);
    spec.coupling = {require(o.dx, "--dx"), conv};
    spec.t_max = o.t_max;
    spec.t_steps = o.t_steps;
    spec.aux = qtdm::PureQubit::from_c0(o.c0);
    spec.validate();

    const qtdm::NegativityField field = qtdm::sweep_path(spec);
    summary = qtdm::io::field_summary_json(field, o.eps, conv_name);
    if (o.format == "csv")
      qtdm::io::write_field_csv(csv, field,
                                {{"convention", conv_name},
                                 {"path", std::string(qtdm::to_string(spec.path))},
                                 {"dx", format_number(spec.coupling.d_x)},
                                 {"c0", format_number(spec.aux.c0())},
                                 {"param_steps", std::to_string(spec.param_steps)},
                                 {"t_max", format_number(spec.t_max)},
                                 {"t_steps", std::to_string(spec.t_steps)}});
  } else {
    const auto region = qtdm::parse_region(*o.region);
    if (!region) throw ValidationError("--region must be ABC or ACD");
    if (o.dx) throw ValidationError("--dx applies to path sweeps; use --dxt with --region");
    qtdm::RegionSweepSpec spec;
    spec.region = *region;
    spec.param_steps = o.param_steps.value_or(60);
    spec.dxt = require(o.dxt, "--dxt");
    spec.convention = conv;
    spec.aux = qtdm::PureQubit::from_c0(o.c0);
    spec.validate();

    const qtdm::RegionField field = qtdm::sweep_region(spec);
    summary = qtdm::io::region_summary_json(field, o.eps, conv_name);
    if (o.format == "csv")
      qtdm::io::write_region_csv(csv, field,
                                 {{"convention", conv_name},
                                  {"region", std::string(qtdm::to_string(spec.region))},
                                  {"dxt", format_number(spec.dxt)},
                                  {"c0", format_number(spec.aux.c0())},
                                  {"param_steps", std::to_string(spec.param_steps)}});
  }

  const std::string summary_text = summary.dump(2) + "\n";
  if (o.format == "json") {
    write_output(o.out, summary_text);
    return;
  }
  write_output(o.out, csv.str());
  if (o.out != "-") write_output(o.out + ".zones.json", summary_text);
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--convention", o.convention, "qutrit operator convention: gm23 | spin1");
  cmd->add_option("--format", o.format, "output format: csv | json");
  cmd->add_option("--out", o.out, "output path, '-' for standard output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement dynamics of a qubit-qutrit pair under x-component DM coupling"};
  app.require_subcommand(1);
  Options o;

  auto* neg = app.add_subcommand("negativity", "closed-form and numeric negativity of a state");
  neg->add_option("--alpha", o.alpha, "alpha parameter")->required();
  neg->add_option("--gamma", o.gamma, "gamma parameter")->required();
  add_common(neg, o);

  auto* evo = app.add_subcommand("evolve", "negativity time trace as CSV t,negativity");
  evo->add_option("--alpha", o.alpha, "alpha parameter")->required();
  evo->add_option("--gamma", o.gamma, "gamma parameter")->required();
  evo->add_option("--dx", o.dx, "DM coupling strength D_x")->required();
  evo->add_option("--c0", o.c0, "auxiliary qubit amplitude c0 (c1 = sqrt(1-c0^2))");
  evo->add_option("--t-max", o.t_max, "final time");
  evo->add_option("--t-steps", o.t_steps, "number of time points, endpoints included");
  add_common(evo, o);

  auto* swp = app.add_subcommand("sweep", "negativity over a triangle edge or region");
  swp->add_option("--path", o.path, "edge: BC | BA | AC | CD | AD");
  swp->add_option("--region", o.region, "region: ABC | ACD");
  swp->add_option("--dx", o.dx, "DM coupling strength (path sweeps)");
  swp->add_option("--dxt", o.dxt, "fixed product D_x * t (region sweeps)");
  swp->add_option("--c0", o.c0, "auxiliary qubit amplitude c0");
  swp->add_option("--t-max", o.t_max, "final time (path sweeps)");
  swp->add_option("--t-steps", o.t_steps, "number of time points (path sweeps)");
  swp->add_option("--param-steps", o.param_steps, "grid points per parameter axis");
  swp->add_option("--eps", o.eps, "zero threshold for ESD zones");
  add_common(swp, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "qtdm: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (*neg) run_negativity(o);
    else if (*evo) run_evolve(o);
    else run_sweep(o);
  } catch (const IoError& e) {
    std::cerr << "qtdm: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    std::cerr << "qtdm: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qtdm: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "qtdm: internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
