/******************************************************************************
 * Copyright 2026 The Platoon Control Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

// Command-line front end: runs presets or custom scenarios, writes CSV,
// metrics and bound reports, and solves the cruise set-point problem.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "platoon/analysis.h"
#include "platoon/config.h"
#include "platoon/economics.h"
#include "platoon/report.h"
#include "platoon/simulation.h"

namespace fs = std::filesystem;
using namespace platoon;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitStrict = 2;

// Flags shared by the simulation subcommands. Every field has a config key;
// set flags win over the file.
struct SimFlags {
  std::optional<std::string> config;
  std::optional<std::string> preset;
  std::optional<std::string> controller;
  std::optional<std::string> out;
  bool strict = false;
  std::optional<double> dt;
  std::optional<double> duration;
  std::optional<int> n_vehicles;
  std::optional<double> v_init;
  std::optional<unsigned> threads;
};

struct EconFlags {
  std::optional<std::string> config;
  std::optional<std::string> profile;
  std::optional<std::string> out;
  std::optional<double> lambda_f;
  std::optional<double> lambda_t;
  std::optional<double> v_min_e;
  std::optional<double> v_max_e;
  std::optional<int> n_vehicles;
  std::optional<double> v_init;
};

void AddSimFlags(CLI::App* app, SimFlags& f) {
  app->add_option("--config", f.config, "Configuration file");
  app->add_option("--preset", f.preset, "c1-n2, c1-n8 or c2-n4");
  app->add_option("--controller", f.controller, "pid, baseline-a or baseline-b");
  app->add_option("--out", f.out, "Output directory");
  app->add_flag("--strict", f.strict, "Exit nonzero on an unsatisfied bound");
  app->add_option("--dt", f.dt, "Integration step (s)");
  app->add_option("--duration", f.duration, "Run length (s)");
  app->add_option("--n-vehicles", f.n_vehicles, "Platoon size, leader included");
  app->add_option("--v-init", f.v_init, "Initial cruise speed (m/s)");
}

Config LoadOrDefault(const std::optional<std::string>& path) {
  return path ? LoadConfig(*path) : Config{};
}

// Merges the config file with command-line flags.
struct SimSetup {
  Config config;
  ScenarioSpec spec;
  std::string preset_name;
  fs::path out;
  bool strict = false;
};

SimSetup Resolve(const SimFlags& f) {
  SimSetup s;
  s.config = LoadOrDefault(f.config);
  ScenarioOverrides& o = s.config.scenario;
  if (f.preset) o.preset = *f.preset;
  if (f.controller) o.controller = ParseControllerKind(*f.controller);
  if (f.dt) o.dt = *f.dt;
  if (f.duration) o.duration = *f.duration;
  if (f.n_vehicles) o.n_vehicles = *f.n_vehicles;
  if (f.v_init) o.v_init = *f.v_init;

  const Preset preset = ParsePreset(o.preset.value_or("c1-n2"));
  s.preset_name = ToString(preset);
  s.spec = ApplyOverrides(BuildPreset(preset), o);
  s.out = f.out.value_or(s.config.output.out.value_or("out"));
  s.strict = f.strict || s.config.output.strict.value_or(false);
  return s;
}

// Largest jump between consecutive explicit leader targets. Hold events
// have no static target, so they disable the jerk bound.
std::optional<double> LeaderStep(const ScenarioSpec& spec) {
  double prev = spec.v_init;
  double dv = 0.0;
  for (const auto& ev : spec.events) {
    if (!ev.target_speed) return std::nullopt;
    dv = std::max(dv, std::abs(*ev.target_speed - prev));
    prev = *ev.target_speed;
  }
  return dv;
}

std::vector<BoundReport> Analyze(const RunResult& result, const ScenarioSpec& spec,
                                 const ControlParams& control) {
  std::vector<BoundReport> reports = CheckSmallLag(result, control);
  const auto dv = LeaderStep(spec);
  BoundReport jerk = CheckLeaderJerk(result, dv.value_or(0.0), control);
  if (!dv) jerk.applicable = false;
  reports.push_back(jerk);
  for (BoundReport r : CheckSoftHierarchy(result, control)) {
    // The forced-response bound only describes the PID error loop.
    r.applicable = spec.controller == ControllerKind::kPid;
    reports.push_back(r);
  }
  for (const auto& p : CheckStringStability(result)) {
    reports.push_back(MakeBoundReport("string_stability", p.vehicle, p.sup_rel_speed,
                                      p.sup_rel_speed_prev + 1e-6));
  }
  return reports;
}

bool AllSatisfied(const std::vector<BoundReport>& reports) {
  for (const auto& r : reports) {
    if (r.applicable && !r.satisfied) return false;
  }
  return true;
}

std::string Render(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  WriteBoundReports(reports, os);
  return os.str();
}

void WriteRunOutputs(const RunResult& result, const std::vector<BoundReport>& reports,
                     const fs::path& dir) {
  fs::create_directories(dir);
  std::ostringstream csv;
  WriteTrajectoryCsv(result, csv);
  WriteFile(dir / "trajectory.csv", csv.str());
  std::ostringstream metrics;
  WriteMetrics(result, metrics);
  WriteFile(dir / "metrics.txt", metrics.str());
  WriteFile(dir / "bounds.txt", Render(reports));
  WritePlotData(result, dir);
}

int RunCommand(const SimFlags& flags) {
  const SimSetup s = Resolve(flags);
  const RunResult result = Run(s.spec, s.config.control, s.config.energy);
  const auto reports = Analyze(result, s.spec, s.config.control);
  WriteRunOutputs(result, reports, s.out);
  std::ostringstream metrics;
  WriteMetrics(result, metrics);
  std::cout << metrics.str();
  if (s.strict && !AllSatisfied(reports)) {
    std::cerr << "strict: unsatisfied bound (see " << (s.out / "bounds.txt").string()
              << ")\n";
    return kExitStrict;
  }
  if (s.strict && !result.infeasibility_events.empty()) {
    std::cerr << "strict: " << result.infeasibility_events.size()
              << " infeasibility events\n";
    return kExitStrict;
  }
  return 0;
}

int AnalyzeCommand(const SimFlags& flags) {
  const SimSetup s = Resolve(flags);
  const RunResult result = Run(s.spec, s.config.control, s.config.energy);
  auto reports = Analyze(result, s.spec, s.config.control);

  std::ostringstream os;
  os << Render(reports);
  if (!s.spec.events.empty() && s.spec.events.back().target_speed) {
    const double v_star = *s.spec.events.back().target_speed;
    const double window = std::min(30.0, s.spec.duration);
    try {
      for (const auto& c : CheckOvrvConvergence(result, v_star, 1e-3, 1e-3, window,
                                                s.config.control)) {
        const std::string key = "ovrv[" + std::to_string(c.vehicle) + "]";
        os << key << ".converged=" << (c.converged ? "true" : "false") << '\n'
           << key << ".max_abs_error=" << FormatDouble(c.max_abs_error) << '\n'
           << key << ".final_spacing=" << FormatDouble(c.final_spacing) << '\n';
      }
    } catch (const std::invalid_argument& err) {
      os << "ovrv.skipped=" << err.what() << '\n';
    }
  }
  for (int i = 1; i < result.n_vehicles(); ++i) {
    const std::string key = "fit[" + std::to_string(i) + "]";
    try {
      const auto fit = FitSecondOrder(result.vehicles[i].spacing_error, result.dt);
      os << key << ".zeta=" << FormatDouble(fit.zeta) << '\n'
         << key << ".omega=" << FormatDouble(fit.omega) << '\n';
    } catch (const std::domain_error& err) {
      os << key << ".skipped=" << err.what() << '\n';
    }
  }
  fs::create_directories(s.out);
  WriteFile(s.out / "analysis.txt", os.str());
  std::cout << os.str();
  if (s.strict && !AllSatisfied(reports)) return kExitStrict;
  return 0;
}

int SweepCommand(const SimFlags& flags, const std::vector<std::string>& presets,
                 const std::vector<std::string>& controllers) {
  Config config = LoadOrDefault(flags.config);
  const fs::path out = flags.out.value_or(config.output.out.value_or("out"));
  const unsigned threads = flags.threads.value_or(config.output.threads.value_or(0));
  const bool strict = flags.strict || config.output.strict.value_or(false);

  std::vector<std::string> preset_names = presets;
  if (preset_names.empty()) {
    preset_names = config.scenario.preset
                       ? std::vector<std::string>{*config.scenario.preset}
                       : std::vector<std::string>{"c1-n2", "c1-n8", "c2-n4"};
  }
  std::vector<std::string> controller_names = controllers;
  if (controller_names.empty()) {
    controller_names =
        config.scenario.controller
            ? std::vector<std::string>{ToString(*config.scenario.controller)}
            : std::vector<std::string>{"pid", "baseline-a", "baseline-b"};
  }

  std::vector<ScenarioSpec> specs;
  std::vector<std::string> labels;
  for (const auto& p : preset_names) {
    const Preset preset = ParsePreset(p);
    for (const auto& c : controller_names) {
      ScenarioOverrides o = config.scenario;
      o.controller = ParseControllerKind(c);
      if (flags.dt) o.dt = *flags.dt;
      if (flags.duration) o.duration = *flags.duration;
      if (flags.n_vehicles) o.n_vehicles = *flags.n_vehicles;
      if (flags.v_init) o.v_init = *flags.v_init;
      specs.push_back(ApplyOverrides(BuildPreset(preset), o));
      labels.push_back(ToString(preset) + "_" + ToString(*o.controller));
    }
  }

  const auto outcomes = Sweep(specs, config.control, config.energy, threads);
  std::ostringstream summary;
  bool failed = false;
  bool bounds_ok = true;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const auto& o = outcomes[k];
    if (!o.result) {
      failed = true;
      summary << labels[k] << ".error=" << o.error << '\n';
      continue;
    }
    const auto reports = Analyze(*o.result, specs[k], config.control);
    bounds_ok = bounds_ok && AllSatisfied(reports);
    WriteRunOutputs(*o.result, reports, out / labels[k]);
    const RunMetrics& m = o.result->metrics;
    summary << labels[k] << ".h_min=" << FormatDouble(m.h_min) << '\n'
            << labels[k] << ".e_sup=" << FormatDouble(m.e_sup) << '\n'
            << labels[k] << ".fuel_l_per_100km=" << FormatDouble(m.fuel_per_100km) << '\n'
            << labels[k] << ".infeasibility_events="
            << o.result->infeasibility_events.size() << '\n';
  }
  fs::create_directories(out);
  WriteFile(out / "summary.txt", summary.str());
  std::cout << summary.str();
  if (failed) return kExitFailure;
  if (strict && !bounds_ok) return kExitStrict;
  return 0;
}

int OptimizeCommand(const EconFlags& f) {
  Config config = LoadOrDefault(f.config);
  EconWeights w = config.economics;
  if (f.lambda_f) w.lambda_f = *f.lambda_f;
  if (f.lambda_t) w.lambda_t = *f.lambda_t;
  if (f.v_min_e) w.v_min = *f.v_min_e;
  if (f.v_max_e) w.v_max = *f.v_max_e;
  const auto violations = Validate(w, config.control);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << v.field << ": " << v.message << '\n';
    return kExitFailure;
  }
  const auto profile_path = f.profile ? f.profile : config.profile;
  if (!profile_path) {
    std::cerr << "optimize-speed: --profile is required\n";
    return kExitFailure;
  }
  const RouteProfile profile = LoadRouteProfile(*profile_path);
  const int n = f.n_vehicles.value_or(config.scenario.n_vehicles.value_or(4));
  if (n < 1) {
    std::cerr << "optimize-speed: --n-vehicles must be positive\n";
    return kExitFailure;
  }
  const double v_init =
      std::clamp(f.v_init.value_or(config.scenario.v_init.value_or(w.v_max)), w.v_min,
                 w.v_max);
  const double v_star =
      OptimizeSetPoint(profile, w, config.control, config.energy, n, v_init);
  const double cost = RouteCost(v_star, profile, w, config.control, config.energy, n);

  std::ostringstream os;
  os << "v_star=" << FormatDouble(v_star) << '\n'
     << "cost=" << FormatDouble(cost) << '\n'
     << "route_length=" << FormatDouble(profile.total_length()) << '\n'
     << "n_vehicles=" << n << '\n';
  std::cout << os.str();
  const auto out = f.out ? f.out : config.output.out;
  if (out) {
    fs::create_directories(*out);
    WriteFile(fs::path(*out) / "optimize.txt", os.str());
  }
  return 0;
}

int EmitDefaults(const std::optional<std::string>& out) {
  Config config;
  config.scenario.preset = "c1-n2";
  config.scenario.controller = ControllerKind::kPid;
  std::ostringstream os;
  WriteConfig(config, os);
  if (out) {
    WriteFile(*out, os.str());
  } else {
    std::cout << os.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truck platoon simulation and analysis"};
  app.require_subcommand(1);

  SimFlags run_flags;
  auto* run = app.add_subcommand("run", "Simulate one scenario and write outputs");
  AddSimFlags(run, run_flags);

  SimFlags analyze_flags;
  auto* analyze = app.add_subcommand("analyze", "Simulate and report bound checks");
  AddSimFlags(analyze, analyze_flags);

  SimFlags sweep_flags;
  std::vector<std::string> sweep_presets;
  std::vector<std::string> sweep_controllers;
  auto* sweep = app.add_subcommand("sweep", "Run preset x controller combinations");
  sweep->add_option("--config", sweep_flags.config, "Configuration file");
  sweep->add_option("--preset", sweep_presets, "Presets (repeatable, default all)");
  sweep->add_option("--controller", sweep_controllers,
                    "Controllers (repeatable, default all)");
  sweep->add_option("--out", sweep_flags.out, "Output directory");
  sweep->add_flag("--strict", sweep_flags.strict, "Exit nonzero on an unsatisfied bound");
  sweep->add_option("--dt", sweep_flags.dt, "Integration step (s)");
  sweep->add_option("--duration", sweep_flags.duration, "Run length (s)");
  sweep->add_option("--n-vehicles", sweep_flags.n_vehicles, "Platoon size");
  sweep->add_option("--v-init", sweep_flags.v_init, "Initial cruise speed (m/s)");
  sweep->add_option("--threads", sweep_flags.threads, "Worker threads (0 = auto)");

  EconFlags econ;
  auto* optimize = app.add_subcommand("optimize-speed", "Economic cruise set-point");
  optimize->add_option("--config", econ.config, "Configuration file");
  optimize->add_option("--profile", econ.profile, "Route profile: length_m grade_rad rows");
  optimize->add_option("--out", econ.out, "Output directory");
  optimize->add_option("--lambda-f", econ.lambda_f, "Fuel weight (per kg)");
  optimize->add_option("--lambda-t", econ.lambda_t, "Time weight (per s)");
  optimize->add_option("--v-min-e", econ.v_min_e, "Lower speed bound (m/s)");
  optimize->add_option("--v-max-e", econ.v_max_e, "Upper speed bound (m/s)");
  optimize->add_option("--n-vehicles", econ.n_vehicles, "Platoon size");
  optimize->add_option("--v-init", econ.v_init, "Warm start (m/s)");

  std::optional<std::string> defaults_out;
  auto* defaults = app.add_subcommand("emit-defaults", "Print the default configuration");
  defaults->add_option("--out", defaults_out, "Write to this file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return RunCommand(run_flags);
    if (*analyze) return AnalyzeCommand(analyze_flags);
    if (*sweep) return SweepCommand(sweep_flags, sweep_presets, sweep_controllers);
    if (*optimize) return OptimizeCommand(econ);
    if (*defaults) return EmitDefaults(defaults_out);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
