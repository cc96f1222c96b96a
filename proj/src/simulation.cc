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

#include "platoon/simulation.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <limits>
#include <thread>

#include "platoon/controllers.h"
#include "platoon/dynamics.h"
#include "platoon/energy.h"
#include "platoon/safety_filter.h"

namespace platoon {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string Normalize(std::string name) {
  for (char& c : name) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c == '_') c = '-';
  }
  return name;
}

void ThrowIfInvalid(const std::vector<ParamViolation>& violations,
                    const char* what) {
  if (violations.empty()) return;
  std::string msg = std::string("invalid ") + what + ":";
  for (const auto& v : violations) msg += " [" + v.field + "] " + v.message + ";";
  throw std::invalid_argument(msg);
}

void Reserve(VehicleSeries& s, std::size_t n) {
  for (auto* series : {&s.position, &s.speed, &s.accel, &s.command, &s.spacing,
                       &s.spacing_error, &s.barrier_value, &s.fuel_mass,
                       &s.distance}) {
    series->reserve(n);
  }
}

}  // namespace

Preset ParsePreset(const std::string& name) {
  const std::string key = Normalize(name);
  if (key == "c1-n2") return Preset::kC1N2;
  if (key == "c1-n8") return Preset::kC1N8;
  if (key == "c2-n4") return Preset::kC2N4;
  throw std::invalid_argument("unknown preset '" + name + "'");
}

std::string ToString(Preset preset) {
  switch (preset) {
    case Preset::kC1N2:
      return "c1-n2";
    case Preset::kC1N8:
      return "c1-n8";
    case Preset::kC2N4:
      return "c2-n4";
  }
  return "unknown";
}

ScenarioSpec BuildPreset(Preset preset) {
  ScenarioSpec spec;
  spec.duration = 300.0;
  spec.dt = 0.01;
  switch (preset) {
    case Preset::kC1N2:
    case Preset::kC1N8:
      spec.n_vehicles = preset == Preset::kC1N2 ? 2 : 8;
      spec.v_init = 18.0;
      spec.events = {{10.0, 25.0}};
      break;
    case Preset::kC2N4:
      spec.n_vehicles = 4;
      spec.v_init = 25.0;
      spec.events = {{0.0, 0.0}, {10.0, std::nullopt}, {20.0, 25.0}};
      break;
  }
  return spec;
}

RunResult Run(const ScenarioSpec& spec, const ControlParams& control,
              const EnergyParams& energy) {
  ThrowIfInvalid(Validate(spec), "scenario");
  ThrowIfInvalid(Validate(control), "control parameters");
  ThrowIfInvalid(Validate(energy), "energy parameters");

  const int n = spec.n_vehicles;
  const double dt = spec.dt;
  const long n_steps = std::lround(spec.duration / dt);
  const PidGains gains = GainsOf(control);

  RunResult result;
  result.dt = dt;
  result.times.reserve(n_steps + 1);
  result.vehicles.resize(n);
  for (auto& v : result.vehicles) Reserve(v, n_steps + 1);

  PlatoonState state = EquilibriumState(n, spec.v_init, control);
  LeaderServoState servo{spec.v_init, 0.0};
  double target_speed = spec.v_init;
  std::size_t next_event = 0;

  std::vector<double> commands(n, 0.0);
  std::vector<double> previous_commands(n, 0.0);
  std::vector<double> next_integral(n, 0.0);
  std::vector<FuelAccumulator> fuel(n);
  std::vector<double> spacing(n, kNaN);
  std::vector<double> spacing_error(n, kNaN);
  std::vector<double> barrier(n, kNaN);

  for (long k = 0; k <= n_steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    state.time = t;

    while (next_event < spec.events.size() &&
           spec.events[next_event].time <= t + 1e-9 * dt) {
      const auto& ev = spec.events[next_event];
      if (ev.target_speed) {
        target_speed = *ev.target_speed;
      } else {
        // Hold: freeze both the target and the servo at the realized speed.
        target_speed = state.vehicles[0].speed;
        servo.v_cmd = target_speed;
      }
      ++next_event;
    }

    const LeaderServoOutput leader = LeaderServoStep(servo, target_speed, dt, control);
    commands[0] = leader.command;

    for (int i = 1; i < n; ++i) {
      const VehicleState& self = state.vehicles[i];
      const VehicleState& pred = state.vehicles[i - 1];
      const double s = Spacing(state, i, control.vehicle_length);
      const double e = s - control.standstill_gap - control.time_gap * self.speed;
      const double dv = pred.speed - self.speed;

      double nominal = 0.0;
      switch (spec.controller) {
        case ControllerKind::kPid:
          nominal = PidCommand(e, self.pid_integral, dv, gains);
          break;
        case ControllerKind::kBaselineA:
          nominal = BaselineACommand(s, self.speed, control);
          break;
        case ControllerKind::kBaselineB:
          nominal = BaselineBCommand(pred.speed, self.speed, control);
          break;
      }
      if (!std::isfinite(nominal)) {
        throw SimulationError("non-finite nominal command for vehicle " +
                                  std::to_string(i) + " at step " +
                                  std::to_string(k),
                              k, i);
      }

      PairState pair;
      pair.spacing = s;
      pair.speed = self.speed;
      pair.accel = self.accel;
      pair.pred_speed = pred.speed;
      pair.pred_accel = pred.accel;
      pair.pred_command = control.cbf_previous_step_command
                              ? previous_commands[i - 1]
                              : commands[i - 1];
      const BarrierEval bar = Barrier(pair, control);
      const FeasibleInterval interval =
          FeasibleRange(CbfConstraint(pair, control), control);
      const Projection proj = Project(nominal, interval, control.u_min);
      if (proj.infeasible) result.infeasibility_events.push_back({t, i});
      commands[i] = proj.applied;

      next_integral[i] =
          spec.controller == ControllerKind::kPid
              ? PidIntegralUpdate(self.pid_integral, e, dt, proj.clipped)
              : self.pid_integral;
      spacing[i] = s;
      spacing_error[i] = e;
      barrier[i] = bar.h;
    }

    result.times.push_back(t);
    for (int i = 0; i < n; ++i) {
      VehicleSeries& out = result.vehicles[i];
      const VehicleState& veh = state.vehicles[i];
      out.position.push_back(veh.position);
      out.speed.push_back(veh.speed);
      out.accel.push_back(veh.accel);
      out.command.push_back(commands[i]);
      out.spacing.push_back(spacing[i]);
      out.spacing_error.push_back(spacing_error[i]);
      out.barrier_value.push_back(barrier[i]);
      out.fuel_mass.push_back(fuel[i].fuel_mass);
      out.distance.push_back(fuel[i].distance);
    }
    if (k == n_steps) break;

    for (int i = 0; i < n; ++i) {
      const VehicleState& veh = state.vehicles[i];
      const double drag =
          i == 0 ? DragArea(0.0, true, energy)
                 : DragArea(std::max(0.0, spacing[i]), false, energy);
      const double rate = FuelRate(veh.speed, veh.accel, drag, spec.grade, energy);
      fuel[i] = Accumulate(fuel[i], rate, veh.speed, dt);
    }

    servo = leader.state;
    try {
      state = Step(state, commands, dt, control);
    } catch (const DynamicsError& err) {
      throw SimulationError(std::string(err.what()) + " at step " +
                                std::to_string(k),
                            k, err.vehicle());
    }
    state.leader_cmd_speed = servo.v_cmd;
    for (int i = 1; i < n; ++i) state.vehicles[i].pid_integral = next_integral[i];
    previous_commands = commands;
  }

  result.metrics = ComputeMetrics(result, energy);
  return result;
}

RunMetrics ComputeMetrics(const RunResult& result, const EnergyParams& energy) {
  if (result.times.empty() || result.vehicles.size() < 2) {
    throw std::invalid_argument("metrics need a non-empty run with followers");
  }
  RunMetrics m;
  m.h_min = std::numeric_limits<double>::infinity();
  m.e_sup = -1.0;
  const std::size_t n_samples = result.times.size();
  for (std::size_t k = 0; k < n_samples; ++k) {
    for (int i = 1; i < result.n_vehicles(); ++i) {
      const VehicleSeries& v = result.vehicles[i];
      if (v.barrier_value[k] < m.h_min) {
        m.h_min = v.barrier_value[k];
        m.h_min_time = result.times[k];
        m.h_min_vehicle = i;
      }
      const double e = std::abs(v.spacing_error[k]);
      if (e > m.e_sup) {
        m.e_sup = e;
        m.e_sup_time = result.times[k];
        m.e_sup_vehicle = i;
      }
    }
  }
  std::vector<FuelAccumulator> totals;
  totals.reserve(result.vehicles.size());
  for (const auto& v : result.vehicles) {
    totals.push_back({v.fuel_mass.back(), v.distance.back()});
  }
  m.fuel_per_100km = FuelEconomy(totals, energy);
  return m;
}

std::vector<SweepOutcome> Sweep(const std::vector<ScenarioSpec>& specs,
                                const ControlParams& control,
                                const EnergyParams& energy, unsigned threads) {
  std::vector<SweepOutcome> out(specs.size());
  if (specs.empty()) return out;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(specs.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t idx = next++; idx < specs.size(); idx = next++) {
      try {
        out[idx].result = Run(specs[idx], control, energy);
      } catch (const std::exception& err) {
        out[idx].error = err.what();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace platoon
