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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace platoon {

/// Longitudinal state of one truck. `pid_integral` is the accumulated
/// spacing error (m·s) used by the integral term of the follower law.
struct VehicleState {
  double position = 0.0;
  double speed = 0.0;
  double accel = 0.0;
  double pid_integral = 0.0;
};

/// Spacing policy, barrier, controller gains and actuator limits shared by
/// every truck of a homogeneous platoon. All quantities are SI.
struct ControlParams {
  // Constant time-gap policy s* = standstill_gap + time_gap * v.
  double time_gap = 1.0;
  double standstill_gap = 5.0;
  double vehicle_length = 16.5;

  // Velocity-aware headway barrier.
  double tau_min = 0.6;
  double b_max = 5.0;
  double cbf_k1 = 1.0;
  double cbf_k2 = 0.25;

  // Follower PID law and the second-order target it was derived from.
  double kp = 0.4;
  double ki = 0.04;
  double kd = 1.0;
  double zeta = 1.0;
  double omega_n = 0.2;

  // Actuator lag and leader speed servo.
  double tau_a = 0.4;
  double t_lead = 1.6;
  // Rate limit on the leader command (m/s^3); zero disables it.
  double leader_jerk_limit = 0.0;

  double u_min = -5.0;
  double u_max = 1.5;
  double v_min = 0.0;
  double v_max = 30.0;

  // Ablation baselines: spacing-only and speed-matching gains.
  double baseline_ks = 0.4;
  double baseline_kv = 1.0;

  bool tuning_guard = true;
  bool strict_overdamped = true;
  // Use the predecessor's command from the previous step in the CBF
  // constraint instead of the same-step command.
  bool cbf_previous_step_command = false;
};

/// Road-load, aerodynamic and powertrain constants of the fuel model.
struct EnergyParams {
  double mass = 40000.0;
  double g = 9.81;
  double c_r = 0.005;
  double rho_air = 1.225;
  double cd0_a = 0.53 * 9.7;
  double alpha_lead = 0.12;
  double alpha_foll = 0.30;
  double drag_decay = 12.0;
  double p_aux = 1800.0;
  double eta_eng = 0.40;
  double lhv = 42.7e6;
  double fuel_density = 0.84;
  double drivetrain_efficiency = 0.90;
  bool apply_drivetrain_efficiency = false;
};

enum class ControllerKind { kPid, kBaselineA, kBaselineB };

std::string ToString(ControllerKind kind);
/// Accepts "pid", "a"/"baseline-a", "b"/"baseline-b" (case-insensitive).
ControllerKind ParseControllerKind(const std::string& text);

/// Leader set-point change. An empty target means "hold the leader's
/// realized speed at the event time".
struct LeaderEvent {
  double time = 0.0;
  std::optional<double> target_speed;
};

struct ScenarioSpec {
  int n_vehicles = 2;
  double v_init = 18.0;
  double duration = 300.0;
  double dt = 0.01;
  ControllerKind controller = ControllerKind::kPid;
  std::vector<LeaderEvent> events;
  double grade = 0.0;
};

/// Time series for one vehicle. Spacing-derived series hold NaN for the
/// leader.
struct VehicleSeries {
  std::vector<double> position;
  std::vector<double> speed;
  std::vector<double> accel;
  std::vector<double> command;
  std::vector<double> spacing;
  std::vector<double> spacing_error;
  std::vector<double> barrier_value;
  std::vector<double> fuel_mass;
  std::vector<double> distance;
};

struct InfeasibilityEvent {
  double time = 0.0;
  int vehicle = 0;
};

struct RunMetrics {
  double h_min = 0.0;
  double h_min_time = 0.0;
  int h_min_vehicle = 0;
  double e_sup = 0.0;
  double e_sup_time = 0.0;
  int e_sup_vehicle = 0;
  double fuel_per_100km = 0.0;
};

struct RunResult {
  double dt = 0.0;
  std::vector<double> times;
  std::vector<VehicleSeries> vehicles;
  RunMetrics metrics;
  std::vector<InfeasibilityEvent> infeasibility_events;

  int n_vehicles() const { return static_cast<int>(vehicles.size()); }
  std::size_t n_samples() const { return times.size(); }
};

struct ParamViolation {
  std::string field;
  std::string message;
};

/// Nominal truck and controller parameters with the derived PID gains.
std::pair<ControlParams, EnergyParams> DefaultParams();

/// CBF gains (k1, k2) = (2λ, λ²) of the critically damped barrier
/// dynamics with relaxation rate λ = 1 / t_safe.
std::pair<double, double> CbfGainsFromSafetyTime(double t_safe);

std::vector<ParamViolation> Validate(const ControlParams& params);
std::vector<ParamViolation> Validate(const EnergyParams& params);
std::vector<ParamViolation> Validate(const ScenarioSpec& spec);

}  // namespace platoon
