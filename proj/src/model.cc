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

#include "platoon/model.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "platoon/controllers.h"

namespace platoon {
namespace {

std::string Lower(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return text;
}

std::string Num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Floating-point slack for bounds that the defaults sit exactly on
// (t_lead == 4 * tau_a).
constexpr double kBoundSlack = 1e-12;
constexpr double kMarginLimit = 0.35;

}  // namespace

std::string ToString(ControllerKind kind) {
  switch (kind) {
    case ControllerKind::kPid:
      return "pid";
    case ControllerKind::kBaselineA:
      return "baseline-a";
    case ControllerKind::kBaselineB:
      return "baseline-b";
  }
  return "unknown";
}

ControllerKind ParseControllerKind(const std::string& text) {
  const std::string key = Lower(text);
  if (key == "pid") return ControllerKind::kPid;
  if (key == "a" || key == "baseline-a" || key == "baselinea") {
    return ControllerKind::kBaselineA;
  }
  if (key == "b" || key == "baseline-b" || key == "baselineb") {
    return ControllerKind::kBaselineB;
  }
  throw std::invalid_argument("unknown controller '" + text + "'");
}

std::pair<double, double> CbfGainsFromSafetyTime(double t_safe) {
  if (!(t_safe > 0.0)) {
    throw std::invalid_argument("t_safe must be positive");
  }
  const double lambda = 1.0 / t_safe;
  return {2.0 * lambda, lambda * lambda};
}

std::pair<ControlParams, EnergyParams> DefaultParams() {
  ControlParams control;
  const auto gains = GainsFromSpec(
      GainSpec{control.zeta, control.omega_n, control.time_gap});
  control.kp = gains.kp;
  control.ki = gains.ki;
  control.kd = gains.kd;
  const auto [k1, k2] = CbfGainsFromSafetyTime(2.0);
  control.cbf_k1 = k1;
  control.cbf_k2 = k2;
  return {control, EnergyParams{}};
}

std::vector<ParamViolation> Validate(const ControlParams& p) {
  std::vector<ParamViolation> out;
  auto add = [&out](std::string field, std::string message) {
    out.push_back({std::move(field), std::move(message)});
  };
  if (!(p.time_gap > 0.0)) add("time_gap", "tau=" + Num(p.time_gap) + " <= 0");
  if (!(p.tau_min >= 0.0)) add("tau_min", "tau_min < 0");
  if (p.tau_min > p.time_gap) add("tau_min", "tau_min > tau");
  if (!(p.b_max > 0.0)) add("b_max", "b_max <= 0");
  if (!(p.cbf_k1 > 0.0)) add("cbf_k1", "cbf_k1 <= 0");
  if (!(p.cbf_k2 > 0.0)) add("cbf_k2", "cbf_k2 <= 0");
  if (!(p.tau_a > 0.0)) add("tau_a", "tau_a <= 0");
  if (!(p.t_lead > 0.0)) add("t_lead", "t_lead <= 0");
  if (p.strict_overdamped && p.t_lead < 4.0 * p.tau_a - kBoundSlack) {
    add("t_lead", "t_lead=" + Num(p.t_lead) + " < 4*tau_a=" +
                      Num(4.0 * p.tau_a));
  }
  if (!(p.u_min < 0.0)) add("u_min", "u_min >= 0");
  if (!(p.u_max > 0.0)) add("u_max", "u_max <= 0");
  if (!(p.v_min < p.v_max)) add("v_min", "v_min >= v_max");
  if (p.leader_jerk_limit < 0.0) {
    add("leader_jerk_limit", "leader_jerk_limit < 0");
  }
  if (!(p.zeta > 0.0)) add("zeta", "zeta <= 0");
  if (!(p.omega_n > 0.0)) add("omega_n", "omega_n <= 0");
  const double margin = p.omega_n * p.tau_a;
  if (p.tuning_guard && margin > kMarginLimit + kBoundSlack) {
    add("omega_n", "omega_n·tau_a=" + Num(margin) + " > " + Num(kMarginLimit));
  }
  return out;
}

std::vector<ParamViolation> Validate(const EnergyParams& p) {
  std::vector<ParamViolation> out;
  auto positive = [&out](const char* field, double value) {
    if (!(value > 0.0)) out.push_back({field, std::string(field) + " <= 0"});
  };
  positive("mass", p.mass);
  positive("g", p.g);
  positive("c_r", p.c_r);
  positive("rho_air", p.rho_air);
  positive("cd0_a", p.cd0_a);
  positive("drag_decay", p.drag_decay);
  positive("p_aux", p.p_aux);
  positive("lhv", p.lhv);
  positive("fuel_density", p.fuel_density);
  auto unit_open = [&out](const char* field, double value) {
    if (!(value > 0.0 && value < 1.0)) {
      out.push_back({field, std::string(field) + " outside (0,1)"});
    }
  };
  unit_open("alpha_lead", p.alpha_lead);
  unit_open("alpha_foll", p.alpha_foll);
  if (!(p.eta_eng > 0.0 && p.eta_eng <= 1.0)) {
    out.push_back({"eta_eng", "eta_eng outside (0,1]"});
  }
  if (!(p.drivetrain_efficiency > 0.0 && p.drivetrain_efficiency <= 1.0)) {
    out.push_back({"drivetrain_efficiency", "drivetrain_efficiency outside (0,1]"});
  }
  return out;
}

std::vector<ParamViolation> Validate(const ScenarioSpec& s) {
  std::vector<ParamViolation> out;
  if (s.n_vehicles < 2) out.push_back({"n_vehicles", "n_vehicles < 2"});
  if (!(s.dt >= 0.001 && s.dt <= 0.1)) {
    out.push_back({"dt", "dt=" + Num(s.dt) + " outside [0.001, 0.1]"});
  }
  if (!(s.duration > 0.0)) out.push_back({"duration", "duration <= 0"});
  if (!std::isfinite(s.v_init)) out.push_back({"v_init", "v_init not finite"});
  for (std::size_t i = 1; i < s.events.size(); ++i) {
    if (!(s.events[i].time > s.events[i - 1].time)) {
      out.push_back({"events", "event times not strictly increasing at index " +
                                   std::to_string(i)});
    }
  }
  for (const auto& e : s.events) {
    if (e.target_speed && !std::isfinite(*e.target_speed)) {
      out.push_back({"events", "non-finite target speed"});
    }
  }
  return out;
}

}  // namespace platoon
