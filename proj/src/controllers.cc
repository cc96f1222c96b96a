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

#include "platoon/controllers.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace platoon {

PidGains GainsFromSpec(const GainSpec& spec) {
  if (!(spec.zeta > 0.0 && spec.omega_n > 0.0 && spec.tau > 0.0)) {
    throw std::invalid_argument("gain spec entries must be positive");
  }
  return {2.0 * spec.zeta * spec.omega_n / spec.tau,
          spec.omega_n * spec.omega_n / spec.tau, 1.0 / spec.tau};
}

double PidCommand(double spacing_error, double integral, double relative_speed,
                  const PidGains& gains) {
  return gains.kp * spacing_error + gains.ki * integral +
         gains.kd * relative_speed;
}

double PidIntegralUpdate(double integral, double spacing_error, double dt,
                         bool saturated) {
  const double next = integral + dt * spacing_error;
  if (!saturated || std::abs(next) < std::abs(integral)) return next;
  return integral;
}

double BaselineACommand(double spacing, double speed, const ControlParams& p) {
  return p.baseline_ks * (spacing - p.standstill_gap - p.time_gap * speed);
}

double BaselineBCommand(double predecessor_speed, double speed,
                        const ControlParams& p) {
  return p.baseline_kv * (predecessor_speed - speed);
}

LeaderServoOutput LeaderServoStep(const LeaderServoState& servo,
                                  double target_speed, double dt,
                                  const ControlParams& p) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  double u = (target_speed - servo.v_cmd) / p.t_lead;
  if (p.leader_jerk_limit > 0.0) {
    const double du = p.leader_jerk_limit * dt;
    u = std::clamp(u, servo.last_command - du, servo.last_command + du);
  }
  u = std::clamp(u, p.u_min, p.u_max);
  LeaderServoOutput out;
  out.command = u;
  out.state.v_cmd = servo.v_cmd + dt * u;
  out.state.last_command = u;
  return out;
}

}  // namespace platoon
