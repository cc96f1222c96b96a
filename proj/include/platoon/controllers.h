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

#include "platoon/model.h"

namespace platoon {

/// Desired closed-loop spacing-error dynamics s^2 + 2ζω s + ω^2 at time
/// gap τ.
struct GainSpec {
  double zeta = 1.0;
  double omega_n = 0.2;
  double tau = 1.0;
};

struct PidGains {
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;
};

/// K_p = 2ζω/τ, K_i = ω²/τ, K_d = 1/τ. The derivative gain cancels the
/// relative-speed term of the spacing-error kinematics.
PidGains GainsFromSpec(const GainSpec& spec);

inline PidGains GainsOf(const ControlParams& p) { return {p.kp, p.ki, p.kd}; }

/// Raw follower command before safety projection.
double PidCommand(double spacing_error, double integral, double relative_speed,
                  const PidGains& gains);

/// Conditional integration: the integral is frozen while the applied
/// command is saturated, unless the update shrinks |z|.
double PidIntegralUpdate(double integral, double spacing_error, double dt,
                         bool saturated);

/// Spacing-only law u = k_s (s - s0 - τ v).
double BaselineACommand(double spacing, double speed, const ControlParams& p);

/// Speed-matching law u = k_v (v_prev - v).
double BaselineBCommand(double predecessor_speed, double speed,
                        const ControlParams& p);

struct LeaderServoState {
  double v_cmd = 0.0;
  double last_command = 0.0;
};

struct LeaderServoOutput {
  LeaderServoState state;
  double command = 0.0;
};

/// One step of the leader's first-order speed servo. The clipped command
/// also integrates the commanded speed, so servo and plant stay consistent.
LeaderServoOutput LeaderServoStep(const LeaderServoState& servo,
                                  double target_speed, double dt,
                                  const ControlParams& p);

}  // namespace platoon
