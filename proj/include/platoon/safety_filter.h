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

// Velocity-aware headway barrier
//
//   h = s - s0 - τ_min v_i - max(0, v_i - v_prev)^2 / (2 b_max)
//
// has relative degree two in the commanded acceleration once the first-order
// actuator lag is included. The filter enforces ḧ + k1 ḣ + k2 h >= 0, which
// reduces to a half-space A u >= b on the follower's command. A is never
// positive: the condition caps the follower command from above.

struct BarrierEval {
  double h = 0.0;
  double h_dot = 0.0;
  bool closing = false;  // v_i > v_prev
};

/// Kinematic snapshot of a follower and its predecessor.
struct PairState {
  double spacing = 0.0;
  double speed = 0.0;
  double accel = 0.0;
  double pred_speed = 0.0;
  double pred_accel = 0.0;
  double pred_command = 0.0;
};

struct AffineConstraint {
  double a = 0.0;
  double b = 0.0;
};

struct FeasibleInterval {
  double lower = 0.0;
  double upper = 0.0;
  bool feasible = true;
};

struct Projection {
  double applied = 0.0;
  bool clipped = false;
  bool infeasible = false;
};

/// Barrier value only; h_dot assumes zero accelerations.
BarrierEval Barrier(double spacing, double speed, double pred_speed,
                    const ControlParams& p);

/// Barrier value and its derivative along the lagged dynamics.
BarrierEval Barrier(const PairState& pair, const ControlParams& p);

AffineConstraint CbfConstraint(const PairState& pair, const ControlParams& p);

/// Intersects the CBF half-space with [u_min, u_max]. A == 0 makes the
/// constraint independent of u: b > 0 is infeasible, b <= 0 unconstrained.
FeasibleInterval FeasibleRange(const AffineConstraint& c,
                               const ControlParams& p);

/// Clamp into a feasible interval. An empty interval falls back to maximum
/// braking `u_min` and reports the step as infeasible.
Projection Project(double nominal, const FeasibleInterval& interval,
                   double u_min);

/// Discrete decay condition h_next >= (1 - κ dt) h_now.
bool DiscreteOneStepCheck(double h_now, double h_next, double kappa, double dt);

}  // namespace platoon
