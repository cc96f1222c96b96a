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

#include "platoon/safety_filter.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace platoon {

BarrierEval Barrier(double spacing, double speed, double pred_speed,
                    const ControlParams& p) {
  PairState pair;
  pair.spacing = spacing;
  pair.speed = speed;
  pair.pred_speed = pred_speed;
  return Barrier(pair, p);
}

BarrierEval Barrier(const PairState& s, const ControlParams& p) {
  const double closing_speed = std::max(0.0, s.speed - s.pred_speed);
  BarrierEval out;
  out.closing = s.speed > s.pred_speed;
  out.h = s.spacing - p.standstill_gap - p.tau_min * s.speed -
          closing_speed * closing_speed / (2.0 * p.b_max);
  // d/dt of the quadratic term is (v_i - v_prev)(a_i - a_prev)/b_max on the
  // closing branch and zero otherwise.
  const double w = closing_speed / p.b_max;
  out.h_dot = (s.pred_speed - s.speed) - p.tau_min * s.accel +
              w * (s.pred_accel - s.accel);
  return out;
}

AffineConstraint CbfConstraint(const PairState& s, const ControlParams& p) {
  const BarrierEval bar = Barrier(s, p);
  const double w = std::max(0.0, s.speed - s.pred_speed) / p.b_max;
  const double chi = bar.closing ? 1.0 : 0.0;
  const double da = s.pred_accel - s.accel;
  const double gain = (p.tau_min + w) / p.tau_a;
  // ḧ = Δa - gain (u - a_i) + w (u_prev - a_prev)/τ_a - χ Δa²/b_max
  const double drift = da + gain * s.accel +
                       w * (s.pred_command - s.pred_accel) / p.tau_a -
                       chi * da * da / p.b_max;
  AffineConstraint c;
  c.a = -gain;
  c.b = -(drift + p.cbf_k1 * bar.h_dot + p.cbf_k2 * bar.h);
  return c;
}

FeasibleInterval FeasibleRange(const AffineConstraint& c,
                               const ControlParams& p) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double cbf_lower = -kInf;
  double cbf_upper = kInf;
  if (c.a > 0.0) {
    cbf_lower = c.b / c.a;
  } else if (c.a < 0.0) {
    cbf_upper = c.b / c.a;
  } else if (c.b > 0.0) {
    cbf_lower = kInf;
  }
  FeasibleInterval out;
  out.lower = std::max(p.u_min, cbf_lower);
  out.upper = std::min(p.u_max, cbf_upper);
  out.feasible = out.lower <= out.upper;
  return out;
}

Projection Project(double nominal, const FeasibleInterval& interval,
                   double u_min) {
  Projection out;
  if (!interval.feasible) {
    out.applied = u_min;
    out.clipped = nominal != u_min;
    out.infeasible = true;
    return out;
  }
  out.applied = std::clamp(nominal, interval.lower, interval.upper);
  out.clipped = out.applied != nominal;
  return out;
}

bool DiscreteOneStepCheck(double h_now, double h_next, double kappa,
                          double dt) {
  return h_next >= (1.0 - kappa * dt) * h_now;
}

}  // namespace platoon
