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

#include <span>
#include <string>
#include <vector>

#include "platoon/model.h"

namespace platoon {

/// Measured extremum against a theoretical bound.
struct BoundReport {
  std::string name;
  int vehicle = -1;  // -1 when the report is not per-vehicle
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;  // lhs <= rhs + 1e-9
  double margin = 0.0;     // rhs - lhs
  bool applicable = true;
};

BoundReport MakeBoundReport(std::string name, int vehicle, double lhs, double rhs,
                            bool applicable = true);

/// Central differences in the interior, one-sided at both ends. Needs at
/// least two samples.
std::vector<double> Derivative(std::span<const double> x, double dt);

/// Actuator tracking error a - u per vehicle against
/// tau_a * max|du/dt| + |r(0)|. The derivative of u is a forward difference,
/// which matches the explicit Euler actuator update exactly.
std::vector<BoundReport> CheckSmallLag(const RunResult& result,
                                       const ControlParams& params);

struct ConvergenceReport {
  int vehicle = 0;
  bool converged = false;
  double max_abs_error = 0.0;
  double max_abs_rel_speed = 0.0;
  double final_spacing = 0.0;
};

/// Checks every follower over the last `window` seconds. Throws
/// std::invalid_argument when the window exceeds the run or the leader
/// speed moves by more than `tol_v` inside it.
std::vector<ConvergenceReport> CheckOvrvConvergence(const RunResult& result,
                                                    double v_star, double tol_e,
                                                    double tol_v, double window,
                                                    const ControlParams& params);

/// Realized leader jerk against dv_cmd / (tau_a * t_lead). Marked not
/// applicable when the leader command touched an actuator limit.
BoundReport CheckLeaderJerk(const RunResult& result, double dv_cmd,
                            const ControlParams& params);

/// Gain of the forced-response bound for damping ratio `zeta`.
double C2Factor(double zeta);

/// Per-follower |e| against C2(zeta) / (tau * K_i) * max|tau * dr/dt|, with
/// zeta taken from the PID gains. Assumes the run starts from zero error.
std::vector<BoundReport> CheckSoftHierarchy(const RunResult& result,
                                            const ControlParams& params);

struct PairStability {
  int vehicle = 0;  // follower index i >= 2
  double sup_rel_speed = 0.0;
  double sup_rel_speed_prev = 0.0;
  bool stable = false;
};

/// sup|dv_i| <= sup|dv_{i-1}| + 1e-6 for every follower i >= 2.
std::vector<PairStability> CheckStringStability(const RunResult& result);

struct SecondOrderFit {
  double zeta = 0.0;
  double omega = 0.0;
  double a1 = 0.0;  // 2 zeta omega
  double a0 = 0.0;  // omega^2
};

/// Least-squares fit of e'' + a1 e' + a0 e = 0 with central differences.
/// Throws std::domain_error on a flat or non-oscillator-like series.
SecondOrderFit FitSecondOrder(std::span<const double> e, double dt);

}  // namespace platoon
