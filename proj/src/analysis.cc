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

#include "platoon/analysis.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "platoon/controllers.h"

namespace platoon {
namespace {

double MaxAbs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

void RequireSamples(const RunResult& result, std::size_t n, const char* what) {
  if (result.times.size() < n) {
    throw std::invalid_argument(std::string(what) + ": series too short");
  }
}

}  // namespace

BoundReport MakeBoundReport(std::string name, int vehicle, double lhs, double rhs,
                            bool applicable) {
  BoundReport r;
  r.name = std::move(name);
  r.vehicle = vehicle;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.satisfied = lhs <= rhs + 1e-9;
  r.applicable = applicable;
  return r;
}

std::vector<double> Derivative(std::span<const double> x, double dt) {
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("derivative needs two samples");
  std::vector<double> d(n);
  d[0] = (x[1] - x[0]) / dt;
  d[n - 1] = (x[n - 1] - x[n - 2]) / dt;
  for (std::size_t k = 1; k + 1 < n; ++k) d[k] = (x[k + 1] - x[k - 1]) / (2.0 * dt);
  return d;
}

std::vector<BoundReport> CheckSmallLag(const RunResult& result,
                                       const ControlParams& params) {
  RequireSamples(result, 3, "small-lag check");
  std::vector<BoundReport> out;
  for (int i = 0; i < result.n_vehicles(); ++i) {
    const VehicleSeries& v = result.vehicles[i];
    double lhs = 0.0;
    double du_max = 0.0;
    for (std::size_t k = 0; k < v.command.size(); ++k) {
      lhs = std::max(lhs, std::abs(v.accel[k] - v.command[k]));
      if (k + 1 < v.command.size()) {
        du_max = std::max(du_max, std::abs(v.command[k + 1] - v.command[k]) / result.dt);
      }
    }
    const double r0 = std::abs(v.accel[0] - v.command[0]);
    out.push_back(MakeBoundReport("small_lag", i, lhs, params.tau_a * du_max + r0));
  }
  return out;
}

std::vector<ConvergenceReport> CheckOvrvConvergence(const RunResult& result,
                                                    double v_star, double tol_e,
                                                    double tol_v, double window,
                                                    const ControlParams& params) {
  RequireSamples(result, 1, "convergence check");
  const double t_end = result.times.back();
  if (!(window >= 0.0) || window > t_end - result.times.front() + 1e-9) {
    throw std::invalid_argument("convergence window longer than the run");
  }
  const double t_start = t_end - window;
  std::size_t k0 = 0;
  while (k0 < result.times.size() && result.times[k0] < t_start - 1e-9 * result.dt) ++k0;

  const auto& leader_speed = result.vehicles[0].speed;
  const auto [lo, hi] = std::minmax_element(leader_speed.begin() + k0, leader_speed.end());
  if (*hi - *lo > tol_v) {
    throw std::invalid_argument("leader speed not constant over the window");
  }

  const double s_target = params.standstill_gap + params.time_gap * v_star;
  std::vector<ConvergenceReport> out;
  for (int i = 1; i < result.n_vehicles(); ++i) {
    const VehicleSeries& v = result.vehicles[i];
    const VehicleSeries& p = result.vehicles[i - 1];
    ConvergenceReport r;
    r.vehicle = i;
    for (std::size_t k = k0; k < result.times.size(); ++k) {
      r.max_abs_error = std::max(r.max_abs_error, std::abs(v.spacing_error[k]));
      r.max_abs_rel_speed = std::max(r.max_abs_rel_speed, std::abs(p.speed[k] - v.speed[k]));
    }
    r.final_spacing = v.spacing.back();
    r.converged = r.max_abs_error < tol_e && r.max_abs_rel_speed < tol_v &&
                  std::abs(r.final_spacing - s_target) < tol_e;
    out.push_back(r);
  }
  return out;
}

BoundReport CheckLeaderJerk(const RunResult& result, double dv_cmd,
                            const ControlParams& params) {
  RequireSamples(result, 2, "leader jerk check");
  const VehicleSeries& lead = result.vehicles[0];
  const double lhs = MaxAbs(Derivative(lead.accel, result.dt));
  const double rhs = std::abs(dv_cmd) / (params.tau_a * params.t_lead);
  bool clipped = false;
  for (double u : lead.command) {
    if (u >= params.u_max || u <= params.u_min) clipped = true;
  }
  return MakeBoundReport("leader_jerk", 0, lhs, rhs, !clipped);
}

double C2Factor(double zeta) {
  if (!(zeta > 0.0)) throw std::domain_error("C2 factor needs zeta > 0");
  if (zeta >= 1.0) return 1.0;
  return 1.0 / (zeta * std::sqrt(1.0 - zeta * zeta));
}

std::vector<BoundReport> CheckSoftHierarchy(const RunResult& result,
                                            const ControlParams& params) {
  RequireSamples(result, 3, "soft hierarchy check");
  const PidGains g = GainsOf(params);
  const double a1 = params.time_gap * g.kp;
  const double a0 = params.time_gap * g.ki;
  const double zeta = a1 / (2.0 * std::sqrt(a0));
  const double gain = C2Factor(zeta) / a0;

  std::vector<BoundReport> out;
  for (int i = 1; i < result.n_vehicles(); ++i) {
    const VehicleSeries& v = result.vehicles[i];
    std::vector<double> r(v.accel.size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = v.accel[k] - v.command[k];
    const double forcing = params.time_gap * MaxAbs(Derivative(r, result.dt));
    out.push_back(MakeBoundReport("soft_hierarchy", i, MaxAbs(v.spacing_error),
                                  gain * forcing));
  }
  return out;
}

std::vector<PairStability> CheckStringStability(const RunResult& result) {
  std::vector<double> sup(result.n_vehicles(), 0.0);
  for (int i = 1; i < result.n_vehicles(); ++i) {
    const auto& v = result.vehicles[i].speed;
    const auto& p = result.vehicles[i - 1].speed;
    for (std::size_t k = 0; k < v.size(); ++k) sup[i] = std::max(sup[i], std::abs(p[k] - v[k]));
  }
  std::vector<PairStability> out;
  for (int i = 2; i < result.n_vehicles(); ++i) {
    out.push_back({i, sup[i], sup[i - 1], sup[i] <= sup[i - 1] + 1e-6});
  }
  return out;
}

SecondOrderFit FitSecondOrder(std::span<const double> e, double dt) {
  if (e.size() < 3 || !(dt > 0.0)) {
    throw std::domain_error("second-order fit needs three samples and dt > 0");
  }
  // Normal equations for [e' e] [a1 a0]^T = -e''.
  double s11 = 0.0, s12 = 0.0, s22 = 0.0, r1 = 0.0, r2 = 0.0;
  for (std::size_t k = 1; k + 1 < e.size(); ++k) {
    const double d1 = (e[k + 1] - e[k - 1]) / (2.0 * dt);
    const double d2 = (e[k + 1] - 2.0 * e[k] + e[k - 1]) / (dt * dt);
    s11 += d1 * d1;
    s12 += d1 * e[k];
    s22 += e[k] * e[k];
    r1 -= d1 * d2;
    r2 -= e[k] * d2;
  }
  const double det = s11 * s22 - s12 * s12;
  if (!(std::abs(det) > 1e-12 * std::max(s11 * s22, 1e-300))) {
    throw std::domain_error("second-order fit: degenerate series");
  }
  SecondOrderFit fit;
  fit.a1 = (r1 * s22 - r2 * s12) / det;
  fit.a0 = (s11 * r2 - s12 * r1) / det;
  if (!(fit.a0 > 0.0)) throw std::domain_error("second-order fit: non-positive stiffness");
  fit.omega = std::sqrt(fit.a0);
  fit.zeta = fit.a1 / (2.0 * fit.omega);
  return fit;
}

}  // namespace platoon
