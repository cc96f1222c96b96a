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

#include "platoon/economics.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "platoon/energy.h"

namespace platoon {

double RouteProfile::total_length() const {
  double total = 0.0;
  for (const auto& seg : segments) total += seg.length;
  return total;
}

RouteProfile ReadRouteProfile(std::istream& in) {
  RouteProfile profile;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream row(line);
    RouteSegment seg;
    if (!(row >> seg.length)) {
      // Whitespace-only lines are fine; anything else is a parse error.
      std::istringstream probe(line);
      std::string token;
      if (probe >> token) {
        throw std::runtime_error("route profile line " +
                                 std::to_string(line_no) +
                                 ": expected '<length_m> <grade_rad>'");
      }
      continue;
    }
    std::string extra;
    if (!(row >> seg.grade) || (row >> extra)) {
      throw std::runtime_error("route profile line " + std::to_string(line_no) +
                               ": expected '<length_m> <grade_rad>'");
    }
    if (!(seg.length > 0.0) || !std::isfinite(seg.grade)) {
      throw std::runtime_error("route profile line " + std::to_string(line_no) +
                               ": segment length must be positive");
    }
    profile.segments.push_back(seg);
  }
  if (profile.segments.empty()) {
    throw std::runtime_error("route profile has no segments");
  }
  return profile;
}

RouteProfile LoadRouteProfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open route profile '" + path + "'");
  return ReadRouteProfile(in);
}

std::vector<ParamViolation> Validate(const EconWeights& w,
                                     const ControlParams& control) {
  std::vector<ParamViolation> out;
  if (w.lambda_f < 0.0) out.push_back({"lambda_f", "lambda_f < 0"});
  if (w.lambda_t < 0.0) out.push_back({"lambda_t", "lambda_t < 0"});
  if (w.lambda_f == 0.0 && w.lambda_t == 0.0) {
    out.push_back({"lambda_f", "lambda_f and lambda_t both zero"});
  }
  if (!(w.v_min > 0.0 && w.v_min < w.v_max)) {
    out.push_back({"v_min_e", "need 0 < v_min_e < v_max_e"});
  }
  if (w.v_min < control.v_min || w.v_max > control.v_max) {
    out.push_back({"v_max_e", "economic bounds outside [v_min, v_max]"});
  }
  return out;
}

double SteadyStateFuelRate(double v, int i, double theta,
                           const ControlParams& control,
                           const EnergyParams& energy) {
  const bool leader = i == 0;
  const double gap = control.standstill_gap + control.time_gap * v;
  return FuelRate(v, 0.0, DragArea(gap, leader, energy), theta, energy);
}

double RouteCost(double v, const RouteProfile& profile,
                 const EconWeights& weights, const ControlParams& control,
                 const EnergyParams& energy, int n_vehicles) {
  if (!(v > 0.0)) throw std::domain_error("route cost needs v > 0");
  double cost = 0.0;
  for (const auto& seg : profile.segments) {
    double platoon_rate = 0.0;
    for (int i = 0; i < n_vehicles; ++i) {
      platoon_rate += SteadyStateFuelRate(v, i, seg.grade, control, energy);
    }
    cost += seg.length * (weights.lambda_f * platoon_rate + weights.lambda_t) / v;
  }
  return cost;
}

GoldenSectionResult GoldenSectionMinimize(const std::function<double(double)>& f,
                                          double lo, double hi, double tol) {
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  GoldenSectionResult out;
  auto eval = [&](double x) {
    const double fx = f(x);
    ++out.evaluations;
    if (!std::isfinite(fx)) {
      std::ostringstream os;
      os << "non-finite objective at x=" << x;
      throw std::runtime_error(os.str());
    }
    return fx;
  };

  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
    }
  }
  out.x = 0.5 * (a + b);
  out.fx = eval(out.x);
  if (fc < out.fx) {
    out.x = c;
    out.fx = fc;
  }
  if (fd < out.fx) {
    out.x = d;
    out.fx = fd;
  }
  return out;
}

double OptimizeSetPoint(const RouteProfile& profile, const EconWeights& weights,
                        const ControlParams& control, const EnergyParams& energy,
                        int n_vehicles, double v_init) {
  if (!(v_init >= weights.v_min && v_init <= weights.v_max)) {
    throw std::invalid_argument("warm start outside the speed bounds");
  }
  auto cost = [&](double v) {
    return RouteCost(v, profile, weights, control, energy, n_vehicles);
  };
  const auto golden = GoldenSectionMinimize(cost, weights.v_min, weights.v_max, 1e-3);
  double best_v = golden.x;
  double best_cost = golden.fx;
  auto consider = [&](double v) {
    const double c = cost(v);
    if (!std::isfinite(c)) throw std::runtime_error("non-finite route cost");
    if (c < best_cost) {
      best_cost = c;
      best_v = v;
    }
  };
  consider(v_init);
  constexpr double kGridStep = 0.1;
  const int n_grid =
      static_cast<int>(std::floor((weights.v_max - weights.v_min) / kGridStep));
  for (int k = 0; k <= n_grid; ++k) consider(weights.v_min + k * kGridStep);
  consider(weights.v_max);
  return best_v;
}

}  // namespace platoon
