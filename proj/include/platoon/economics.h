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

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "platoon/model.h"

namespace platoon {

struct RouteSegment {
  double length = 0.0;  // m
  double grade = 0.0;   // rad
};

struct RouteProfile {
  std::vector<RouteSegment> segments;

  double total_length() const;
};

/// Reads whitespace- or comma-separated `length grade` rows. Blank lines
/// and `#` comments are skipped. Throws std::runtime_error with the line
/// number on malformed input.
RouteProfile ReadRouteProfile(std::istream& in);
RouteProfile LoadRouteProfile(const std::string& path);

struct EconWeights {
  double lambda_f = 1.0;  // cost per kg of fuel
  double lambda_t = 0.0;  // cost per second of travel
  double v_min = 10.0;
  double v_max = 30.0;
};

std::vector<ParamViolation> Validate(const EconWeights& weights,
                                     const ControlParams& control);

/// Fuel rate of vehicle `i` cruising at `v` on grade `theta` with zero
/// acceleration, followers sitting at the time-gap spacing s0 + τ v.
double SteadyStateFuelRate(double v, int i, double theta,
                           const ControlParams& control,
                           const EnergyParams& energy);

/// Fuel-and-time cost of driving the whole profile at constant speed `v`.
double RouteCost(double v, const RouteProfile& profile,
                 const EconWeights& weights, const ControlParams& control,
                 const EnergyParams& energy, int n_vehicles);

struct GoldenSectionResult {
  double x = 0.0;
  double fx = 0.0;
  int evaluations = 0;
};

/// Golden-section minimisation of `f` on [lo, hi] until the bracket is
/// narrower than `tol`. Throws std::runtime_error on a non-finite value.
GoldenSectionResult GoldenSectionMinimize(const std::function<double(double)>& f,
                                          double lo, double hi, double tol);

/// Cruise set-point minimising RouteCost on the weight bounds. The
/// golden-section result is compared against a 0.1 m/s grid (including both
/// bounds) and the warm start, and the cheapest candidate wins.
double OptimizeSetPoint(const RouteProfile& profile, const EconWeights& weights,
                        const ControlParams& control, const EnergyParams& energy,
                        int n_vehicles, double v_init);

}  // namespace platoon
