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
#include <stdexcept>
#include <string>
#include <vector>

#include "platoon/model.h"

namespace platoon {

/// Snapshot of the whole platoon. Index 0 is the leader.
struct PlatoonState {
  double time = 0.0;
  std::vector<VehicleState> vehicles;
  double leader_cmd_speed = 0.0;
};

/// Raised when the integrator is fed a non-finite command.
class DynamicsError : public std::runtime_error {
 public:
  DynamicsError(const std::string& what, int vehicle)
      : std::runtime_error(what), vehicle_(vehicle) {}
  int vehicle() const { return vehicle_; }

 private:
  int vehicle_;
};

/// Bumper-to-bumper gap p_{i-1} - p_i - L behind the predecessor of
/// follower `i`. Throws std::out_of_range for the leader or i >= n.
double Spacing(const PlatoonState& state, int i, double vehicle_length);

/// Equilibrium platoon at speed `v`: leader at x = 0, followers spaced at
/// s0 + τ v, zero acceleration and integral state.
PlatoonState EquilibriumState(int n_vehicles, double v, const ControlParams& p);

/// Explicit Euler step with first-order actuation lag. Per vehicle:
/// a += dt (u - a)/τ_a, then v = clamp(v + dt a), then p += dt v.
PlatoonState Step(const PlatoonState& state, std::span<const double> commands,
                  double dt, const ControlParams& p);

/// r_i = a_i - u_i for every vehicle.
std::vector<double> ActuatorTrackingError(const PlatoonState& state,
                                          std::span<const double> commands);

}  // namespace platoon
