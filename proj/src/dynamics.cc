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

#include "platoon/dynamics.h"

#include <algorithm>
#include <cmath>

namespace platoon {

double Spacing(const PlatoonState& state, int i, double vehicle_length) {
  const int n = static_cast<int>(state.vehicles.size());
  if (i < 1 || i >= n) {
    throw std::out_of_range("spacing: follower index " + std::to_string(i) +
                            " outside [1, " + std::to_string(n) + ")");
  }
  return state.vehicles[i - 1].position - state.vehicles[i].position -
         vehicle_length;
}

PlatoonState EquilibriumState(int n_vehicles, double v,
                              const ControlParams& p) {
  PlatoonState state;
  state.leader_cmd_speed = v;
  state.vehicles.resize(n_vehicles);
  const double pitch =
      p.standstill_gap + p.time_gap * v + p.vehicle_length;
  for (int i = 0; i < n_vehicles; ++i) {
    state.vehicles[i].position = i == 0 ? 0.0 : -pitch * i;
    state.vehicles[i].speed = v;
  }
  return state;
}

PlatoonState Step(const PlatoonState& state, std::span<const double> commands,
                  double dt, const ControlParams& p) {
  if (commands.size() != state.vehicles.size()) {
    throw std::invalid_argument("step: command count does not match platoon");
  }
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  PlatoonState next = state;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const double u = commands[i];
    if (!std::isfinite(u)) {
      throw DynamicsError("non-finite command for vehicle " + std::to_string(i),
                          static_cast<int>(i));
    }
    VehicleState& veh = next.vehicles[i];
    veh.accel += dt * (u - veh.accel) / p.tau_a;
    veh.speed = std::clamp(veh.speed + dt * veh.accel, p.v_min, p.v_max);
    veh.position += dt * veh.speed;
  }
  next.time = state.time + dt;
  return next;
}

std::vector<double> ActuatorTrackingError(const PlatoonState& state,
                                          std::span<const double> commands) {
  std::vector<double> r(state.vehicles.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = state.vehicles[i].accel - commands[i];
  }
  return r;
}

}  // namespace platoon
