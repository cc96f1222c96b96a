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

#include "platoon/energy.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace platoon {

double DragArea(double spacing, bool is_leader, const EnergyParams& p) {
  if (is_leader) return p.cd0_a;
  if (spacing < 0.0) {
    throw std::invalid_argument("drag area: negative spacing");
  }
  return p.cd0_a * (1.0 - p.alpha_foll * std::exp(-spacing / p.drag_decay));
}

double FuelRate(double speed, double accel, double drag_area, double grade,
                const EnergyParams& p) {
  const double force = p.mass * accel + p.mass * p.g * p.c_r +
                       0.5 * p.rho_air * drag_area * speed * speed +
                       p.mass * p.g * std::sin(grade);
  double tractive = std::max(0.0, speed * force);
  if (p.apply_drivetrain_efficiency) tractive /= p.drivetrain_efficiency;
  return (tractive + p.p_aux) / (p.eta_eng * p.lhv);
}

FuelAccumulator Accumulate(const FuelAccumulator& acc, double rate,
                           double speed, double dt) {
  return {acc.fuel_mass + rate * dt, acc.distance + speed * dt};
}

double FuelEconomy(std::span<const FuelAccumulator> vehicles,
                   const EnergyParams& p) {
  double fuel = 0.0;
  double distance = 0.0;
  for (const auto& v : vehicles) {
    fuel += v.fuel_mass;
    distance += v.distance;
  }
  if (!(distance > 0.0)) {
    throw std::domain_error("fuel economy undefined for zero distance");
  }
  return fuel / p.fuel_density / distance * 1e5;
}

}  // namespace platoon
