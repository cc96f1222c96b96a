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

#include "platoon/model.h"

namespace platoon {

/// Running fuel mass (kg) and distance (m) of one vehicle.
struct FuelAccumulator {
  double fuel_mass = 0.0;
  double distance = 0.0;
};

/// Effective drag area C_dA(s) = C_d0A (1 - α e^{-s/s_0}). The leader gets
/// no drafting benefit. Throws std::invalid_argument for s < 0.
double DragArea(double spacing, bool is_leader, const EnergyParams& p);

/// Instantaneous fuel mass flow (kg/s) from the tractive-power balance.
/// Negative wheel power is clamped to zero: braking burns idle fuel only.
double FuelRate(double speed, double accel, double drag_area, double grade,
                const EnergyParams& p);

/// Rectangle-rule update over one step.
FuelAccumulator Accumulate(const FuelAccumulator& acc, double rate,
                           double speed, double dt);

/// Platoon fuel economy in L/100 km: total litres over total vehicle-km.
double FuelEconomy(std::span<const FuelAccumulator> vehicles,
                   const EnergyParams& p);

}  // namespace platoon
