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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "platoon/model.h"

namespace platoon {

enum class Preset { kC1N2, kC1N8, kC2N4 };

/// "c1-n2", "c1-n8", "c2-n4" (case-insensitive, '_' accepted for '-').
Preset ParsePreset(const std::string& name);
std::string ToString(Preset preset);

/// Leader speed-change (C1) and emergency-brake (C2) experiments. The
/// controller defaults to PID; callers switch it for the ablations.
ScenarioSpec BuildPreset(Preset preset);

/// Failure inside a closed-loop run, tagged with the step where it occurred.
class SimulationError : public std::runtime_error {
 public:
  SimulationError(const std::string& what, long step, int vehicle)
      : std::runtime_error(what), step_(step), vehicle_(vehicle) {}
  long step() const { return step_; }
  int vehicle() const { return vehicle_; }

 private:
  long step_;
  int vehicle_;
};

/// Runs the closed loop. Each step resolves leader events, advances the
/// leader servo, computes follower commands in index order (nominal law,
/// CBF constraint using the predecessor's command, projection), integrates
/// the dynamics and accumulates fuel. Samples are recorded at t = k dt for
/// k = 0..round(duration/dt).
RunResult Run(const ScenarioSpec& spec, const ControlParams& control,
              const EnergyParams& energy);

/// Recomputes the summary metrics from the recorded series. Ties go to the
/// earliest time, then the lowest vehicle index.
RunMetrics ComputeMetrics(const RunResult& result, const EnergyParams& energy);

struct SweepOutcome {
  std::optional<RunResult> result;
  std::string error;
};

/// Independent runs on up to `threads` workers (0 = hardware concurrency).
/// Output order matches input order and every result is identical to a
/// sequential run. Failures are reported per entry.
std::vector<SweepOutcome> Sweep(const std::vector<ScenarioSpec>& specs,
                                const ControlParams& control,
                                const EnergyParams& energy,
                                unsigned threads = 0);

}  // namespace platoon
