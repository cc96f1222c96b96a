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

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "platoon/economics.h"
#include "platoon/model.h"

namespace platoon {

/// Scenario and output settings that the command line can also set. Unset
/// fields leave the preset (or default scenario) untouched.
struct ScenarioOverrides {
  std::optional<std::string> preset;
  std::optional<ControllerKind> controller;
  std::optional<int> n_vehicles;
  std::optional<double> v_init;
  std::optional<double> duration;
  std::optional<double> dt;
  std::optional<double> grade;
  std::optional<std::vector<LeaderEvent>> events;
};

struct OutputSettings {
  std::optional<std::string> out;
  std::optional<bool> strict;
  std::optional<unsigned> threads;
};

struct Config {
  ControlParams control;
  EnergyParams energy;
  ScenarioOverrides scenario;
  EconWeights economics;
  std::optional<std::string> profile;
  OutputSettings output;
};

/// Parse failure with the offending location.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// INI-style text: `[control]`, `[energy]`, `[scenario]`, `[economics]` and
/// `[output]` sections holding `key = value` lines. `#` and `;` start
/// comments. Absent keys keep their defaults; unknown sections or keys are
/// rejected.
Config ParseConfig(std::istream& in, const std::string& source = "<config>");
Config LoadConfig(const std::string& path);

/// Writes every parameter key. Doubles use the shortest round-trip form, so
/// ParseConfig(WriteConfig(c)) reproduces c bit for bit.
void WriteConfig(const Config& config, std::ostream& out);

/// `10:25, 20:hold` style event list.
std::vector<LeaderEvent> ParseEvents(const std::string& text);
std::string FormatEvents(const std::vector<LeaderEvent>& events);

/// Applies the set fields of `overrides` on top of `spec`.
ScenarioSpec ApplyOverrides(ScenarioSpec spec, const ScenarioOverrides& overrides);

}  // namespace platoon
