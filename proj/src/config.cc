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

#include "platoon/config.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <variant>

#include "platoon/report.h"

namespace platoon {
namespace {

template <typename T>
struct Field {
  const char* key;
  std::variant<double T::*, bool T::*> member;
};

const std::vector<Field<ControlParams>>& ControlFields() {
  static const std::vector<Field<ControlParams>> fields = {
      {"time_gap", &ControlParams::time_gap},
      {"standstill_gap", &ControlParams::standstill_gap},
      {"vehicle_length", &ControlParams::vehicle_length},
      {"tau_min", &ControlParams::tau_min},
      {"b_max", &ControlParams::b_max},
      {"cbf_k1", &ControlParams::cbf_k1},
      {"cbf_k2", &ControlParams::cbf_k2},
      {"kp", &ControlParams::kp},
      {"ki", &ControlParams::ki},
      {"kd", &ControlParams::kd},
      {"zeta", &ControlParams::zeta},
      {"omega_n", &ControlParams::omega_n},
      {"tau_a", &ControlParams::tau_a},
      {"t_lead", &ControlParams::t_lead},
      {"leader_jerk_limit", &ControlParams::leader_jerk_limit},
      {"u_min", &ControlParams::u_min},
      {"u_max", &ControlParams::u_max},
      {"v_min", &ControlParams::v_min},
      {"v_max", &ControlParams::v_max},
      {"baseline_ks", &ControlParams::baseline_ks},
      {"baseline_kv", &ControlParams::baseline_kv},
      {"tuning_guard", &ControlParams::tuning_guard},
      {"strict_overdamped", &ControlParams::strict_overdamped},
      {"cbf_previous_step_command", &ControlParams::cbf_previous_step_command},
  };
  return fields;
}

const std::vector<Field<EnergyParams>>& EnergyFields() {
  static const std::vector<Field<EnergyParams>> fields = {
      {"mass", &EnergyParams::mass},
      {"g", &EnergyParams::g},
      {"c_r", &EnergyParams::c_r},
      {"rho_air", &EnergyParams::rho_air},
      {"cd0_a", &EnergyParams::cd0_a},
      {"alpha_lead", &EnergyParams::alpha_lead},
      {"alpha_foll", &EnergyParams::alpha_foll},
      {"drag_decay", &EnergyParams::drag_decay},
      {"p_aux", &EnergyParams::p_aux},
      {"eta_eng", &EnergyParams::eta_eng},
      {"lhv", &EnergyParams::lhv},
      {"fuel_density", &EnergyParams::fuel_density},
      {"drivetrain_efficiency", &EnergyParams::drivetrain_efficiency},
      {"apply_drivetrain_efficiency", &EnergyParams::apply_drivetrain_efficiency},
  };
  return fields;
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<double> ToDouble(const std::string& text) {
  double x = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, x);
  if (res.ec != std::errc() || res.ptr != end) return std::nullopt;
  return x;
}

std::optional<bool> ToBool(const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  return std::nullopt;
}

template <typename T>
bool AssignField(const std::vector<Field<T>>& fields, T& target,
                 const std::string& key, const std::string& value,
                 const std::string& source, int line) {
  for (const auto& f : fields) {
    if (key != f.key) continue;
    if (const auto* dm = std::get_if<double T::*>(&f.member)) {
      const auto x = ToDouble(value);
      if (!x) throw ConfigError(source, line, "'" + key + "' expects a number");
      target.*(*dm) = *x;
    } else {
      const auto b = ToBool(value);
      if (!b) throw ConfigError(source, line, "'" + key + "' expects true or false");
      target.*std::get<bool T::*>(f.member) = *b;
    }
    return true;
  }
  return false;
}

template <typename T>
void WriteFields(const std::vector<Field<T>>& fields, const T& source,
                 std::ostream& out) {
  for (const auto& f : fields) {
    out << f.key << " = ";
    if (const auto* dm = std::get_if<double T::*>(&f.member)) {
      out << FormatDouble(source.*(*dm));
    } else {
      out << (source.*std::get<bool T::*>(f.member) ? "true" : "false");
    }
    out << '\n';
  }
}

double NeedDouble(const std::string& key, const std::string& value,
                  const std::string& source, int line) {
  const auto x = ToDouble(value);
  if (!x) throw ConfigError(source, line, "'" + key + "' expects a number");
  return *x;
}

void AssignScenario(Config& c, const std::string& key, const std::string& value,
                    const std::string& source, int line) {
  ScenarioOverrides& s = c.scenario;
  try {
    if (key == "preset") {
      s.preset = value;
    } else if (key == "controller") {
      s.controller = ParseControllerKind(value);
    } else if (key == "n_vehicles") {
      const double n = NeedDouble(key, value, source, line);
      if (n != static_cast<int>(n)) throw ConfigError(source, line, "'n_vehicles' expects an integer");
      s.n_vehicles = static_cast<int>(n);
    } else if (key == "v_init") {
      s.v_init = NeedDouble(key, value, source, line);
    } else if (key == "duration") {
      s.duration = NeedDouble(key, value, source, line);
    } else if (key == "dt") {
      s.dt = NeedDouble(key, value, source, line);
    } else if (key == "grade") {
      s.grade = NeedDouble(key, value, source, line);
    } else if (key == "events") {
      s.events = ParseEvents(value);
    } else {
      throw ConfigError(source, line, "unknown key '" + key + "' in [scenario]");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& err) {
    throw ConfigError(source, line, err.what());
  }
}

void AssignEconomics(Config& c, const std::string& key, const std::string& value,
                     const std::string& source, int line) {
  if (key == "profile") {
    c.profile = value;
  } else if (key == "lambda_f") {
    c.economics.lambda_f = NeedDouble(key, value, source, line);
  } else if (key == "lambda_t") {
    c.economics.lambda_t = NeedDouble(key, value, source, line);
  } else if (key == "v_min_e") {
    c.economics.v_min = NeedDouble(key, value, source, line);
  } else if (key == "v_max_e") {
    c.economics.v_max = NeedDouble(key, value, source, line);
  } else {
    throw ConfigError(source, line, "unknown key '" + key + "' in [economics]");
  }
}

void AssignOutput(Config& c, const std::string& key, const std::string& value,
                  const std::string& source, int line) {
  if (key == "out") {
    c.output.out = value;
  } else if (key == "strict") {
    const auto b = ToBool(value);
    if (!b) throw ConfigError(source, line, "'strict' expects true or false");
    c.output.strict = *b;
  } else if (key == "threads") {
    const double n = NeedDouble(key, value, source, line);
    if (n < 0 || n != static_cast<unsigned>(n)) {
      throw ConfigError(source, line, "'threads' expects a non-negative integer");
    }
    c.output.threads = static_cast<unsigned>(n);
  } else {
    throw ConfigError(source, line, "unknown key '" + key + "' in [output]");
  }
}

}  // namespace

std::vector<LeaderEvent> ParseEvents(const std::string& text) {
  std::vector<LeaderEvent> events;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("event '" + item + "' is not 'time:target'");
    }
    LeaderEvent ev;
    const auto t = ToDouble(Trim(item.substr(0, colon)));
    if (!t) throw std::invalid_argument("event '" + item + "' has a bad time");
    ev.time = *t;
    const std::string target = Trim(item.substr(colon + 1));
    if (target != "hold") {
      const auto v = ToDouble(target);
      if (!v) throw std::invalid_argument("event '" + item + "' has a bad target");
      ev.target_speed = *v;
    }
    events.push_back(ev);
  }
  return events;
}

std::string FormatEvents(const std::vector<LeaderEvent>& events) {
  std::string out;
  for (const auto& ev : events) {
    if (!out.empty()) out += ", ";
    out += FormatDouble(ev.time) + ":" +
           (ev.target_speed ? FormatDouble(*ev.target_speed) : std::string("hold"));
  }
  return out;
}

Config ParseConfig(std::istream& in, const std::string& source) {
  Config c;
  std::string section;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto comment = raw.find_first_of("#;");
    std::string text = Trim(comment == std::string::npos ? raw : raw.substr(0, comment));
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw ConfigError(source, line, "malformed section header");
      section = Trim(text.substr(1, text.size() - 2));
      static const char* kSections[] = {"control", "energy", "scenario", "economics", "output"};
      if (std::none_of(std::begin(kSections), std::end(kSections),
                       [&](const char* s) { return section == s; })) {
        throw ConfigError(source, line, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(source, line, "expected 'key = value'");
    const std::string key = Trim(text.substr(0, eq));
    const std::string value = Trim(text.substr(eq + 1));
    if (key.empty()) throw ConfigError(source, line, "empty key");
    if (section.empty()) throw ConfigError(source, line, "key '" + key + "' outside a section");

    if (section == "control") {
      if (!AssignField(ControlFields(), c.control, key, value, source, line)) {
        throw ConfigError(source, line, "unknown key '" + key + "' in [control]");
      }
    } else if (section == "energy") {
      if (!AssignField(EnergyFields(), c.energy, key, value, source, line)) {
        throw ConfigError(source, line, "unknown key '" + key + "' in [energy]");
      }
    } else if (section == "scenario") {
      AssignScenario(c, key, value, source, line);
    } else if (section == "economics") {
      AssignEconomics(c, key, value, source, line);
    } else {
      AssignOutput(c, key, value, source, line);
    }
  }
  return c;
}

Config LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  return ParseConfig(in, path);
}

void WriteConfig(const Config& config, std::ostream& out) {
  out << "[control]\n";
  WriteFields(ControlFields(), config.control, out);
  out << "\n[energy]\n";
  WriteFields(EnergyFields(), config.energy, out);

  const ScenarioOverrides& s = config.scenario;
  out << "\n[scenario]\n";
  if (s.preset) out << "preset = " << *s.preset << '\n';
  if (s.controller) out << "controller = " << ToString(*s.controller) << '\n';
  if (s.n_vehicles) out << "n_vehicles = " << *s.n_vehicles << '\n';
  if (s.v_init) out << "v_init = " << FormatDouble(*s.v_init) << '\n';
  if (s.duration) out << "duration = " << FormatDouble(*s.duration) << '\n';
  if (s.dt) out << "dt = " << FormatDouble(*s.dt) << '\n';
  if (s.grade) out << "grade = " << FormatDouble(*s.grade) << '\n';
  if (s.events) out << "events = " << FormatEvents(*s.events) << '\n';

  out << "\n[economics]\n";
  if (config.profile) out << "profile = " << *config.profile << '\n';
  out << "lambda_f = " << FormatDouble(config.economics.lambda_f) << '\n'
      << "lambda_t = " << FormatDouble(config.economics.lambda_t) << '\n'
      << "v_min_e = " << FormatDouble(config.economics.v_min) << '\n'
      << "v_max_e = " << FormatDouble(config.economics.v_max) << '\n';

  const OutputSettings& o = config.output;
  if (o.out || o.strict || o.threads) {
    out << "\n[output]\n";
    if (o.out) out << "out = " << *o.out << '\n';
    if (o.strict) out << "strict = " << (*o.strict ? "true" : "false") << '\n';
    if (o.threads) out << "threads = " << *o.threads << '\n';
  }
}

ScenarioSpec ApplyOverrides(ScenarioSpec spec, const ScenarioOverrides& o) {
  if (o.controller) spec.controller = *o.controller;
  if (o.n_vehicles) spec.n_vehicles = *o.n_vehicles;
  if (o.v_init) spec.v_init = *o.v_init;
  if (o.duration) spec.duration = *o.duration;
  if (o.dt) spec.dt = *o.dt;
  if (o.grade) spec.grade = *o.grade;
  if (o.events) spec.events = *o.events;
  return spec;
}

}  // namespace platoon
