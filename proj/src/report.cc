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

#include "platoon/report.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace platoon {
namespace {

void Cell(std::ostream& out, double x) {
  if (!std::isnan(x)) out << FormatDouble(x);
}

}  // namespace

std::string FormatDouble(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void WriteTrajectoryCsv(const RunResult& result, std::ostream& out) {
  out << "time,vehicle,position,speed,accel,command,spacing,spacing_error,"
         "barrier_value,fuel_mass,distance\n";
  for (std::size_t k = 0; k < result.n_samples(); ++k) {
    for (int i = 0; i < result.n_vehicles(); ++i) {
      const VehicleSeries& v = result.vehicles[i];
      out << FormatDouble(result.times[k]) << ',' << i << ',';
      Cell(out, v.position[k]);
      out << ',';
      Cell(out, v.speed[k]);
      out << ',';
      Cell(out, v.accel[k]);
      out << ',';
      Cell(out, v.command[k]);
      out << ',';
      Cell(out, v.spacing[k]);
      out << ',';
      Cell(out, v.spacing_error[k]);
      out << ',';
      Cell(out, v.barrier_value[k]);
      out << ',';
      Cell(out, v.fuel_mass[k]);
      out << ',';
      Cell(out, v.distance[k]);
      out << '\n';
    }
  }
}

void WriteMetrics(const RunResult& result, std::ostream& out) {
  const RunMetrics& m = result.metrics;
  out << "n_vehicles=" << result.n_vehicles() << '\n'
      << "n_samples=" << result.n_samples() << '\n'
      << "dt=" << FormatDouble(result.dt) << '\n'
      << "h_min=" << FormatDouble(m.h_min) << '\n'
      << "h_min_time=" << FormatDouble(m.h_min_time) << '\n'
      << "h_min_vehicle=" << m.h_min_vehicle << '\n'
      << "e_sup=" << FormatDouble(m.e_sup) << '\n'
      << "e_sup_time=" << FormatDouble(m.e_sup_time) << '\n'
      << "e_sup_vehicle=" << m.e_sup_vehicle << '\n'
      << "fuel_l_per_100km=" << FormatDouble(m.fuel_per_100km) << '\n'
      << "infeasibility_events=" << result.infeasibility_events.size() << '\n';
  if (!result.infeasibility_events.empty()) {
    const auto& first = result.infeasibility_events.front();
    out << "first_infeasibility_time=" << FormatDouble(first.time) << '\n'
        << "first_infeasibility_vehicle=" << first.vehicle << '\n';
  }
}

void WriteBoundReports(std::span<const BoundReport> reports, std::ostream& out) {
  for (const auto& r : reports) {
    std::string key = r.name;
    if (r.vehicle >= 0) key += "[" + std::to_string(r.vehicle) + "]";
    out << key << ".lhs=" << FormatDouble(r.lhs) << '\n'
        << key << ".rhs=" << FormatDouble(r.rhs) << '\n'
        << key << ".margin=" << FormatDouble(r.margin) << '\n'
        << key << ".satisfied=" << (r.satisfied ? "true" : "false") << '\n'
        << key << ".applicable=" << (r.applicable ? "true" : "false") << '\n';
  }
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << content;
  out.close();
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void WritePlotData(const RunResult& result, const std::filesystem::path& dir) {
  if (result.n_samples() == 0 || result.n_vehicles() == 0) {
    throw std::invalid_argument("plot data needs a non-empty run");
  }
  auto table = [&](auto column) {
    std::ostringstream os;
    os << "time";
    for (int i = 0; i < result.n_vehicles(); ++i) os << ",v" << i;
    os << '\n';
    for (std::size_t k = 0; k < result.n_samples(); ++k) {
      os << FormatDouble(result.times[k]);
      for (int i = 0; i < result.n_vehicles(); ++i) {
        os << ',';
        Cell(os, column(result.vehicles[i])[k]);
      }
      os << '\n';
    }
    return os.str();
  };
  WriteFile(dir / "speed.csv",
            table([](const VehicleSeries& v) -> const auto& { return v.speed; }));
  WriteFile(dir / "spacing_error.csv",
            table([](const VehicleSeries& v) -> const auto& { return v.spacing_error; }));
}

}  // namespace platoon
