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

#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include "platoon/analysis.h"
#include "platoon/model.h"

namespace platoon {

/// Shortest round-trip decimal form, independent of the global locale.
std::string FormatDouble(double x);

/// One row per (time, vehicle). Leader spacing columns are left empty.
void WriteTrajectoryCsv(const RunResult& result, std::ostream& out);

/// Flat `key=value` summary of the run metrics.
void WriteMetrics(const RunResult& result, std::ostream& out);

/// Flat `name[vehicle].field=value` lines, same format as the metrics.
void WriteBoundReports(std::span<const BoundReport> reports, std::ostream& out);

/// Writes speed.csv and spacing_error.csv (time column plus one column per
/// vehicle) into `dir`. Throws on an empty result or an IO failure.
void WritePlotData(const RunResult& result, const std::filesystem::path& dir);

/// Writes `content` to `path`, throwing std::runtime_error on failure.
void WriteFile(const std::filesystem::path& path, const std::string& content);

}  // namespace platoon
