// Copyright 2026 The condgrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Trajectory CSV and JSON output.
//
// Trajectory files start with '#' metadata lines (schema_version, problem,
// strategy, stop_reason) followed by the header
//   k,theta,primal,wolfe_gap,dual_value,best_gap,subopt
// theta is empty on the terminal row and subopt when the optimum is unknown.

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "condgrad/solver.hpp"

namespace condgrad::cli {

inline constexpr const char* kTrajectoryHeader = "k,theta,primal,wolfe_gap,dual_value,best_gap,subopt";

/// 17 significant digits; "inf", "-inf" and "nan" for non-finite values.
std::string format_double(double v);

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);
/// Throws ParseError on malformed input. Records carry no iterates.
Trajectory read_trajectory_csv(std::istream& in);
Trajectory read_trajectory_csv_file(const std::string& path);

/// Creates parent directories as needed.
void write_text_file(const std::string& path, const std::string& contents);
void write_json_file(const std::string& path, const nlohmann::json& j);

nlohmann::json summary_json(const Trajectory& trajectory);

}  // namespace condgrad::cli
