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

#include "condgrad/cli/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "condgrad/cli/config.hpp"

namespace condgrad::cli {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_field(const std::string& text, long line_no) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError(fmt::format("trajectory line {}: cannot parse '{}'", line_no, text));
  }
  if (used != text.size()) throw ParseError(fmt::format("trajectory line {}: cannot parse '{}'", line_no, text));
  return v;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  return s.substr(i);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
  out << "# schema_version: " << kSchemaVersion << "\n";
  out << "# problem: " << trajectory.problem << "\n";
  out << "# strategy: " << describe(trajectory.strategy) << "\n";
  out << "# stop_reason: " << to_string(trajectory.stop_reason) << "\n";
  out << kTrajectoryHeader << "\n";
  for (const IterateRecord& rec : trajectory.records) {
    out << rec.k << ',' << (rec.theta ? format_double(*rec.theta) : "") << ',' << format_double(rec.primal)
        << ',' << format_double(rec.wolfe_gap) << ',' << format_double(rec.dual_value) << ','
        << format_double(rec.best_gap) << ',' << (rec.subopt ? format_double(*rec.subopt) : "") << "\n";
  }
}

Trajectory read_trajectory_csv(std::istream& in) {
  Trajectory traj;
  std::string line;
  long line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      const auto colon = body.find(':');
      if (colon == std::string::npos) continue;
      const std::string key = trim(body.substr(0, colon));
      const std::string value = trim(body.substr(colon + 1));
      try {
        if (key == "schema_version" && value != std::to_string(kSchemaVersion))
          throw ParseError("trajectory: unsupported schema_version " + value);
        if (key == "problem") traj.problem = value;
        if (key == "strategy") traj.strategy = parse_strategy(value);
        if (key == "stop_reason") traj.stop_reason = parse_stop_reason(value);
      } catch (const UsageError& e) {
        throw ParseError(fmt::format("trajectory line {}: {}", line_no, e.what()));
      }
      continue;
    }
    if (!header_seen) {
      if (line != kTrajectoryHeader)
        throw ParseError(fmt::format("trajectory line {}: expected header '{}'", line_no, kTrajectoryHeader));
      header_seen = true;
      continue;
    }
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 7) throw ParseError(fmt::format("trajectory line {}: expected 7 fields", line_no));
    IterateRecord rec;
    const double k = parse_field(f[0], line_no);
    if (k != std::floor(k) || k < 0) throw ParseError(fmt::format("trajectory line {}: bad k", line_no));
    rec.k = static_cast<long>(k);
    if (!f[1].empty()) rec.theta = parse_field(f[1], line_no);
    rec.primal = parse_field(f[2], line_no);
    rec.wolfe_gap = parse_field(f[3], line_no);
    rec.dual_value = parse_field(f[4], line_no);
    rec.best_gap = parse_field(f[5], line_no);
    if (!f[6].empty()) rec.subopt = parse_field(f[6], line_no);
    if (!traj.records.empty() && rec.k <= traj.records.back().k)
      throw ParseError(fmt::format("trajectory line {}: k must increase", line_no));
    traj.records.push_back(std::move(rec));
  }
  if (!header_seen) throw ParseError("trajectory: missing header");
  if (traj.records.empty()) throw ParseError("trajectory: no records");
  return traj;
}

Trajectory read_trajectory_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open trajectory '" + path + "'");
  return read_trajectory_csv(in);
}

void write_text_file(const std::string& path, const std::string& contents) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

nlohmann::json summary_json(const Trajectory& trajectory) {
  nlohmann::json out;
  out["schema_version"] = kSchemaVersion;
  out["problem"] = trajectory.problem;
  out["strategy"] = describe(trajectory.strategy);
  out["stop_reason"] = to_string(trajectory.stop_reason);
  out["wall_seconds"] = trajectory.wall_seconds;
  out["records"] = trajectory.records.size();
  if (!trajectory.records.empty()) {
    const IterateRecord& last = trajectory.records.back();
    out["iterations"] = last.k;
    out["final_best_gap"] = last.best_gap;
    out["final_wolfe_gap"] = last.wolfe_gap;
    out["final_primal"] = last.primal;
    out["final_subopt"] = last.subopt ? nlohmann::json(*last.subopt) : nlohmann::json(nullptr);
  }
  return out;
}

}  // namespace condgrad::cli
