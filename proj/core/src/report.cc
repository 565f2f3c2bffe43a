// Copyright 2026 The rdlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rdlab/report.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rdlab {
namespace {

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Exact(const std::optional<Rational>& v) {
  return v ? FormatRational(*v) : "";
}

std::string Decimal(const std::optional<Rational>& v) {
  return v ? FormatDecimal(*v, 12) : "";
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kFails:
      return "fails";
    case Verdict::kExhausted:
      return "exhausted";
  }
  return "?";
}

std::string FormatCsv(const ExperimentReport& report) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const ReportRow& row : report.rows) {
    out << CsvField(report.experiment) << ',' << CsvField(report.scenario)
        << ',' << CsvField(row.item) << ','
        << (row.k ? std::to_string(*row.k) : "") << ',' << Exact(row.mass)
        << ',' << Decimal(row.mass) << ',' << Exact(row.regret) << ','
        << Decimal(row.regret) << ',' << Exact(row.margin) << ','
        << CsvField(row.verdict) << "\n";
  }
  return out.str();
}

std::string FormatSummary(const ExperimentReport& report) {
  std::ostringstream out;
  out << "experiment: " << report.experiment << "\n";
  out << "scenario: " << report.scenario << "\n";
  out << "verdict: " << VerdictName(report.verdict) << "\n";
  if (report.compatible_pairs > 0) {
    out << "compatible pairs: " << report.compatible_pairs << "\n";
  }
  for (const auto& note : report.notes) out << note << "\n";
  return out.str();
}

ReportFiles EmitReport(const ExperimentReport& report,
                       const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string());
  const std::string stem = report.scenario + "_" + report.experiment;
  ReportFiles files{dir / (stem + ".csv"), dir / (stem + ".txt")};
  WriteFile(files.csv, FormatCsv(report));
  WriteFile(files.summary, FormatSummary(report));
  return files;
}

}  // namespace rdlab
