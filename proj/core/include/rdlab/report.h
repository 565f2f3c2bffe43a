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

#ifndef RDLAB_REPORT_H_
#define RDLAB_REPORT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rdlab/rational.h"

namespace rdlab {

struct ReportRow {
  std::string item;
  std::optional<int> k;
  std::optional<Rational> mass;
  std::optional<Rational> regret;
  std::optional<Rational> margin;
  std::string verdict;
};

enum class Verdict {
  kHolds,
  kFails,
  kExhausted,  // the budget ran out before the claim could be decided
};

struct ExperimentReport {
  std::string experiment;
  std::string scenario;
  size_t compatible_pairs = 0;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;  // summary lines
  Verdict verdict = Verdict::kHolds;
};

std::string_view VerdictName(Verdict v);

// CSV columns:
//   experiment,scenario,item,k,mass,mass_decimal,regret,regret_decimal,
//   margin,verdict
// Rationals are written as n/d with a 12-digit decimal companion column.
inline constexpr std::string_view kCsvHeader =
    "experiment,scenario,item,k,mass,mass_decimal,regret,regret_decimal,"
    "margin,verdict";

std::string FormatCsv(const ExperimentReport& report);
std::string FormatSummary(const ExperimentReport& report);

struct ReportFiles {
  std::filesystem::path csv;
  std::filesystem::path summary;
};

// Writes <dir>/<scenario>_<experiment>.csv and .txt. Throws
// std::runtime_error when the files cannot be written.
ReportFiles EmitReport(const ExperimentReport& report,
                       const std::filesystem::path& dir);

}  // namespace rdlab

#endif  // RDLAB_REPORT_H_
