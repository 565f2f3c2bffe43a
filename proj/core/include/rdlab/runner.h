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

#ifndef RDLAB_RUNNER_H_
#define RDLAB_RUNNER_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rdlab/experiments.h"
#include "rdlab/report.h"
#include "rdlab/scenario.h"

namespace rdlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitExhausted = 3;

// Name of the environment variable holding the default output directory.
inline constexpr const char* kOutDirEnv = "RDLAB_OUT_DIR";

struct RunOptions {
  std::vector<std::string> experiments;  // empty: the scenario's list
  std::optional<int> budget;
  std::optional<std::filesystem::path> lang_config;
  std::optional<std::filesystem::path> out_dir;
  std::optional<unsigned long long> seed;
  std::optional<size_t> max_enum;
};

struct RunResult {
  int exit_code = kExitOk;
  std::vector<ExperimentReport> reports;
  std::vector<ReportFiles> files;
  std::string error;  // parse or I/O failure
};

// Lazily built complexity data shared by the experiments of one run.
class Lab {
 public:
  explicit Lab(const ScenarioFile& scenario);

  const ScenarioFile& scenario() const { return scenario_; }
  const dsl::ComplexityIndex& index();
  const CompatibleSet& compatible();
  const dsl::FComplexityReport& f_complexity();

 private:
  const ScenarioFile& scenario_;
  std::unique_ptr<dsl::ComplexityIndex> index_;
  std::optional<CompatibleSet> compatible_;
  std::optional<dsl::FComplexityReport> f_;
};

ExperimentReport NflExperiment(Lab& lab);
ExperimentReport Prop2Experiment(Lab& lab);
ExperimentReport Prop3Experiment(Lab& lab);
ExperimentReport PosteriorExperiment(Lab& lab);
ExperimentReport OverrideExperiment(Lab& lab);
ExperimentReport AliceExperiment(Lab& lab);

// Applies the flags to a parsed scenario (budget, language file, seed, ...).
// Throws ScenarioParseError for a bad language file.
ScenarioFile ApplyOptions(ScenarioFile scenario, const RunOptions& options);

// Output directory: flag, then the scenario's `output:` section, then
// $RDLAB_OUT_DIR, then "rdlab_out".
std::filesystem::path ResolveOutDir(const ScenarioFile& scenario,
                                    const RunOptions& options);

// Runs every requested experiment and writes its report. Exit code: 3 if any
// experiment ran out of budget, else 1 if any verdict failed, else 0.
RunResult RunScenario(const ScenarioFile& scenario, const RunOptions& options);

// As RunScenario, after loading the file; parse errors give exit code 2.
RunResult Run(const std::filesystem::path& scenario_path,
              const RunOptions& options);

}  // namespace rdlab

#endif  // RDLAB_RUNNER_H_
