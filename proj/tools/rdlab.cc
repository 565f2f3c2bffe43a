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

// Command-line front end: runs the experiments listed in a scenario file and
// writes one CSV report and one text summary per experiment.
//
//   rdlab run scenarios/m2.scn --experiments nfl,prop2 --out-dir out
//   rdlab print scenarios/m2.scn

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rdlab/runner.h"
#include "rdlab/scenario.h"

int main(int argc, char** argv) {
  CLI::App app{"Planner-reward decomposition laboratory"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::vector<std::string> experiments;
  int budget = 0;
  std::string lang_config, out_dir;
  unsigned long long seed = 0;
  size_t max_enum = 0;

  CLI::App* run = app.add_subcommand("run", "Run a scenario's experiments");
  run->add_option("scenario", scenario_path, "Scenario file")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--experiments", experiments,
                  "Comma-separated subset of nfl,prop2,prop3,posterior,"
                  "override,alice")
      ->delimiter(',')
      ->check(CLI::IsMember(rdlab::KnownExperiments()));
  run->add_option("--budget", budget, "Enumeration budget B (tokens)")
      ->check(CLI::Range(1, 64));
  run->add_option("--lang-config", lang_config,
                  "File with a language: section")
      ->check(CLI::ExistingFile);
  run->add_option("--out-dir", out_dir,
                  std::string("Report directory (default: scenario output "
                              "dir, then $") +
                      rdlab::kOutDirEnv + ", then rdlab_out)");
  run->add_option("--seed", seed, "Seed for random-instance sweeps");
  run->add_option("--max-enum", max_enum, "Cap on programs per enumeration")
      ->check(CLI::PositiveNumber);

  CLI::App* print = app.add_subcommand("print", "Print a scenario canonically");
  print->add_option("scenario", scenario_path, "Scenario file")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rdlab::kExitParse;
  }

  if (*print) {
    try {
      std::cout << rdlab::PrintScenario(rdlab::LoadScenario(scenario_path));
    } catch (const std::exception& e) {
      std::cerr << scenario_path << ": " << e.what() << "\n";
      return rdlab::kExitParse;
    }
    return 0;
  }

  rdlab::RunOptions options;
  options.experiments = experiments;
  if (run->count("--budget")) options.budget = budget;
  if (run->count("--lang-config")) options.lang_config = lang_config;
  if (run->count("--out-dir")) options.out_dir = out_dir;
  if (run->count("--seed")) options.seed = seed;
  if (run->count("--max-enum")) options.max_enum = max_enum;

  const rdlab::RunResult result = rdlab::Run(scenario_path, options);
  if (!result.error.empty()) {
    std::cerr << scenario_path << ": " << result.error << "\n";
  }
  for (size_t i = 0; i < result.reports.size(); ++i) {
    const auto& r = result.reports[i];
    std::cout << r.experiment << ": " << rdlab::VerdictName(r.verdict);
    if (i < result.files.size()) {
      std::cout << "  " << result.files[i].csv.string();
    }
    std::cout << "\n";
  }
  return result.exit_code;
}
