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

#ifndef RDLAB_SCENARIO_H_
#define RDLAB_SCENARIO_H_

// Scenario files are line oriented. A section starts with an unindented
// `name:` line and holds two-space indented `key value...` lines; `#` starts
// a comment. Rationals are written exactly (`1/3`).
//
//   scenario: m2
//   environment:
//     states 2
//     actions 2
//     start 0
//     horizon 2
//     transition 0 0 1 0        # s a T(0|s,a) T(1|s,a) ...
//   policy:
//     actions 1 0
//   language:                   # optional; defaults to config v1
//     budget 8
//     cost TBL 1
//   experiments:
//     run nfl prop2 prop3 posterior
//     seed 1
//     sweep 20
//   override:                   # required by the override experiment
//     epsilon 1/10
//     threshold 0
//     human_reward 1/2 21/40 1/2 21/40
//     candidate one 1 1 1 1
//   output:
//     dir out

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rdlab/dsl/language.h"
#include "rdlab/mdp.h"
#include "rdlab/override.h"

namespace rdlab {

class ScenarioParseError : public std::runtime_error {
 public:
  ScenarioParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline const std::vector<std::string>& KnownExperiments() {
  static const std::vector<std::string> kAll = {
      "nfl", "prop2", "prop3", "posterior", "override", "alice"};
  return kAll;
}

struct OverrideSection {
  Rational epsilon = 0;
  Rational threshold = 0;
  bool vertex_sweep = false;
  RewardTable human_reward;
  std::vector<NamedReward> candidates;
};

struct ScenarioFile {
  std::string id;
  Mdpr environment;
  Policy policy;
  dsl::LanguageConfig language;
  std::vector<std::string> experiments;
  unsigned long long seed = 1;
  int sweep = 20;  // random instances in the nfl sweep
  std::optional<OverrideSection> override_section;
  std::string out_dir;  // empty: decided by the caller

  OverrideScenario Override() const;  // throws if the section is missing
};

ScenarioFile ParseScenario(std::string_view text);
ScenarioFile LoadScenario(const std::filesystem::path& path);
std::string PrintScenario(const ScenarioFile& scenario);

// A file holding only a `language:` section.
dsl::LanguageConfig ParseLanguageConfig(std::string_view text);
dsl::LanguageConfig LoadLanguageConfig(const std::filesystem::path& path);

}  // namespace rdlab

#endif  // RDLAB_SCENARIO_H_
