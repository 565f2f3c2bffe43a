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

#ifndef RDLAB_DSL_ENUMERATOR_H_
#define RDLAB_DSL_ENUMERATOR_H_

#include <map>
#include <utility>
#include <vector>

#include "rdlab/dsl/program.h"

namespace rdlab::dsl {

struct Enumeration {
  std::vector<Program> programs;  // (cost, lexicographic) order, no repeats
  bool truncated = false;         // max_enum was hit
};

// Bottom-up enumeration of well-typed programs by exact cost. Each cost
// stratum is generated once and memoized, so asking for a larger budget
// reuses the smaller strata.
class Enumerator {
 public:
  Enumerator(const LanguageConfig& cfg, Shape shape);

  // Every program of sort `kind` with cost <= budget.
  Enumeration Enumerate(Kind kind, int budget);

  // Token sequences of sort `kind` (numeric allowed) with exactly `cost`.
  const std::vector<std::vector<Token>>& Stratum(Kind kind, int cost);

 private:
  void LiteralTokens(Op op, std::vector<Token>& out) const;

  LanguageConfig cfg_;
  Shape shape_;
  size_t produced_ = 0;
  bool truncated_ = false;
  std::map<std::pair<Kind, int>, std::vector<std::vector<Token>>> strata_;
};

// Uses cfg.budget.
Enumeration EnumeratePrograms(const LanguageConfig& cfg, Shape shape,
                              Kind kind);

}  // namespace rdlab::dsl

#endif  // RDLAB_DSL_ENUMERATOR_H_
