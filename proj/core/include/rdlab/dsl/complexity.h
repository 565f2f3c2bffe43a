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

#ifndef RDLAB_DSL_COMPLEXITY_H_
#define RDLAB_DSL_COMPLEXITY_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rdlab/dsl/enumerator.h"
#include "rdlab/dsl/interpreter.h"
#include "rdlab/planner.h"

namespace rdlab::dsl {

// Result of a shortest-program search. `k` is empty when the budget ran out
// before any program denoting the target was found; it then reads "> B".
struct ComplexityReport {
  std::optional<int> k;
  std::vector<Program> witness;
  std::optional<double> kt;  // length + log2(steps)
  std::optional<double> kT;  // length + steps
  std::optional<long> steps;
  bool exhausted = false;
  int budget = 0;

  std::string FormatK() const;
};

// Semantic identity of a planner program: its output policies on a fixed
// probe set of reward programs (all TBL tables over the literal alphabet
// when that fits under probe_cap, sign vertices and policy indicators
// otherwise, plus `WRAP POLTBL q` and `NEG WRAP POLTBL q` for every policy
// q). Two planners with the same signature are treated as the same planner.
using PlannerSignature = std::vector<int>;

// Equivalence class of programs with the same denotation. `cost` and
// `witness` belong to the first member in (cost, lexicographic) order.
struct ProgramClass {
  int cost = 0;
  Program witness;
  std::vector<size_t> members;  // indices into the program list
};

struct PairClass {
  size_t planner = 0;
  size_t reward = 0;
  friend auto operator<=>(const PairClass&, const PairClass&) = default;
};

// All enumerated programs up to cfg.budget for one environment, grouped by
// denotation. Reward programs are identified by their table over S x A,
// policy programs by their policy, planner programs by their signature.
class ComplexityIndex {
 public:
  ComplexityIndex(Environment env, LanguageConfig cfg);
  ComplexityIndex(const ComplexityIndex&) = delete;
  ComplexityIndex& operator=(const ComplexityIndex&) = delete;

  const Environment& env() const { return env_; }
  const LanguageConfig& config() const { return cfg_; }
  const Interpreter& interpreter() const { return interp_; }
  bool truncated() const { return truncated_; }

  const std::vector<Program>& rewards() const { return rewards_; }
  const std::vector<Program>& planners() const { return planners_; }
  const std::vector<Program>& policies() const { return policies_; }
  const std::vector<Program>& probes() const { return probes_; }

  const std::vector<ProgramClass>& reward_classes() const {
    return reward_classes_;
  }
  const std::vector<ProgramClass>& planner_classes() const {
    return planner_classes_;
  }
  size_t RewardClassOfProgram(size_t i) const { return reward_class_of_[i]; }
  size_t PlannerClassOfProgram(size_t i) const { return planner_class_of_[i]; }
  const RewardTable& RewardClassTable(size_t c) const {
    return reward_class_tables_[c];
  }

  std::optional<size_t> RewardClass(const RewardTable& table) const;
  std::optional<size_t> PlannerClass(const PlannerSignature& sig) const;
  std::optional<size_t> PolicyClass(const Policy& pi) const;

  PlannerSignature Signature(const Program& planner) const;
  PlannerSignature Signature(const Planner& planner) const;

  ComplexityReport K(const RewardTable& target) const;
  ComplexityReport K(const Policy& target) const;
  ComplexityReport K(const Planner& target) const;
  ComplexityReport K(const Program& planner_program) const;  // by signature
  ComplexityReport K(const Decomposition& target) const;
  std::optional<int> K(const PairClass& pair) const;

  // Kt / KT of a policy: minimum over programs q denoting it of
  // length(q) + log2(t) and length(q) + t, t = steps to run q on every state.
  ComplexityReport TimeBounded(const Policy& target) const;
  // Kt / KT of a planner-reward pair: minimum over enumerated witness pairs
  // (alpha_p, alpha_R) denoting it of l(alpha_p) + l(alpha_R) +
  // log2(t(alpha_p(alpha_R))), resp. + t.
  ComplexityReport TimeBounded(const Decomposition& target) const;
  ComplexityReport TimeBounded(const PairClass& pair) const;

  // Time-bounded cost of one concrete realization.
  struct Realization {
    int length = 0;
    long steps = 0;
    double kt = 0;
    double kT = 0;
  };
  Realization Realize(const Program& planner, const Program& reward) const;
  Realization Realize(const Program& policy) const;

 private:
  ComplexityReport FromClass(const std::optional<size_t>& c,
                             const std::vector<ProgramClass>& classes) const;

  Environment env_;
  LanguageConfig cfg_;
  Interpreter interp_;
  bool truncated_ = false;

  std::vector<Program> rewards_, planners_, policies_, probes_;
  std::vector<RewardTable> probe_tables_;

  std::vector<ProgramClass> reward_classes_, planner_classes_,
      policy_classes_;
  std::vector<RewardTable> reward_class_tables_;
  std::vector<size_t> reward_class_of_, planner_class_of_;
  std::map<std::vector<Rational>, size_t> reward_lookup_;
  std::map<PlannerSignature, size_t> planner_lookup_;
  std::map<std::vector<int>, size_t> policy_lookup_;
};

// F-complexity over a set of pairs compatible with the observed policy:
//   max over (p, R) and F in {F1..F4} of K(F(p, R)) - K(p, R).
struct FComplexityReport {
  int value = 0;
  std::array<int, 4> per_op{};  // maximum increase for F1..F4
  PairClass argmax{};
  int argmax_op = 0;
  // Some K(F_i(p, R)) fell outside the budget; value is then a lower bound.
  bool lower_bound = false;
};

FComplexityReport FComplexity(const ComplexityIndex& index,
                              std::span<const PairClass> compatible_pairs);

// K(F_i(p, R)) for a compatible pair, if it is within the budget.
std::optional<int> KOfComposite(const ComplexityIndex& index, int i,
                                const PairClass& pair);

// The pair class F_i(p, R) when all of its components were enumerated.
std::optional<PairClass> CompositeClass(const ComplexityIndex& index, int i,
                                        const PairClass& pair);

// |k1 - k2| <= c: symmetric and reflexive.
inline bool ComparableComplexity(int k1, int k2, int c) {
  return (k1 > k2 ? k1 - k2 : k2 - k1) <= c;
}

}  // namespace rdlab::dsl

#endif  // RDLAB_DSL_COMPLEXITY_H_
