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

#ifndef RDLAB_EXPERIMENTS_H_
#define RDLAB_EXPERIMENTS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdlab/dsl/complexity.h"

namespace rdlab {

// One enumerated program pair whose planner, run on the reward program,
// reproduces the observed policy. `length` is the pair's own program cost;
// `k` is the complexity of its denotation (K(p) + K(R)).
struct CompatiblePair {
  dsl::Program planner;
  dsl::Program reward;
  int length = 0;
  int k = 0;
  dsl::PairClass cls;
};

struct CompatibleSet {
  std::vector<CompatiblePair> pairs;  // (length, lexicographic) order
  // Distinct denotations, ordered by (K, witness text).
  std::vector<dsl::PairClass> classes;
  std::map<dsl::PairClass, size_t> first_pair;  // class -> index into pairs
  bool exhausted = false;
};

// Every enumerated program pair with total cost <= cfg.budget that is
// compatible with the observed policy.
CompatibleSet CompatiblePairs(const dsl::ComplexityIndex& index);

std::string PairName(const dsl::ComplexityIndex& index,
                     const dsl::PairClass& pair);

// The three degenerate decompositions of the observed policy, as semantic
// objects: (indifferent, 0), (greedy, R_pi), (anti-greedy, -R_pi).
std::vector<std::pair<std::string, Decomposition>> DegeneratePairs(
    const dsl::Environment& env);

struct DegenerateRow {
  std::string name;
  std::optional<dsl::PairClass> cls;
  std::optional<int> k;       // empty when outside the budget
  std::optional<int> margin;  // k - k_min
  bool holds = false;
};

struct Prop2Verdict {
  int k_min = 0;
  int c = 0;
  std::vector<DegenerateRow> rows;
  bool holds = false;
  bool exhausted = false;
};

// Each degenerate pair is within c of the least complex compatible pair.
Prop2Verdict CheckProp2(const dsl::ComplexityIndex& index,
                        const CompatibleSet& set, int c);

struct Prop3Row {
  dsl::PairClass pair;
  int k = 0;
  std::optional<int> k_negated;  // K(-p, -R)
  bool holds = false;
};

struct Prop3Verdict {
  int c = 0;
  std::vector<Prop3Row> rows;
  int worst_gap = 0;
  bool holds = false;
  bool exhausted = false;
};

// Every compatible pair is within c of its negation (-p, -R).
Prop3Verdict CheckProp3(const dsl::ComplexityIndex& index,
                        const CompatibleSet& set, int c);

struct PosteriorRow {
  std::string name;
  int k = 0;
  Rational mass;
};

// mass_i = 2^-K_i / sum_j 2^-K_j; ranked by mass, ties kept in input order.
// Throws std::invalid_argument on an empty list.
std::vector<PosteriorRow> SimplicityPosterior(
    const std::vector<std::pair<std::string, int>>& pairs);

std::vector<PosteriorRow> SimplicityPosterior(const dsl::ComplexityIndex& index,
                                              const CompatibleSet& set);

// Share of the posterior held by the degenerate pairs and their F4 images.
Rational DegenerateMass(const dsl::ComplexityIndex& index,
                        const CompatibleSet& set);

// Proxy for a "reasonable" decomposition: the rational planner with a full
// table literal for R_pi. Its length grows with |S||A|; reported only.
struct ReasonableProxy {
  std::string name;
  int length = 0;
  int k_min = 0;
  int gap = 0;
};
ReasonableProxy ReasonablePairProxy(const dsl::ComplexityIndex& index,
                                    const CompatibleSet& set);

// --- The two poker algorithms -------------------------------------------

struct AliceReport {
  Mdpr money_belief;   // world model under the card-counting estimate
  Mdpr player_belief;  // world model under the read of Bob's behaviour
  RewardTable money;   // R_$
  RewardTable love;    // R_heart = -R_$
  std::vector<std::string> algorithm_one;  // token listings
  std::vector<std::string> algorithm_two;
  int action_one = 0;  // action chosen by each algorithm
  int action_two = 0;
  Policy policy_one, policy_two;
  bool money_pair_compatible = false;  // (rational | card belief, R_$)
  bool love_pair_compatible = false;   // (rational | player belief, R_heart)
  int k_money = 0;
  int k_love = 0;
  std::vector<PosteriorRow> posterior;
};

inline constexpr int kCall = 0;
inline constexpr int kFold = 1;

AliceReport AliceScenario();

}  // namespace rdlab

#endif  // RDLAB_EXPERIMENTS_H_
