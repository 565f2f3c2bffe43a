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

#ifndef RDLAB_OVERRIDE_H_
#define RDLAB_OVERRIDE_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdlab/mdp.h"

namespace rdlab {

struct NamedReward {
  std::string name;
  RewardTable table;
};

// A human acting in `base` with policy pi_dot and reward R_dot, and an agent
// that may, once, swap the human's policy for the optimal policy of some
// candidate reward R^a. With probability epsilon R^a is the true reward.
struct OverrideScenario {
  Mdpr base;
  Policy human_policy;
  RewardTable human_reward;
  std::vector<NamedReward> candidates;
  Rational epsilon = 0;
  Rational threshold = 0;
  // Also try every sign vertex of [-1,1]^{S x A} as R^a.
  bool vertex_sweep = false;
  int vertex_cap = 12;  // max |S||A| for the sweep
};

// Agent action: leave the human alone (no candidate), or override with
// candidate i.
struct AgentAction {
  std::optional<size_t> candidate;

  static AgentAction Stay() { return {}; }
  static AgentAction Override(size_t i) { return {i}; }
  friend bool operator==(const AgentAction&, const AgentAction&) = default;
};

class UnknownAction : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class IncompatibleDecomposition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// S x {0, 1}; state (s, b) has index b * |S| + s. The boolean never changes.
Mdpr Augment(const Mdpr& base, int start_flag = 0);

inline int AugmentedState(const Mdpr& base, int s, int flag) {
  return flag * base.n_states + s;
}

// R on S x {0,1}: `on_zero` on the unflagged half, `on_one` on the other.
RewardTable Lift(const RewardTable& on_zero, const RewardTable& on_one);

// pi_dot on S x {0}, the optimal policy for r_a on S x {1}.
Policy MixedPolicy(const OverrideScenario& scn, const RewardTable& r_a);

// pi^a for candidate i.
Policy OverriddenPolicy(const OverrideScenario& scn, size_t i);

// Stay: V^{pi_dot}_{R_dot} from the start state.
// Override(i): eps * V*_{R^a} + (1 - eps) * V^{pi^a}_{R_dot}.
Rational AgentActionValue(const OverrideScenario& scn, AgentAction action);

// max_b [V^{pi'|b} - V^{pi'|a}] under R_dot over every agent action b, each
// value taken from the start state that b selects, with pi' the mixed policy
// that b induces.
Rational OverrideRegret(const OverrideScenario& scn, AgentAction action);

enum class RegretReward {
  kHuman,    // R_dot on both halves
  kTwisted,  // R_dot on S x {0}, R^a on S x {1}
};

// Regret of the human's actual (mixed) policy under the lifted reward, at the
// start state the action puts the human in. `twist` picks the R^a of the
// twisted reward; it defaults to the action's own candidate. Under kHuman and
// a rational human this equals OverrideRegret.
Rational HumanRegret(const OverrideScenario& scn, AgentAction action,
                     RegretReward reward,
                     std::optional<size_t> twist = std::nullopt);

struct BestOverride {
  std::string name;
  RewardTable reward;
  std::optional<size_t> candidate;  // empty for a sign vertex
  Rational value;
};

// Best R^a by expected value over the candidates (and sign vertices when
// enabled); ties go to the earlier entry.
BestOverride BestOverrideReward(const OverrideScenario& scn);

enum class OverridePlanner {
  kRational,  // p_r
  kPartial,   // p_0: rational on S x {0}, returns pi^a on S x {1}
};

// A decomposition of the mixed policy for candidate `twist`.
struct OverrideDecomposition {
  OverridePlanner planner = OverridePlanner::kRational;
  RegretReward reward = RegretReward::kHuman;
  size_t twist = 0;
};

std::string DescribeDecomposition(const OverrideScenario& scn,
                                  const OverrideDecomposition& d);

bool IsCompatible(const OverrideScenario& scn, const OverrideDecomposition& d);

// The action overrides the decomposition's reward when it leaves the human
// with regret above the threshold for that reward (HumanRegret). Throws
// IncompatibleDecomposition.
bool DetectOverride(const OverrideScenario& scn,
                    const OverrideDecomposition& d, AgentAction action,
                    const Rational& threshold);

}  // namespace rdlab

#endif  // RDLAB_OVERRIDE_H_
