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

#include "rdlab/override.h"

#include <algorithm>

namespace rdlab {
namespace {

const RewardTable& Candidate(const OverrideScenario& scn, size_t i) {
  if (i >= scn.candidates.size()) {
    throw UnknownAction("no candidate reward " + std::to_string(i));
  }
  return scn.candidates[i].table;
}

Policy Restrict(const Policy& pi, int offset, int n) {
  return Policy{std::vector<int>(pi.action.begin() + offset,
                                 pi.action.begin() + offset + n)};
}

Policy Join(const Policy& on_zero, const Policy& on_one) {
  Policy out = on_zero;
  out.action.insert(out.action.end(), on_one.action.begin(),
                    on_one.action.end());
  return out;
}

// Every R^a the agent can install: the candidates, then (when enabled) the
// sign vertices.
std::vector<RewardTable> OverrideRewards(const OverrideScenario& scn) {
  std::vector<RewardTable> out;
  for (const auto& c : scn.candidates) out.push_back(c.table);
  const Shape shape = scn.base.shape();
  if (scn.vertex_sweep && shape.cells() <= scn.vertex_cap) {
    for (unsigned long long v = 0; v < (1ull << shape.cells()); ++v) {
      out.push_back(SignVertex(shape, v));
    }
  }
  return out;
}

// Value from the start state selected by the agent, with the human on the
// mixed policy for `r_a` (ignored when staying), under the lifted reward.
Rational StartValue(const OverrideScenario& scn, const RewardTable* r_a,
                    const RewardTable& lifted) {
  const Mdpr star = Augment(scn.base);
  const Policy mixed =
      r_a ? MixedPolicy(scn, *r_a) : Join(scn.human_policy, scn.human_policy);
  const ValueVector v = EvaluatePolicy(star, mixed, lifted);
  const int flag = r_a ? 1 : 0;
  return v[static_cast<size_t>(
      AugmentedState(scn.base, scn.base.start_state, flag))];
}

}  // namespace

Mdpr Augment(const Mdpr& base, int start_flag) {
  const int n = base.n_states;
  Mdpr star = Mdpr::Empty(2 * n, base.n_actions,
                          AugmentedState(base, base.start_state, start_flag),
                          base.horizon);
  for (int flag = 0; flag < 2; ++flag) {
    for (int s = 0; s < n; ++s) {
      for (int a = 0; a < base.n_actions; ++a) {
        for (int next = 0; next < n; ++next) {
          star.T(AugmentedState(base, s, flag), a,
                 AugmentedState(base, next, flag)) = base.T(s, a, next);
        }
      }
    }
  }
  return star;
}

RewardTable Lift(const RewardTable& on_zero, const RewardTable& on_one) {
  if (on_zero.shape() != on_one.shape()) {
    throw DimensionMismatch("lifted rewards differ in shape");
  }
  RewardTable out(Shape{2 * on_zero.n_states, on_zero.n_actions});
  std::copy(on_zero.values.begin(), on_zero.values.end(), out.values.begin());
  std::copy(on_one.values.begin(), on_one.values.end(),
            out.values.begin() + static_cast<long>(on_zero.values.size()));
  return out;
}

Policy MixedPolicy(const OverrideScenario& scn, const RewardTable& r_a) {
  return Join(scn.human_policy, OptimalPlan(scn.base, r_a).policy);
}

Policy OverriddenPolicy(const OverrideScenario& scn, size_t i) {
  return OptimalPlan(scn.base, Candidate(scn, i)).policy;
}

Rational AgentActionValue(const OverrideScenario& scn, AgentAction action) {
  const RewardTable human = Lift(scn.human_reward, scn.human_reward);
  if (!action.candidate) return StartValue(scn, nullptr, human);
  const RewardTable& r_a = Candidate(scn, *action.candidate);
  const Rational v_star =
      OptimalPlan(scn.base, r_a).values[static_cast<size_t>(
          scn.base.start_state)];
  return scn.epsilon * v_star +
         (1 - scn.epsilon) * StartValue(scn, &r_a, human);
}

Rational OverrideRegret(const OverrideScenario& scn, AgentAction action) {
  const RewardTable lifted = Lift(scn.human_reward, scn.human_reward);
  const Rational taken =
      action.candidate
          ? StartValue(scn, &Candidate(scn, *action.candidate), lifted)
          : StartValue(scn, nullptr, lifted);
  Rational best = StartValue(scn, nullptr, lifted);
  for (const RewardTable& r_b : OverrideRewards(scn)) {
    best = std::max(best, StartValue(scn, &r_b, lifted));
  }
  return best - taken;
}

Rational HumanRegret(const OverrideScenario& scn, AgentAction action,
                     RegretReward reward, std::optional<size_t> twist) {
  if (!twist) twist = action.candidate;
  const RewardTable* r_a = twist ? &Candidate(scn, *twist) : nullptr;
  if (reward == RegretReward::kTwisted && !r_a) {
    throw UnknownAction("twisted reward needs a candidate");
  }
  const RewardTable lifted =
      Lift(scn.human_reward,
           reward == RegretReward::kHuman ? scn.human_reward : *r_a);
  const Policy mixed =
      action.candidate
          ? MixedPolicy(scn, Candidate(scn, *action.candidate))
          : Join(scn.human_policy, r_a ? OptimalPlan(scn.base, *r_a).policy
                                       : scn.human_policy);
  const int flag = action.candidate ? 1 : 0;
  return Regret(Augment(scn.base), mixed, lifted)[static_cast<size_t>(
      AugmentedState(scn.base, scn.base.start_state, flag))];
}

BestOverride BestOverrideReward(const OverrideScenario& scn) {
  if (scn.candidates.empty()) {
    throw std::invalid_argument("override scenario has no candidates");
  }
  const RewardTable human = Lift(scn.human_reward, scn.human_reward);
  const std::vector<RewardTable> rewards = OverrideRewards(scn);
  BestOverride best;
  for (size_t i = 0; i < rewards.size(); ++i) {
    const RewardTable& r_a = rewards[i];
    const Rational v_star =
        OptimalPlan(scn.base, r_a).values[static_cast<size_t>(
            scn.base.start_state)];
    const Rational value = scn.epsilon * v_star +
                           (1 - scn.epsilon) * StartValue(scn, &r_a, human);
    if (i == 0 || value > best.value) {
      best.value = value;
      best.reward = r_a;
      if (i < scn.candidates.size()) {
        best.candidate = i;
        best.name = scn.candidates[i].name;
      } else {
        best.candidate.reset();
        best.name = "vertex_" + std::to_string(i - scn.candidates.size());
      }
    }
  }
  return best;
}

std::string DescribeDecomposition(const OverrideScenario& scn,
                                  const OverrideDecomposition& d) {
  std::string out =
      d.planner == OverridePlanner::kRational ? "(p_r, " : "(p_0, ";
  out += d.reward == RegretReward::kHuman ? "R_dot" : "R_dot^a";
  if (d.twist < scn.candidates.size()) {
    out += " | " + scn.candidates[d.twist].name;
  }
  return out + ")";
}

bool IsCompatible(const OverrideScenario& scn,
                  const OverrideDecomposition& d) {
  const RewardTable& r_a = Candidate(scn, d.twist);
  const RewardTable lifted =
      Lift(scn.human_reward,
           d.reward == RegretReward::kHuman ? scn.human_reward : r_a);
  const Policy rational = OptimalPlan(Augment(scn.base), lifted).policy;
  const int n = scn.base.n_states;
  Policy predicted = rational;
  if (d.planner == OverridePlanner::kPartial) {
    predicted = Join(Restrict(rational, 0, n), OverriddenPolicy(scn, d.twist));
  }
  return predicted == MixedPolicy(scn, r_a);
}

bool DetectOverride(const OverrideScenario& scn,
                    const OverrideDecomposition& d, AgentAction action,
                    const Rational& threshold) {
  if (!IsCompatible(scn, d)) {
    throw IncompatibleDecomposition(DescribeDecomposition(scn, d) +
                                    " is not compatible with the human");
  }
  return HumanRegret(scn, action, d.reward, d.twist) > threshold;
}

}  // namespace rdlab
