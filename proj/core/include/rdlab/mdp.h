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

#ifndef RDLAB_MDP_H_
#define RDLAB_MDP_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rdlab/rational.h"

namespace rdlab {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a brute-force sweep would exceed its configured size.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Shape {
  int n_states = 0;
  int n_actions = 0;

  int cells() const { return n_states * n_actions; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

// A finite episodic world model without a reward: states, actions, exact
// transition probabilities, a start state and an episode length.
struct Mdpr {
  int n_states = 0;
  int n_actions = 0;
  // transition[(s * n_actions + a) * n_states + next]
  std::vector<Rational> transition;
  int start_state = 0;
  int horizon = 1;

  Shape shape() const { return {n_states, n_actions}; }

  const Rational& T(int s, int a, int next) const {
    return transition[(static_cast<size_t>(s) * n_actions + a) * n_states +
                      next];
  }
  Rational& T(int s, int a, int next) {
    return transition[(static_cast<size_t>(s) * n_actions + a) * n_states +
                      next];
  }

  // All-zero transition table of the right size; callers fill the rows.
  static Mdpr Empty(int n_states, int n_actions, int start_state, int horizon);
};

// R(s, a) in [-1, 1].
struct RewardTable {
  int n_states = 0;
  int n_actions = 0;
  std::vector<Rational> values;

  RewardTable() = default;
  explicit RewardTable(Shape shape)
      : n_states(shape.n_states),
        n_actions(shape.n_actions),
        values(static_cast<size_t>(shape.cells())) {}

  Shape shape() const { return {n_states, n_actions}; }
  const Rational& at(int s, int a) const {
    return values[static_cast<size_t>(s) * n_actions + a];
  }
  Rational& at(int s, int a) {
    return values[static_cast<size_t>(s) * n_actions + a];
  }

  RewardTable operator-() const;
  friend bool operator==(const RewardTable&, const RewardTable&) = default;

  static RewardTable Constant(Shape shape, const Rational& value);
};

// Deterministic Markovian policy: one action per state.
struct Policy {
  std::vector<int> action;

  int n_states() const { return static_cast<int>(action.size()); }
  int operator()(int s) const { return action[static_cast<size_t>(s)]; }
  friend bool operator==(const Policy&, const Policy&) = default;
  friend auto operator<=>(const Policy&, const Policy&) = default;

  static Policy Constant(int n_states, int a) {
    return Policy{std::vector<int>(static_cast<size_t>(n_states), a)};
  }
};

// Per-state expected return with the full horizon remaining.
using ValueVector = std::vector<Rational>;

struct ValidationResult {
  bool ok = true;
  std::string message;

  explicit operator bool() const { return ok; }
  static ValidationResult Ok() { return {}; }
  static ValidationResult Fail(std::string why) { return {false, std::move(why)}; }
};

ValidationResult ValidateMdpr(const Mdpr& m);
ValidationResult ValidateReward(const RewardTable& r);
ValidationResult ValidatePolicy(const Policy& pi, int n_actions);

// Finite-horizon value by backward induction:
//   V_0 = 0,  V_k(s) = R(s, pi(s)) + sum_s' T(s'|s, pi(s)) V_{k-1}(s'),
// returning V_H.
ValueVector EvaluatePolicy(const Mdpr& m, const Policy& pi,
                           const RewardTable& r);

struct Plan {
  Policy policy;
  ValueVector values;
};

// V* is the backward-induction optimum over all decision rules, so it
// dominates every stationary policy. The returned stationary policy is the
// first-decision argmax (lowest action index on ties); it attains V* whenever
// a stationary optimum exists, which is always the case for H = 1 and for
// the shipped scenarios.
Plan OptimalPlan(const Mdpr& m, const RewardTable& r);

// V*_R - V^pi_R, pointwise and nonnegative.
ValueVector Regret(const Mdpr& m, const Policy& pi, const RewardTable& r);

// Sign vertex number `index` of [-1,1]^{S x A}: bit k set -> cell k is +1.
RewardTable SignVertex(Shape shape, unsigned long long index);

// Every deterministic policy in lexicographic order of the action table.
std::vector<Policy> EnumeratePolicies(Shape shape, size_t cap = 1u << 20);

struct RegretExtreme {
  Rational value;
  RewardTable witness;
};

// max over R of Reg(pi, R)(start). Regret is convex in R for fixed pi, so
// the maximum over the hypercube sits on one of its 2^{|S||A|} sign
// vertices. Throws CapExceeded when |S||A| > max_cells.
RegretExtreme MaxRegretOverRewards(const Mdpr& m, const Policy& pi,
                                   int max_cells = 16);

struct HalfMaximalReport {
  Rational lhs;  // max_R Reg(pi, R)(start)
  Rational rhs;  // 1/2 max_{pi', R} Reg(pi', R)(start)
  bool holds = false;
};

HalfMaximalReport VerifyHalfMaximal(const Mdpr& m, const Policy& pi,
                                    int max_cells = 16,
                                    size_t max_policies = 4096);

}  // namespace rdlab

#endif  // RDLAB_MDP_H_
