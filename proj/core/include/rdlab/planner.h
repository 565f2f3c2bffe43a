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

#ifndef RDLAB_PLANNER_H_
#define RDLAB_PLANNER_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "rdlab/dsl/interpreter.h"
#include "rdlab/dsl/program.h"
#include "rdlab/mdp.h"

namespace rdlab {

class Planner;

struct GreedyPlanner {};      // argmax_a R(s, a)
struct AntiGreedyPlanner {};  // argmin_a R(s, a)
struct IndifferentPlanner {   // ignores the reward
  Policy policy;
};
struct RationalPlanner {  // optimal policy in the bound world model
  std::shared_ptr<const Mdpr> env;
};
struct NegatedPlanner {  // (-p)(R) = p(-R)
  std::shared_ptr<const Planner> inner;
};
struct ProgramPlanner {  // a planner program run on a TBL literal of R
  std::shared_ptr<const dsl::Environment> env;
  std::shared_ptr<const dsl::LanguageConfig> cfg;
  dsl::Program program;
};

// A total function from reward tables to policies.
class Planner {
 public:
  using Variant = std::variant<GreedyPlanner, AntiGreedyPlanner,
                               IndifferentPlanner, RationalPlanner,
                               NegatedPlanner, ProgramPlanner>;

  static Planner Greedy() { return Planner(GreedyPlanner{}); }
  static Planner AntiGreedy() { return Planner(AntiGreedyPlanner{}); }
  static Planner Indifferent(Policy pi) {
    return Planner(IndifferentPlanner{std::move(pi)});
  }
  static Planner Rational(Mdpr env) {
    return Planner(RationalPlanner{std::make_shared<const Mdpr>(std::move(env))});
  }
  static Planner FromProgram(dsl::Environment env, dsl::LanguageConfig cfg,
                             dsl::Program program);

  const Variant& variant() const { return v_; }
  std::string Describe() const;

 private:
  explicit Planner(Variant v) : v_(std::move(v)) {}
  friend Planner NegatePlanner(const Planner& p);

  Variant v_;
};

// A planner-reward pair; compatible with pi when planner(reward) == pi.
struct Decomposition {
  Planner planner;
  RewardTable reward;
  std::optional<int> complexity;
};

Policy ApplyPlanner(const Planner& p, const RewardTable& r);

Planner NegatePlanner(const Planner& p);

// R_pi(s, a) = 1 if pi(s) == a else 0.
RewardTable RewardFromPolicy(const Policy& pi, int n_actions);

bool IsCompatible(const Decomposition& d, const Policy& pi_dot);

// Sampling check: same output on every reward in `probes`. Not a proof of
// equality over all of [-1,1]^{S x A}.
bool ExtensionallyEqual(const Planner& p, const Planner& q,
                        std::span<const RewardTable> probes);

class OperandTypeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Operand = std::variant<Planner, RewardTable, Decomposition, Policy>;

// The basic operations
//   f1: planner -> (p, 0)          f4: pair -> (-p, -R)
//   f2: reward  -> (greedy, R)     f5: policy -> indifferent planner
//   f3: pair    -> p(R)            f6: policy -> R_pi
// `shape` sizes the zero reward of f1 and the indicator of f6.
Operand ApplyBasicOp(int i, const Operand& x, Shape shape);

// F1 = f1 f5 f3, F2 = f2 f6 f3, F3 = f4 f2 f6 f3, F4 = f4.
Decomposition ApplyComposite(int i, const Decomposition& d);

}  // namespace rdlab

#endif  // RDLAB_PLANNER_H_
