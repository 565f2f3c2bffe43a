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

#ifndef RDLAB_DSL_INTERPRETER_H_
#define RDLAB_DSL_INTERPRETER_H_

#include <stdexcept>

#include "rdlab/dsl/program.h"
#include "rdlab/mdp.h"

namespace rdlab::dsl {

class StepBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// What a program may observe: the world model and the observed policy.
struct Environment {
  Mdpr mdp;
  Policy observed;

  Shape shape() const { return mdp.shape(); }
};

template <typename T>
struct Evaluated {
  T value;
  long steps = 0;  // token-evaluation events
};

// Step accounting: every token visited is one event. A planner additionally
// pays one event for its own token, and
//   ARGMAX/ARGMIN  the reward evaluations at every (s, a)
//   EMITPIHAT      one observed-policy lookup per state
//   OPT            the reward evaluations plus one backup per (k, s, a)
//   NEGP p         p run on the source `NEG r`, or on `r'` when r is
//                  already `NEG r'`, so that NEGP NEGP p behaves as p
//   WPRIME p       one event to inspect the source; if it is `WRAP q` the
//                  policy q is run on every state, otherwise p runs on it.
class Interpreter {
 public:
  Interpreter(const Environment& env, const LanguageConfig& cfg)
      : env_(env), cfg_(cfg) {}

  Evaluated<Rational> Reward(const Program& reward, int s, int a) const;
  Evaluated<RewardTable> Table(const Program& reward) const;
  Evaluated<Policy> PolicyOf(const Program& policy) const;
  Evaluated<Policy> ApplyPlanner(const Program& planner,
                                 const Program& reward) const;

  const Environment& env() const { return env_; }
  const LanguageConfig& config() const { return cfg_; }

 private:
  const Environment& env_;
  const LanguageConfig& cfg_;
};

}  // namespace rdlab::dsl

#endif  // RDLAB_DSL_INTERPRETER_H_
