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

#include "rdlab/dsl/interpreter.h"

#include <string>

namespace rdlab::dsl {
namespace {

class Machine {
 public:
  Machine(const Environment& env, long budget) : env_(env), budget_(budget) {}

  void Tick(long n = 1) {
    steps_ += n;
    if (steps_ > budget_) {
      throw StepBudgetExceeded("step budget of " + std::to_string(budget_) +
                               " exceeded");
    }
  }
  long steps() const { return steps_; }

  Rational Reward(const std::vector<Token>& t, size_t& pos, int s, int a) {
    Tick();
    const Token& token = t[pos++];
    switch (token.op) {
      case Op::kZero:
        return 0;
      case Op::kOne:
        return 1;
      case Op::kNeg:
        return -Reward(t, pos, s, a);
      case Op::kAdd: {
        Rational sum = Reward(t, pos, s, a);
        sum += Reward(t, pos, s, a);
        if (sum > 1) return 1;
        if (sum < -1) return -1;
        return sum;
      }
      case Op::kEq: {
        const long x = Numeric(t, pos, s, a);
        const long y = Numeric(t, pos, s, a);
        return x == y ? 1 : 0;
      }
      case Op::kTbl:
        return token.table[static_cast<size_t>(s) * env_.mdp.n_actions + a];
      case Op::kWrap:
        return PolicyAt(t, pos, s) == a ? 1 : 0;
      default:
        throw std::logic_error("not a reward token");
    }
  }

  long Numeric(const std::vector<Token>& t, size_t& pos, int s, int a) {
    Tick();
    const Token& token = t[pos++];
    switch (token.op) {
      case Op::kS:
        return s;
      case Op::kA:
        return a;
      case Op::kConst0:
        return 0;
      case Op::kConst1:
        return 1;
      case Op::kPihat: {
        // Out-of-range state indices wrap around the state space.
        const long x = Numeric(t, pos, s, a);
        return env_.observed(static_cast<int>(x % env_.mdp.n_states));
      }
      default:
        throw std::logic_error("not a numeric token");
    }
  }

  int PolicyAt(const std::vector<Token>& t, size_t& pos, int s) {
    Tick();
    const Token& token = t[pos++];
    switch (token.op) {
      case Op::kPihatPol:
        return env_.observed(s);
      case Op::kPolTbl:
        return token.policy[static_cast<size_t>(s)];
      default:
        throw std::logic_error("not a policy token");
    }
  }

  Rational RewardAt(const std::vector<Token>& t, int s, int a) {
    size_t pos = 0;
    return Reward(t, pos, s, a);
  }

  RewardTable TableOf(const std::vector<Token>& t) {
    RewardTable table(env_.mdp.shape());
    for (int s = 0; s < env_.mdp.n_states; ++s) {
      for (int a = 0; a < env_.mdp.n_actions; ++a) table.at(s, a) = RewardAt(t, s, a);
    }
    return table;
  }

  Policy PolicyOf(const std::vector<Token>& t, size_t start) {
    Policy pi = Policy::Constant(env_.mdp.n_states, 0);
    for (int s = 0; s < env_.mdp.n_states; ++s) {
      size_t pos = start;
      pi.action[static_cast<size_t>(s)] = PolicyAt(t, pos, s);
    }
    return pi;
  }

  // Planner programs are chains of unary wrappers ending in a base planner.
  Policy Plan(const std::vector<Token>& planner, size_t pos,
              std::vector<Token> source) {
    Tick();
    const Op op = planner[pos].op;
    const int n_states = env_.mdp.n_states;
    const int n_actions = env_.mdp.n_actions;
    switch (op) {
      case Op::kArgmax:
      case Op::kArgmin: {
        Policy pi = Policy::Constant(n_states, 0);
        for (int s = 0; s < n_states; ++s) {
          Rational best;
          for (int a = 0; a < n_actions; ++a) {
            Rational v = RewardAt(source, s, a);
            const bool better = op == Op::kArgmax ? v > best : v < best;
            if (a == 0 || better) {
              best = std::move(v);
              pi.action[static_cast<size_t>(s)] = a;
            }
          }
        }
        return pi;
      }
      case Op::kEmitPihat:
        Tick(n_states);
        return env_.observed;
      case Op::kOpt: {
        const RewardTable table = TableOf(source);
        Tick(static_cast<long>(env_.mdp.horizon) * n_states * n_actions);
        return OptimalPlan(env_.mdp, table).policy;
      }
      case Op::kNegP:
        if (source.front().op == Op::kNeg) {
          source.erase(source.begin());
        } else {
          source.insert(source.begin(), Token(Op::kNeg));
        }
        return Plan(planner, pos + 1, std::move(source));
      case Op::kWPrime:
        Tick();
        if (source.front().op == Op::kWrap) return PolicyOf(source, 1);
        return Plan(planner, pos + 1, std::move(source));
      default:
        throw std::logic_error("not a planner token");
    }
  }

 private:
  const Environment& env_;
  long budget_;
  long steps_ = 0;
};

void ExpectKind(const Program& p, Kind kind) {
  if (p.kind != kind) {
    throw std::invalid_argument("expected a " + std::string(KindName(kind)) +
                                " program, got " +
                                std::string(KindName(p.kind)));
  }
}

}  // namespace

Evaluated<Rational> Interpreter::Reward(const Program& reward, int s,
                                        int a) const {
  ExpectKind(reward, Kind::kReward);
  Machine m(env_, cfg_.step_budget);
  Rational v = m.RewardAt(reward.tokens, s, a);
  return {std::move(v), m.steps()};
}

Evaluated<RewardTable> Interpreter::Table(const Program& reward) const {
  ExpectKind(reward, Kind::kReward);
  Machine m(env_, cfg_.step_budget);
  RewardTable table = m.TableOf(reward.tokens);
  return {std::move(table), m.steps()};
}

Evaluated<Policy> Interpreter::PolicyOf(const Program& policy) const {
  ExpectKind(policy, Kind::kPolicy);
  Machine m(env_, cfg_.step_budget);
  Policy pi = m.PolicyOf(policy.tokens, 0);
  return {std::move(pi), m.steps()};
}

Evaluated<Policy> Interpreter::ApplyPlanner(const Program& planner,
                                            const Program& reward) const {
  ExpectKind(planner, Kind::kPlanner);
  ExpectKind(reward, Kind::kReward);
  Machine m(env_, cfg_.step_budget);
  Policy pi = m.Plan(planner.tokens, 0, reward.tokens);
  return {std::move(pi), m.steps()};
}

}  // namespace rdlab::dsl
