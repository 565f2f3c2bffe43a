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

#include "rdlab/planner.h"

#include <string>

namespace rdlab {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Policy Extremal(const RewardTable& r, bool maximize) {
  Policy pi = Policy::Constant(r.n_states, 0);
  for (int s = 0; s < r.n_states; ++s) {
    int best = 0;
    for (int a = 1; a < r.n_actions; ++a) {
      const bool better =
          maximize ? r.at(s, a) > r.at(s, best) : r.at(s, a) < r.at(s, best);
      if (better) best = a;
    }
    pi.action[static_cast<size_t>(s)] = best;
  }
  return pi;
}

const char* OperandName(const Operand& x) {
  switch (x.index()) {
    case 0:
      return "planner";
    case 1:
      return "reward";
    case 2:
      return "pair";
    default:
      return "policy";
  }
}

template <typename T>
const T& Expect(const Operand& x, int i, const char* wanted) {
  if (const T* v = std::get_if<T>(&x)) return *v;
  throw OperandTypeMismatch("f" + std::to_string(i) + " expects a " + wanted +
                            ", got a " + OperandName(x));
}

}  // namespace

Planner Planner::FromProgram(dsl::Environment env, dsl::LanguageConfig cfg,
                             dsl::Program program) {
  if (program.kind != dsl::Kind::kPlanner) {
    throw std::invalid_argument("not a planner program");
  }
  return Planner(ProgramPlanner{
      std::make_shared<const dsl::Environment>(std::move(env)),
      std::make_shared<const dsl::LanguageConfig>(std::move(cfg)),
      std::move(program)});
}

std::string Planner::Describe() const {
  return std::visit(
      Overloaded{
          [](const GreedyPlanner&) -> std::string { return "greedy"; },
          [](const AntiGreedyPlanner&) -> std::string { return "anti-greedy"; },
          [](const IndifferentPlanner& p) -> std::string {
            std::string out = "indifferent[";
            for (size_t s = 0; s < p.policy.action.size(); ++s) {
              if (s) out += ',';
              out += std::to_string(p.policy.action[s]);
            }
            return out + "]";
          },
          [](const RationalPlanner&) -> std::string { return "rational"; },
          [](const NegatedPlanner& p) -> std::string {
            return "-(" + p.inner->Describe() + ")";
          },
          [](const ProgramPlanner& p) -> std::string {
            return "program(" + dsl::PrintProgram(p.program) + ")";
          },
      },
      v_);
}

Policy ApplyPlanner(const Planner& p, const RewardTable& r) {
  return std::visit(
      Overloaded{
          [&](const GreedyPlanner&) { return Extremal(r, true); },
          [&](const AntiGreedyPlanner&) { return Extremal(r, false); },
          [&](const IndifferentPlanner& ind) {
            if (ind.policy.n_states() != r.n_states) {
              throw DimensionMismatch("indifferent planner covers " +
                                      std::to_string(ind.policy.n_states()) +
                                      " states, reward has " +
                                      std::to_string(r.n_states));
            }
            return ind.policy;
          },
          [&](const RationalPlanner& rat) {
            return OptimalPlan(*rat.env, r).policy;
          },
          [&](const NegatedPlanner& neg) { return ApplyPlanner(*neg.inner, -r); },
          [&](const ProgramPlanner& prog) {
            if (r.shape() != prog.env->shape()) {
              throw DimensionMismatch("reward shape differs from the bound "
                                      "environment");
            }
            const dsl::Interpreter interp(*prog.env, *prog.cfg);
            return interp
                .ApplyPlanner(prog.program, dsl::TableProgram(r, *prog.cfg))
                .value;
          },
      },
      p.variant());
}

Planner NegatePlanner(const Planner& p) {
  return Planner(NegatedPlanner{std::make_shared<const Planner>(p)});
}

RewardTable RewardFromPolicy(const Policy& pi, int n_actions) {
  RewardTable r({pi.n_states(), n_actions});
  for (int s = 0; s < pi.n_states(); ++s) r.at(s, pi(s)) = 1;
  return r;
}

bool IsCompatible(const Decomposition& d, const Policy& pi_dot) {
  return ApplyPlanner(d.planner, d.reward) == pi_dot;
}

bool ExtensionallyEqual(const Planner& p, const Planner& q,
                        std::span<const RewardTable> probes) {
  for (const auto& r : probes) {
    if (ApplyPlanner(p, r) != ApplyPlanner(q, r)) return false;
  }
  return true;
}

Operand ApplyBasicOp(int i, const Operand& x, Shape shape) {
  switch (i) {
    case 1:
      return Decomposition{Expect<Planner>(x, i, "planner"),
                           RewardTable(shape), std::nullopt};
    case 2:
      return Decomposition{Planner::Greedy(), Expect<RewardTable>(x, i, "reward"),
                           std::nullopt};
    case 3: {
      const auto& d = Expect<Decomposition>(x, i, "pair");
      return ApplyPlanner(d.planner, d.reward);
    }
    case 4: {
      const auto& d = Expect<Decomposition>(x, i, "pair");
      return Decomposition{NegatePlanner(d.planner), -d.reward, std::nullopt};
    }
    case 5:
      return Planner::Indifferent(Expect<Policy>(x, i, "policy"));
    case 6:
      return RewardFromPolicy(Expect<Policy>(x, i, "policy"), shape.n_actions);
    default:
      throw std::out_of_range("basic operations are f1..f6, got f" +
                              std::to_string(i));
  }
}

Decomposition ApplyComposite(int i, const Decomposition& d) {
  const Shape shape = d.reward.shape();
  auto f = [&](int k, const Operand& x) { return ApplyBasicOp(k, x, shape); };
  switch (i) {
    case 1:
      return std::get<Decomposition>(f(1, f(5, f(3, d))));
    case 2:
      return std::get<Decomposition>(f(2, f(6, f(3, d))));
    case 3:
      return std::get<Decomposition>(f(4, f(2, f(6, f(3, d)))));
    case 4:
      return std::get<Decomposition>(f(4, d));
    default:
      throw std::out_of_range("composite operations are F1..F4, got F" +
                              std::to_string(i));
  }
}

}  // namespace rdlab
