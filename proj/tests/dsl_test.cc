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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.h"
#include "rdlab/dsl/enumerator.h"
#include "rdlab/dsl/interpreter.h"
#include "rdlab/dsl/program.h"
#include "rdlab/planner.h"
#include "rdlab/random_instances.h"

namespace rdlab::dsl {
namespace {

class DslTest : public ::testing::Test {
 protected:
  Environment env{TwoStateChain(2), Policy{{1, 0}}};
  LanguageConfig cfg;
  Shape shape{2, 2};

  Program P(std::string_view text) { return ParseProgram(text, shape, cfg); }
};

TEST_F(DslTest, ParsesTypedExpressions) {
  const Program eq = P("EQ PIHAT S A");
  EXPECT_EQ(eq.kind, Kind::kReward);
  EXPECT_EQ(eq.cost, 4);
  EXPECT_EQ(P("ZERO").kind, Kind::kReward);
  EXPECT_EQ(P("WPRIME NEGP ARGMAX").kind, Kind::kPlanner);
  EXPECT_EQ(P("POLTBL [1,0]").kind, Kind::kPolicy);
  EXPECT_EQ(P("POLTBL [1,0]").cost, 3);
  EXPECT_EQ(P("TBL [1,0,-1/2,1]").cost, 5);
}

TEST_F(DslTest, RejectsWithPosition) {
  try {
    P("EQ S");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(P("S"), ParseError);            // numeric at top level
  EXPECT_THROW(P("ZERO ONE"), ParseError);     // trailing tokens
  EXPECT_THROW(P("FOO"), ParseError);          // unknown token
  EXPECT_THROW(P("NEG ARGMAX"), ParseError);   // sort mismatch
  EXPECT_THROW(P("WRAP ZERO"), ParseError);    // reward where policy expected
  EXPECT_THROW(P("TBL [1,0,1]"), ParseError);  // wrong literal size
  EXPECT_THROW(P("TBL [2,0,1,0]"), ParseError);
  EXPECT_THROW(P("POLTBL [2,0]"), ParseError);
  EXPECT_THROW(P("TBL"), ParseError);
  EXPECT_THROW(P(""), ParseError);
}

TEST_F(DslTest, PrintParseRoundTrip) {
  for (const char* text :
       {"EQ PIHAT S A", "ADD NEG ONE TBL [1,0,-1/2,1]", "WRAP POLTBL [0,1]",
        "WPRIME NEGP OPT", "EQ PIHAT PIHAT CONST1 CONST0"}) {
    const Program p = P(text);
    EXPECT_EQ(PrintProgram(p), text);
    EXPECT_EQ(P(PrintProgram(p)), p);
  }
  EXPECT_EQ(PrintProgram(P("TBL  [2/4,0,-1/2,1]")), "TBL [1/2,0,-1/2,1]");
}

TEST_F(DslTest, IndicatorProgramMatchesObservedPolicy) {
  const Interpreter interp(env, cfg);
  const Program eq = P("EQ PIHAT S A");
  for (int s = 0; s < 2; ++s) {
    for (int a = 0; a < 2; ++a) {
      EXPECT_EQ(interp.Reward(eq, s, a).value, env.observed(s) == a ? 1 : 0);
      EXPECT_EQ(interp.Reward(eq, s, a).steps, 4);
    }
  }
  EXPECT_EQ(interp.Table(P("WRAP PIHATPOL")).value,
            RewardFromPolicy(env.observed, 2));
}

TEST_F(DslTest, AddClipsAndNegates) {
  const Interpreter interp(env, cfg);
  EXPECT_EQ(interp.Reward(P("ADD ONE ONE"), 0, 0).value, 1);
  EXPECT_EQ(interp.Reward(P("ADD NEG ONE NEG ONE"), 0, 0).value, -1);
  EXPECT_EQ(interp.Reward(P("ADD ONE TBL [-1/2,0,0,0]"), 0, 0).value,
            Rational(1, 2));
}

TEST_F(DslTest, PihatWrapsOutOfRangeStates) {
  // With three actions, A can exceed the last state index.
  const Environment wide{Mdpr::Empty(2, 3, 0, 1), Policy{{2, 1}}};
  const Interpreter interp(wide, cfg);
  const Program p = ParseProgram("EQ PIHAT A A", {2, 3}, cfg);
  EXPECT_EQ(interp.Reward(p, 0, 2).value, 1);  // pi(2 mod 2) = 2
  EXPECT_EQ(interp.Reward(p, 0, 1).value, 1);  // pi(1) = 1
  EXPECT_EQ(interp.Reward(p, 0, 0).value, 0);  // pi(0) = 2
}

TEST_F(DslTest, ArgmaxOnIndicatorSourceReturnsObservedPolicy) {
  const Interpreter interp(env, cfg);
  const auto out = interp.ApplyPlanner(P("ARGMAX"), P("EQ PIHAT S A"));
  EXPECT_EQ(out.value, env.observed);
  // The planner token plus |S||A| evaluations of a 4-token reward.
  EXPECT_EQ(out.steps, 1 + 4 * 4);
}

TEST_F(DslTest, WrapperEmitsPolicyWithoutArgmaxLoop) {
  const Interpreter interp(env, cfg);
  const auto out = interp.ApplyPlanner(P("WPRIME ARGMAX"), P("WRAP PIHATPOL"));
  EXPECT_EQ(out.value, env.observed);
  EXPECT_EQ(out.steps, 2 + 2);
  const auto plain = interp.ApplyPlanner(P("ARGMAX"), P("WRAP PIHATPOL"));
  EXPECT_EQ(plain.value, env.observed);
  EXPECT_GT(plain.steps, out.steps);
  EXPECT_EQ(interp.PolicyOf(P("PIHATPOL")).steps, 2);
}

TEST_F(DslTest, WrapperPropertyForEveryPolicyAndPlanner) {
  const Interpreter interp(env, cfg);
  cfg.budget = 4;
  const Enumeration planners = EnumeratePrograms(cfg, shape, Kind::kPlanner);
  const Enumeration policies = EnumeratePrograms(cfg, shape, Kind::kPolicy);
  for (const Program& q : policies.programs) {
    const Policy want = interp.PolicyOf(q).value;
    std::vector<Token> wrapped;
    wrapped.emplace_back(Op::kWrap);
    wrapped.insert(wrapped.end(), q.tokens.begin(), q.tokens.end());
    const Program source = ParseProgram(wrapped, shape, cfg);
    for (const Program& p : planners.programs) {
      std::vector<Token> w;
      w.emplace_back(Op::kWPrime);
      w.insert(w.end(), p.tokens.begin(), p.tokens.end());
      EXPECT_EQ(interp.ApplyPlanner(ParseProgram(w, shape, cfg), source).value,
                want);
    }
  }
}

TEST_F(DslTest, NegatedPlannerProgramsMatchDefinition) {
  const Interpreter interp(env, cfg);
  Rng rng(41);
  for (const char* planner : {"ARGMAX", "ARGMIN", "OPT", "EMITPIHAT"}) {
    const Program p = P(planner);
    const Program neg = NegatePlanner(p, cfg);
    EXPECT_EQ(neg.cost, p.cost + 1);
    for (int i = 0; i < 20; ++i) {
      const Program r = TableProgram(RandomReward(rng, shape), cfg);
      EXPECT_EQ(interp.ApplyPlanner(neg, r).value,
                interp.ApplyPlanner(p, NegateReward(r, cfg)).value);
      EXPECT_EQ(interp.ApplyPlanner(NegatePlanner(neg, cfg), r).value,
                interp.ApplyPlanner(p, r).value);
    }
  }
}

TEST_F(DslTest, DoubleNegationRestoresWrapperSource) {
  const Interpreter interp(env, cfg);
  // NEGP NEGP p sees the original source, so the wrapper still fires.
  const auto direct = interp.ApplyPlanner(P("WPRIME ARGMIN"), P("WRAP PIHATPOL"));
  const auto twice =
      interp.ApplyPlanner(P("NEGP NEGP WPRIME ARGMIN"), P("WRAP PIHATPOL"));
  EXPECT_EQ(direct.value, env.observed);
  EXPECT_EQ(twice.value, direct.value);
  EXPECT_EQ(twice.steps, direct.steps + 2);
}

TEST_F(DslTest, StepBudgetIsEnforced) {
  cfg.step_budget = 10;
  const Interpreter interp(env, cfg);
  EXPECT_THROW(interp.ApplyPlanner(P("ARGMAX"), P("EQ PIHAT S A")),
               StepBudgetExceeded);
}

TEST_F(DslTest, InterpretationIsDeterministic) {
  const Interpreter interp(env, cfg);
  const auto a = interp.ApplyPlanner(P("OPT"), P("ADD ONE NEG WRAP PIHATPOL"));
  const auto b = interp.ApplyPlanner(P("OPT"), P("ADD ONE NEG WRAP PIHATPOL"));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.steps, b.steps);
}

std::vector<std::string> Texts(const Enumeration& e) {
  std::vector<std::string> out;
  for (const auto& p : e.programs) out.push_back(PrintProgram(p));
  return out;
}

TEST_F(DslTest, EnumeratesBudgetOne) {
  cfg.budget = 1;
  EXPECT_EQ(Texts(EnumeratePrograms(cfg, shape, Kind::kReward)),
            (std::vector<std::string>{"ZERO", "ONE"}));
  EXPECT_EQ(Texts(EnumeratePrograms(cfg, shape, Kind::kPlanner)),
            (std::vector<std::string>{"ARGMAX", "ARGMIN", "EMITPIHAT", "OPT"}));
  EXPECT_EQ(Texts(EnumeratePrograms(cfg, shape, Kind::kPolicy)),
            (std::vector<std::string>{"PIHATPOL"}));
}

TEST_F(DslTest, EnumerationIsSortedAndMonotone) {
  for (Kind kind : {Kind::kReward, Kind::kPolicy, Kind::kPlanner}) {
    cfg.budget = 3;
    const Enumeration small = EnumeratePrograms(cfg, shape, kind);
    cfg.budget = 4;
    const Enumeration large = EnumeratePrograms(cfg, shape, kind);
    EXPECT_TRUE(std::is_sorted(large.programs.begin(), large.programs.end()));
    EXPECT_TRUE(std::adjacent_find(large.programs.begin(), large.programs.end()) ==
                large.programs.end());
    for (const Program& p : small.programs) {
      EXPECT_NE(std::find(large.programs.begin(), large.programs.end(), p),
                large.programs.end());
    }
  }
}

// Enumeration completeness against brute force: every token string up to
// the budget, literals expanded, kept iff the parser accepts it.
TEST_F(DslTest, EnumerationMatchesBruteForce) {
  for (int budget = 1; budget <= 4; ++budget) {
    cfg.budget = budget;
    std::vector<std::vector<Op>> strings;
    oracle::AllTokenStrings(budget, 1 + shape.n_states, strings);
    std::map<Kind, std::set<std::string>> expected;
    const std::vector<Policy> policies = oracle::AllPolicies(2, 2);
    for (const auto& ops : strings) {
      // Expand POLTBL placeholders over every policy (TBL costs 5 > 4).
      std::vector<std::vector<Token>> expansions(1);
      bool skip = false;
      for (Op op : ops) {
        if (op == Op::kTbl) {
          skip = true;
          break;
        }
        std::vector<std::vector<Token>> next;
        for (const auto& prefix : expansions) {
          if (op == Op::kPolTbl) {
            for (const Policy& q : policies) {
              next.push_back(prefix);
              next.back().emplace_back(op, q.action);
            }
          } else {
            next.push_back(prefix);
            next.back().emplace_back(op);
          }
        }
        expansions = std::move(next);
      }
      if (skip) continue;
      for (auto& tokens : expansions) {
        try {
          const Program p = ParseProgram(tokens, shape, cfg);
          if (p.cost <= budget) expected[p.kind].insert(PrintProgram(p));
        } catch (const ParseError&) {
        }
      }
    }
    for (Kind kind : {Kind::kReward, Kind::kPolicy, Kind::kPlanner}) {
      const std::vector<std::string> got = Texts(EnumeratePrograms(cfg, shape, kind));
      const std::set<std::string> got_set(got.begin(), got.end());
      EXPECT_EQ(got.size(), got_set.size()) << "duplicates at B=" << budget;
      EXPECT_EQ(got_set, expected[kind])
          << KindName(kind) << " at B=" << budget;
    }
  }
}

TEST_F(DslTest, EnumerationRespectsTokenCosts) {
  cfg.budget = 2;
  cfg.token_cost[static_cast<size_t>(Op::kOne)] = 3;
  const std::vector<std::string> got =
      Texts(EnumeratePrograms(cfg, shape, Kind::kReward));
  EXPECT_EQ(std::count(got.begin(), got.end(), "ONE"), 0);
  EXPECT_EQ(std::count(got.begin(), got.end(), "NEG ZERO"), 1);
}

TEST_F(DslTest, EnumerationCapSetsTruncated) {
  cfg.budget = 6;
  cfg.max_enum = 50;
  const Enumeration e = EnumeratePrograms(cfg, shape, Kind::kReward);
  EXPECT_TRUE(e.truncated);
  EXPECT_LE(e.programs.size(), 50u);
}

TEST(LanguageConfigTest, Validation) {
  LanguageConfig cfg;
  EXPECT_NO_THROW(ValidateConfig(cfg));
  cfg.token_cost[0] = 0;
  EXPECT_THROW(ValidateConfig(cfg), std::invalid_argument);
  cfg = LanguageConfig{};
  cfg.budget = 0;
  EXPECT_THROW(ValidateConfig(cfg), std::invalid_argument);
}

}  // namespace
}  // namespace rdlab::dsl
