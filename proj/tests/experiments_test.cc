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

#include "rdlab/experiments.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "rdlab/random_instances.h"

namespace rdlab {
namespace {

using dsl::ComplexityIndex;
using dsl::PrintProgram;

dsl::Environment M2() { return {TwoStateChain(2), Policy{{1, 0}}}; }

struct Fixture {
  ComplexityIndex index;
  CompatibleSet set;
  explicit Fixture(int budget)
      : index(M2(),
              [budget] {
                dsl::LanguageConfig cfg;
                cfg.budget = budget;
                return cfg;
              }()),
        set(CompatiblePairs(index)) {}
};

const Fixture& B8() {
  static const Fixture f(8);
  return f;
}

const CompatiblePair* Find(const CompatibleSet& set, std::string_view planner,
                           std::string_view reward) {
  for (const auto& p : set.pairs) {
    if (PrintProgram(p.planner) == planner && PrintProgram(p.reward) == reward) {
      return &p;
    }
  }
  return nullptr;
}

TEST(CompatiblePairsTest, SimplestPairIsIndifferentZero) {
  const auto& [index, set] = B8();
  ASSERT_FALSE(set.classes.empty());
  EXPECT_EQ(*index.K(set.classes.front()), 2);
  EXPECT_EQ(PairName(index, set.classes.front()), "(EMITPIHAT, ZERO)");
  const CompatiblePair* p = Find(set, "EMITPIHAT", "ZERO");
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->length, 2);
  EXPECT_EQ(p->k, 2);
}

TEST(CompatiblePairsTest, LengthAndSemanticK) {
  const auto& set = B8().set;
  const CompatiblePair* greedy = Find(set, "ARGMAX", "EQ PIHAT S A");
  ASSERT_NE(greedy, nullptr);
  EXPECT_EQ(greedy->length, 5);
  EXPECT_EQ(greedy->k, 3);
  const CompatiblePair* anti = Find(set, "ARGMIN", "NEG EQ PIHAT S A");
  ASSERT_NE(anti, nullptr);
  EXPECT_EQ(anti->length, 6);
  EXPECT_EQ(anti->k, 4);
}

TEST(CompatiblePairsTest, EveryPairReproducesObservedPolicy) {
  const auto& [index, set] = B8();
  EXPECT_FALSE(set.pairs.empty());
  for (const auto& p : set.pairs) {
    EXPECT_LE(p.length, index.config().budget);
    EXPECT_EQ(p.length, p.planner.cost + p.reward.cost);
    EXPECT_EQ(index.interpreter().ApplyPlanner(p.planner, p.reward).value,
              index.env().observed);
    EXPECT_LE(p.k, p.length);
  }
  EXPECT_TRUE(std::is_sorted(set.pairs.begin(), set.pairs.end(),
                             [](const auto& x, const auto& y) {
                               return x.length < y.length;
                             }));
  for (const auto& [cls, i] : set.first_pair) {
    EXPECT_EQ(set.pairs[i].cls, cls);
  }
}

TEST(CompatiblePairsTest, NegationStaysWithinTwo) {
  const auto& [index, set] = B8();
  for (const auto& cls : set.classes) {
    const auto k = dsl::KOfComposite(index, 4, cls);
    if (!k) continue;
    EXPECT_LE(std::abs(*k - *index.K(cls)), 2) << PairName(index, cls);
  }
}

TEST(DegeneratePairsTest, AllReproduceObservedPolicy) {
  const dsl::Environment env = M2();
  const auto pairs = DegeneratePairs(env);
  ASSERT_EQ(pairs.size(), 3u);
  for (const auto& [name, d] : pairs) {
    EXPECT_TRUE(IsCompatible(d, env.observed)) << name;
  }
}

TEST(Prop2Test, HoldsOnTwoStateChain) {
  const auto& [index, set] = B8();
  const Prop2Verdict v = CheckProp2(index, set, 2);
  EXPECT_TRUE(v.holds);
  EXPECT_FALSE(v.exhausted);
  EXPECT_EQ(v.k_min, 2);
  ASSERT_EQ(v.rows.size(), 3u);
  std::vector<int> ks;
  for (const auto& row : v.rows) ks.push_back(row.k.value_or(-1));
  EXPECT_EQ(ks, (std::vector<int>{2, 3, 4}));
  EXPECT_FALSE(CheckProp2(index, set, 1).holds);
}

TEST(Prop2Test, ExhaustedWhenBudgetIsTooSmall) {
  const Fixture small(2);
  const Prop2Verdict v = CheckProp2(small.index, small.set, 2);
  EXPECT_TRUE(v.exhausted);
}

TEST(Prop2Test, SingleStateSingleActionIsTrivial) {
  Mdpr m = Mdpr::Empty(1, 1, 0, 1);
  m.T(0, 0, 0) = 1;
  dsl::LanguageConfig cfg;
  cfg.budget = 5;
  const ComplexityIndex index({m, Policy{{0}}}, cfg);
  const CompatibleSet set = CompatiblePairs(index);
  EXPECT_EQ(set.pairs.size(), [&] {
    size_t n = 0;
    for (const auto& p : index.planners()) {
      for (const auto& r : index.rewards()) n += p.cost + r.cost <= 5;
    }
    return n;
  }());
  const Prop2Verdict v = CheckProp2(index, set, 2);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.k_min, 2);
}

TEST(Prop3Test, HoldsOnTwoStateChain) {
  const auto& [index, set] = B8();
  const Prop3Verdict v = CheckProp3(index, set, 2);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.worst_gap, 2);
  EXPECT_FALSE(CheckProp3(index, set, 1).holds);
}

TEST(PosteriorTest, PowerOfTwoWeights) {
  const auto rows = SimplicityPosterior({{"b", 4}, {"a", 1}});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].name, "a");
  EXPECT_EQ(rows[0].mass, Rational(8, 9));
  EXPECT_EQ(rows[1].mass, Rational(1, 9));
}

TEST(PosteriorTest, SinglePairAndTies) {
  EXPECT_EQ(SimplicityPosterior({{"only", 7}}).front().mass, 1);
  const auto tied = SimplicityPosterior({{"x", 3}, {"y", 3}});
  EXPECT_EQ(tied[0].name, "x");
  EXPECT_EQ(tied[0].mass, Rational(1, 2));
  EXPECT_THROW(SimplicityPosterior(std::vector<std::pair<std::string, int>>{}),
               std::invalid_argument);
}

TEST(PosteriorTest, MassSumsToOneOverCompatibleClasses) {
  const auto& [index, set] = B8();
  const auto rows = SimplicityPosterior(index, set);
  EXPECT_EQ(rows.size(), set.classes.size());
  Rational total;
  for (const auto& row : rows) total += row.mass;
  EXPECT_EQ(total, 1);
  EXPECT_EQ(rows.front().name, "(EMITPIHAT, ZERO)");
  const Rational deg = DegenerateMass(index, set);
  EXPECT_GT(deg, 0);
  EXPECT_LT(deg, 1);
}

TEST(PosteriorTest, ReasonableProxyIsFarFromMinimum) {
  const auto& [index, set] = B8();
  const ReasonableProxy proxy = ReasonablePairProxy(index, set);
  EXPECT_EQ(proxy.length, 1 + 5);  // OPT plus a 4-entry table literal
  EXPECT_EQ(proxy.k_min, 2);
  EXPECT_EQ(proxy.gap, proxy.length - proxy.k_min);
}

TEST(AliceTest, TwoAlgorithmsSameActionOppositeValues) {
  const AliceReport r = AliceScenario();
  EXPECT_EQ(r.action_one, kCall);
  EXPECT_EQ(r.action_two, kCall);
  EXPECT_EQ(r.policy_one, r.policy_two);
  EXPECT_EQ(r.love, -r.money);
  EXPECT_TRUE(r.money_pair_compatible);
  EXPECT_TRUE(r.love_pair_compatible);
  EXPECT_EQ(r.k_money, r.k_love);
  ASSERT_EQ(r.posterior.size(), 2u);
  EXPECT_EQ(r.posterior[0].mass, Rational(1, 2));
  EXPECT_EQ(r.posterior[1].mass, Rational(1, 2));
  EXPECT_EQ(r.algorithm_one.size(), r.algorithm_two.size());
}

TEST(AliceTest, BeliefsDifferOnlyInWinProbability) {
  const AliceReport r = AliceScenario();
  EXPECT_NE(r.money_belief.transition, r.player_belief.transition);
  EXPECT_TRUE(ValidateMdpr(r.money_belief));
  EXPECT_TRUE(ValidateMdpr(r.player_belief));
  EXPECT_EQ(r.money_belief.T(0, kCall, 1), Rational(989, 990));
  EXPECT_EQ(r.player_belief.T(0, kCall, 1), Rational(1, 5));
}

}  // namespace
}  // namespace rdlab
