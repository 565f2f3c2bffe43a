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

#include "rdlab/dsl/complexity.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <memory>

#include "rdlab/experiments.h"
#include "rdlab/random_instances.h"

namespace rdlab::dsl {
namespace {

Environment M2() { return {TwoStateChain(2), Policy{{1, 0}}}; }

LanguageConfig WithBudget(int b) {
  LanguageConfig cfg;
  cfg.budget = b;
  return cfg;
}

const ComplexityIndex& IndexB(int b) {
  static std::map<int, std::unique_ptr<ComplexityIndex>> cache;
  auto& slot = cache[b];
  if (!slot) slot = std::make_unique<ComplexityIndex>(M2(), WithBudget(b));
  return *slot;
}

TEST(ComplexityTest, ZeroRewardIsOneToken) {
  const ComplexityReport r = IndexB(6).K(RewardTable({2, 2}));
  ASSERT_TRUE(r.k);
  EXPECT_EQ(*r.k, 1);
  EXPECT_EQ(PrintProgram(r.witness.front()), "ZERO");
}

TEST(ComplexityTest, ObservedIndicatorIsTwoTokens) {
  const Environment env = M2();
  const ComplexityReport r = IndexB(6).K(RewardFromPolicy(env.observed, 2));
  ASSERT_TRUE(r.k);
  EXPECT_EQ(*r.k, 2);
  EXPECT_EQ(PrintProgram(r.witness.front()), "WRAP PIHATPOL");
}

TEST(ComplexityTest, IndifferentZeroPair) {
  const Environment env = M2();
  const Decomposition d{Planner::Indifferent(env.observed), RewardTable({2, 2}),
                        std::nullopt};
  const ComplexityReport r = IndexB(6).K(d);
  ASSERT_TRUE(r.k);
  EXPECT_EQ(*r.k, 2);
}

TEST(ComplexityTest, GreedyIsOneToken) {
  const ComplexityReport r = IndexB(6).K(Planner::Greedy());
  ASSERT_TRUE(r.k);
  EXPECT_EQ(*r.k, 1);
  EXPECT_EQ(PrintProgram(r.witness.front()), "ARGMAX");
}

TEST(ComplexityTest, OutOfBudgetReadsGreaterThanB) {
  // A table outside the enumerated literal alphabet is never reached.
  RewardTable odd({2, 2});
  odd.at(0, 0) = Rational(1, 3);
  const ComplexityReport r = IndexB(4).K(odd);
  EXPECT_FALSE(r.k);
  EXPECT_EQ(r.FormatK(), "> 4");
}

TEST(ComplexityTest, RewardWitnessesAreSoundAndShortest) {
  const ComplexityIndex& index = IndexB(6);
  const auto& classes = index.reward_classes();
  for (size_t c = 0; c < classes.size(); ++c) {
    const ProgramClass& pc = classes[c];
    EXPECT_EQ(index.interpreter().Table(pc.witness).value,
              index.RewardClassTable(c));
    EXPECT_EQ(pc.witness.cost, pc.cost);
    for (size_t m : pc.members) {
      EXPECT_GE(index.rewards()[m].cost, pc.cost);
      EXPECT_EQ(index.RewardClassOfProgram(m), c);
    }
  }
}

TEST(ComplexityTest, PlannerWitnessesShareSignature) {
  const ComplexityIndex& index = IndexB(6);
  for (const ProgramClass& pc : index.planner_classes()) {
    const PlannerSignature sig = index.Signature(pc.witness);
    for (size_t m : pc.members) {
      EXPECT_EQ(index.Signature(index.planners()[m]), sig);
      EXPECT_GE(index.planners()[m].cost, pc.cost);
    }
  }
}

TEST(ComplexityTest, KIsStableAsBudgetGrows) {
  const ComplexityIndex& small = IndexB(6);
  const ComplexityIndex& large = IndexB(8);
  EXPECT_GE(large.reward_classes().size(), small.reward_classes().size());
  for (size_t c = 0; c < small.reward_classes().size(); ++c) {
    const ComplexityReport k = large.K(small.RewardClassTable(c));
    ASSERT_TRUE(k.k);
    EXPECT_EQ(*k.k, small.reward_classes()[c].cost);
  }
}

TEST(ComplexityTest, TimeBoundedOrdering) {
  const ComplexityIndex& index = IndexB(6);
  const ComplexityReport r = index.TimeBounded(index.env().observed);
  ASSERT_TRUE(r.k && r.kt && r.kT && r.steps);
  EXPECT_LE(*r.k, *r.kt);
  EXPECT_LE(*r.kt, *r.kT);
  EXPECT_EQ(*r.k, 1);      // PIHATPOL
  EXPECT_EQ(*r.steps, 2);  // one lookup per state
  EXPECT_DOUBLE_EQ(*r.kt, 2.0);
  EXPECT_DOUBLE_EQ(*r.kT, 3.0);
}

TEST(ComplexityTest, WrapperShortcutsArgmaxLoop) {
  const ComplexityIndex& index = IndexB(6);
  const Shape shape{2, 2};
  const LanguageConfig& cfg = index.config();
  const auto wrapped = index.Realize(ParseProgram("WPRIME ARGMAX", shape, cfg),
                                     ParseProgram("WRAP PIHATPOL", shape, cfg));
  EXPECT_EQ(wrapped.length, 4);
  EXPECT_EQ(wrapped.steps, 2 + 2);
  EXPECT_DOUBLE_EQ(wrapped.kt, 4 + std::log2(4.0));
  EXPECT_DOUBLE_EQ(wrapped.kT, 8.0);

  const auto loop = index.Realize(ParseProgram("ARGMAX", shape, cfg),
                                  ParseProgram("EQ PIHAT S A", shape, cfg));
  EXPECT_EQ(loop.length, 5);
  EXPECT_EQ(loop.steps, 1 + 4 * 4);

  const auto direct = index.Realize(ParseProgram("PIHATPOL", shape, cfg));
  EXPECT_EQ(direct.length, 1);
  EXPECT_EQ(direct.steps, 2);
  // Running the policy directly is cheaper than any pair that produces it.
  EXPECT_LT(direct.kT, wrapped.kT);
  EXPECT_EQ(wrapped.length - direct.length, 3);
}

TEST(ComplexityTest, PairTimeBoundedAtLeastLength) {
  const ComplexityIndex& index = IndexB(6);
  const CompatibleSet set = CompatiblePairs(index);
  size_t checked = 0;
  for (const PairClass& pc : set.classes) {
    if (++checked > 40) break;
    const ComplexityReport r = index.TimeBounded(pc);
    ASSERT_TRUE(r.k && r.kt && r.kT);
    EXPECT_LE(*index.K(pc), *r.k);
    EXPECT_LE(*r.k, *r.kt);
    EXPECT_LE(*r.kt, *r.kT);
  }
}

TEST(ComplexityTest, FComplexityOnTwoStateChain) {
  const ComplexityIndex& index = IndexB(8);
  const CompatibleSet set = CompatiblePairs(index);
  const FComplexityReport f = FComplexity(index, set.classes);
  EXPECT_GE(f.value, 0);
  EXPECT_EQ(f.value, 2);
  EXPECT_FALSE(f.lower_bound);
  for (int v : f.per_op) EXPECT_LE(v, f.value);
  EXPECT_GE(f.argmax_op, 1);
  EXPECT_LE(f.argmax_op, 4);
}

TEST(ComplexityTest, NegationIsAnInvolutionOnClasses) {
  const ComplexityIndex& index = IndexB(8);
  const CompatibleSet set = CompatiblePairs(index);
  for (const PairClass& pc : set.classes) {
    const auto neg = CompositeClass(index, 4, pc);
    if (!neg) continue;
    const auto back = CompositeClass(index, 4, *neg);
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, pc) << "at " << PairName(index, pc);
  }
}

TEST(ComparableComplexityTest, SymmetricAndReflexive) {
  for (int a = 0; a < 8; ++a) {
    EXPECT_TRUE(ComparableComplexity(a, a, 0));
    for (int b = 0; b < 8; ++b) {
      for (int c = 0; c < 4; ++c) {
        EXPECT_EQ(ComparableComplexity(a, b, c), ComparableComplexity(b, a, c));
        EXPECT_EQ(ComparableComplexity(a, b, c), std::abs(a - b) <= c);
      }
    }
  }
}

}  // namespace
}  // namespace rdlab::dsl
