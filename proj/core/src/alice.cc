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

#include <string>
#include <vector>

#include "rdlab/experiments.h"

namespace rdlab {
namespace {

// States of the one-hand poker decision.
constexpr int kDecide = 0;
constexpr int kWin = 1;
constexpr int kLose = 2;
constexpr int kFolded = 3;

// Alice calls or folds once; a call resolves into a win or a loss, and every
// outcome state absorbs for the rest of the episode.
Mdpr PokerModel(const Rational& p_win) {
  Mdpr m = Mdpr::Empty(4, 2, kDecide, 2);
  m.T(kDecide, kCall, kWin) = p_win;
  m.T(kDecide, kCall, kLose) = 1 - p_win;
  m.T(kDecide, kFold, kFolded) = 1;
  for (int s : {kWin, kLose, kFolded}) {
    for (int a : {kCall, kFold}) m.T(s, a, s) = 1;
  }
  return m;
}

}  // namespace

AliceReport AliceScenario() {
  AliceReport report;
  // Bob beats Alice's hand only with the one remaining pair of tens: one
  // holding out of C(45, 2) = 990.
  report.money_belief = PokerModel(Rational(989, 990));
  // Bob's betting reads as a strong hand: Alice wins one time in five.
  report.player_belief = PokerModel(Rational(1, 5));

  report.money = RewardTable(Shape{4, 2});
  for (int a : {kCall, kFold}) {
    report.money.at(kWin, a) = 1;
    report.money.at(kLose, a) = -1;
  }
  report.love = -report.money;

  report.algorithm_one = {"INPUTS", "CARD_ESTIMATE", "GT_HALF", "CALL", "FOLD"};
  report.algorithm_two = {"INPUTS", "PLAYER_ESTIMATE", "LT_HALF", "CALL",
                          "FOLD"};

  const Decomposition money{Planner::Rational(report.money_belief),
                            report.money, std::nullopt};
  const Decomposition love{Planner::Rational(report.player_belief),
                           report.love, std::nullopt};
  report.policy_one = ApplyPlanner(money.planner, money.reward);
  report.policy_two = ApplyPlanner(love.planner, love.reward);
  report.action_one = report.policy_one(kDecide);
  report.action_two = report.policy_two(kDecide);

  const Policy observed = Policy::Constant(4, kCall);
  report.money_pair_compatible = IsCompatible(money, observed);
  report.love_pair_compatible = IsCompatible(love, observed);

  // Each reward is written as a full table literal (1 + |S||A| tokens); the
  // two listings have the same length.
  const int table_cost = 1 + 4 * 2;
  report.k_money = static_cast<int>(report.algorithm_one.size()) + table_cost;
  report.k_love = static_cast<int>(report.algorithm_two.size()) + table_cost;
  report.posterior = SimplicityPosterior({{"(rational, R_money)", report.k_money},
                                          {"(opposite-belief, R_love)",
                                           report.k_love}});
  return report;
}

}  // namespace rdlab
