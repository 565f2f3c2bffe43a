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

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rdlab {

using dsl::ComplexityIndex;
using dsl::PairClass;
using dsl::Program;

CompatibleSet CompatiblePairs(const ComplexityIndex& index) {
  CompatibleSet set;
  set.exhausted = index.truncated();
  const int budget = index.config().budget;
  const auto& planners = index.planners();
  const auto& rewards = index.rewards();
  const Policy& observed = index.env().observed;

  for (size_t pi = 0; pi < planners.size(); ++pi) {
    const Program& p = planners[pi];
    for (size_t ri = 0; ri < rewards.size(); ++ri) {
      const Program& r = rewards[ri];
      if (p.cost + r.cost > budget) break;  // rewards are sorted by cost
      if (index.interpreter().ApplyPlanner(p, r).value != observed) continue;
      const PairClass cls{index.PlannerClassOfProgram(pi),
                          index.RewardClassOfProgram(ri)};
      set.pairs.push_back(
          CompatiblePair{p, r, p.cost + r.cost, *index.K(cls), cls});
    }
  }
  // Planner programs are prefix-free, so ordering by planner then reward is
  // the lexicographic order of the concatenated token sequence.
  std::stable_sort(set.pairs.begin(), set.pairs.end(),
                   [](const CompatiblePair& x, const CompatiblePair& y) {
                     if (x.length != y.length) return x.length < y.length;
                     if (x.planner.tokens != y.planner.tokens) {
                       return x.planner.tokens < y.planner.tokens;
                     }
                     return x.reward.tokens < y.reward.tokens;
                   });
  for (size_t i = 0; i < set.pairs.size(); ++i) {
    if (set.first_pair.try_emplace(set.pairs[i].cls, i).second) {
      set.classes.push_back(set.pairs[i].cls);
    }
  }
  std::stable_sort(set.classes.begin(), set.classes.end(),
                   [&](const PairClass& x, const PairClass& y) {
                     const int kx = *index.K(x);
                     const int ky = *index.K(y);
                     if (kx != ky) return kx < ky;
                     const auto& px = index.planner_classes()[x.planner].witness;
                     const auto& py = index.planner_classes()[y.planner].witness;
                     if (px.tokens != py.tokens) return px.tokens < py.tokens;
                     return index.reward_classes()[x.reward].witness.tokens <
                            index.reward_classes()[y.reward].witness.tokens;
                   });
  return set;
}

std::string PairName(const ComplexityIndex& index, const PairClass& pair) {
  return "(" +
         dsl::PrintProgram(index.planner_classes()[pair.planner].witness) +
         ", " + dsl::PrintProgram(index.reward_classes()[pair.reward].witness) +
         ")";
}

std::vector<std::pair<std::string, Decomposition>> DegeneratePairs(
    const dsl::Environment& env) {
  const RewardTable indicator =
      RewardFromPolicy(env.observed, env.mdp.n_actions);
  std::vector<std::pair<std::string, Decomposition>> out;
  out.emplace_back("(indifferent, 0)",
                   Decomposition{Planner::Indifferent(env.observed),
                                 RewardTable(env.shape()), std::nullopt});
  out.emplace_back("(greedy, R_pi)",
                   Decomposition{Planner::Greedy(), indicator, std::nullopt});
  out.emplace_back("(anti-greedy, -R_pi)",
                   Decomposition{Planner::AntiGreedy(), -indicator, std::nullopt});
  return out;
}

namespace {

std::optional<PairClass> DegenerateClass(const ComplexityIndex& index,
                                         const CompatibleSet& set,
                                         const Decomposition& d) {
  const auto p = index.PlannerClass(index.Signature(d.planner));
  const auto r = index.RewardClass(d.reward);
  if (!p || !r) return std::nullopt;
  const PairClass cls{*p, *r};
  if (!set.first_pair.contains(cls)) return std::nullopt;
  return cls;
}

}  // namespace

Prop2Verdict CheckProp2(const ComplexityIndex& index, const CompatibleSet& set,
                        int c) {
  Prop2Verdict verdict;
  verdict.c = c;
  verdict.exhausted = set.exhausted || set.classes.empty();
  if (!set.classes.empty()) verdict.k_min = *index.K(set.classes.front());
  verdict.holds = !verdict.exhausted;
  for (const auto& [name, d] : DegeneratePairs(index.env())) {
    DegenerateRow row;
    row.name = name;
    row.cls = DegenerateClass(index, set, d);
    if (row.cls) {
      row.k = *index.K(*row.cls);
      row.margin = *row.k - verdict.k_min;
      row.holds = *row.margin <= c;
    } else {
      verdict.exhausted = true;
    }
    verdict.holds = verdict.holds && row.holds;
    verdict.rows.push_back(std::move(row));
  }
  return verdict;
}

Prop3Verdict CheckProp3(const ComplexityIndex& index, const CompatibleSet& set,
                        int c) {
  Prop3Verdict verdict;
  verdict.c = c;
  verdict.exhausted = set.exhausted;
  verdict.holds = true;
  for (const PairClass& cls : set.classes) {
    Prop3Row row;
    row.pair = cls;
    row.k = *index.K(cls);
    row.k_negated = dsl::KOfComposite(index, 4, cls);
    if (row.k_negated) {
      const int gap = std::abs(*row.k_negated - row.k);
      verdict.worst_gap = std::max(verdict.worst_gap, gap);
      row.holds = gap <= c;
    } else {
      verdict.exhausted = true;
    }
    verdict.holds = verdict.holds && row.holds;
    verdict.rows.push_back(std::move(row));
  }
  return verdict;
}

std::vector<PosteriorRow> SimplicityPosterior(
    const std::vector<std::pair<std::string, int>>& pairs) {
  if (pairs.empty()) {
    throw std::invalid_argument("posterior over an empty set of pairs");
  }
  Rational total = 0;
  for (const auto& [name, k] : pairs) total += Pow2Neg(k);
  std::vector<PosteriorRow> rows;
  rows.reserve(pairs.size());
  for (const auto& [name, k] : pairs) {
    rows.push_back(PosteriorRow{name, k, Pow2Neg(k) / total});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const PosteriorRow& x, const PosteriorRow& y) {
                     return x.mass > y.mass;
                   });
  return rows;
}

std::vector<PosteriorRow> SimplicityPosterior(const ComplexityIndex& index,
                                              const CompatibleSet& set) {
  std::vector<std::pair<std::string, int>> pairs;
  pairs.reserve(set.classes.size());
  for (const PairClass& cls : set.classes) {
    pairs.emplace_back(PairName(index, cls), *index.K(cls));
  }
  return SimplicityPosterior(pairs);
}

Rational DegenerateMass(const ComplexityIndex& index,
                        const CompatibleSet& set) {
  std::set<PairClass> family;
  for (const auto& [name, d] : DegeneratePairs(index.env())) {
    const auto cls = DegenerateClass(index, set, d);
    if (!cls) continue;
    family.insert(*cls);
    if (const auto image = dsl::CompositeClass(index, 4, *cls)) {
      family.insert(*image);
    }
  }
  Rational total = 0;
  Rational held = 0;
  for (const PairClass& cls : set.classes) {
    const Rational w = Pow2Neg(*index.K(cls));
    total += w;
    if (family.contains(cls)) held += w;
  }
  if (total == 0) return 0;
  return held / total;
}

ReasonableProxy ReasonablePairProxy(const ComplexityIndex& index,
                                    const CompatibleSet& set) {
  const auto& cfg = index.config();
  const Shape shape = index.env().shape();
  std::vector<dsl::Token> tokens;
  tokens.emplace_back(dsl::Op::kOpt);
  const Program planner = dsl::ParseProgram(std::move(tokens), shape, cfg);
  const Program reward = dsl::TableProgram(
      RewardFromPolicy(index.env().observed, shape.n_actions), cfg);
  ReasonableProxy proxy;
  proxy.name = "(" + dsl::PrintProgram(planner) + ", " +
               dsl::PrintProgram(reward) + ")";
  proxy.length = planner.cost + reward.cost;
  proxy.k_min = set.classes.empty() ? 0 : *index.K(set.classes.front());
  proxy.gap = proxy.length - proxy.k_min;
  return proxy;
}

}  // namespace rdlab
