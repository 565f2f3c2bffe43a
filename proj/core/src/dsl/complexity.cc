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

#include <algorithm>
#include <cmath>
#include <limits>

namespace rdlab::dsl {
namespace {

// Appends `program` (index i) to the class keyed by `key`, creating it if
// needed. Programs arrive in (cost, lexicographic) order, so the first
// member is the witness.
template <typename Key>
size_t Classify(std::map<Key, size_t>& lookup, std::vector<ProgramClass>& classes,
                const Key& key, const Program& program, size_t i) {
  auto [it, inserted] = lookup.try_emplace(key, classes.size());
  if (inserted) {
    classes.push_back(ProgramClass{program.cost, program, {}});
  }
  classes[it->second].members.push_back(i);
  return it->second;
}

Program RawProgram(Kind kind, std::vector<Token> tokens,
                   const LanguageConfig& cfg) {
  Program p;
  p.kind = kind;
  for (const auto& t : tokens) p.cost += TokenCost(t, cfg);
  p.tokens = std::move(tokens);
  return p;
}

double Log2(long steps) { return std::log2(static_cast<double>(steps)); }

}  // namespace

std::string ComplexityReport::FormatK() const {
  if (k) return std::to_string(*k);
  return "> " + std::to_string(budget);
}

ComplexityIndex::ComplexityIndex(Environment env, LanguageConfig cfg)
    : env_(std::move(env)), cfg_(std::move(cfg)), interp_(env_, cfg_) {
  ValidateConfig(cfg_);
  const Shape shape = env_.shape();
  Enumerator enumerator(cfg_, shape);

  Enumeration rewards = enumerator.Enumerate(Kind::kReward, cfg_.budget);
  Enumeration planners = enumerator.Enumerate(Kind::kPlanner, cfg_.budget);
  Enumeration policies = enumerator.Enumerate(Kind::kPolicy, cfg_.budget);
  truncated_ = rewards.truncated || planners.truncated || policies.truncated;
  rewards_ = std::move(rewards.programs);
  planners_ = std::move(planners.programs);
  policies_ = std::move(policies.programs);

  reward_class_of_.reserve(rewards_.size());
  for (size_t i = 0; i < rewards_.size(); ++i) {
    RewardTable table = interp_.Table(rewards_[i]).value;
    const size_t before = reward_classes_.size();
    const size_t c =
        Classify(reward_lookup_, reward_classes_, table.values, rewards_[i], i);
    if (reward_classes_.size() != before) {
      reward_class_tables_.push_back(std::move(table));
    }
    reward_class_of_.push_back(c);
  }

  for (size_t i = 0; i < policies_.size(); ++i) {
    const Policy pi = interp_.PolicyOf(policies_[i]).value;
    Classify(policy_lookup_, policy_classes_, pi.action, policies_[i], i);
  }

  // Probe rewards for planner identity.
  const std::vector<Policy> all_policies =
      EnumeratePolicies(shape, std::numeric_limits<size_t>::max() / 4);
  const size_t n_literals = cfg_.table_literals.size();
  double grid = 1;
  for (int k = 0; k < shape.cells(); ++k) grid *= static_cast<double>(n_literals);
  const auto cap = static_cast<double>(cfg_.probe_cap);
  if (grid + static_cast<double>(all_policies.size()) <= cap) {
    std::vector<size_t> digits(static_cast<size_t>(shape.cells()), 0);
    while (true) {
      RewardTable t(shape);
      for (size_t k = 0; k < digits.size(); ++k) {
        t.values[k] = cfg_.table_literals[digits[k]];
      }
      probe_tables_.push_back(std::move(t));
      size_t k = digits.size();
      while (k > 0 && ++digits[k - 1] == n_literals) digits[--k] = 0;
      if (k == 0) break;
    }
  } else {
    if (shape.cells() < 62 && std::ldexp(1.0, shape.cells()) <= cap / 2) {
      for (unsigned long long v = 0; v < (1ull << shape.cells()); ++v) {
        probe_tables_.push_back(SignVertex(shape, v));
      }
    }
    probe_tables_.push_back(RewardTable(shape));
    for (const Policy& q : all_policies) {
      if (probe_tables_.size() + 2 > cfg_.probe_cap / 2) break;
      probe_tables_.push_back(RewardFromPolicy(q, shape.n_actions));
      probe_tables_.push_back(-RewardFromPolicy(q, shape.n_actions));
    }
  }
  for (const auto& t : probe_tables_) probes_.push_back(TableProgram(t, cfg_));
  // WPRIME tells `WRAP q` apart from its table; NEGP turns `WRAP q` into
  // `NEG WRAP q` and back, so both forms are probed.
  for (const Policy& q : all_policies) {
    if (probes_.size() + 2 > cfg_.probe_cap) break;
    std::vector<Token> tokens;
    tokens.emplace_back(Op::kWrap);
    tokens.emplace_back(Op::kPolTbl, q.action);
    probes_.push_back(RawProgram(Kind::kReward, tokens, cfg_));
    probe_tables_.push_back(RewardFromPolicy(q, shape.n_actions));
    tokens.insert(tokens.begin(), Token(Op::kNeg));
    probes_.push_back(RawProgram(Kind::kReward, std::move(tokens), cfg_));
    probe_tables_.push_back(-RewardFromPolicy(q, shape.n_actions));
  }

  planner_class_of_.reserve(planners_.size());
  for (size_t i = 0; i < planners_.size(); ++i) {
    planner_class_of_.push_back(Classify(planner_lookup_, planner_classes_,
                                         Signature(planners_[i]), planners_[i],
                                         i));
  }
}

std::optional<size_t> ComplexityIndex::RewardClass(
    const RewardTable& table) const {
  if (auto it = reward_lookup_.find(table.values); it != reward_lookup_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::optional<size_t> ComplexityIndex::PlannerClass(
    const PlannerSignature& sig) const {
  if (auto it = planner_lookup_.find(sig); it != planner_lookup_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::optional<size_t> ComplexityIndex::PolicyClass(const Policy& pi) const {
  if (auto it = policy_lookup_.find(pi.action); it != policy_lookup_.end()) {
    return it->second;
  }
  return std::nullopt;
}

PlannerSignature ComplexityIndex::Signature(const Program& planner) const {
  PlannerSignature sig;
  sig.reserve(probes_.size() * static_cast<size_t>(env_.mdp.n_states));
  for (const auto& probe : probes_) {
    const Policy pi = interp_.ApplyPlanner(planner, probe).value;
    sig.insert(sig.end(), pi.action.begin(), pi.action.end());
  }
  return sig;
}

PlannerSignature ComplexityIndex::Signature(const Planner& planner) const {
  if (const auto* prog = std::get_if<ProgramPlanner>(&planner.variant())) {
    return Signature(prog->program);
  }
  PlannerSignature sig;
  sig.reserve(probes_.size() * static_cast<size_t>(env_.mdp.n_states));
  for (const auto& table : probe_tables_) {
    const Policy pi = ApplyPlanner(planner, table);
    sig.insert(sig.end(), pi.action.begin(), pi.action.end());
  }
  return sig;
}

ComplexityReport ComplexityIndex::FromClass(
    const std::optional<size_t>& c,
    const std::vector<ProgramClass>& classes) const {
  ComplexityReport report;
  report.budget = cfg_.budget;
  if (!c) {
    report.exhausted = true;
    return report;
  }
  report.k = classes[*c].cost;
  report.witness = {classes[*c].witness};
  return report;
}

ComplexityReport ComplexityIndex::K(const RewardTable& target) const {
  return FromClass(RewardClass(target), reward_classes_);
}

ComplexityReport ComplexityIndex::K(const Policy& target) const {
  return FromClass(PolicyClass(target), policy_classes_);
}

ComplexityReport ComplexityIndex::K(const Planner& target) const {
  return FromClass(PlannerClass(Signature(target)), planner_classes_);
}

ComplexityReport ComplexityIndex::K(const Program& planner_program) const {
  return FromClass(PlannerClass(Signature(planner_program)), planner_classes_);
}

ComplexityReport ComplexityIndex::K(const Decomposition& target) const {
  const ComplexityReport p = K(target.planner);
  const ComplexityReport r = K(target.reward);
  ComplexityReport report;
  report.budget = cfg_.budget;
  if (!p.k || !r.k) {
    report.exhausted = true;
    return report;
  }
  report.k = *p.k + *r.k;
  report.witness = {p.witness.front(), r.witness.front()};
  return report;
}

std::optional<int> ComplexityIndex::K(const PairClass& pair) const {
  return planner_classes_[pair.planner].cost +
         reward_classes_[pair.reward].cost;
}

ComplexityIndex::Realization ComplexityIndex::Realize(
    const Program& planner, const Program& reward) const {
  Realization out;
  out.length = planner.cost + reward.cost;
  out.steps = interp_.ApplyPlanner(planner, reward).steps;
  out.kt = out.length + Log2(out.steps);
  out.kT = out.length + static_cast<double>(out.steps);
  return out;
}

ComplexityIndex::Realization ComplexityIndex::Realize(
    const Program& policy) const {
  Realization out;
  out.length = policy.cost;
  out.steps = interp_.PolicyOf(policy).steps;
  out.kt = out.length + Log2(out.steps);
  out.kT = out.length + static_cast<double>(out.steps);
  return out;
}

ComplexityReport ComplexityIndex::TimeBounded(const Policy& target) const {
  ComplexityReport report = K(target);
  if (!report.k) return report;
  const ProgramClass& cls = policy_classes_[*PolicyClass(target)];
  for (size_t i : cls.members) {
    const Realization r = Realize(policies_[i]);
    if (!report.kt || r.kt < *report.kt) {
      report.kt = r.kt;
      report.steps = r.steps;
      report.witness = {policies_[i]};
    }
    if (!report.kT || r.kT < *report.kT) report.kT = r.kT;
  }
  return report;
}

ComplexityReport ComplexityIndex::TimeBounded(const PairClass& pair) const {
  ComplexityReport report;
  report.budget = cfg_.budget;
  report.k = K(pair);
  report.witness = {planner_classes_[pair.planner].witness,
                    reward_classes_[pair.reward].witness};
  for (size_t pi : planner_classes_[pair.planner].members) {
    for (size_t ri : reward_classes_[pair.reward].members) {
      const Realization r = Realize(planners_[pi], rewards_[ri]);
      if (!report.kt || r.kt < *report.kt) {
        report.kt = r.kt;
        report.steps = r.steps;
        report.witness = {planners_[pi], rewards_[ri]};
      }
      if (!report.kT || r.kT < *report.kT) report.kT = r.kT;
    }
  }
  return report;
}

ComplexityReport ComplexityIndex::TimeBounded(
    const Decomposition& target) const {
  const auto p = PlannerClass(Signature(target.planner));
  const auto r = RewardClass(target.reward);
  if (!p || !r) {
    ComplexityReport report;
    report.budget = cfg_.budget;
    report.exhausted = true;
    return report;
  }
  return TimeBounded(PairClass{*p, *r});
}

std::optional<PairClass> CompositeClass(const ComplexityIndex& index, int i,
                                        const PairClass& pair) {
  const Program& p = index.planner_classes()[pair.planner].witness;
  const Program& r = index.reward_classes()[pair.reward].witness;
  const Policy pi = index.interpreter().ApplyPlanner(p, r).value;
  const Shape shape = index.env().shape();

  PlannerSignature sig;
  RewardTable reward;
  switch (i) {
    case 1:
      sig = index.Signature(Planner::Indifferent(pi));
      reward = RewardTable(shape);
      break;
    case 2:
      sig = index.Signature(Planner::Greedy());
      reward = RewardFromPolicy(pi, shape.n_actions);
      break;
    case 3:
      sig = index.Signature(rdlab::NegatePlanner(Planner::Greedy()));
      reward = -RewardFromPolicy(pi, shape.n_actions);
      break;
    case 4:
      sig = index.Signature(dsl::NegatePlanner(p, index.config()));
      reward = -index.RewardClassTable(pair.reward);
      break;
    default:
      throw std::out_of_range("composite operations are F1..F4");
  }
  const auto pc = index.PlannerClass(sig);
  const auto rc = index.RewardClass(reward);
  if (!pc || !rc) return std::nullopt;
  return PairClass{*pc, *rc};
}

std::optional<int> KOfComposite(const ComplexityIndex& index, int i,
                                const PairClass& pair) {
  const auto c = CompositeClass(index, i, pair);
  if (!c) return std::nullopt;
  return index.K(*c);
}

FComplexityReport FComplexity(const ComplexityIndex& index,
                              std::span<const PairClass> compatible_pairs) {
  FComplexityReport report;
  report.per_op.fill(std::numeric_limits<int>::min());
  bool first = true;
  for (const PairClass& pair : compatible_pairs) {
    const int base = *index.K(pair);
    for (int i = 1; i <= 4; ++i) {
      const auto k = KOfComposite(index, i, pair);
      if (!k) {
        report.lower_bound = true;
        continue;
      }
      const int increase = *k - base;
      auto& slot = report.per_op[static_cast<size_t>(i - 1)];
      slot = std::max(slot, increase);
      if (first || increase > report.value) {
        report.value = increase;
        report.argmax = pair;
        report.argmax_op = i;
        first = false;
      }
    }
  }
  // F4 is an involution, so the maximum is never negative.
  report.value = std::max(report.value, 0);
  return report;
}

}  // namespace rdlab::dsl
