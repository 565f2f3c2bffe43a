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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "rdlab/dsl/complexity.h"
#include "rdlab/experiments.h"
#include "rdlab/override.h"
#include "rdlab/planner.h"
#include "rdlab/random_instances.h"
#include "rdlab/runner.h"
#include "rdlab/scenario.h"

namespace rdlab {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

dsl::Environment M2() {
  const ScenarioFile s = LoadScenario(fs::path(RDLAB_SCENARIO_DIR) / "m2.scn");
  return {s.environment, s.policy};
}

dsl::LanguageConfig V1(int budget) {
  dsl::LanguageConfig cfg;
  cfg.budget = budget;
  return cfg;
}

const dsl::ComplexityIndex& IndexB8() {
  static const dsl::ComplexityIndex index(M2(), V1(8));
  return index;
}

const CompatibleSet& SetB8() {
  static const CompatibleSet set = CompatiblePairs(IndexB8());
  return set;
}

Outcome Ac1() {
  const auto t0 = Clock::now();
  Rng rng(1001);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const Mdpr m = RandomMdpr(rng, {5, 4, 5, 0});
    const Policy pi = RandomPolicy(rng, m.shape());
    for (const auto& [name, d] : DegeneratePairs({m, pi})) {
      if (ApplyPlanner(d.planner, d.reward) != pi) ++failures;
    }
  }
  const double secs = Seconds(t0);
  std::ostringstream out;
  out << failures << " failures in 600 pairs, " << secs << " s";
  return {failures == 0 && secs < 5.0, out.str()};
}

Outcome Ac2() {
  Rng rng(1002);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const Mdpr m = RandomMdpr(rng, {5, 4, 5, 0});
    const Policy pi = RandomPolicy(rng, m.shape());
    const RewardTable r = RandomReward(rng, m.shape());
    if (!IsCompatible({Planner::Indifferent(pi), r, std::nullopt}, pi)) {
      ++failures;
    }
  }
  return {failures == 0, std::to_string(failures) + " failures in 200 pairs"};
}

Outcome Ac3() {
  Rng rng(1003);
  std::vector<Mdpr> instances;
  for (int i = 0; i < 50; ++i) instances.push_back(RandomMdpr(rng, {6, 6, 4, 6}));

  // Vertex attainment first: sampled rewards never beat the vertex maximum.
  const auto t_sample = Clock::now();
  int sample_violations = 0;
  for (const Mdpr& m : instances) {
    const Policy pi = RandomPolicy(rng, m.shape());
    const Rational vertex_max = MaxRegretOverRewards(m, pi).value;
    for (int k = 0; k < 10000; ++k) {
      const RewardTable r = RandomReward(rng, m.shape(), 64);
      if (Regret(m, pi, r)[static_cast<size_t>(m.start_state)] > vertex_max) {
        ++sample_violations;
      }
    }
  }
  const double sample_secs = Seconds(t_sample);

  const auto t0 = Clock::now();
  int failures = 0;
  size_t checked = 0;
  for (const Mdpr& m : instances) {
    for (const Policy& pi : EnumeratePolicies(m.shape())) {
      ++checked;
      if (!VerifyHalfMaximal(m, pi).holds) ++failures;
    }
  }
  const double secs = Seconds(t0);
  std::ostringstream out;
  out << failures << " failures over " << checked << " policies, " << secs
      << " s; " << sample_violations << " sample violations in 5e5 draws ("
      << sample_secs << " s)";
  return {failures == 0 && sample_violations == 0 && secs < 60.0, out.str()};
}

Outcome Ac4() {
  const auto t0 = Clock::now();
  const auto& index = IndexB8();
  const auto& set = SetB8();
  const dsl::FComplexityReport f = dsl::FComplexity(index, set.classes);
  const Prop2Verdict v = CheckProp2(index, set, f.value);
  const double secs = Seconds(t0);
  const bool top =
      !set.classes.empty() &&
      PairName(index, set.classes.front()) == "(EMITPIHAT, ZERO)" &&
      v.k_min == 2;
  std::ostringstream out;
  out << "c*=" << f.value << (f.lower_bound ? " (lower bound)" : "")
      << ", K_min=" << v.k_min << ", degenerate K =";
  for (const auto& row : v.rows) out << ' ' << (row.k ? std::to_string(*row.k) : "?");
  out << ", " << secs << " s";
  return {!f.lower_bound && v.holds && !v.exhausted && top && secs < 300.0,
          out.str()};
}

Outcome Ac5() {
  const Prop3Verdict v = CheckProp3(IndexB8(), SetB8(), 2);
  std::ostringstream out;
  out << v.rows.size() << " pair classes, worst gap " << v.worst_gap;
  return {v.holds && !v.exhausted, out.str()};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Outcome Ac6() {
  const auto& index = IndexB8();
  const auto& set = SetB8();
  const auto rows = SimplicityPosterior(index, set);
  const Rational mass = DegenerateMass(index, set);
  const bool top = !rows.empty() && rows.front().name == "(EMITPIHAT, ZERO)";

  // Regenerate the report twice and compare bytes.
  const fs::path base = fs::temp_directory_path() / "rdlab_acceptance";
  std::string first, second;
  for (int i = 0; i < 2; ++i) {
    RunOptions o;
    o.experiments = {"posterior"};
    o.out_dir = base / std::to_string(i);
    const RunResult r = Run(fs::path(RDLAB_SCENARIO_DIR) / "m2.scn", o);
    (i ? second : first) = r.files.empty() ? "" : Slurp(r.files[0].csv);
  }
  const bool identical = !first.empty() && first == second;
  std::ostringstream out;
  out << "degenerate + F4 mass " << mass.get_str() << " ("
      << mass.get_d() * 100 << "%), top-1 " << (rows.empty() ? "-" : rows.front().name)
      << ", report " << (identical ? "byte-identical" : "differs");
  return {mass > Rational(1, 2) && top && identical, out.str()};
}

Outcome Ac7() {
  dsl::LanguageConfig cfg = V1(4);
  const dsl::ComplexityIndex index(M2(), cfg);
  const Shape shape = index.env().shape();
  const auto pair = index.Realize(dsl::ParseProgram("WPRIME ARGMAX", shape, cfg),
                                  dsl::ParseProgram("WRAP PIHATPOL", shape, cfg));
  const dsl::ComplexityReport bare = index.TimeBounded(index.env().observed);
  if (!bare.kt || !bare.kT || !bare.steps) return {false, "policy K out of budget"};
  const double slack = 3 + std::log2(2.0 * static_cast<double>(*bare.steps));
  const double dkt = pair.kt - *bare.kt, dkT = pair.kT - *bare.kT;
  std::ostringstream out;
  out << "Kt " << pair.kt << " vs " << *bare.kt << ", KT " << pair.kT << " vs "
      << *bare.kT << ", allowed " << slack;
  return {dkt <= slack && dkT <= slack, out.str()};
}

Outcome Ac8() {
  const fs::path dir(RDLAB_SCENARIO_DIR);
  const OverrideScenario rational =
      LoadScenario(dir / "override_rational.scn").Override();
  const OverrideScenario irrational =
      LoadScenario(dir / "override_irrational.scn").Override();
  bool ok = rational.epsilon == 0 && irrational.epsilon == Rational(1, 10);

  const Rational stay = AgentActionValue(rational, AgentAction::Stay());
  for (size_t i = 0; i < rational.candidates.size(); ++i) {
    ok &= AgentActionValue(rational, AgentAction::Override(i)) <= stay;
  }

  const BestOverride best = BestOverrideReward(irrational);
  const Rational stay_irr = AgentActionValue(irrational, AgentAction::Stay());
  const bool better = best.reward != irrational.human_reward && best.value > stay_irr;
  const Rational regret =
      best.candidate ? OverrideRegret(irrational, AgentAction::Override(*best.candidate))
                     : Rational(-1);
  ok &= better && regret > 0;

  // Decompositions of the overridden behaviour of a rational human.
  int decomposition_checks = 0;
  for (size_t t = 0; t < rational.candidates.size(); ++t) {
    if (OverriddenPolicy(rational, t) == rational.human_policy) continue;
    ++decomposition_checks;
    ok &= IsCompatible(rational, {OverridePlanner::kRational, RegretReward::kTwisted, t});
    ok &= IsCompatible(rational, {OverridePlanner::kPartial, RegretReward::kTwisted, t});
    ok &= IsCompatible(rational, {OverridePlanner::kPartial, RegretReward::kHuman, t});
    ok &= !IsCompatible(rational, {OverridePlanner::kRational, RegretReward::kHuman, t});
  }
  ok &= decomposition_checks > 0;
  std::ostringstream out;
  out << "stay " << stay.get_str() << "; irrational best " << best.name << " "
      << best.value.get_str() << " > " << stay_irr.get_str() << ", regret "
      << regret.get_str() << "; " << decomposition_checks
      << " candidates checked for decompositions";
  return {ok, out.str()};
}

Outcome Ac9() {
  const AliceReport r = AliceScenario();
  const bool ok = r.policy_one == r.policy_two && r.money_pair_compatible &&
                  r.love_pair_compatible && r.k_money == r.k_love &&
                  r.posterior.size() == 2 &&
                  r.posterior[0].mass == Rational(1, 2) &&
                  r.posterior[1].mass == Rational(1, 2);
  std::ostringstream out;
  out << "K " << r.k_money << " / " << r.k_love << ", posterior ";
  for (const auto& row : r.posterior) out << row.mass.get_str() << ' ';
  return {ok, out.str()};
}

}  // namespace
}  // namespace rdlab

int main() {
  using rdlab::Outcome;
  const std::pair<const char*, std::function<Outcome()>> checks[] = {
      {"AC1", rdlab::Ac1}, {"AC2", rdlab::Ac2}, {"AC3", rdlab::Ac3},
      {"AC4", rdlab::Ac4}, {"AC5", rdlab::Ac5}, {"AC6", rdlab::Ac6},
      {"AC7", rdlab::Ac7}, {"AC8", rdlab::Ac8}, {"AC9", rdlab::Ac9},
  };
  int failed = 0;
  for (const auto& [name, check] : checks) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %s  %s\n", name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
