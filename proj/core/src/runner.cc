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

#include "rdlab/runner.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "rdlab/override.h"
#include "rdlab/random_instances.h"

namespace rdlab {
namespace {

std::string Tag(bool ok) { return ok ? "holds" : "fails"; }

void Fold(ExperimentReport& report, bool ok) {
  if (!ok && report.verdict == Verdict::kHolds) report.verdict = Verdict::kFails;
}

void Exhaust(ExperimentReport& report) { report.verdict = Verdict::kExhausted; }

ExperimentReport Begin(const Lab& lab, std::string experiment) {
  ExperimentReport report;
  report.experiment = std::move(experiment);
  report.scenario = lab.scenario().id;
  return report;
}

std::string ShapeText(const Mdpr& m) {
  return std::to_string(m.n_states) + "x" + std::to_string(m.n_actions) +
         " H=" + std::to_string(m.horizon);
}

// Degenerate pairs, indifferent pairs and the half-maximal bound for one instance; appends
// rows prefixed by `label` and returns whether every check held.
bool NflChecks(const Mdpr& m, const Policy& pi, Rng& rng, int n_rewards,
               const std::string& label, bool detailed,
               ExperimentReport& report) {
  bool ok = true;
  const dsl::Environment env{m, pi};
  for (const auto& [name, d] : DegeneratePairs(env)) {
    const bool compatible = IsCompatible(d, pi);
    ok = ok && compatible;
    if (detailed) {
      const Rational reg =
          Regret(m, ApplyPlanner(d.planner, d.reward), d.reward)
              [static_cast<size_t>(m.start_state)];
      report.rows.push_back({label + "degenerate " + name, std::nullopt,
                             std::nullopt, reg, std::nullopt,
                             compatible ? "compatible" : "incompatible"});
    }
  }
  bool indifferent_ok = true;
  for (int i = 0; i < n_rewards; ++i) {
    const RewardTable r = RandomReward(rng, m.shape());
    indifferent_ok = indifferent_ok &&
              IsCompatible({Planner::Indifferent(pi), r, std::nullopt}, pi);
  }
  ok = ok && indifferent_ok;
  if (detailed) {
    report.rows.push_back({label + "(indifferent, R) x" +
                               std::to_string(n_rewards),
                           std::nullopt, std::nullopt, std::nullopt,
                           std::nullopt, indifferent_ok ? "compatible" : "incompatible"});
  }
  if (m.shape().cells() > 16) {
    report.rows.push_back({label + "half-maximal " + ShapeText(m), std::nullopt,
                           std::nullopt, std::nullopt, std::nullopt,
                           "skipped (|S||A| > 16)"});
    return ok;
  }
  const HalfMaximalReport half = VerifyHalfMaximal(m, pi);
  ok = ok && half.holds;
  report.rows.push_back({label + "half-maximal " + ShapeText(m), std::nullopt,
                         std::nullopt, half.lhs, half.lhs - half.rhs,
                         Tag(half.holds && ok)});
  return ok;
}

}  // namespace

Lab::Lab(const ScenarioFile& scenario) : scenario_(scenario) {}

const dsl::ComplexityIndex& Lab::index() {
  if (!index_) {
    index_ = std::make_unique<dsl::ComplexityIndex>(
        dsl::Environment{scenario_.environment, scenario_.policy},
        scenario_.language);
  }
  return *index_;
}

const CompatibleSet& Lab::compatible() {
  if (!compatible_) compatible_ = CompatiblePairs(index());
  return *compatible_;
}

const dsl::FComplexityReport& Lab::f_complexity() {
  if (!f_) f_ = dsl::FComplexity(index(), compatible().classes);
  return *f_;
}

ExperimentReport NflExperiment(Lab& lab) {
  ExperimentReport report = Begin(lab, "nfl");
  const ScenarioFile& sc = lab.scenario();
  Rng rng(sc.seed);
  bool ok = NflChecks(sc.environment, sc.policy, rng, 20, "", true, report);
  if (sc.environment.shape().cells() <= 16) {
    const RegretExtreme worst = MaxRegretOverRewards(sc.environment, sc.policy);
    std::string witness;
    for (const auto& v : worst.witness.values) {
      witness += (witness.empty() ? "" : " ") + FormatRational(v);
    }
    report.notes.push_back("max regret of pi_dot over rewards: " +
                           FormatRational(worst.value) + " (witness " +
                           witness + ")");
  }
  InstanceLimits limits;
  limits.max_cells = 6;
  int held = 0;
  for (int i = 0; i < sc.sweep; ++i) {
    const Mdpr m = RandomMdpr(rng, limits);
    const Policy pi = RandomPolicy(rng, m.shape());
    const bool one = NflChecks(m, pi, rng, 5,
                               "random " + std::to_string(i) + " ", false, report);
    held += one ? 1 : 0;
    ok = ok && one;
  }
  report.notes.push_back("random sweep: " + std::to_string(held) + "/" +
                         std::to_string(sc.sweep) + " instances hold (seed " +
                         std::to_string(sc.seed) + ")");
  Fold(report, ok);
  return report;
}

ExperimentReport Prop2Experiment(Lab& lab) {
  ExperimentReport report = Begin(lab, "prop2");
  const auto& index = lab.index();
  const auto& set = lab.compatible();
  report.compatible_pairs = set.pairs.size();
  const auto& f = lab.f_complexity();
  const Prop2Verdict v = CheckProp2(index, set, f.value);
  report.rows.push_back({"k_min", v.k_min, std::nullopt, std::nullopt,
                         std::nullopt, set.classes.empty() ? "none" : ""});
  report.rows.push_back({"f_complexity", f.value, std::nullopt, std::nullopt,
                         std::nullopt, f.lower_bound ? "lower bound" : "exact"});
  for (const auto& row : v.rows) {
    std::optional<Rational> margin;
    if (row.margin) margin = Rational(*row.margin);
    report.rows.push_back(
        {row.name, row.k, std::nullopt, std::nullopt, margin,
         row.k ? Tag(row.holds) : "> B=" + std::to_string(index.config().budget)});
  }
  report.notes.push_back("budget B: " + std::to_string(index.config().budget));
  report.notes.push_back("distinct compatible denotations: " +
                         std::to_string(set.classes.size()));
  if (!set.classes.empty()) {
    report.notes.push_back("least complex: " +
                           PairName(index, set.classes.front()) + " K=" +
                           std::to_string(v.k_min));
  }
  std::string per_op = "f_complexity per F1..F4:";
  for (int x : f.per_op) per_op += " " + std::to_string(x);
  report.notes.push_back(per_op);
  if (!set.classes.empty()) {
    report.notes.push_back("attained by F" + std::to_string(f.argmax_op) +
                           " on " + PairName(index, f.argmax));
  }
  Fold(report, v.holds);
  // A failure against a lower-bound c is undecided, not refuted.
  if (v.exhausted || (!v.holds && f.lower_bound)) Exhaust(report);
  return report;
}

ExperimentReport Prop3Experiment(Lab& lab) {
  ExperimentReport report = Begin(lab, "prop3");
  const auto& index = lab.index();
  const auto& set = lab.compatible();
  report.compatible_pairs = set.pairs.size();
  const auto& f = lab.f_complexity();
  const Prop3Verdict v = CheckProp3(index, set, f.value);
  for (const auto& row : v.rows) {
    std::optional<Rational> margin;
    if (row.k_negated) margin = Rational(*row.k_negated - row.k);
    report.rows.push_back({PairName(index, row.pair), row.k, std::nullopt,
                           std::nullopt, margin,
                           row.k_negated ? Tag(row.holds) : "negation > B"});
  }
  report.notes.push_back("c (measured f_complexity): " + std::to_string(f.value));
  report.notes.push_back("worst |K(-p,-R) - K(p,R)|: " +
                         std::to_string(v.worst_gap));
  Fold(report, v.holds);
  if (v.exhausted || (!v.holds && f.lower_bound)) Exhaust(report);
  return report;
}

ExperimentReport PosteriorExperiment(Lab& lab) {
  ExperimentReport report = Begin(lab, "posterior");
  const auto& index = lab.index();
  const auto& set = lab.compatible();
  report.compatible_pairs = set.pairs.size();
  if (set.classes.empty()) {
    report.notes.push_back("no compatible pair within the budget");
    Exhaust(report);
    return report;
  }
  const std::vector<PosteriorRow> posterior = SimplicityPosterior(index, set);
  Rational total = 0;
  for (const auto& row : posterior) {
    report.rows.push_back(
        {row.name, row.k, row.mass, std::nullopt, std::nullopt, ""});
    total += row.mass;
  }
  // The claim checked here: the indifferent planner with the zero reward is
  // the single most probable decomposition.
  const auto degenerate = DegeneratePairs(index.env());
  const auto p = index.PlannerClass(index.Signature(degenerate[0].second.planner));
  const auto r = index.RewardClass(degenerate[0].second.reward);
  const bool top_is_degenerate =
      p && r && PairName(index, dsl::PairClass{*p, *r}) == posterior.front().name;
  report.rows.front().verdict = top_is_degenerate ? "top-1" : "";
  const Rational held = DegenerateMass(index, set);
  report.notes.push_back("total mass: " + FormatRational(total));
  report.notes.push_back("top-1: " + posterior.front().name + " mass " +
                         FormatRational(posterior.front().mass) + " (" +
                         FormatDecimal(posterior.front().mass, 12) + ")");
  report.notes.push_back("degenerate pairs and their negations: mass " +
                         FormatRational(held) + " (" +
                         FormatDecimal(held, 12) + ")");
  const ReasonableProxy proxy = ReasonablePairProxy(index, set);
  report.notes.push_back(
      "reasonable-pair proxy (report only): " + proxy.name + " length " +
      std::to_string(proxy.length) + ", " + std::to_string(proxy.gap) +
      " above K_min");
  Fold(report, total == 1 && top_is_degenerate);
  if (set.exhausted) Exhaust(report);
  return report;
}

ExperimentReport OverrideExperiment(Lab& lab) {
  ExperimentReport report = Begin(lab, "override");
  const OverrideScenario scn = lab.scenario().Override();
  bool ok = true;

  const Rational stay = AgentActionValue(scn, AgentAction::Stay());
  const Rational stay_regret = OverrideRegret(scn, AgentAction::Stay());
  Rational min_regret = stay_regret;
  ok = ok && stay_regret >= 0;
  report.rows.push_back({"stay", std::nullopt, std::nullopt, stay_regret,
                         Rational(0), "value " + FormatRational(stay)});
  bool any_beats_stay = false;
  for (size_t i = 0; i < scn.candidates.size(); ++i) {
    const AgentAction a = AgentAction::Override(i);
    const Rational value = AgentActionValue(scn, a);
    const Rational regret = OverrideRegret(scn, a);
    ok = ok && regret >= 0;
    min_regret = std::min(min_regret, regret);
    any_beats_stay = any_beats_stay || value > stay;
    report.rows.push_back({"override " + scn.candidates[i].name, std::nullopt,
                           std::nullopt, regret, value - stay,
                           "value " + FormatRational(value)});
  }
  ok = ok && min_regret == 0;

  const BestOverride best = BestOverrideReward(scn);
  report.notes.push_back("epsilon: " + FormatRational(scn.epsilon));
  report.notes.push_back("value of staying: " + FormatRational(stay));
  report.notes.push_back("best override: " + best.name + " value " +
                         FormatRational(best.value) +
                         (best.value > stay ? " (beats staying)"
                                            : " (does not beat staying)"));

  const bool rational =
      OptimalPlan(scn.base, scn.human_reward).policy == scn.human_policy &&
      EvaluatePolicy(scn.base, scn.human_policy, scn.human_reward) ==
          OptimalPlan(scn.base, scn.human_reward).values;
  report.notes.push_back(std::string("human is ") +
                         (rational ? "rational" : "not rational") +
                         " for R_dot");
  if (rational && scn.epsilon == 0) {
    ok = ok && !any_beats_stay;
    report.notes.push_back(std::string("no override beats staying: ") +
                           Tag(!any_beats_stay));
  }
  if (!rational) {
    // Staying leaves the human with positive regret, which the definition
    // also labels an override.
    report.notes.push_back("note: staying leaves regret " +
                           FormatRational(stay_regret) +
                           " and is itself labelled an override");
  }

  // The decompositions of the mixed policy, for every candidate R^a. They
  // presuppose a human who is rational for R_dot on the unflagged half.
  for (size_t t = 0; rational && t < scn.candidates.size(); ++t) {
    const bool same = OverriddenPolicy(scn, t) == scn.human_policy;
    const std::vector<std::pair<OverrideDecomposition, bool>> expected = {
        {{OverridePlanner::kRational, RegretReward::kTwisted, t}, true},
        {{OverridePlanner::kPartial, RegretReward::kTwisted, t}, true},
        {{OverridePlanner::kPartial, RegretReward::kHuman, t}, true},
        {{OverridePlanner::kRational, RegretReward::kHuman, t}, same},
    };
    for (const auto& [d, want] : expected) {
      const bool got = IsCompatible(scn, d);
      ok = ok && got == want;
      std::optional<Rational> regret;
      std::string verdict = got ? "compatible" : "incompatible";
      if (got) {
        const AgentAction a = AgentAction::Override(t);
        regret = HumanRegret(scn, a, d.reward, t);
        verdict += DetectOverride(scn, d, a, scn.threshold)
                       ? ", override detected"
                       : ", no override";
      }
      report.rows.push_back({DescribeDecomposition(scn, d), std::nullopt,
                             std::nullopt, regret, std::nullopt, verdict});
    }
  }
  Fold(report, ok);
  return report;
}

ExperimentReport AliceExperiment(Lab& lab) {
  ExperimentReport report = Begin(lab, "alice");
  const AliceReport alice = AliceScenario();
  auto listing = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& w : v) out += (out.empty() ? "" : " ") + w;
    return out;
  };
  const auto action = [](int a) { return a == kCall ? "call" : "fold"; };
  for (const auto& row : alice.posterior) {
    const bool money = row.name.find("money") != std::string::npos;
    report.rows.push_back(
        {row.name, row.k, row.mass, std::nullopt, std::nullopt,
         std::string(action(money ? alice.action_one : alice.action_two)) +
             ((money ? alice.money_pair_compatible : alice.love_pair_compatible)
                  ? ", compatible"
                  : ", incompatible")});
  }
  report.notes.push_back("algorithm I: " + listing(alice.algorithm_one));
  report.notes.push_back("algorithm II: " + listing(alice.algorithm_two));
  const bool ok = alice.policy_one == alice.policy_two &&
                  alice.money_pair_compatible && alice.love_pair_compatible &&
                  alice.posterior.size() == 2 &&
                  alice.posterior[0].mass == Rational(1, 2) &&
                  alice.posterior[1].mass == Rational(1, 2);
  Fold(report, ok);
  return report;
}

ScenarioFile ApplyOptions(ScenarioFile scenario, const RunOptions& options) {
  if (options.lang_config) {
    scenario.language = LoadLanguageConfig(*options.lang_config);
  }
  if (options.budget) scenario.language.budget = *options.budget;
  if (options.max_enum) scenario.language.max_enum = *options.max_enum;
  if (options.seed) scenario.seed = *options.seed;
  if (!options.experiments.empty()) scenario.experiments = options.experiments;
  return scenario;
}

std::filesystem::path ResolveOutDir(const ScenarioFile& scenario,
                                    const RunOptions& options) {
  if (options.out_dir) return *options.out_dir;
  if (!scenario.out_dir.empty()) return scenario.out_dir;
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return "rdlab_out";
}

RunResult RunScenario(const ScenarioFile& scenario, const RunOptions& options) {
  RunResult result;
  const auto& known = KnownExperiments();
  for (const auto& name : scenario.experiments) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      result.exit_code = kExitParse;
      result.error = "unknown experiment '" + name + "'";
      return result;
    }
  }
  if (std::find(scenario.experiments.begin(), scenario.experiments.end(),
                "override") != scenario.experiments.end() &&
      !scenario.override_section) {
    result.exit_code = kExitParse;
    result.error = "the override experiment needs an override: section";
    return result;
  }
  const std::map<std::string, std::function<ExperimentReport(Lab&)>> table = {
      {"nfl", NflExperiment},         {"prop2", Prop2Experiment},
      {"prop3", Prop3Experiment},     {"posterior", PosteriorExperiment},
      {"override", OverrideExperiment}, {"alice", AliceExperiment}};
  const std::filesystem::path dir = ResolveOutDir(scenario, options);
  Lab lab(scenario);
  bool exhausted = false;
  bool failed = false;
  for (const auto& name : scenario.experiments) {
    ExperimentReport report;
    try {
      report = table.at(name)(lab);
    } catch (const dsl::StepBudgetExceeded& e) {
      report.experiment = name;
      report.scenario = scenario.id;
      report.notes.push_back(std::string("step budget exceeded: ") + e.what());
      report.verdict = Verdict::kExhausted;
    } catch (const CapExceeded& e) {
      report.experiment = name;
      report.scenario = scenario.id;
      report.notes.push_back(std::string("enumeration cap exceeded: ") + e.what());
      report.verdict = Verdict::kExhausted;
    }
    exhausted = exhausted || report.verdict == Verdict::kExhausted;
    failed = failed || report.verdict == Verdict::kFails;
    try {
      result.files.push_back(EmitReport(report, dir));
    } catch (const std::runtime_error& e) {
      result.error = e.what();
      result.exit_code = kExitVerdict;
      result.reports.push_back(std::move(report));
      return result;
    }
    result.reports.push_back(std::move(report));
  }
  result.exit_code = exhausted ? kExitExhausted : failed ? kExitVerdict : kExitOk;
  return result;
}

RunResult Run(const std::filesystem::path& scenario_path,
              const RunOptions& options) {
  ScenarioFile scenario;
  try {
    scenario = ApplyOptions(LoadScenario(scenario_path), options);
  } catch (const ScenarioParseError& e) {
    RunResult result;
    result.exit_code = kExitParse;
    result.error = e.what();
    return result;
  } catch (const std::runtime_error& e) {
    RunResult result;
    result.exit_code = kExitParse;
    result.error = e.what();
    return result;
  }
  return RunScenario(scenario, options);
}

}  // namespace rdlab
