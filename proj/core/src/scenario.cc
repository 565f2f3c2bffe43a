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

#include "rdlab/scenario.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace rdlab {
namespace {

struct Line {
  int no = 0;
  bool header = false;
  std::vector<std::string> words;
};

std::vector<Line> Lex(std::string_view text) {
  std::vector<Line> out;
  int no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++no;
    if (const size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (raw.find('\t') != std::string_view::npos) {
      throw ScenarioParseError(no, "tab character");
    }
    std::istringstream in{std::string(raw)};
    Line line{no, false, {}};
    for (std::string w; in >> w;) line.words.push_back(std::move(w));
    if (line.words.empty()) continue;
    const size_t indent = raw.find_first_not_of(' ');
    if (indent == 0) {
      line.header = true;
    } else if (indent != 2) {
      throw ScenarioParseError(no, "entries are indented by two spaces");
    }
    out.push_back(std::move(line));
  }
  return out;
}

long ToInt(const std::string& w, int line, long lo, long hi) {
  long v = 0;
  const auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || p != w.data() + w.size()) {
    throw ScenarioParseError(line, "expected an integer, got '" + w + "'");
  }
  if (v < lo || v > hi) {
    throw ScenarioParseError(line, "value " + w + " out of range [" +
                                       std::to_string(lo) + ", " +
                                       std::to_string(hi) + "]");
  }
  return v;
}

Rational ToRational(const std::string& w, int line) {
  try {
    return ParseRational(w);
  } catch (const std::invalid_argument&) {
    throw ScenarioParseError(line, "expected a rational, got '" + w + "'");
  }
}

void Arity(const Line& l, size_t n) {
  if (l.words.size() != n + 1) {
    throw ScenarioParseError(l.no, "'" + l.words[0] + "' takes " +
                                       std::to_string(n) + " value(s)");
  }
}

void LanguageEntry(dsl::LanguageConfig& cfg, const Line& l) {
  const std::string& key = l.words[0];
  if (key == "version") {
    Arity(l, 1);
    if (l.words[1] != "v1") {
      throw ScenarioParseError(l.no, "unknown language version " + l.words[1]);
    }
    cfg.version = l.words[1];
  } else if (key == "budget") {
    Arity(l, 1);
    cfg.budget = static_cast<int>(ToInt(l.words[1], l.no, 1, 64));
  } else if (key == "step_budget") {
    Arity(l, 1);
    cfg.step_budget = ToInt(l.words[1], l.no, 1, 1L << 40);
  } else if (key == "max_enum") {
    Arity(l, 1);
    cfg.max_enum = static_cast<size_t>(ToInt(l.words[1], l.no, 1, 1L << 40));
  } else if (key == "probe_cap") {
    Arity(l, 1);
    cfg.probe_cap = static_cast<size_t>(ToInt(l.words[1], l.no, 1, 1L << 24));
  } else if (key == "literal_entry_cost") {
    Arity(l, 1);
    cfg.literal_entry_cost = static_cast<int>(ToInt(l.words[1], l.no, 1, 64));
  } else if (key == "table_literals") {
    if (l.words.size() < 2) {
      throw ScenarioParseError(l.no, "table_literals needs at least one value");
    }
    cfg.table_literals.clear();
    for (size_t i = 1; i < l.words.size(); ++i) {
      const Rational v = ToRational(l.words[i], l.no);
      if (v < -1 || v > 1) {
        throw ScenarioParseError(l.no, "table literal out of [-1, 1]");
      }
      cfg.table_literals.push_back(v);
    }
  } else if (key == "cost") {
    Arity(l, 2);
    const auto op = dsl::OpFromName(l.words[1]);
    if (!op) throw ScenarioParseError(l.no, "unknown token " + l.words[1]);
    cfg.token_cost[static_cast<size_t>(*op)] =
        static_cast<int>(ToInt(l.words[2], l.no, 1, 64));
  } else {
    throw ScenarioParseError(l.no, "unknown language key '" + key + "'");
  }
}

RewardTable RewardValues(const Line& l, size_t first, Shape shape) {
  if (l.words.size() - first != static_cast<size_t>(shape.cells())) {
    throw ScenarioParseError(l.no, "reward needs " +
                                       std::to_string(shape.cells()) +
                                       " values (|S| x |A|)");
  }
  RewardTable r(shape);
  for (size_t i = 0; i < r.values.size(); ++i) {
    r.values[i] = ToRational(l.words[first + i], l.no);
    if (r.values[i] < -1 || r.values[i] > 1) {
      throw ScenarioParseError(l.no, "reward entry out of [-1, 1]");
    }
  }
  return r;
}

std::string Join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

void PrintLanguage(std::ostringstream& out, const dsl::LanguageConfig& cfg) {
  out << "language:\n";
  out << "  version " << cfg.version << "\n";
  out << "  budget " << cfg.budget << "\n";
  out << "  step_budget " << cfg.step_budget << "\n";
  out << "  max_enum " << cfg.max_enum << "\n";
  out << "  probe_cap " << cfg.probe_cap << "\n";
  out << "  literal_entry_cost " << cfg.literal_entry_cost << "\n";
  out << "  table_literals";
  for (const auto& v : cfg.table_literals) out << ' ' << FormatRational(v);
  out << "\n";
  for (size_t i = 0; i < dsl::kNumOps; ++i) {
    if (cfg.token_cost[i] != 1) {
      out << "  cost " << dsl::Info(static_cast<dsl::Op>(i)).name << ' '
          << cfg.token_cost[i] << "\n";
    }
  }
}

void PrintValues(std::ostringstream& out, const RewardTable& r) {
  for (const auto& v : r.values) out << ' ' << FormatRational(v);
}

}  // namespace

OverrideScenario ScenarioFile::Override() const {
  if (!override_section) {
    throw std::invalid_argument("scenario has no override section");
  }
  OverrideScenario scn;
  scn.base = environment;
  scn.human_policy = policy;
  scn.human_reward = override_section->human_reward;
  scn.candidates = override_section->candidates;
  scn.epsilon = override_section->epsilon;
  scn.threshold = override_section->threshold;
  scn.vertex_sweep = override_section->vertex_sweep;
  return scn;
}

ScenarioFile ParseScenario(std::string_view text) {
  const std::vector<Line> lines = Lex(text);
  ScenarioFile out;
  std::map<std::string, int> seen;  // section -> header line
  std::set<std::string> keys_given;  // "section.key" for single-valued keys
  std::string section;

  std::optional<int> states, actions, start, horizon;
  std::vector<bool> row_given;
  bool have_policy = false;
  bool have_human_reward = false;

  auto shape = [&](const Line& l) {
    if (!states || !actions) {
      throw ScenarioParseError(l.no, "states and actions must come first");
    }
    return Shape{*states, *actions};
  };

  for (const Line& l : lines) {
    if (l.header) {
      std::string name = l.words[0];
      if (name.empty() || name.back() != ':') {
        throw ScenarioParseError(l.no, "expected a section header, got '" +
                                           name + "'");
      }
      name.pop_back();
      static const std::vector<std::string> kSections = {
          "scenario", "environment", "policy",  "language",
          "experiments", "override", "output"};
      if (std::find(kSections.begin(), kSections.end(), name) ==
          kSections.end()) {
        throw ScenarioParseError(l.no, "unknown section '" + name + "'");
      }
      if (!seen.emplace(name, l.no).second) {
        throw ScenarioParseError(l.no, "duplicate section '" + name + "'");
      }
      if (name == "scenario") {
        if (l.words.size() != 2) {
          throw ScenarioParseError(l.no, "scenario: takes one identifier");
        }
        out.id = l.words[1];
        section.clear();
      } else {
        if (l.words.size() != 1) {
          throw ScenarioParseError(l.no, "unexpected text after header");
        }
        section = name;
        if (name == "override") out.override_section.emplace();
      }
      continue;
    }
    if (section.empty()) {
      throw ScenarioParseError(l.no, "entry outside a section");
    }
    const std::string& key = l.words[0];
    if (key != "transition" && key != "cost" && key != "candidate" &&
        !keys_given.insert(section + "." + key).second) {
      throw ScenarioParseError(l.no, "duplicate key '" + key + "'");
    }
    if (section == "environment") {
      if (key == "states" || key == "actions") {
        Arity(l, 1);
        auto& slot = key == "states" ? states : actions;
        if (slot || !row_given.empty()) {
          throw ScenarioParseError(l.no, "'" + key + "' given twice or late");
        }
        slot = static_cast<int>(ToInt(l.words[1], l.no, 1, 1 << 16));
      } else if (key == "start") {
        Arity(l, 1);
        start = static_cast<int>(ToInt(l.words[1], l.no, 0, 1 << 16));
      } else if (key == "horizon") {
        Arity(l, 1);
        horizon = static_cast<int>(ToInt(l.words[1], l.no, 1, 1 << 16));
      } else if (key == "transition") {
        const Shape sh = shape(l);
        if (row_given.empty()) {
          out.environment = Mdpr::Empty(sh.n_states, sh.n_actions, 0, 1);
          row_given.assign(static_cast<size_t>(sh.cells()), false);
        }
        Arity(l, 2 + static_cast<size_t>(sh.n_states));
        const int s = static_cast<int>(ToInt(l.words[1], l.no, 0, sh.n_states - 1));
        const int a = static_cast<int>(ToInt(l.words[2], l.no, 0, sh.n_actions - 1));
        const size_t cell = static_cast<size_t>(s) * sh.n_actions + a;
        if (row_given[cell]) {
          throw ScenarioParseError(l.no, "duplicate transition row (" +
                                             l.words[1] + "," + l.words[2] + ")");
        }
        row_given[cell] = true;
        Rational sum = 0;
        for (int next = 0; next < sh.n_states; ++next) {
          const Rational p = ToRational(l.words[3 + next], l.no);
          if (p < 0 || p > 1) {
            throw ScenarioParseError(l.no, "probability out of [0,1] at (" +
                                               l.words[1] + "," + l.words[2] + ")");
          }
          out.environment.T(s, a, next) = p;
          sum += p;
        }
        if (sum != 1) {
          throw ScenarioParseError(l.no, "row sum != 1 at (" + l.words[1] + "," +
                                             l.words[2] + ") (sum " +
                                             FormatRational(sum) + ")");
        }
      } else {
        throw ScenarioParseError(l.no, "unknown environment key '" + key + "'");
      }
    } else if (section == "policy") {
      if (key != "actions") {
        throw ScenarioParseError(l.no, "unknown policy key '" + key + "'");
      }
      const Shape sh = shape(l);
      Arity(l, static_cast<size_t>(sh.n_states));
      out.policy.action.clear();
      for (int s = 0; s < sh.n_states; ++s) {
        out.policy.action.push_back(static_cast<int>(
            ToInt(l.words[1 + s], l.no, 0, sh.n_actions - 1)));
      }
      have_policy = true;
    } else if (section == "language") {
      LanguageEntry(out.language, l);
    } else if (section == "experiments") {
      if (key == "run") {
        if (l.words.size() < 2) {
          throw ScenarioParseError(l.no, "run needs at least one experiment");
        }
        for (size_t i = 1; i < l.words.size(); ++i) {
          const auto& known = KnownExperiments();
          if (std::find(known.begin(), known.end(), l.words[i]) == known.end()) {
            throw ScenarioParseError(l.no, "unknown experiment '" + l.words[i] + "'");
          }
          out.experiments.push_back(l.words[i]);
        }
      } else if (key == "seed") {
        Arity(l, 1);
        out.seed = static_cast<unsigned long long>(
            ToInt(l.words[1], l.no, 0, std::numeric_limits<long>::max()));
      } else if (key == "sweep") {
        Arity(l, 1);
        out.sweep = static_cast<int>(ToInt(l.words[1], l.no, 0, 1 << 20));
      } else {
        throw ScenarioParseError(l.no, "unknown experiments key '" + key + "'");
      }
    } else if (section == "override") {
      OverrideSection& o = *out.override_section;
      if (key == "epsilon" || key == "threshold") {
        Arity(l, 1);
        const Rational v = ToRational(l.words[1], l.no);
        if (key == "epsilon" && (v < 0 || v > 1)) {
          throw ScenarioParseError(l.no, "epsilon out of [0, 1]");
        }
        (key == "epsilon" ? o.epsilon : o.threshold) = v;
      } else if (key == "vertex_sweep") {
        Arity(l, 1);
        o.vertex_sweep = ToInt(l.words[1], l.no, 0, 1) == 1;
      } else if (key == "human_reward") {
        o.human_reward = RewardValues(l, 1, shape(l));
        have_human_reward = true;
      } else if (key == "candidate") {
        if (l.words.size() < 2) {
          throw ScenarioParseError(l.no, "candidate needs a name");
        }
        for (const auto& c : o.candidates) {
          if (c.name == l.words[1]) {
            throw ScenarioParseError(l.no, "duplicate candidate " + c.name);
          }
        }
        o.candidates.push_back({l.words[1], RewardValues(l, 2, shape(l))});
      } else {
        throw ScenarioParseError(l.no, "unknown override key '" + key + "'");
      }
    } else if (section == "output") {
      if (key != "dir") {
        throw ScenarioParseError(l.no, "unknown output key '" + key + "'");
      }
      Arity(l, 1);
      out.out_dir = l.words[1];
    }
  }

  const int last = lines.empty() ? 1 : lines.back().no;
  if (out.id.empty()) throw ScenarioParseError(last, "missing 'scenario:' line");
  if (!seen.contains("environment")) {
    throw ScenarioParseError(last, "missing environment section");
  }
  const int env_line = seen["environment"];
  if (!states || !actions || !start || !horizon) {
    throw ScenarioParseError(env_line,
                             "environment needs states, actions, start, horizon");
  }
  if (row_given.empty()) {
    out.environment = Mdpr::Empty(*states, *actions, 0, 1);
    row_given.assign(static_cast<size_t>(*states * *actions), false);
  }
  for (size_t cell = 0; cell < row_given.size(); ++cell) {
    if (!row_given[cell]) {
      throw ScenarioParseError(
          env_line, "missing transition row (" +
                        std::to_string(cell / static_cast<size_t>(*actions)) +
                        "," + std::to_string(cell % static_cast<size_t>(*actions)) +
                        ")");
    }
  }
  if (*start >= *states) {
    throw ScenarioParseError(env_line, "start out of range: " +
                                           std::to_string(*start));
  }
  out.environment.start_state = *start;
  out.environment.horizon = *horizon;
  if (!have_policy) {
    throw ScenarioParseError(seen.contains("policy") ? seen["policy"] : last,
                             "missing policy actions");
  }
  if (out.override_section && !have_human_reward) {
    throw ScenarioParseError(seen["override"], "override needs human_reward");
  }
  try {
    dsl::ValidateConfig(out.language);
  } catch (const std::invalid_argument& e) {
    throw ScenarioParseError(seen.contains("language") ? seen["language"] : last,
                             e.what());
  }
  return out;
}

ScenarioFile LoadScenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseScenario(buf.str());
}

std::string PrintScenario(const ScenarioFile& sc) {
  std::ostringstream out;
  const Mdpr& m = sc.environment;
  out << "scenario: " << sc.id << "\n";
  out << "environment:\n";
  out << "  states " << m.n_states << "\n";
  out << "  actions " << m.n_actions << "\n";
  out << "  start " << m.start_state << "\n";
  out << "  horizon " << m.horizon << "\n";
  for (int s = 0; s < m.n_states; ++s) {
    for (int a = 0; a < m.n_actions; ++a) {
      out << "  transition " << s << ' ' << a;
      for (int next = 0; next < m.n_states; ++next) {
        out << ' ' << FormatRational(m.T(s, a, next));
      }
      out << "\n";
    }
  }
  out << "policy:\n  actions";
  for (int a : sc.policy.action) out << ' ' << a;
  out << "\n";
  PrintLanguage(out, sc.language);
  out << "experiments:\n";
  if (!sc.experiments.empty()) out << "  run " << Join(sc.experiments) << "\n";
  out << "  seed " << sc.seed << "\n";
  out << "  sweep " << sc.sweep << "\n";
  if (sc.override_section) {
    const OverrideSection& o = *sc.override_section;
    out << "override:\n";
    out << "  epsilon " << FormatRational(o.epsilon) << "\n";
    out << "  threshold " << FormatRational(o.threshold) << "\n";
    out << "  vertex_sweep " << (o.vertex_sweep ? 1 : 0) << "\n";
    out << "  human_reward";
    PrintValues(out, o.human_reward);
    out << "\n";
    for (const auto& c : o.candidates) {
      out << "  candidate " << c.name;
      PrintValues(out, c.table);
      out << "\n";
    }
  }
  if (!sc.out_dir.empty()) out << "output:\n  dir " << sc.out_dir << "\n";
  return out.str();
}

dsl::LanguageConfig ParseLanguageConfig(std::string_view text) {
  dsl::LanguageConfig cfg;
  bool in_section = false;
  for (const Line& l : Lex(text)) {
    if (l.header) {
      if (l.words.size() != 1 || l.words[0] != "language:" || in_section) {
        throw ScenarioParseError(l.no, "expected a single 'language:' section");
      }
      in_section = true;
      continue;
    }
    if (!in_section) throw ScenarioParseError(l.no, "entry outside a section");
    LanguageEntry(cfg, l);
  }
  try {
    dsl::ValidateConfig(cfg);
  } catch (const std::invalid_argument& e) {
    throw ScenarioParseError(1, e.what());
  }
  return cfg;
}

dsl::LanguageConfig LoadLanguageConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseLanguageConfig(buf.str());
}

}  // namespace rdlab
