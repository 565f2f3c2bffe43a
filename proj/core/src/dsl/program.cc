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

#include "rdlab/dsl/program.h"

#include <algorithm>
#include <sstream>

namespace rdlab::dsl {
namespace {

using K = Kind;
using L = Literal;

constexpr std::array<OpInfo, kNumOps> kOpTable = {{
    {"ZERO", K::kReward, 0, {}, L::kNone},
    {"ONE", K::kReward, 0, {}, L::kNone},
    {"NEG", K::kReward, 1, {K::kReward}, L::kNone},
    {"ADD", K::kReward, 2, {K::kReward, K::kReward}, L::kNone},
    {"EQ", K::kReward, 2, {K::kNumeric, K::kNumeric}, L::kNone},
    {"TBL", K::kReward, 0, {}, L::kRewardTable},
    {"WRAP", K::kReward, 1, {K::kPolicy}, L::kNone},
    {"S", K::kNumeric, 0, {}, L::kNone},
    {"A", K::kNumeric, 0, {}, L::kNone},
    {"PIHAT", K::kNumeric, 1, {K::kNumeric}, L::kNone},
    {"CONST0", K::kNumeric, 0, {}, L::kNone},
    {"CONST1", K::kNumeric, 0, {}, L::kNone},
    {"PIHATPOL", K::kPolicy, 0, {}, L::kNone},
    {"POLTBL", K::kPolicy, 0, {}, L::kPolicyTable},
    {"ARGMAX", K::kPlanner, 0, {}, L::kNone},
    {"ARGMIN", K::kPlanner, 0, {}, L::kNone},
    {"EMITPIHAT", K::kPlanner, 0, {}, L::kNone},
    {"OPT", K::kPlanner, 0, {}, L::kNone},
    {"NEGP", K::kPlanner, 1, {K::kPlanner}, L::kNone},
    {"WPRIME", K::kPlanner, 1, {K::kPlanner}, L::kNone},
}};

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, Shape shape)
      : tokens_(tokens), shape_(shape) {}

  void Expression(Kind expected) {
    if (pos_ >= tokens_.size()) {
      throw ParseError(pos_, "expected a " + std::string(KindName(expected)) +
                                 " expression, found end of program");
    }
    const Token& token = tokens_[pos_];
    const OpInfo& info = Info(token.op);
    if (info.result != expected) {
      throw ParseError(pos_, std::string(info.name) + " is a " +
                                 std::string(KindName(info.result)) +
                                 " expression, expected " +
                                 std::string(KindName(expected)));
    }
    CheckLiteral(token, info);
    const size_t head = pos_++;
    for (int i = 0; i < info.arity; ++i) {
      if (pos_ >= tokens_.size()) {
        throw ParseError(pos_, std::string(info.name) + " at token " +
                                   std::to_string(head) + " expects " +
                                   std::to_string(info.arity) +
                                   " argument(s), got " + std::to_string(i));
      }
      Expression(info.args[static_cast<size_t>(i)]);
    }
  }

  size_t position() const { return pos_; }

 private:
  void CheckLiteral(const Token& token, const OpInfo& info) const {
    switch (info.literal) {
      case Literal::kNone:
        if (!token.table.empty() || !token.policy.empty()) {
          throw ParseError(pos_, std::string(info.name) + " takes no literal");
        }
        break;
      case Literal::kRewardTable:
        if (token.table.size() != static_cast<size_t>(shape_.cells())) {
          throw ParseError(pos_, "TBL literal needs " +
                                     std::to_string(shape_.cells()) +
                                     " entries, got " +
                                     std::to_string(token.table.size()));
        }
        for (const auto& v : token.table) {
          if (v < -1 || v > 1) {
            throw ParseError(pos_, "TBL entry " + FormatRational(v) +
                                       " outside [-1,1]");
          }
        }
        break;
      case Literal::kPolicyTable:
        if (token.policy.size() != static_cast<size_t>(shape_.n_states)) {
          throw ParseError(pos_, "POLTBL literal needs " +
                                     std::to_string(shape_.n_states) +
                                     " entries, got " +
                                     std::to_string(token.policy.size()));
        }
        for (int a : token.policy) {
          if (a < 0 || a >= shape_.n_actions) {
            throw ParseError(pos_, "POLTBL action " + std::to_string(a) +
                                       " out of range");
          }
        }
        break;
    }
  }

  const std::vector<Token>& tokens_;
  Shape shape_;
  size_t pos_ = 0;
};

std::vector<std::string> SplitLiteral(std::string_view body) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : body) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty() || !parts.empty()) parts.push_back(current);
  return parts;
}

}  // namespace

const OpInfo& Info(Op op) { return kOpTable[static_cast<size_t>(op)]; }

std::string_view KindName(Kind kind) {
  switch (kind) {
    case Kind::kReward:
      return "reward";
    case Kind::kNumeric:
      return "numeric";
    case Kind::kPolicy:
      return "policy";
    case Kind::kPlanner:
      return "planner";
  }
  return "?";
}

std::optional<Op> OpFromName(std::string_view name) {
  for (size_t i = 0; i < kNumOps; ++i) {
    if (kOpTable[i].name == name) return static_cast<Op>(i);
  }
  return std::nullopt;
}

const std::vector<Op>& OpsOfKind(Kind kind) {
  static const std::array<std::vector<Op>, 4> by_kind = [] {
    std::array<std::vector<Op>, 4> out;
    for (size_t i = 0; i < kNumOps; ++i) {
      out[static_cast<size_t>(kOpTable[i].result)].push_back(
          static_cast<Op>(i));
    }
    return out;
  }();
  return by_kind[static_cast<size_t>(kind)];
}

void ValidateConfig(const LanguageConfig& cfg) {
  for (size_t i = 0; i < kNumOps; ++i) {
    if (cfg.token_cost[i] < 1) {
      throw std::invalid_argument("cost of " + std::string(kOpTable[i].name) +
                                  " must be >= 1");
    }
  }
  if (cfg.literal_entry_cost < 1) {
    throw std::invalid_argument("literal entry cost must be >= 1");
  }
  if (cfg.step_budget < 1 || cfg.budget < 1 || cfg.max_enum < 1) {
    throw std::invalid_argument("budgets must be >= 1");
  }
}

std::strong_ordering operator<=>(const Token& x, const Token& y) {
  if (auto c = x.op <=> y.op; c != 0) return c;
  if (x.table.size() != y.table.size()) return x.table.size() <=> y.table.size();
  for (size_t i = 0; i < x.table.size(); ++i) {
    const int c = cmp(x.table[i], y.table[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  return x.policy <=> y.policy;
}

std::strong_ordering operator<=>(const Program& x, const Program& y) {
  if (auto c = x.cost <=> y.cost; c != 0) return c;
  return std::lexicographical_compare_three_way(
      x.tokens.begin(), x.tokens.end(), y.tokens.begin(), y.tokens.end());
}

int TokenCost(const Token& token, const LanguageConfig& cfg) {
  const auto entries = token.table.size() + token.policy.size();
  return cfg.cost(token.op) +
         static_cast<int>(entries) * cfg.literal_entry_cost;
}

Program ParseProgram(std::vector<Token> tokens, Shape shape,
                     const LanguageConfig& cfg) {
  if (tokens.empty()) throw ParseError(0, "empty program");
  const Kind kind = Info(tokens.front().op).result;
  if (kind == Kind::kNumeric) {
    throw ParseError(0, "a numeric expression is not a program");
  }
  Parser parser(tokens, shape);
  parser.Expression(kind);
  if (parser.position() != tokens.size()) {
    throw ParseError(parser.position(), "trailing tokens after expression");
  }
  Program program;
  program.kind = kind;
  program.tokens = std::move(tokens);
  for (const auto& t : program.tokens) program.cost += TokenCost(t, cfg);
  return program;
}

Program ParseProgram(std::string_view text, Shape shape,
                     const LanguageConfig& cfg) {
  std::vector<Token> tokens;
  std::istringstream in{std::string(text)};
  std::string word;
  size_t index = 0;
  while (in >> word) {
    if (word.front() == '[') {
      const size_t owner_index = index == 0 ? 0 : index - 1;
      if (word.back() != ']' || tokens.empty()) {
        throw ParseError(owner_index, "malformed literal '" + word + "'");
      }
      Token& owner = tokens.back();
      const Literal kind = Info(owner.op).literal;
      if (kind == Literal::kNone || !owner.table.empty() ||
          !owner.policy.empty()) {
        throw ParseError(owner_index, "unexpected literal '" + word + "'");
      }
      for (const auto& part : SplitLiteral(
               std::string_view(word).substr(1, word.size() - 2))) {
        try {
          if (kind == Literal::kRewardTable) {
            owner.table.push_back(ParseRational(part));
          } else {
            const Rational v = ParseRational(part);
            if (v.get_den() != 1 || !v.get_num().fits_sint_p()) {
              throw std::invalid_argument("action must be an integer");
            }
            owner.policy.push_back(static_cast<int>(v.get_num().get_si()));
          }
        } catch (const std::invalid_argument& e) {
          throw ParseError(owner_index, e.what());
        }
      }
      continue;
    }
    const auto op = OpFromName(word);
    if (!op) throw ParseError(index, "unknown token '" + word + "'");
    tokens.emplace_back(*op);
    ++index;
  }
  return ParseProgram(std::move(tokens), shape, cfg);
}

std::string PrintProgram(const Program& program) {
  std::string out;
  for (const auto& token : program.tokens) {
    if (!out.empty()) out += ' ';
    out += Info(token.op).name;
    switch (Info(token.op).literal) {
      case Literal::kNone:
        break;
      case Literal::kRewardTable: {
        out += " [";
        for (size_t i = 0; i < token.table.size(); ++i) {
          if (i) out += ',';
          out += FormatRational(token.table[i]);
        }
        out += ']';
        break;
      }
      case Literal::kPolicyTable: {
        out += " [";
        for (size_t i = 0; i < token.policy.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(token.policy[i]);
        }
        out += ']';
        break;
      }
    }
  }
  return out;
}

Program TableProgram(const RewardTable& table, const LanguageConfig& cfg) {
  std::vector<Token> tokens;
  tokens.emplace_back(Op::kTbl, table.values);
  return ParseProgram(std::move(tokens), table.shape(), cfg);
}

Program PolicyTableProgram(const Policy& policy, Shape shape,
                           const LanguageConfig& cfg) {
  std::vector<Token> tokens;
  tokens.emplace_back(Op::kPolTbl, policy.action);
  return ParseProgram(std::move(tokens), shape, cfg);
}

Program NegateReward(const Program& reward, const LanguageConfig& cfg) {
  Program out = reward;
  out.tokens.insert(out.tokens.begin(), Token(Op::kNeg));
  out.cost += cfg.cost(Op::kNeg);
  return out;
}

Program NegatePlanner(const Program& planner, const LanguageConfig& cfg) {
  Program out = planner;
  out.tokens.insert(out.tokens.begin(), Token(Op::kNegP));
  out.cost += cfg.cost(Op::kNegP);
  return out;
}

}  // namespace rdlab::dsl
