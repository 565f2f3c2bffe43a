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

#ifndef RDLAB_DSL_PROGRAM_H_
#define RDLAB_DSL_PROGRAM_H_

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rdlab/dsl/language.h"
#include "rdlab/mdp.h"

namespace rdlab::dsl {

struct Token {
  Op op = Op::kZero;
  std::vector<Rational> table;  // TBL literal, row-major over S x A
  std::vector<int> policy;      // POLTBL literal, one action per state

  explicit Token(Op o) : op(o) {}
  Token(Op o, std::vector<Rational> t) : op(o), table(std::move(t)) {}
  Token(Op o, std::vector<int> p) : op(o), policy(std::move(p)) {}

  friend bool operator==(const Token&, const Token&) = default;
  friend std::strong_ordering operator<=>(const Token& x, const Token& y);
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(size_t position, const std::string& what)
      : std::invalid_argument("token " + std::to_string(position) + ": " +
                              what),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// A well-typed prefix expression of sort reward, policy or planner.
struct Program {
  Kind kind = Kind::kReward;
  std::vector<Token> tokens;
  int cost = 0;  // description length under the config it was built with

  friend bool operator==(const Program& x, const Program& y) {
    return x.tokens == y.tokens;
  }
  // (cost, lexicographic token order)
  friend std::strong_ordering operator<=>(const Program& x, const Program& y);
};

int TokenCost(const Token& token, const LanguageConfig& cfg);

// Type-checks `tokens` as a single expression. Literal sizes are checked
// against `shape`. Throws ParseError naming the first offending position.
Program ParseProgram(std::vector<Token> tokens, Shape shape,
                     const LanguageConfig& cfg);

// Whitespace-separated text, e.g. "EQ PIHAT S A" or "TBL [1,0,-1/2,1]".
Program ParseProgram(std::string_view text, Shape shape,
                     const LanguageConfig& cfg);

// Canonical text; ParseProgram(PrintProgram(p)) == p.
std::string PrintProgram(const Program& program);

// Convenience constructors for literal programs.
Program TableProgram(const RewardTable& table, const LanguageConfig& cfg);
Program PolicyTableProgram(const Policy& policy, Shape shape,
                           const LanguageConfig& cfg);

// Structural helpers used by the planner algebra.
Program NegateReward(const Program& reward, const LanguageConfig& cfg);
Program NegatePlanner(const Program& planner, const LanguageConfig& cfg);

}  // namespace rdlab::dsl

#endif  // RDLAB_DSL_PROGRAM_H_
