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

#ifndef RDLAB_DSL_LANGUAGE_H_
#define RDLAB_DSL_LANGUAGE_H_

// The program language used to measure description length. Programs are
// prefix expressions over four sorts:
//
//   reward   ZERO | ONE | NEG r | ADD r r | EQ n n | TBL [lit] | WRAP q
//   numeric  S | A | PIHAT n | CONST0 | CONST1
//   policy   PIHATPOL | POLTBL [lit]
//   planner  ARGMAX | ARGMIN | EMITPIHAT | OPT | NEGP p | WPRIME p
//
// PIHAT / PIHATPOL / EMITPIHAT read the observed policy, so every complexity
// measured here is conditional on that policy. Planners receive the reward
// *program*, not its table; only WPRIME looks at the program text.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdlab/rational.h"

namespace rdlab::dsl {

// Declaration order is the lexicographic order used for tie-breaking.
enum class Op : std::uint8_t {
  kZero,
  kOne,
  kNeg,
  kAdd,
  kEq,
  kTbl,
  kWrap,
  kS,
  kA,
  kPihat,
  kConst0,
  kConst1,
  kPihatPol,
  kPolTbl,
  kArgmax,
  kArgmin,
  kEmitPihat,
  kOpt,
  kNegP,
  kWPrime,
};
inline constexpr size_t kNumOps = 20;

enum class Kind : std::uint8_t { kReward, kNumeric, kPolicy, kPlanner };

enum class Literal : std::uint8_t { kNone, kRewardTable, kPolicyTable };

struct OpInfo {
  std::string_view name;
  Kind result;
  std::uint8_t arity;
  std::array<Kind, 2> args;
  Literal literal;
};

const OpInfo& Info(Op op);
std::string_view KindName(Kind kind);
std::optional<Op> OpFromName(std::string_view name);

// Ops whose result sort is `kind`, in lexicographic order.
const std::vector<Op>& OpsOfKind(Kind kind);

struct LanguageConfig {
  std::string version = "v1";
  std::array<int, kNumOps> token_cost = [] {
    std::array<int, kNumOps> c{};
    c.fill(1);
    return c;
  }();
  // Each entry of a TBL / POLTBL literal costs this much on top of the token.
  int literal_entry_cost = 1;
  // Maximum token-evaluation events for one interpretation.
  long step_budget = 1'000'000;
  // Enumeration budget B: maximum total cost of an enumerated program (and of
  // an enumerated planner-reward pair).
  int budget = 8;
  // Cap on the number of programs kept by one enumeration.
  size_t max_enum = 2'000'000;
  // Values used when enumerating TBL literals.
  std::vector<Rational> table_literals = {Rational(-1), Rational(0),
                                          Rational(1)};
  // Upper bound on the number of probe rewards used to identify planners.
  size_t probe_cap = 4096;

  int cost(Op op) const { return token_cost[static_cast<size_t>(op)]; }
};

// Throws std::invalid_argument when a cost or budget is below 1.
void ValidateConfig(const LanguageConfig& cfg);

}  // namespace rdlab::dsl

#endif  // RDLAB_DSL_LANGUAGE_H_
