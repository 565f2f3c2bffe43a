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

#include "rdlab/dsl/enumerator.h"

#include <algorithm>

namespace rdlab::dsl {
namespace {

std::vector<Token> Prepend(Op op, const std::vector<Token>& tail) {
  std::vector<Token> out;
  out.reserve(tail.size() + 1);
  out.emplace_back(op);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace

Enumerator::Enumerator(const LanguageConfig& cfg, Shape shape)
    : cfg_(cfg), shape_(shape) {
  ValidateConfig(cfg_);
}

void Enumerator::LiteralTokens(Op op, std::vector<Token>& out) const {
  if (Info(op).literal == Literal::kRewardTable) {
    const size_t n = static_cast<size_t>(shape_.cells());
    const size_t base = cfg_.table_literals.size();
    std::vector<size_t> digits(n, 0);
    while (true) {
      std::vector<Rational> table(n);
      for (size_t i = 0; i < n; ++i) table[i] = cfg_.table_literals[digits[i]];
      out.emplace_back(op, std::move(table));
      size_t i = n;
      while (i > 0 && ++digits[i - 1] == base) digits[--i] = 0;
      if (i == 0) break;
    }
  } else {
    const size_t n = static_cast<size_t>(shape_.n_states);
    std::vector<int> digits(n, 0);
    while (true) {
      out.emplace_back(op, digits);
      size_t i = n;
      while (i > 0 && ++digits[i - 1] == shape_.n_actions) digits[--i] = 0;
      if (i == 0) break;
    }
  }
}

const std::vector<std::vector<Token>>& Enumerator::Stratum(Kind kind,
                                                           int cost) {
  const auto key = std::make_pair(kind, cost);
  if (auto it = strata_.find(key); it != strata_.end()) return it->second;

  std::vector<std::vector<Token>> out;
  auto keep = [&](std::vector<Token> seq) {
    if (produced_ >= cfg_.max_enum) {
      truncated_ = true;
      return false;
    }
    ++produced_;
    out.push_back(std::move(seq));
    return true;
  };

  for (Op op : OpsOfKind(kind)) {
    const OpInfo& info = Info(op);
    if (info.literal != Literal::kNone) {
      const size_t entries = info.literal == Literal::kRewardTable
                                 ? static_cast<size_t>(shape_.cells())
                                 : static_cast<size_t>(shape_.n_states);
      if (cfg_.cost(op) + static_cast<int>(entries) * cfg_.literal_entry_cost !=
          cost) {
        continue;
      }
      std::vector<Token> literals;
      LiteralTokens(op, literals);
      for (auto& t : literals) {
        if (!keep({std::move(t)})) break;
      }
      continue;
    }
    const int rest = cost - cfg_.cost(op);
    if (info.arity == 0) {
      if (rest == 0) keep({Token(op)});
      continue;
    }
    if (rest < 1) continue;
    if (info.arity == 1) {
      const auto& children = Stratum(info.args[0], rest);
      for (const auto& child : children) {
        if (!keep(Prepend(op, child))) break;
      }
      continue;
    }
    for (int left = 1; left < rest; ++left) {
      const auto& lhs = Stratum(info.args[0], left);
      const auto& rhs = Stratum(info.args[1], rest - left);
      for (const auto& x : lhs) {
        for (const auto& y : rhs) {
          std::vector<Token> seq = Prepend(op, x);
          seq.insert(seq.end(), y.begin(), y.end());
          if (!keep(std::move(seq))) break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return strata_.emplace(key, std::move(out)).first->second;
}

Enumeration Enumerator::Enumerate(Kind kind, int budget) {
  Enumeration result;
  for (int cost = 1; cost <= budget; ++cost) {
    for (const auto& seq : Stratum(kind, cost)) {
      Program p;
      p.kind = kind;
      p.tokens = seq;
      p.cost = cost;
      result.programs.push_back(std::move(p));
    }
  }
  result.truncated = truncated_;
  return result;
}

Enumeration EnumeratePrograms(const LanguageConfig& cfg, Shape shape,
                              Kind kind) {
  Enumerator e(cfg, shape);
  return e.Enumerate(kind, cfg.budget);
}

}  // namespace rdlab::dsl
