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

#include "rdlab/mdp.h"

#include <algorithm>

namespace rdlab {
namespace {

std::string Cell(int s, int a) {
  return "(" + std::to_string(s) + "," + std::to_string(a) + ")";
}

void CheckShapes(const Mdpr& m, const Policy& pi, const RewardTable& r) {
  if (r.n_states != m.n_states || r.n_actions != m.n_actions) {
    throw DimensionMismatch("reward table is " + std::to_string(r.n_states) +
                            "x" + std::to_string(r.n_actions) +
                            ", environment is " + std::to_string(m.n_states) +
                            "x" + std::to_string(m.n_actions));
  }
  if (pi.n_states() != m.n_states) {
    throw DimensionMismatch("policy covers " + std::to_string(pi.n_states()) +
                            " states, environment has " +
                            std::to_string(m.n_states));
  }
  for (int s = 0; s < m.n_states; ++s) {
    if (pi(s) < 0 || pi(s) >= m.n_actions) {
      throw DimensionMismatch("policy action out of range at state " +
                              std::to_string(s));
    }
  }
}

void CheckShapes(const Mdpr& m, const RewardTable& r) {
  CheckShapes(m, Policy::Constant(m.n_states, 0), r);
}

// sum_s' T(s'|s,a) v[s']
Rational Expectation(const Mdpr& m, int s, int a, const ValueVector& v) {
  Rational total = 0;
  for (int next = 0; next < m.n_states; ++next) {
    const Rational& p = m.T(s, a, next);
    if (sgn(p) != 0) total += p * v[static_cast<size_t>(next)];
  }
  return total;
}

}  // namespace

Mdpr Mdpr::Empty(int n_states, int n_actions, int start_state, int horizon) {
  Mdpr m;
  m.n_states = n_states;
  m.n_actions = n_actions;
  m.start_state = start_state;
  m.horizon = horizon;
  m.transition.assign(
      static_cast<size_t>(n_states) * n_actions * n_states, Rational(0));
  return m;
}

RewardTable RewardTable::operator-() const {
  RewardTable out = *this;
  for (auto& v : out.values) v = -v;
  return out;
}

RewardTable RewardTable::Constant(Shape shape, const Rational& value) {
  RewardTable out(shape);
  std::fill(out.values.begin(), out.values.end(), value);
  return out;
}

ValidationResult ValidateMdpr(const Mdpr& m) {
  if (m.n_states <= 0) return ValidationResult::Fail("no states");
  if (m.n_actions <= 0) return ValidationResult::Fail("no actions");
  if (m.horizon < 1) return ValidationResult::Fail("horizon must be >= 1");
  if (m.start_state < 0 || m.start_state >= m.n_states) {
    return ValidationResult::Fail("start out of range: " +
                                  std::to_string(m.start_state));
  }
  if (m.transition.size() !=
      static_cast<size_t>(m.n_states) * m.n_actions * m.n_states) {
    return ValidationResult::Fail("transition table has wrong size");
  }
  for (int s = 0; s < m.n_states; ++s) {
    for (int a = 0; a < m.n_actions; ++a) {
      Rational sum = 0;
      for (int next = 0; next < m.n_states; ++next) {
        const Rational& p = m.T(s, a, next);
        if (sgn(p) < 0 || p > 1) {
          return ValidationResult::Fail("probability out of [0,1] at " +
                                        Cell(s, a));
        }
        sum += p;
      }
      if (sum != 1) {
        return ValidationResult::Fail("row sum != 1 at " + Cell(s, a) +
                                      " (sum " + FormatRational(sum) + ")");
      }
    }
  }
  return ValidationResult::Ok();
}

ValidationResult ValidateReward(const RewardTable& r) {
  if (r.values.size() != static_cast<size_t>(r.n_states) * r.n_actions) {
    return ValidationResult::Fail("reward table has wrong size");
  }
  for (int s = 0; s < r.n_states; ++s) {
    for (int a = 0; a < r.n_actions; ++a) {
      if (r.at(s, a) < -1 || r.at(s, a) > 1) {
        return ValidationResult::Fail("reward out of [-1,1] at " + Cell(s, a));
      }
    }
  }
  return ValidationResult::Ok();
}

ValidationResult ValidatePolicy(const Policy& pi, int n_actions) {
  for (int s = 0; s < pi.n_states(); ++s) {
    if (pi(s) < 0 || pi(s) >= n_actions) {
      return ValidationResult::Fail("action out of range at state " +
                                    std::to_string(s));
    }
  }
  return ValidationResult::Ok();
}

ValueVector EvaluatePolicy(const Mdpr& m, const Policy& pi,
                           const RewardTable& r) {
  CheckShapes(m, pi, r);
  ValueVector v(static_cast<size_t>(m.n_states), Rational(0));
  ValueVector next(v.size());
  for (int k = 1; k <= m.horizon; ++k) {
    for (int s = 0; s < m.n_states; ++s) {
      const int a = pi(s);
      next[static_cast<size_t>(s)] = r.at(s, a) + Expectation(m, s, a, v);
    }
    v.swap(next);
  }
  return v;
}

Plan OptimalPlan(const Mdpr& m, const RewardTable& r) {
  CheckShapes(m, r);
  Plan plan;
  plan.policy = Policy::Constant(m.n_states, 0);
  ValueVector v(static_cast<size_t>(m.n_states), Rational(0));
  ValueVector next(v.size());
  for (int k = 1; k <= m.horizon; ++k) {
    for (int s = 0; s < m.n_states; ++s) {
      Rational best;
      int best_action = 0;
      for (int a = 0; a < m.n_actions; ++a) {
        Rational q = r.at(s, a) + Expectation(m, s, a, v);
        if (a == 0 || q > best) {
          best = std::move(q);
          best_action = a;
        }
      }
      next[static_cast<size_t>(s)] = best;
      if (k == m.horizon) plan.policy.action[static_cast<size_t>(s)] = best_action;
    }
    v.swap(next);
  }
  plan.values = std::move(v);
  return plan;
}

ValueVector Regret(const Mdpr& m, const Policy& pi, const RewardTable& r) {
  const ValueVector v_pi = EvaluatePolicy(m, pi, r);
  ValueVector out = OptimalPlan(m, r).values;
  for (size_t s = 0; s < out.size(); ++s) out[s] -= v_pi[s];
  return out;
}

RewardTable SignVertex(Shape shape, unsigned long long index) {
  RewardTable r(shape);
  for (size_t k = 0; k < r.values.size(); ++k) {
    r.values[k] = ((index >> k) & 1ull) ? 1 : -1;
  }
  return r;
}

std::vector<Policy> EnumeratePolicies(Shape shape, size_t cap) {
  size_t count = 1;
  for (int s = 0; s < shape.n_states; ++s) {
    if (count > cap / static_cast<size_t>(shape.n_actions)) {
      throw CapExceeded("policy enumeration exceeds cap of " +
                        std::to_string(cap));
    }
    count *= static_cast<size_t>(shape.n_actions);
  }
  std::vector<Policy> out;
  out.reserve(count);
  Policy current = Policy::Constant(shape.n_states, 0);
  for (size_t i = 0; i < count; ++i) {
    out.push_back(current);
    // odometer with the last state as the fastest digit
    for (int s = shape.n_states - 1; s >= 0; --s) {
      auto& digit = current.action[static_cast<size_t>(s)];
      if (++digit < shape.n_actions) break;
      digit = 0;
    }
  }
  return out;
}

RegretExtreme MaxRegretOverRewards(const Mdpr& m, const Policy& pi,
                                   int max_cells) {
  const Shape shape = m.shape();
  if (shape.cells() > max_cells || shape.cells() >= 63) {
    throw CapExceeded("|S||A| = " + std::to_string(shape.cells()) +
                      " exceeds vertex cap " + std::to_string(max_cells));
  }
  const unsigned long long n_vertices = 1ull << shape.cells();
  const auto start = static_cast<size_t>(m.start_state);
  RegretExtreme best;
  for (unsigned long long i = 0; i < n_vertices; ++i) {
    RewardTable r = SignVertex(shape, i);
    Rational value = Regret(m, pi, r)[start];
    if (i == 0 || value > best.value) {
      best.value = std::move(value);
      best.witness = std::move(r);
    }
  }
  return best;
}

HalfMaximalReport VerifyHalfMaximal(const Mdpr& m, const Policy& pi,
                                    int max_cells, size_t max_policies) {
  const Shape shape = m.shape();
  if (shape.cells() > max_cells || shape.cells() >= 63) {
    throw CapExceeded("|S||A| = " + std::to_string(shape.cells()) +
                      " exceeds vertex cap " + std::to_string(max_cells));
  }
  const std::vector<Policy> policies = EnumeratePolicies(shape, max_policies);
  const unsigned long long n_vertices = 1ull << shape.cells();
  const auto start = static_cast<size_t>(m.start_state);

  HalfMaximalReport report;
  Rational worst = 0;
  bool first = true;
  for (unsigned long long i = 0; i < n_vertices; ++i) {
    const RewardTable r = SignVertex(shape, i);
    const Rational v_star = OptimalPlan(m, r).values[start];
    const Rational own = v_star - EvaluatePolicy(m, pi, r)[start];
    if (first || own > report.lhs) report.lhs = own;
    first = false;
    for (const Policy& other : policies) {
      const Rational value = v_star - EvaluatePolicy(m, other, r)[start];
      if (value > worst) worst = value;
    }
  }
  report.rhs = worst / 2;
  report.holds = report.lhs >= report.rhs;
  return report;
}

}  // namespace rdlab
