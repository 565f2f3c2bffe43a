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

#include "rdlab/random_instances.h"


namespace rdlab {
namespace {

int UniformInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Mdpr RandomMdpr(Rng& rng, const InstanceLimits& limits) {
  int n_states = UniformInt(rng, 1, limits.max_states);
  int n_actions = UniformInt(rng, 1, limits.max_actions);
  if (limits.max_cells > 0) {
    while (n_states * n_actions > limits.max_cells) {
      if (n_actions > 1 && (n_states == 1 || UniformInt(rng, 0, 1) == 0)) {
        --n_actions;
      } else {
        --n_states;
      }
    }
  }
  const int horizon = UniformInt(rng, 1, limits.max_horizon);
  Mdpr m = Mdpr::Empty(n_states, n_actions, UniformInt(rng, 0, n_states - 1),
                       horizon);
  for (int s = 0; s < n_states; ++s) {
    for (int a = 0; a < n_actions; ++a) {
      std::vector<int> weights(static_cast<size_t>(n_states));
      int total = 0;
      // Half of the rows are deterministic to keep the chains interesting.
      if (UniformInt(rng, 0, 1) == 0) {
        weights[static_cast<size_t>(UniformInt(rng, 0, n_states - 1))] = 1;
        total = 1;
      } else {
        while (total == 0) {
          for (auto& w : weights) w = UniformInt(rng, 0, 3);
          total = 0;
          for (int w : weights) total += w;
        }
      }
      for (int next = 0; next < n_states; ++next) {
        m.T(s, a, next) = Rational(weights[static_cast<size_t>(next)], total);
        m.T(s, a, next).canonicalize();
      }
    }
  }
  return m;
}

Policy RandomPolicy(Rng& rng, Shape shape) {
  Policy pi = Policy::Constant(shape.n_states, 0);
  for (auto& a : pi.action) a = UniformInt(rng, 0, shape.n_actions - 1);
  return pi;
}

RewardTable RandomReward(Rng& rng, Shape shape, int denominator) {
  RewardTable r(shape);
  for (auto& v : r.values) {
    v = Rational(UniformInt(rng, -denominator, denominator), denominator);
    v.canonicalize();
  }
  return r;
}

Mdpr TwoStateChain(int horizon) {
  Mdpr m = Mdpr::Empty(2, 2, 0, horizon);
  for (int s = 0; s < 2; ++s) {
    m.T(s, 0, s) = 1;
    m.T(s, 1, 1 - s) = 1;
  }
  return m;
}

}  // namespace rdlab
