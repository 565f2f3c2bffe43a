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

#ifndef RDLAB_RANDOM_INSTANCES_H_
#define RDLAB_RANDOM_INSTANCES_H_

#include <random>

#include "rdlab/mdp.h"

namespace rdlab {

using Rng = std::mt19937_64;

struct InstanceLimits {
  int max_states = 4;
  int max_actions = 3;
  int max_horizon = 4;
  // When positive, |S| * |A| is kept at or below this value.
  int max_cells = 0;
};

// Transition rows are normalized small integer weights, so every entry is an
// exact rational with a small denominator.
Mdpr RandomMdpr(Rng& rng, const InstanceLimits& limits);

Policy RandomPolicy(Rng& rng, Shape shape);

// Entries k / denominator with k uniform in [-denominator, denominator].
RewardTable RandomReward(Rng& rng, Shape shape, int denominator = 8);

// The two-state chain used throughout the tests and scenarios: action 0
// stays, action 1 switches, start in state 0.
Mdpr TwoStateChain(int horizon);

}  // namespace rdlab

#endif  // RDLAB_RANDOM_INSTANCES_H_
