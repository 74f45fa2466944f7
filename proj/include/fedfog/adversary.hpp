// Copyright 2026 The FedFog Authors
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

#ifndef FEDFOG_ADVERSARY_HPP_
#define FEDFOG_ADVERSARY_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fedfog/data_gen.hpp"
#include "fedfog/fl_engine.hpp"
#include "fedfog/types.hpp"

namespace fedfog {

// Scenario-level attack model. A `fraction` of clients is designated
// malicious once at round zero and plays `role` for the whole run.
struct AttackConfig {
  AttackRole role = AttackRole::honest;
  double fraction = 0.2;       // share of clients that are malicious
  double noise_sigma = 0.5;    // per-coordinate std for the noise role
  double dropout_prob = 0.3;   // per-round failure probability
  double replace_scale = 10.0;  // bound of the substituted coordinates
  // With true (the default), a dropped client has already been invoked: its
  // cold-start cost and invocation delay are charged before it fails. With
  // false the client fails before invocation and costs nothing.
  bool drop_after_invoke = true;
  // Stream for designating malicious clients; when unset the simulation
  // derives one from the master scenario seed.
  std::optional<std::uint64_t> seed;
};

// Label poisoning: every label k becomes (n_classes - 1) - k. Features are
// untouched, so applying it twice restores the original shard. Malicious
// clients train on the flipped copy but keep reporting the true class
// distribution; the poisoning is covert to the drift detector.
LabeledShard flip_labels(LabeledShard shard, int n_classes);

// Additive Gaussian noise on every coordinate of the update delta.
ClientUpdate inject_noise(ClientUpdate update, double sigma,
                          std::mt19937_64& rng);

// One Bernoulli(prob) failure draw.
bool maybe_dropout(double prob, std::mt19937_64& rng);

// Model replacement: the delta is overwritten with iid Uniform(-scale,
// scale) coordinates, independent of the honest update.
ClientUpdate replace_model(ClientUpdate update, double scale,
                           std::mt19937_64& rng);

// The fixed malicious set: round(fraction * n) distinct client indices drawn
// uniformly, returned in ascending order.
std::vector<int> designate_malicious(int n_clients, double fraction,
                                     std::mt19937_64& rng);

}  // namespace fedfog

#endif  // FEDFOG_ADVERSARY_HPP_
