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

#include "fedfog/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fedfog {

LabeledShard flip_labels(LabeledShard shard, int n_classes) {
  if (n_classes < 2) {
    throw std::invalid_argument("flip_labels: need at least two classes");
  }
  for (Eigen::Index i = 0; i < shard.labels.size(); ++i) {
    if (shard.labels[i] < 0 || shard.labels[i] >= n_classes) {
      throw std::invalid_argument("flip_labels: label out of range");
    }
    shard.labels[i] = (n_classes - 1) - shard.labels[i];
  }
  return shard;
}

ClientUpdate inject_noise(ClientUpdate update, double sigma,
                          std::mt19937_64& rng) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("inject_noise: sigma must be positive");
  }
  std::normal_distribution<double> noise(0.0, sigma);
  for (Eigen::Index i = 0; i < update.delta.size(); ++i) {
    update.delta[i] += noise(rng);
  }
  return update;
}

bool maybe_dropout(double prob, std::mt19937_64& rng) {
  if (prob < 0.0 || prob > 1.0) {
    throw std::invalid_argument("maybe_dropout: prob must be in [0, 1]");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return unit(rng) < prob;
}

ClientUpdate replace_model(ClientUpdate update, double scale,
                           std::mt19937_64& rng) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("replace_model: scale must be positive");
  }
  std::uniform_real_distribution<double> coord(-scale, scale);
  for (Eigen::Index i = 0; i < update.delta.size(); ++i) {
    update.delta[i] = coord(rng);
  }
  return update;
}

std::vector<int> designate_malicious(int n_clients, double fraction,
                                     std::mt19937_64& rng) {
  if (n_clients < 0 || fraction < 0.0 || fraction > 1.0) {
    throw std::invalid_argument("designate_malicious: invalid arguments");
  }
  const int count = static_cast<int>(std::llround(fraction * n_clients));
  std::vector<int> ids(static_cast<std::size_t>(n_clients));
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> pick(i, n_clients - 1);
    std::swap(ids[static_cast<std::size_t>(i)],
              ids[static_cast<std::size_t>(pick(rng))]);
  }
  ids.resize(static_cast<std::size_t>(count));
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace fedfog
