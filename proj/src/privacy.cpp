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

#include "fedfog/privacy.hpp"

#include <cmath>
#include <stdexcept>

namespace fedfog {

ModelVector clip_update(ModelVector delta, double clip_s) {
  if (!(clip_s > 0.0)) {
    throw std::invalid_argument("clip_update: clip_s must be positive");
  }
  const double norm = delta.norm();
  if (norm > clip_s) {
    delta *= clip_s / norm;
  }
  return delta;
}

ModelVector add_dp_noise(ModelVector delta, double sigma,
                         std::mt19937_64& rng) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("add_dp_noise: sigma must be positive");
  }
  std::normal_distribution<double> noise(0.0, sigma);
  for (Eigen::Index i = 0; i < delta.size(); ++i) {
    delta[i] += noise(rng);
  }
  return delta;
}

double epsilon(double sigma, double clip_s, int n_clients, double dp_delta) {
  if (!(sigma > 0.0) || !(clip_s > 0.0) || n_clients < 1 ||
      !(dp_delta > 0.0) || !(dp_delta < 1.0)) {
    throw std::invalid_argument("epsilon: invalid arguments");
  }
  return std::sqrt(2.0 * std::log(1.25 / dp_delta)) / sigma *
         (clip_s / static_cast<double>(n_clients));
}

}  // namespace fedfog
