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

#ifndef FEDFOG_PRIVACY_HPP_
#define FEDFOG_PRIVACY_HPP_

#include <cstdint>
#include <random>

#include "fedfog/types.hpp"

namespace fedfog {

// Gaussian-mechanism layer over the aggregation pipeline.
struct DpConfig {
  bool enabled = false;
  double sigma = 0.3;     // noise std, > 0 when enabled
  double clip_s = 1.1;    // l2 clipping bound, > 0
  double dp_delta = 1e-5;  // delta of the (epsilon, delta) guarantee, (0, 1)
  // Where noise is added: per client update before aggregation, or once to
  // the aggregate. Updates are clipped before aggregation in both modes.
  enum class Point : std::uint8_t { client, server };
  Point point = Point::server;
};

// l2 clipping: vectors with norm > clip_s are scaled to norm clip_s, others
// pass through unchanged. Never increases the norm, preserves direction.
ModelVector clip_update(ModelVector delta, double clip_s);

// Adds iid N(0, sigma^2) noise to every coordinate.
ModelVector add_dp_noise(ModelVector delta, double sigma,
                         std::mt19937_64& rng);

// Per-round privacy loss of the Gaussian mechanism:
//   epsilon = sqrt(2 * ln(1.25 / delta)) / sigma * (clip_s / n_clients).
// Decreasing in sigma and in the participant count, increasing in clip_s.
double epsilon(double sigma, double clip_s, int n_clients, double dp_delta);

}  // namespace fedfog

#endif  // FEDFOG_PRIVACY_HPP_
