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

#ifndef FEDFOG_TYPES_HPP_
#define FEDFOG_TYPES_HPP_

#include <Eigen/Dense>
#include <cstdint>

namespace fedfog {

// Flat parameter vector of a client or global model. Dimension is fixed per
// scenario; entries must stay finite.
using ModelVector = Eigen::VectorXd;

// Probability vector over the K label classes. Entries are nonnegative and
// sum to 1 (within numerical tolerance).
using ClassDistribution = Eigen::VectorXd;

// Instantaneous device resources, each normalized to [0, 1].
struct ResourceSnapshot {
  double cpu = 1.0;   // available CPU share
  double mem = 1.0;   // free memory fraction
  double batt = 1.0;  // battery fraction
};

// Convex weights of the health score. a1 + a2 + a3 == 1, all nonnegative.
struct HealthWeights {
  double a1 = 0.4;
  double a2 = 0.3;
  double a3 = 0.3;
};

// Convex weights of the scheduling utility. b1 + b2 + b3 == 1, all
// nonnegative.
struct UtilityWeights {
  double b1 = 0.4;
  double b2 = 0.4;
  double b3 = 0.2;
};

// Participation gates. theta_h and theta_e lie in [0, 1]; theta_d is a
// nonnegative divergence bound (it may exceed 1, KL is unbounded).
struct SelectionThresholds {
  double theta_h = 0.6;
  double theta_e = 0.5;
  double theta_d = 0.1;
};

// Per-round feasibility bounds, both strictly positive.
struct RoundConstraints {
  double tau_max_ms = 1.0e6;  // latency budget
  double eps_max_j = 1.0e6;   // energy budget
};

// Weights of the scalarized round objective
//   J = alpha * accuracy - beta * latency - gamma * energy
// (latency and energy normalized by the caller). Nonnegative, not all zero.
struct ObjectiveWeights {
  double alpha = 1.0 / 3.0;
  double beta = 1.0 / 3.0;
  double gamma = 1.0 / 3.0;
};

// Behavior of a client under the scenario's attack model.
enum class AttackRole : std::uint8_t {
  honest,
  label_flip,  // trains on labels remapped k -> (K-1) - k
  noise,       // adds Gaussian noise to its update
  dropout,     // randomly fails to return an update
  replace,     // substitutes an arbitrary update
};

// Lifecycle of the per-client serverless container.
enum class ContainerStatus : std::uint8_t {
  never_invoked,
  warm,
  evicted,
};

struct ContainerState {
  ContainerStatus status = ContainerStatus::never_invoked;
  long last_used_round = -1;  // only meaningful once invoked
};

// One edge client as seen by the orchestrator.
struct ClientNode {
  int id = 0;
  ResourceSnapshot resources;
  double energy_level = 1.0;      // remaining battery fraction, [0, 1]
  double energy_threshold = 0.5;  // per-client adaptive theta_e^(i)
  long dataset_size = 0;
  ClassDistribution class_dist;       // current label distribution
  ClassDistribution prev_class_dist;  // distribution one round earlier
  ContainerState container;
  AttackRole adversary = AttackRole::honest;
};

}  // namespace fedfog

#endif  // FEDFOG_TYPES_HPP_
