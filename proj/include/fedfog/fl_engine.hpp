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

#ifndef FEDFOG_FL_ENGINE_HPP_
#define FEDFOG_FL_ENGINE_HPP_

#include <span>

#include "fedfog/data_gen.hpp"
#include "fedfog/types.hpp"

namespace fedfog {

enum class LearnerKind : std::uint8_t {
  linear_probe,  // one-vs-all least squares
  logistic,      // multinomial (softmax) regression
};

struct TrainingConfig {
  double learning_rate = 0.01;
  int epochs = 3;
  int batch_size = 32;
  LearnerKind learner = LearnerKind::logistic;
};

// One client's contribution to a round. delta carries the full post-training
// parameter vector (not a difference); train_time_ms is filled in by the
// orchestration layer from its timing model.
struct ClientUpdate {
  int client_id = -1;
  ModelVector delta;
  long dataset_size = 0;
  double train_time_ms = 0.0;
};

// Both learners parameterize a K x (f+1) weight matrix (bias in the last
// column) stored column-major in a flat ModelVector.
int model_dim(int n_classes, int feature_dim);

// Mean loss of the model on a shard: cross-entropy for logistic, half
// squared error against one-hot targets for linear_probe.
double loss(const ModelVector& weights, const LabeledShard& shard,
            LearnerKind learner, int n_classes);

// Full-batch analytic gradient of `loss` at `weights`.
ModelVector gradient(const ModelVector& weights, const LabeledShard& shard,
                     LearnerKind learner, int n_classes);

// Mini-batch gradient descent from the global model: epochs passes over the
// shard in row order with consecutive batches of cfg.batch_size (the final
// short batch included). Deterministic given shard and config; the returned
// delta is the trained parameter vector.
ClientUpdate local_train(const ModelVector& global_model,
                         const LabeledShard& shard, const TrainingConfig& cfg,
                         int n_classes, int client_id = -1);

// Dataset-size weighted average of client deltas:
//   w = sum_i (|D_i| / sum_j |D_j|) * delta_i.
// Requires a nonempty list, equal dimensions and positive total size.
ModelVector fed_avg(std::span<const ClientUpdate> updates);

// Top-1 accuracy of the model on a shard; throws on an empty shard.
double evaluate(const ModelVector& weights, const LabeledShard& shard,
                int n_classes);

}  // namespace fedfog

#endif  // FEDFOG_FL_ENGINE_HPP_
