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

#include "fedfog/fl_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace fedfog {
namespace {

using WeightMatrix = Eigen::Map<Eigen::MatrixXd>;
using ConstWeightMatrix = Eigen::Map<const Eigen::MatrixXd>;

ConstWeightMatrix as_matrix(const ModelVector& w, int n_classes, int f) {
  if (w.size() != static_cast<Eigen::Index>(n_classes) * (f + 1)) {
    throw std::invalid_argument("model dimension mismatch");
  }
  return ConstWeightMatrix(w.data(), n_classes, f + 1);
}

// Features with a trailing bias column of ones.
Eigen::MatrixXd with_bias(const Eigen::Ref<const Eigen::MatrixXd>& x) {
  Eigen::MatrixXd xb(x.rows(), x.cols() + 1);
  xb.leftCols(x.cols()) = x;
  xb.col(x.cols()).setOnes();
  return xb;
}

Eigen::MatrixXd one_hot(const Eigen::Ref<const Eigen::VectorXi>& labels,
                        int n_classes) {
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(labels.size(), n_classes);
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= n_classes) {
      throw std::invalid_argument("label out of range");
    }
    y(i, labels[i]) = 1.0;
  }
  return y;
}

// Row-wise softmax with the usual max-shift for stability.
Eigen::MatrixXd softmax_rows(Eigen::MatrixXd z) {
  const Eigen::VectorXd row_max = z.rowwise().maxCoeff();
  z.colwise() -= row_max;
  Eigen::MatrixXd e = z.array().exp();
  const Eigen::VectorXd norm = e.rowwise().sum();
  e.array().colwise() /= norm.array();
  return e;
}

// Gradient of the batch loss at w, written into grad (same layout as w).
void batch_gradient(const ConstWeightMatrix& w, const Eigen::MatrixXd& xb,
                    const Eigen::MatrixXd& y, LearnerKind learner,
                    WeightMatrix grad) {
  const double n = static_cast<double>(xb.rows());
  const Eigen::MatrixXd z = xb * w.transpose();  // n x K scores
  if (learner == LearnerKind::logistic) {
    grad = (softmax_rows(z) - y).transpose() * xb / n;
  } else {
    grad = (z - y).transpose() * xb / n;
  }
}

}  // namespace

int model_dim(int n_classes, int feature_dim) {
  if (n_classes < 2 || feature_dim < 1) {
    throw std::invalid_argument("model_dim: invalid shape");
  }
  return n_classes * (feature_dim + 1);
}

double loss(const ModelVector& weights, const LabeledShard& shard,
            LearnerKind learner, int n_classes) {
  if (shard.labels.size() == 0) {
    throw std::invalid_argument("loss: empty shard");
  }
  const int f = static_cast<int>(shard.features.cols());
  const ConstWeightMatrix w = as_matrix(weights, n_classes, f);
  const Eigen::MatrixXd xb = with_bias(shard.features);
  const Eigen::MatrixXd z = xb * w.transpose();
  const double n = static_cast<double>(xb.rows());
  if (learner == LearnerKind::logistic) {
    // Cross-entropy via log-sum-exp, stable for large scores.
    const Eigen::VectorXd row_max = z.rowwise().maxCoeff();
    const Eigen::VectorXd lse =
        ((z.colwise() - row_max).array().exp().rowwise().sum()).log() +
        row_max.array();
    double total = 0.0;
    for (Eigen::Index i = 0; i < shard.labels.size(); ++i) {
      total += lse[i] - z(i, shard.labels[i]);
    }
    return total / n;
  }
  const Eigen::MatrixXd y = one_hot(shard.labels, n_classes);
  return 0.5 * (z - y).squaredNorm() / n;
}

ModelVector gradient(const ModelVector& weights, const LabeledShard& shard,
                     LearnerKind learner, int n_classes) {
  if (shard.labels.size() == 0) {
    throw std::invalid_argument("gradient: empty shard");
  }
  const int f = static_cast<int>(shard.features.cols());
  const ConstWeightMatrix w = as_matrix(weights, n_classes, f);
  ModelVector grad_vec = ModelVector::Zero(weights.size());
  WeightMatrix grad(grad_vec.data(), n_classes, f + 1);
  batch_gradient(w, with_bias(shard.features),
                 one_hot(shard.labels, n_classes), learner, grad);
  return grad_vec;
}

ClientUpdate local_train(const ModelVector& global_model,
                         const LabeledShard& shard, const TrainingConfig& cfg,
                         int n_classes, int client_id) {
  if (cfg.epochs < 0 || cfg.batch_size < 1 || cfg.learning_rate < 0.0) {
    throw std::invalid_argument("local_train: invalid training config");
  }
  if (shard.labels.size() == 0) {
    throw std::invalid_argument("local_train: empty shard");
  }
  const int f = static_cast<int>(shard.features.cols());
  const Eigen::Index n = shard.labels.size();
  as_matrix(global_model, n_classes, f);  // dimension check

  ClientUpdate update;
  update.client_id = client_id;
  update.dataset_size = n;
  update.delta = global_model;
  WeightMatrix w(update.delta.data(), n_classes, f + 1);

  const Eigen::MatrixXd xb = with_bias(shard.features);
  const Eigen::MatrixXd y = one_hot(shard.labels, n_classes);
  ModelVector grad_vec = ModelVector::Zero(global_model.size());
  WeightMatrix grad(grad_vec.data(), n_classes, f + 1);

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (Eigen::Index start = 0; start < n; start += cfg.batch_size) {
      const Eigen::Index len = std::min<Eigen::Index>(cfg.batch_size,
                                                      n - start);
      batch_gradient(ConstWeightMatrix(update.delta.data(), n_classes, f + 1),
                     xb.middleRows(start, len), y.middleRows(start, len),
                     cfg.learner, grad);
      w -= cfg.learning_rate * grad;
    }
  }
  return update;
}

ModelVector fed_avg(std::span<const ClientUpdate> updates) {
  if (updates.empty()) {
    throw std::invalid_argument("fed_avg: no updates");
  }
  double total = 0.0;
  for (const ClientUpdate& u : updates) {
    if (u.dataset_size < 0) {
      throw std::invalid_argument("fed_avg: negative dataset size");
    }
    if (u.delta.size() != updates.front().delta.size()) {
      throw std::invalid_argument("fed_avg: dimension mismatch");
    }
    total += static_cast<double>(u.dataset_size);
  }
  if (!(total > 0.0)) {
    throw std::invalid_argument("fed_avg: total dataset size is zero");
  }
  ModelVector avg = ModelVector::Zero(updates.front().delta.size());
  for (const ClientUpdate& u : updates) {
    avg += (static_cast<double>(u.dataset_size) / total) * u.delta;
  }
  return avg;
}

double evaluate(const ModelVector& weights, const LabeledShard& shard,
                int n_classes) {
  if (shard.labels.size() == 0) {
    throw std::invalid_argument("evaluate: empty test shard");
  }
  const int f = static_cast<int>(shard.features.cols());
  const ConstWeightMatrix w = as_matrix(weights, n_classes, f);
  const Eigen::MatrixXd z = with_bias(shard.features) * w.transpose();
  long correct = 0;
  for (Eigen::Index i = 0; i < shard.labels.size(); ++i) {
    Eigen::Index pred = 0;
    z.row(i).maxCoeff(&pred);
    if (pred == shard.labels[i]) {
      ++correct;
    }
  }
  return static_cast<double>(correct) /
         static_cast<double>(shard.labels.size());
}

}  // namespace fedfog
