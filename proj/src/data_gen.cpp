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

#include "fedfog/data_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "fedfog/rng.hpp"

namespace fedfog {
namespace {

Eigen::VectorXd sample_dirichlet(int k, double concentration,
                                 std::mt19937_64& rng) {
  std::gamma_distribution<double> gamma(concentration, 1.0);
  Eigen::VectorXd draws(k);
  for (int i = 0; i < k; ++i) {
    draws[i] = gamma(rng);
  }
  const double total = draws.sum();
  if (!(total > 0.0)) {
    // Extremely small concentrations can underflow every gamma draw; fall
    // back to a single random class, the limit of the Dirichlet as a -> 0.
    Eigen::VectorXd point = Eigen::VectorXd::Zero(k);
    std::uniform_int_distribution<int> pick(0, k - 1);
    point[pick(rng)] = 1.0;
    return point;
  }
  return draws / total;
}

Eigen::VectorXd sample_blob_row(const BlobTask& task, int label,
                                std::mt19937_64& rng) {
  std::normal_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd row = task.class_means.row(label);
  for (Eigen::Index j = 0; j < row.size(); ++j) {
    row[j] += unit(rng);
  }
  return row;
}

// Builds a shard with counts[k] samples of class k, rows shuffled.
LabeledShard build_shard(const BlobTask& task, const Eigen::VectorXi& counts,
                         std::mt19937_64& rng) {
  const int n = counts.sum();
  const int f = static_cast<int>(task.class_means.cols());
  LabeledShard shard;
  shard.features.resize(n, f);
  shard.labels.resize(n);
  int row = 0;
  for (int k = 0; k < counts.size(); ++k) {
    for (int i = 0; i < counts[k]; ++i) {
      shard.labels[row] = k;
      shard.features.row(row) = sample_blob_row(task, k, rng);
      ++row;
    }
  }
  // One Fisher-Yates pass so sequential mini-batches mix classes.
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    const int j = pick(rng);
    shard.features.row(i).swap(shard.features.row(j));
    std::swap(shard.labels[i], shard.labels[j]);
  }
  return shard;
}

ClassDistribution empirical_distribution(const LabeledShard& shard,
                                         int n_classes) {
  ClassDistribution dist = ClassDistribution::Zero(n_classes);
  for (Eigen::Index i = 0; i < shard.labels.size(); ++i) {
    dist[shard.labels[i]] += 1.0;
  }
  if (shard.labels.size() > 0) {
    dist /= static_cast<double>(shard.labels.size());
  }
  return dist;
}

}  // namespace

Eigen::VectorXi counts_from_distribution(
    const Eigen::Ref<const Eigen::VectorXd>& dist, int n) {
  const int k = static_cast<int>(dist.size());
  Eigen::VectorXi counts(k);
  std::vector<std::pair<double, int>> remainders(k);
  int assigned = 0;
  for (int i = 0; i < k; ++i) {
    const double exact = dist[i] * n;
    counts[i] = static_cast<int>(std::floor(exact));
    remainders[i] = {exact - counts[i], i};
    assigned += counts[i];
  }
  // Hand the leftover samples to the largest remainders (ties: lower class).
  std::sort(remainders.begin(), remainders.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first > b.first;
              return a.second < b.second;
            });
  for (int extra = 0; extra < n - assigned; ++extra) {
    counts[remainders[static_cast<std::size_t>(extra)].second] += 1;
  }
  return counts;
}

BlobTask make_blob_task(const PartitionConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng = substream(seed, Stream::partition, /*client=*/0,
                                  /*round=*/0);
  std::normal_distribution<double> spread(0.0, cfg.blob_spread);
  BlobTask task;
  task.class_means.resize(cfg.n_classes, cfg.feature_dim);
  for (int k = 0; k < cfg.n_classes; ++k) {
    for (int j = 0; j < cfg.feature_dim; ++j) {
      task.class_means(k, j) = spread(rng);
    }
  }
  return task;
}

std::vector<ClientData> partition_non_iid(const PartitionConfig& cfg,
                                          const BlobTask& task,
                                          std::uint64_t seed) {
  if (cfg.n_clients < 1 || cfg.n_classes < 2 || cfg.samples_per_client < 1 ||
      !(cfg.concentration > 0.0)) {
    throw std::invalid_argument("partition_non_iid: invalid config");
  }
  std::vector<ClientData> clients;
  clients.reserve(static_cast<std::size_t>(cfg.n_clients));
  for (int c = 0; c < cfg.n_clients; ++c) {
    std::mt19937_64 rng =
        substream(seed, Stream::partition, static_cast<std::uint64_t>(c + 1),
                  /*round=*/0);
    const Eigen::VectorXd proportions =
        sample_dirichlet(cfg.n_classes, cfg.concentration, rng);
    const Eigen::VectorXi counts =
        counts_from_distribution(proportions, cfg.samples_per_client);
    ClientData data;
    data.shard = build_shard(task, counts, rng);
    data.dist = empirical_distribution(data.shard, cfg.n_classes);
    clients.push_back(std::move(data));
  }
  return clients;
}

LabeledShard sample_uniform_shard(const PartitionConfig& cfg,
                                  const BlobTask& task, int n_samples,
                                  std::uint64_t seed) {
  std::mt19937_64 rng = substream(seed, Stream::test_data);
  const Eigen::VectorXd uniform =
      Eigen::VectorXd::Constant(cfg.n_classes, 1.0 / cfg.n_classes);
  return build_shard(task, counts_from_distribution(uniform, n_samples), rng);
}

DriftResult apply_drift(const LabeledShard& shard,
                        const ClassDistribution& dist, long round,
                        const DriftSchedule& schedule, const BlobTask& task,
                        std::mt19937_64& rng) {
  DriftResult result{shard, dist, false};
  if (schedule.period_rounds < 1) {
    throw std::invalid_argument("apply_drift: period_rounds must be >= 1");
  }
  if (!(schedule.magnitude > 0.0) || schedule.magnitude > 1.0) {
    throw std::invalid_argument("apply_drift: magnitude must be in (0, 1]");
  }
  if (round <= 0 || round % schedule.period_rounds != 0) {
    return result;
  }
  const int k = static_cast<int>(dist.size());
  const int n = static_cast<int>(shard.labels.size());

  if (schedule.mode == DriftSchedule::Mode::class_shift) {
    // Rotate the labels of the first ceil(magnitude * K) classes; samples of
    // an affected class move to (k+1) mod K and get that blob's features.
    const int affected =
        std::min(k, static_cast<int>(std::ceil(schedule.magnitude * k)));
    result.shard = shard;
    for (int i = 0; i < n; ++i) {
      const int label = result.shard.labels[i];
      if (label < affected) {
        const int shifted = (label + 1) % k;
        result.shard.labels[i] = shifted;
        result.shard.features.row(i) = sample_blob_row(task, shifted, rng);
      }
    }
    result.dist = empirical_distribution(result.shard, k);
    result.applied = true;
    return result;
  }

  // Imbalance: blend the distribution toward a random class and rebuild the
  // shard with the new label counts.
  std::uniform_int_distribution<int> pick(0, k - 1);
  const int target = pick(rng);
  ClassDistribution shifted = (1.0 - schedule.magnitude) * dist;
  shifted[target] += schedule.magnitude;
  result.shard = build_shard(task, counts_from_distribution(shifted, n), rng);
  result.dist = empirical_distribution(result.shard, k);
  result.applied = true;
  return result;
}

void dump_shard(std::ostream& out, const LabeledShard& shard) {
  out << "label";
  for (Eigen::Index j = 0; j < shard.features.cols(); ++j) {
    out << ",f" << (j + 1);
  }
  out << "\n";
  for (Eigen::Index i = 0; i < shard.labels.size(); ++i) {
    out << shard.labels[i];
    for (Eigen::Index j = 0; j < shard.features.cols(); ++j) {
      out << "," << shard.features(i, j);
    }
    out << "\n";
  }
}

}  // namespace fedfog
