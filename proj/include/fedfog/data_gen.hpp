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

#ifndef FEDFOG_DATA_GEN_HPP_
#define FEDFOG_DATA_GEN_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <vector>

#include "fedfog/types.hpp"

namespace fedfog {

// Synthetic non-IID partition: per-client class proportions drawn from a
// symmetric Dirichlet, features from per-class Gaussian blobs.
struct PartitionConfig {
  int n_clients = 20;
  int n_classes = 10;         // >= 2
  double concentration = 0.5;  // Dirichlet parameter; small = skewed
  int samples_per_client = 200;
  int feature_dim = 8;
  double blob_spread = 3.0;  // std of the class-mean placement
  int test_samples = 2000;   // held-out shard, uniform class mixture
  // Stream for partitioning; when unset the simulation derives one from the
  // master scenario seed.
  std::optional<std::uint64_t> seed;
};

// Periodic label-distribution drift injected into client shards.
struct DriftSchedule {
  enum class Mode : std::uint8_t {
    class_shift,  // rotate labels of affected classes k -> (k+1) mod K
    imbalance,    // move probability mass onto one random class
  };
  int period_rounds = 10;  // fires when round > 0 and round % period == 0
  Mode mode = Mode::imbalance;
  double magnitude = 0.5;  // in (0, 1]
  // Client ids hit by the schedule; empty means every client drifts.
  std::vector<int> targets;
};

// One client's local dataset: n rows of feature_dim features plus labels in
// [0, n_classes).
struct LabeledShard {
  Eigen::MatrixXd features;  // n x feature_dim
  Eigen::VectorXi labels;    // n
};

// The generative task shared by all clients: one Gaussian blob (unit
// variance) per class, centered at a distinct mean.
struct BlobTask {
  Eigen::MatrixXd class_means;  // n_classes x feature_dim
};

struct ClientData {
  LabeledShard shard;
  ClassDistribution dist;  // empirical label distribution of the shard
};

// Class means drawn once per scenario from the partition stream; identical
// for every client so the learning task is shared.
BlobTask make_blob_task(const PartitionConfig& cfg, std::uint64_t seed);

// Deterministic per-client shards: Dirichlet proportions are rounded to
// integer label counts by largest remainder (so the empirical distribution
// matches the reported one to within 1/n), features sampled from the class
// blobs, rows shuffled once.
std::vector<ClientData> partition_non_iid(const PartitionConfig& cfg,
                                          const BlobTask& task,
                                          std::uint64_t seed);

// Held-out evaluation shard with a uniform class mixture.
LabeledShard sample_uniform_shard(const PartitionConfig& cfg,
                                  const BlobTask& task, int n_samples,
                                  std::uint64_t seed);

struct DriftResult {
  LabeledShard shard;
  ClassDistribution dist;
  bool applied = false;  // false when the schedule did not fire this round
};

// Applies the schedule to one shard at the given round. Rounds where the
// schedule does not fire return the inputs unchanged. Affected samples are
// relabeled and their features resampled from the new class blob, so shards
// stay consistent with the generative task.
DriftResult apply_drift(const LabeledShard& shard,
                        const ClassDistribution& dist, long round,
                        const DriftSchedule& schedule, const BlobTask& task,
                        std::mt19937_64& rng);

// Largest-remainder apportionment of n samples to dist; counts sum to n
// exactly and |counts[k]/n - dist[k]| < 1/n.
Eigen::VectorXi counts_from_distribution(
    const Eigen::Ref<const Eigen::VectorXd>& dist, int n);

// Writes "label,f1,...,ff" rows after a single header line.
void dump_shard(std::ostream& out, const LabeledShard& shard);

}  // namespace fedfog

#endif  // FEDFOG_DATA_GEN_HPP_
