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

#ifndef FEDFOG_SIM_HPP_
#define FEDFOG_SIM_HPP_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fedfog/scenario.hpp"

namespace fedfog {

// Telemetry of one federated round.
struct RoundRecord {
  long round = 0;
  std::vector<int> selected_ids;  // clients that returned an update
  std::vector<int> dropped_ids;   // scheduled but constraint-dropped or failed
  double latency_ms = 0.0;        // straggler latency + aggregation
  double energy_j = 0.0;          // summed client energy this round
  int cold_starts = 0;
  double accuracy = 0.0;          // on the held-out shard
  double mean_utility = 0.0;      // over the scheduled set
  double objective_score = 0.0;   // scalarized J for this round
  std::optional<double> epsilon;  // per-round privacy loss, when dp enabled
  std::vector<double> per_client_energy_j;  // indexed by client id
};

// Test seams: any hook left empty falls back to the real implementation.
// Used to replay scripted rounds with injected scores and fixed updates.
struct RoundHooks {
  std::function<ClientUpdate(const ClientNode&, const ModelVector&,
                             const LabeledShard&, const TrainingConfig&)>
      trainer;
  std::function<double(const ClientNode&)> drift;
  std::function<double(const ModelVector&)> evaluator;
};

// Straggler latency of a round: the maximum per-client latency plus the
// aggregation cost; zero when nothing was invoked.
double round_latency(std::span<const double> per_client_latency_ms,
                     double aggregation_ms);

// Energy of one invocation: c_cpu * compute_units + c_tx * tx_bytes, plus
// the cold-start penalty when the container was cold.
double client_energy(double compute_units, double tx_bytes,
                     const EnergyModel& energy_model, bool was_cold,
                     double e_cold_j);

// One simulation instance: builds the fleet, shards and containers from the
// scenario seed, then steps rounds. Deterministic: equal configs and seeds
// produce equal telemetry.
class Simulation {
 public:
  explicit Simulation(ScenarioConfig config, RoundHooks hooks = {});

  // Advances one round and appends its record. Rounds must be run in order.
  const RoundRecord& step();

  // Runs all config.rounds rounds from the current position.
  const std::vector<RoundRecord>& run();

  const ScenarioConfig& config() const { return config_; }
  const std::vector<RoundRecord>& records() const { return records_; }
  const ModelVector& global_model() const { return global_model_; }
  const std::vector<ClientNode>& clients() const { return clients_; }
  const std::vector<LabeledShard>& shards() const { return shards_; }
  const LabeledShard& test_shard() const { return test_shard_; }

  // Mutable access for scripted tests (preset container states, resources or
  // energy levels before stepping).
  std::vector<ClientNode>& mutable_clients() { return clients_; }

 private:
  ScenarioConfig config_;
  RoundHooks hooks_;
  BlobTask task_;
  std::vector<ClientNode> clients_;
  std::vector<LabeledShard> shards_;
  LabeledShard test_shard_;
  ModelVector global_model_;
  std::vector<RoundRecord> records_;
  long next_round_ = 0;
};

// Validates, runs, and returns the telemetry of a whole scenario. Throws
// std::invalid_argument listing the violations when validation fails.
std::vector<RoundRecord> run_simulation(const ScenarioConfig& config,
                                        RoundHooks hooks = {});

// Threshold sweep: every grid cell runs `repeats` times; repeat r of every
// cell shares the same derived seed so cells are comparable.
struct SweepCell {
  SelectionThresholds thresholds;
  double mean_accuracy = 0.0;       // mean final-round accuracy
  double std_accuracy = 0.0;        // sample std over repeats (0 if one)
  double mean_participation = 0.0;  // mean selected_count over rounds/repeats
};

struct SweepReport {
  std::vector<SweepCell> cells;
  int repeats = 0;
};

SweepReport sweep(const ScenarioConfig& base,
                  std::span<const SelectionThresholds> grid, int repeats);

// Operation counts of one synthetic selection+scheduling pass per policy.
// The fedfog pass ranks with the bench's top-k bound (the K << N scheduling
// regime); the baselines use their modeled counts.
struct BenchRow {
  int n_clients = 0;
  std::uint64_t fedfog_ops = 0;
  std::uint64_t naive_ops = 0;
  std::uint64_t random_ops = 0;
};

// Top-k bound used by complexity_bench's fedfog pass.
inline constexpr int kBenchTopK = 64;

std::vector<BenchRow> complexity_bench(std::span<const int> client_counts,
                                       std::uint64_t seed);

}  // namespace fedfog

#endif  // FEDFOG_SIM_HPP_
