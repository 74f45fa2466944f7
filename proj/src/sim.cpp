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

#include "fedfog/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "fedfog/rng.hpp"

namespace fedfog {
namespace {

// Ablations rewrite the effective policy: no scheduler falls back to the
// naive baseline, no drift manager lifts the divergence gate, no energy
// model lifts the energy gate and freezes the budget decay.
ScenarioConfig apply_ablation(ScenarioConfig config) {
  if (config.ablation.disable_scheduler) {
    config.policy.kind = PolicyKind::naive_faas;
  }
  if (config.ablation.disable_drift_manager) {
    config.policy.thresholds.theta_d = std::numeric_limits<double>::infinity();
  }
  if (config.ablation.disable_energy_model) {
    config.policy.thresholds.theta_e = 0.0;
    config.energy_budget.lambda = 0.0;
  }
  return config;
}

bool drift_targets_client(const DriftSchedule& schedule, int id) {
  if (schedule.targets.empty()) {
    return true;
  }
  return std::find(schedule.targets.begin(), schedule.targets.end(), id) !=
         schedule.targets.end();
}

double sample_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

}  // namespace

double round_latency(std::span<const double> per_client_latency_ms,
                     double aggregation_ms) {
  if (per_client_latency_ms.empty()) {
    return 0.0;
  }
  double worst = 0.0;
  for (double latency : per_client_latency_ms) {
    worst = std::max(worst, latency);
  }
  return worst + aggregation_ms;
}

double client_energy(double compute_units, double tx_bytes,
                     const EnergyModel& energy_model, bool was_cold,
                     double e_cold_j) {
  return energy_model.c_cpu * compute_units + energy_model.c_tx * tx_bytes +
         (was_cold ? e_cold_j : 0.0);
}

Simulation::Simulation(ScenarioConfig config, RoundHooks hooks)
    : config_(apply_ablation(std::move(config))), hooks_(std::move(hooks)) {
  const std::uint64_t partition_seed =
      config_.partition.seed.value_or(config_.seed);
  task_ = make_blob_task(config_.partition, partition_seed);
  std::vector<ClientData> data =
      partition_non_iid(config_.partition, task_, partition_seed);
  test_shard_ = sample_uniform_shard(config_.partition, task_,
                                     config_.partition.test_samples,
                                     partition_seed);

  const int n = config_.partition.n_clients;
  clients_.resize(static_cast<std::size_t>(n));
  shards_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ClientNode& client = clients_[static_cast<std::size_t>(i)];
    std::mt19937_64 rng =
        substream(config_.seed, Stream::fleet, static_cast<std::uint64_t>(i));
    client.id = i;
    client.resources.cpu =
        sample_uniform(rng, config_.fleet.cpu_min, config_.fleet.cpu_max);
    client.resources.mem =
        sample_uniform(rng, config_.fleet.mem_min, config_.fleet.mem_max);
    client.resources.batt =
        sample_uniform(rng, config_.fleet.batt_min, config_.fleet.batt_max);
    client.energy_level = sample_uniform(rng, config_.fleet.energy_min,
                                         config_.fleet.energy_max);
    client.energy_threshold = config_.policy.thresholds.theta_e;
    client.dataset_size = data[static_cast<std::size_t>(i)].shard.labels.size();
    client.class_dist = data[static_cast<std::size_t>(i)].dist;
    client.prev_class_dist = client.class_dist;
    shards_[static_cast<std::size_t>(i)] =
        std::move(data[static_cast<std::size_t>(i)].shard);
  }

  if (config_.attack.role != AttackRole::honest &&
      config_.attack.fraction > 0.0) {
    std::mt19937_64 rng = substream(
        config_.attack.seed.value_or(config_.seed), Stream::malicious);
    for (int id : designate_malicious(n, config_.attack.fraction, rng)) {
      clients_[static_cast<std::size_t>(id)].adversary = config_.attack.role;
    }
  }

  global_model_ = ModelVector::Zero(
      model_dim(config_.partition.n_classes, config_.partition.feature_dim));
}

const RoundRecord& Simulation::step() {
  const long t = next_round_;
  ++next_round_;
  const int n = config_.partition.n_clients;
  const int n_classes = config_.partition.n_classes;

  // (1) Container lifecycle, then scheduled drift, before anything observes
  // this round's state.
  expire_containers(clients_, t, config_.cold_start);
  for (int i = 0; i < n; ++i) {
    ClientNode& client = clients_[static_cast<std::size_t>(i)];
    client.prev_class_dist = client.class_dist;
    if (!drift_targets_client(config_.drift, i)) {
      continue;
    }
    std::mt19937_64 rng = substream(config_.seed, Stream::drift,
                                    static_cast<std::uint64_t>(i),
                                    static_cast<std::uint64_t>(t));
    DriftResult drifted =
        apply_drift(shards_[static_cast<std::size_t>(i)], client.class_dist,
                    t, config_.drift, task_, rng);
    if (drifted.applied) {
      shards_[static_cast<std::size_t>(i)] = std::move(drifted.shard);
      client.class_dist = std::move(drifted.dist);
      client.dataset_size =
          shards_[static_cast<std::size_t>(i)].labels.size();
    }
  }

  // (2) Round scores.
  std::vector<ClientScores> scores(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const ClientNode& client = clients_[static_cast<std::size_t>(i)];
    ClientScores& s = scores[static_cast<std::size_t>(i)];
    s.health = health_score(client.resources, config_.health);
    s.energy = client.energy_level;
    s.drift = hooks_.drift ? hooks_.drift(client)
                           : drift_score(client, config_.drift_detection);
  }

  // (3)+(4) Eligibility filter and policy scheduling.
  SelectionOutcome outcome;
  switch (config_.policy.kind) {
    case PolicyKind::fedfog: {
      std::vector<RankedCandidate> candidates;
      for (int id : select_clients(clients_, scores, config_.policy.thresholds)) {
        const ClientScores& s = scores[static_cast<std::size_t>(id)];
        candidates.push_back(
            {id, utility(s.health, s.energy, s.drift,
                         config_.policy.utility_weights)});
      }
      outcome = rank_clients(std::move(candidates), config_.policy.top_k);
      break;
    }
    case PolicyKind::naive_faas:
      outcome = naive_schedule(clients_);
      break;
    case PolicyKind::random: {
      const int k = std::min(n, config_.policy.top_k.value_or((n + 1) / 2));
      std::mt19937_64 rng = substream(config_.seed, Stream::random_policy, 0,
                                      static_cast<std::uint64_t>(t));
      outcome = random_schedule(clients_, k, rng);
      break;
    }
  }
  // Utilities are reported for every policy so telemetry and constraint
  // repair have a consistent ordering criterion.
  for (std::size_t j = 0; j < outcome.selected.size(); ++j) {
    const ClientScores& s =
        scores[static_cast<std::size_t>(outcome.selected[j])];
    outcome.utilities[j] =
        utility(s.health, s.energy, s.drift, config_.policy.utility_weights);
  }

  // (5) Feasibility repair on the planned round cost. Planning uses nominal
  // cold delays (jitter shows up only in the executed delay).
  std::vector<PlannedClient> planned;
  planned.reserve(outcome.selected.size());
  for (std::size_t j = 0; j < outcome.selected.size(); ++j) {
    const int id = outcome.selected[j];
    const ClientNode& client = clients_[static_cast<std::size_t>(id)];
    const LabeledShard& shard = shards_[static_cast<std::size_t>(id)];
    const bool cold = is_cold(client.container);
    const double n_samples = static_cast<double>(shard.labels.size());
    // Compute cost scales with wall time: slow devices run longer and burn
    // more energy for the same pass.
    const double compute_units =
        config_.training.epochs * n_samples / client.resources.cpu;
    const double train_ms = compute_units * config_.timing.cost_per_sample_ms;
    const double comm_ms = config_.energy_model.payload_bytes /
                           config_.energy_model.bandwidth_bytes_per_ms;
    const double delay_ms = cold ? config_.cold_start.delta_cold_ms
                                 : config_.cold_start.delta_warm_ms;
    PlannedClient plan_entry;
    plan_entry.id = id;
    plan_entry.utility_score = outcome.utilities[j];
    plan_entry.latency_ms = delay_ms + train_ms + comm_ms;
    plan_entry.energy_j = client_energy(
        compute_units, config_.energy_model.payload_bytes,
        config_.energy_model, cold, config_.cold_start.e_cold_j);
    planned.push_back(plan_entry);
  }
  ConstrainedPlan plan = enforce_constraints(
      std::move(planned), config_.timing.aggregation_ms, config_.constraints);

  RoundRecord record;
  record.round = t;
  record.dropped_ids = plan.dropped;
  record.per_client_energy_j.assign(static_cast<std::size_t>(n), 0.0);

  // (6) Execute the scheduled clients.
  std::vector<ClientUpdate> updates;
  std::vector<double> latencies;
  double round_energy = 0.0;
  for (const PlannedClient& entry : plan.kept) {
    ClientNode& client = clients_[static_cast<std::size_t>(entry.id)];
    const LabeledShard& shard = shards_[static_cast<std::size_t>(entry.id)];
    const bool may_drop = client.adversary == AttackRole::dropout;
    std::mt19937_64 drop_rng =
        substream(config_.seed, Stream::dropout,
                  static_cast<std::uint64_t>(entry.id),
                  static_cast<std::uint64_t>(t));
    if (may_drop && !config_.attack.drop_after_invoke &&
        maybe_dropout(config_.attack.dropout_prob, drop_rng)) {
      record.dropped_ids.push_back(entry.id);  // failed before invocation
      continue;
    }

    std::mt19937_64 jitter_rng =
        substream(config_.seed, Stream::jitter,
                  static_cast<std::uint64_t>(entry.id),
                  static_cast<std::uint64_t>(t));
    const InvocationResult invocation = invocation_delay(
        client.container, config_.cold_start, t,
        config_.cold_start.jitter ? &jitter_rng : nullptr);
    record.cold_starts += invocation.was_cold ? 1 : 0;

    if (may_drop && config_.attack.drop_after_invoke &&
        maybe_dropout(config_.attack.dropout_prob, drop_rng)) {
      // Invoked, then died: the cold start and the invocation delay are
      // spent, no update or upload happens.
      const double wasted = client_energy(0.0, 0.0, config_.energy_model,
                                          invocation.was_cold,
                                          config_.cold_start.e_cold_j);
      record.per_client_energy_j[static_cast<std::size_t>(entry.id)] = wasted;
      round_energy += wasted;
      latencies.push_back(invocation.delay_ms);
      record.dropped_ids.push_back(entry.id);
      continue;
    }

    LabeledShard flipped;
    const LabeledShard* train_shard = &shard;
    if (client.adversary == AttackRole::label_flip) {
      flipped = flip_labels(shard, n_classes);
      train_shard = &flipped;
    }
    ClientUpdate update =
        hooks_.trainer
            ? hooks_.trainer(client, global_model_, *train_shard,
                             config_.training)
            : local_train(global_model_, *train_shard, config_.training,
                          n_classes, entry.id);

    if (client.adversary == AttackRole::noise) {
      std::mt19937_64 rng = substream(config_.seed, Stream::noise,
                                      static_cast<std::uint64_t>(entry.id),
                                      static_cast<std::uint64_t>(t));
      update = inject_noise(std::move(update), config_.attack.noise_sigma,
                            rng);
    } else if (client.adversary == AttackRole::replace) {
      std::mt19937_64 rng = substream(config_.seed, Stream::replace,
                                      static_cast<std::uint64_t>(entry.id),
                                      static_cast<std::uint64_t>(t));
      update = replace_model(std::move(update), config_.attack.replace_scale,
                             rng);
    }

    const double n_samples = static_cast<double>(shard.labels.size());
    const double compute_units =
        config_.training.epochs * n_samples / client.resources.cpu;
    const double train_ms = compute_units * config_.timing.cost_per_sample_ms;
    const double comm_ms = config_.energy_model.payload_bytes /
                           config_.energy_model.bandwidth_bytes_per_ms;
    update.train_time_ms = train_ms;
    const double energy = client_energy(
        compute_units, config_.energy_model.payload_bytes, config_.energy_model,
        invocation.was_cold, config_.cold_start.e_cold_j);
    record.per_client_energy_j[static_cast<std::size_t>(entry.id)] = energy;
    round_energy += energy;
    latencies.push_back(invocation.delay_ms + train_ms + comm_ms);
    record.selected_ids.push_back(entry.id);
    updates.push_back(std::move(update));
  }

  // (7) Privacy layer: clip every update, noise either each update or the
  // aggregate, then (8) federated averaging.
  if (!updates.empty()) {
    if (config_.dp.enabled) {
      for (ClientUpdate& update : updates) {
        update.delta = clip_update(std::move(update.delta), config_.dp.clip_s);
        if (config_.dp.point == DpConfig::Point::client) {
          std::mt19937_64 rng =
              substream(config_.seed, Stream::dp,
                        static_cast<std::uint64_t>(update.client_id),
                        static_cast<std::uint64_t>(t));
          update.delta =
              add_dp_noise(std::move(update.delta), config_.dp.sigma, rng);
        }
      }
    }
    ModelVector aggregate = fed_avg(updates);
    if (config_.dp.enabled && config_.dp.point == DpConfig::Point::server) {
      std::mt19937_64 rng = substream(config_.seed, Stream::dp,
                                      static_cast<std::uint64_t>(n),
                                      static_cast<std::uint64_t>(t));
      aggregate = add_dp_noise(std::move(aggregate), config_.dp.sigma, rng);
    }
    global_model_ = std::move(aggregate);
  }
  if (config_.dp.enabled && !updates.empty()) {
    record.epsilon =
        epsilon(config_.dp.sigma, config_.dp.clip_s,
                static_cast<int>(updates.size()), config_.dp.dp_delta);
  }

  // (9) Evaluation on the held-out shard.
  record.accuracy = hooks_.evaluator
                        ? hooks_.evaluator(global_model_)
                        : evaluate(global_model_, test_shard_, n_classes);

  // (10) Energy bookkeeping: budget decay from this round's usage, then
  // battery depletion.
  if (round_energy > 0.0) {
    const double denom =
        config_.energy_budget.budget_avg == EnergyBudgetConfig::Average::all
            ? static_cast<double>(n)
            : static_cast<double>(
                  std::max<std::size_t>(1, record.selected_ids.size()));
    const double energy_avg = round_energy / denom;
    for (int i = 0; i < n; ++i) {
      ClientNode& client = clients_[static_cast<std::size_t>(i)];
      client.energy_threshold = update_energy_threshold(
          client.energy_threshold,
          record.per_client_energy_j[static_cast<std::size_t>(i)], energy_avg,
          config_.energy_budget);
      client.energy_level = std::max(
          0.0, client.energy_level -
                   record.per_client_energy_j[static_cast<std::size_t>(i)] /
                       config_.energy_model.battery_capacity_j);
    }
  }

  // (11) Round telemetry.
  record.latency_ms = round_latency(latencies, config_.timing.aggregation_ms);
  record.energy_j = round_energy;
  if (!plan.kept.empty()) {
    double total_utility = 0.0;
    for (const PlannedClient& entry : plan.kept) {
      total_utility += entry.utility_score;
    }
    record.mean_utility = total_utility / static_cast<double>(plan.kept.size());
  }
  record.objective_score = objective_value(
      record.accuracy, record.latency_ms / config_.constraints.tau_max_ms,
      record.energy_j / config_.constraints.eps_max_j, config_.objective);
  records_.push_back(std::move(record));
  return records_.back();
}

const std::vector<RoundRecord>& Simulation::run() {
  while (next_round_ < config_.rounds) {
    step();
  }
  return records_;
}

std::vector<RoundRecord> run_simulation(const ScenarioConfig& config,
                                        RoundHooks hooks) {
  const std::vector<std::string> violations = validate_scenario(config);
  if (!violations.empty()) {
    std::string message = "invalid scenario:";
    for (const std::string& violation : violations) {
      message += "\n  " + violation;
    }
    throw std::invalid_argument(message);
  }
  Simulation sim(config, std::move(hooks));
  return sim.run();
}

SweepReport sweep(const ScenarioConfig& base,
                  std::span<const SelectionThresholds> grid, int repeats) {
  if (repeats < 1) {
    throw std::invalid_argument("sweep: repeats must be >= 1");
  }
  SweepReport report;
  report.repeats = repeats;
  for (const SelectionThresholds& cell : grid) {
    ScenarioConfig config = base;
    config.policy.thresholds = cell;
    std::vector<double> final_accuracy;
    double participation_sum = 0.0;
    long participation_rounds = 0;
    for (int rep = 0; rep < repeats; ++rep) {
      // Repeat r shares its seed across cells, so cells differ only in
      // thresholds.
      config.seed = derive_seed(base.seed, Stream::sweep,
                               static_cast<std::uint64_t>(rep));
      const std::vector<RoundRecord> records = run_simulation(config);
      final_accuracy.push_back(records.back().accuracy);
      for (const RoundRecord& record : records) {
        participation_sum += static_cast<double>(record.selected_ids.size());
        ++participation_rounds;
      }
    }
    SweepCell result;
    result.thresholds = cell;
    const double n = static_cast<double>(final_accuracy.size());
    const double mean =
        std::accumulate(final_accuracy.begin(), final_accuracy.end(), 0.0) / n;
    result.mean_accuracy = mean;
    if (final_accuracy.size() > 1) {
      double ss = 0.0;
      for (double acc : final_accuracy) {
        ss += (acc - mean) * (acc - mean);
      }
      result.std_accuracy = std::sqrt(ss / (n - 1.0));
    }
    result.mean_participation =
        participation_sum / static_cast<double>(participation_rounds);
    report.cells.push_back(result);
  }
  return report;
}

std::vector<BenchRow> complexity_bench(std::span<const int> client_counts,
                                       std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (int n : client_counts) {
    if (n < 2) {
      throw std::invalid_argument("complexity_bench: need at least 2 clients");
    }
    std::mt19937_64 rng =
        substream(seed, Stream::bench, static_cast<std::uint64_t>(n));
    const SelectionThresholds thresholds{0.3, 0.3, 0.15};
    const UtilityWeights weights;
    std::vector<ClientNode> clients(static_cast<std::size_t>(n));
    std::vector<ClientScores> scores(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      clients[static_cast<std::size_t>(i)].id = i;
      clients[static_cast<std::size_t>(i)].energy_threshold =
          thresholds.theta_e;
      scores[static_cast<std::size_t>(i)].health = sample_uniform(rng, 0, 1);
      scores[static_cast<std::size_t>(i)].energy = sample_uniform(rng, 0, 1);
      scores[static_cast<std::size_t>(i)].drift = sample_uniform(rng, 0, 0.2);
    }
    BenchRow row;
    row.n_clients = n;

    std::vector<RankedCandidate> candidates;
    for (int id : select_clients(clients, scores, thresholds)) {
      const ClientScores& s = scores[static_cast<std::size_t>(id)];
      candidates.push_back(
          {id, utility(s.health, s.energy, s.drift, weights)});
    }
    row.fedfog_ops =
        rank_clients(std::move(candidates), kBenchTopK).op_count;
    row.naive_ops = naive_schedule(clients).op_count;
    std::mt19937_64 random_rng =
        substream(seed, Stream::bench, static_cast<std::uint64_t>(n), 1);
    row.random_ops = random_schedule(clients, n / 2, random_rng).op_count;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fedfog
