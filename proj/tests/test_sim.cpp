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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "fedfog/sim.hpp"
#include "fedfog/telemetry.hpp"

namespace {

using fedfog::RoundRecord;
using fedfog::ScenarioConfig;
using fedfog::Simulation;

// Small but otherwise ordinary scenario used across the suite.
ScenarioConfig small_scenario() {
  ScenarioConfig c;
  c.rounds = 5;
  c.seed = 7;
  c.partition.n_clients = 8;
  c.partition.n_classes = 4;
  c.partition.samples_per_client = 40;
  c.partition.feature_dim = 3;
  c.partition.test_samples = 200;
  c.training.epochs = 1;
  c.training.batch_size = 16;
  c.policy.thresholds = {0.1, 0.2, 0.5};
  c.drift.period_rounds = 1000;  // never fires in these runs
  return c;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("round latency is the straggler plus aggregation") {
  const std::vector<double> one = {200.0 + 300.0 + 100.0};
  CHECK(fedfog::round_latency(one, 50.0) == doctest::Approx(650.0));

  const std::vector<double> two = {600.0, 900.0};
  CHECK(fedfog::round_latency(two, 50.0) == doctest::Approx(950.0));

  CHECK(fedfog::round_latency({}, 50.0) == 0.0);
}

TEST_CASE("invocation energy splits into compute, upload and cold parts") {
  fedfog::EnergyModel m;
  m.c_cpu = 0.001;
  m.c_tx = 1e-6;
  CHECK(fedfog::client_energy(1000.0, 1e6, m, false, 0.5) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fedfog::client_energy(1000.0, 1e6, m, true, 0.5) ==
        doctest::Approx(2.5).epsilon(1e-12));
  CHECK(fedfog::client_energy(0.0, 0.0, m, false, 0.5) == 0.0);
}

TEST_CASE("a run produces one record per round, in order") {
  const auto records = fedfog::run_simulation(small_scenario());
  REQUIRE(records.size() == 5);
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].round == long(i));
  }
}

TEST_CASE("equal configurations give byte-identical telemetry") {
  const ScenarioConfig config = small_scenario();
  const std::string a = fedfog::telemetry_csv(fedfog::run_simulation(config));
  const std::string b = fedfog::telemetry_csv(fedfog::run_simulation(config));
  CHECK(a == b);

  ScenarioConfig reseeded = config;
  reseeded.seed = config.seed + 1;
  const std::string c =
      fedfog::telemetry_csv(fedfog::run_simulation(reseeded));
  CHECK(a != c);
}

TEST_CASE("an impossible health gate leaves the model untouched") {
  ScenarioConfig config = small_scenario();
  config.policy.thresholds.theta_h = 1.0;  // health < 1 for every client
  Simulation sim(config);
  const auto& records = sim.run();
  for (const auto& r : records) {
    CHECK(r.selected_ids.empty());
    CHECK(r.latency_ms == 0.0);
    CHECK(r.energy_j == 0.0);
    CHECK(r.mean_utility == 0.0);
    CHECK(r.cold_starts == 0);
  }
  CHECK(sim.global_model().norm() == 0.0);
  // Accuracy is whatever the zero model scores, identically each round.
  for (const auto& r : records) {
    CHECK(r.accuracy == records.front().accuracy);
  }
}

TEST_CASE("a vanishing learning rate leaves the model near zero") {
  ScenarioConfig config = small_scenario();
  config.training.learning_rate = 1e-300;  // validation wants > 0
  Simulation sim(config);
  const auto& records = sim.run();
  CHECK(sim.global_model().lpNorm<Eigen::Infinity>() < 1e-250);
  for (const auto& r : records) {
    CHECK(r.accuracy >= 0.0);
    CHECK(r.accuracy <= 1.0);
  }
}

TEST_CASE("battery depletion mirrors the energy spent, scaled by capacity") {
  ScenarioConfig config = small_scenario();
  config.rounds = 6;
  config.energy_model.battery_capacity_j = 400.0;
  Simulation sim(config);
  std::vector<double> initial;
  for (const auto& client : sim.clients()) {
    initial.push_back(client.energy_level);
  }
  const auto& records = sim.run();

  std::vector<double> spent(sim.clients().size(), 0.0);
  for (const auto& r : records) {
    double total = 0.0;
    for (std::size_t i = 0; i < r.per_client_energy_j.size(); ++i) {
      spent[i] += r.per_client_energy_j[i];
      total += r.per_client_energy_j[i];
    }
    CHECK(total == doctest::Approx(r.energy_j).epsilon(1e-9));
  }
  for (std::size_t i = 0; i < sim.clients().size(); ++i) {
    const double expected =
        initial[i] - spent[i] / config.energy_model.battery_capacity_j;
    REQUIRE(expected > 0.0);  // nobody hits the floor in this scenario
    CHECK(sim.clients()[i].energy_level ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("clients below the energy gate are never scheduled") {
  ScenarioConfig config = small_scenario();
  config.policy.thresholds = {0.1, 0.5, 10.0};
  config.energy_budget.lambda = 0.0;
  Simulation sim(config);
  sim.mutable_clients()[0].energy_level = 0.3;  // below theta_e = 0.5
  const auto& records = sim.run();
  bool others_ran = false;
  for (const auto& r : records) {
    CHECK(std::find(r.selected_ids.begin(), r.selected_ids.end(), 0) ==
          r.selected_ids.end());
    if (r.selected_ids.size() > 0) others_ran = true;
  }
  CHECK(others_ran);
}

TEST_CASE("dropout victims are charged if and only if they were invoked") {
  ScenarioConfig config = small_scenario();
  config.partition.n_clients = 5;
  config.attack.role = fedfog::AttackRole::dropout;
  config.attack.fraction = 0.2;  // exactly one malicious client
  config.attack.dropout_prob = 1.0;
  config.policy.thresholds = {0.05, 0.1, 10.0};

  SUBCASE("failure after invocation still pays the cold start") {
    config.attack.drop_after_invoke = true;
    Simulation sim(config);
    int malicious = -1;
    for (const auto& client : sim.clients()) {
      if (client.adversary != fedfog::AttackRole::honest) malicious = client.id;
    }
    REQUIRE(malicious >= 0);
    const auto& records = sim.run();
    const auto& first = records.front();
    CHECK(first.cold_starts == 5);  // the victim was invoked too
    CHECK(first.per_client_energy_j[std::size_t(malicious)] ==
          doctest::Approx(config.cold_start.e_cold_j).epsilon(1e-12));
    for (const auto& r : records) {
      CHECK(std::find(r.selected_ids.begin(), r.selected_ids.end(),
                      malicious) == r.selected_ids.end());
      CHECK(std::find(r.dropped_ids.begin(), r.dropped_ids.end(), malicious) !=
            r.dropped_ids.end());
    }
  }

  SUBCASE("failure before invocation costs nothing") {
    config.attack.drop_after_invoke = false;
    Simulation sim(config);
    int malicious = -1;
    for (const auto& client : sim.clients()) {
      if (client.adversary != fedfog::AttackRole::honest) malicious = client.id;
    }
    REQUIRE(malicious >= 0);
    const auto& records = sim.run();
    CHECK(records.front().cold_starts == 4);
    for (const auto& r : records) {
      CHECK(r.per_client_energy_j[std::size_t(malicious)] == 0.0);
      CHECK(std::find(r.dropped_ids.begin(), r.dropped_ids.end(), malicious) !=
            r.dropped_ids.end());
    }
    CHECK(sim.clients()[std::size_t(malicious)].container.status ==
          fedfog::ContainerStatus::never_invoked);
  }
}

TEST_CASE("a zero attack fraction is indistinguishable from an honest fleet") {
  ScenarioConfig clean = small_scenario();
  ScenarioConfig armed = clean;
  armed.attack.role = fedfog::AttackRole::noise;
  armed.attack.fraction = 0.0;
  CHECK(fedfog::telemetry_csv(fedfog::run_simulation(clean)) ==
        fedfog::telemetry_csv(fedfog::run_simulation(armed)));
}

TEST_CASE("tight energy budgets drop the lowest-utility clients") {
  ScenarioConfig config = small_scenario();
  config.rounds = 1;
  config.policy.thresholds = {0.05, 0.1, 10.0};
  config.energy_model.payload_bytes = 1e5;  // 0.1 J upload each
  config.energy_model.c_cpu = 0.0;
  config.cold_start.e_cold_j = 0.0;
  config.constraints.eps_max_j = 0.25;  // room for two uploads
  const auto records = fedfog::run_simulation(config);
  const auto& r = records.front();
  CHECK(r.selected_ids.size() == 2);
  CHECK(r.dropped_ids.size() + r.selected_ids.size() == 8);
  CHECK(r.energy_j <= 0.25 + 1e-12);
}

TEST_CASE("disabling the scheduler falls back to deploy-everyone") {
  ScenarioConfig config = small_scenario();
  config.policy.thresholds = {0.99, 0.99, 0.0};  // would select nobody
  config.ablation.disable_scheduler = true;
  const auto records = fedfog::run_simulation(config);
  for (const auto& r : records) {
    CHECK(r.selected_ids.size() == 8);
  }
}

TEST_CASE("disabling the drift manager stops drift-based exclusion") {
  ScenarioConfig config = small_scenario();
  config.rounds = 4;
  config.partition.concentration = 1e6;  // near-uniform shards
  config.drift.period_rounds = 2;
  config.drift.mode = fedfog::DriftSchedule::Mode::imbalance;
  config.drift.magnitude = 0.5;
  config.drift.targets = {0};
  config.policy.thresholds = {0.05, 0.1, 0.05};

  const auto strict = fedfog::run_simulation(config);
  const auto& hit = strict[2];  // drift fires at round 2
  CHECK(std::find(hit.selected_ids.begin(), hit.selected_ids.end(), 0) ==
        hit.selected_ids.end());

  config.ablation.disable_drift_manager = true;
  const auto lifted = fedfog::run_simulation(config);
  const auto& same_round = lifted[2];
  CHECK(std::find(same_round.selected_ids.begin(), same_round.selected_ids.end(),
                  0) != same_round.selected_ids.end());
}

TEST_CASE("disabling the energy model admits energy-starved clients") {
  ScenarioConfig config = small_scenario();
  config.fleet.energy_min = 0.2;
  config.fleet.energy_max = 0.3;  // everyone below theta_e = 0.5
  config.policy.thresholds = {0.05, 0.5, 10.0};

  const auto gated = fedfog::run_simulation(config);
  for (const auto& r : gated) {
    CHECK(r.selected_ids.empty());
  }

  config.ablation.disable_energy_model = true;
  const auto lifted = fedfog::run_simulation(config);
  std::size_t total = 0;
  for (const auto& r : lifted) {
    total += r.selected_ids.size();
  }
  CHECK(total > 0);
}

TEST_CASE("privacy accounting appears exactly when enabled") {
  ScenarioConfig config = small_scenario();
  const auto plain = fedfog::run_simulation(config);
  for (const auto& r : plain) {
    CHECK_FALSE(r.epsilon.has_value());
  }

  config.dp.enabled = true;
  const auto noised = fedfog::run_simulation(config);
  for (const auto& r : noised) {
    if (r.selected_ids.empty()) continue;
    REQUIRE(r.epsilon.has_value());
    const double expect =
        fedfog::epsilon(config.dp.sigma, config.dp.clip_s,
                        static_cast<int>(r.selected_ids.size()),
                        config.dp.dp_delta);
    CHECK(*r.epsilon == doctest::Approx(expect).epsilon(1e-12));
  }
  // The noise actually perturbs the trajectory.
  CHECK(fedfog::telemetry_csv(plain) != fedfog::telemetry_csv(noised));
}

TEST_CASE("client-side and server-side noise points both run") {
  ScenarioConfig config = small_scenario();
  config.dp.enabled = true;
  config.dp.point = fedfog::DpConfig::Point::client;
  const auto client_side = fedfog::run_simulation(config);
  config.dp.point = fedfog::DpConfig::Point::server;
  const auto server_side = fedfog::run_simulation(config);
  CHECK(fedfog::telemetry_csv(client_side) !=
        fedfog::telemetry_csv(server_side));
}

TEST_CASE("csv telemetry has the fixed header and one row per round") {
  const auto records = fedfog::run_simulation(small_scenario());
  const std::string csv = fedfog::telemetry_csv(records);
  const auto rows = lines_of(csv);
  REQUIRE(rows.size() == records.size() + 1);
  CHECK(rows[0] ==
        "round,selected_count,dropped_count,latency_ms,energy_j,cold_starts,"
        "accuracy,mean_utility,objective_j,epsilon");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto fields = split(rows[i], ',');
    REQUIRE(fields.size() == 10);
    CHECK(fields[0] == std::to_string(i - 1));
    CHECK(fields[9].empty());  // privacy disabled: empty epsilon column
  }
  CHECK(fedfog::telemetry_csv({}) == rows[0] + "\n");
}

TEST_CASE("csv epsilon column is populated when privacy is on") {
  ScenarioConfig config = small_scenario();
  config.dp.enabled = true;
  const auto records = fedfog::run_simulation(config);
  const auto rows = lines_of(fedfog::telemetry_csv(records));
  bool any = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto fields = split(rows[i], ',');
    REQUIRE(fields.size() == 10);
    if (!fields[9].empty()) {
      any = true;
      CHECK(std::stod(fields[9]) > 0.0);
    }
  }
  CHECK(any);
}

TEST_CASE("json telemetry round-trips without loss") {
  ScenarioConfig config = small_scenario();
  config.dp.enabled = true;  // exercise the optional field
  const auto records = fedfog::run_simulation(config);
  const std::string json = fedfog::telemetry_json(records);
  const auto back = fedfog::records_from_json(json);
  REQUIRE(back.size() == records.size());
  CHECK(fedfog::telemetry_json(back) == json);
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(back[i].round == records[i].round);
    CHECK(back[i].selected_ids == records[i].selected_ids);
    CHECK(back[i].dropped_ids == records[i].dropped_ids);
    CHECK(back[i].latency_ms == records[i].latency_ms);
    CHECK(back[i].energy_j == records[i].energy_j);
    CHECK(back[i].cold_starts == records[i].cold_starts);
    CHECK(back[i].accuracy == records[i].accuracy);
    CHECK(back[i].mean_utility == records[i].mean_utility);
    CHECK(back[i].objective_score == records[i].objective_score);
    CHECK(back[i].epsilon == records[i].epsilon);
    CHECK(back[i].per_client_energy_j == records[i].per_client_energy_j);
  }
}

TEST_CASE("invalid scenarios are rejected before running") {
  ScenarioConfig config = small_scenario();
  config.partition.n_clients = 0;
  CHECK_THROWS_WITH_AS(static_cast<void>(fedfog::run_simulation(config)),
                       doctest::Contains("clients"), std::invalid_argument);
}

TEST_CASE("threshold sweeps aggregate accuracy and participation per cell") {
  ScenarioConfig base = small_scenario();
  base.rounds = 3;
  const std::vector<fedfog::SelectionThresholds> grid = {
      {0.1, 0.2, 0.5}, {0.5, 0.4, 0.2}};

  const fedfog::SweepReport report = fedfog::sweep(base, grid, 2);
  CHECK(report.repeats == 2);
  REQUIRE(report.cells.size() == 2);
  for (const auto& cell : report.cells) {
    CHECK(cell.mean_accuracy >= 0.0);
    CHECK(cell.mean_accuracy <= 1.0);
    CHECK(cell.std_accuracy >= 0.0);
    CHECK(cell.mean_participation >= 0.0);
    CHECK(cell.mean_participation <= 8.0);
  }

  const fedfog::SweepReport single = fedfog::sweep(base, grid, 1);
  for (const auto& cell : single.cells) {
    CHECK(cell.std_accuracy == 0.0);
  }
  CHECK_THROWS_AS(fedfog::sweep(base, grid, 0), std::invalid_argument);

  const auto rows = lines_of(fedfog::sweep_csv(report));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] ==
        "theta_h,theta_e,theta_d,mean_accuracy,std_accuracy,"
        "mean_participation");
  CHECK(split(rows[1], ',').size() == 6);
}

TEST_CASE("the complexity bench reports the modeled op counts") {
  const std::vector<int> counts = {8, 16};
  const auto rows = fedfog::complexity_bench(counts, 99);
  REQUIRE(rows.size() == 2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int n = counts[i];
    CHECK(rows[i].n_clients == n);
    CHECK(rows[i].naive_ops == std::uint64_t(n) * std::uint64_t(n));
    CHECK(rows[i].random_ops == std::uint64_t(n));
    CHECK(rows[i].fedfog_ops > 0);
  }
  const auto again = fedfog::complexity_bench(counts, 99);
  CHECK(again[0].fedfog_ops == rows[0].fedfog_ops);

  const std::vector<int> bad = {1};
  CHECK_THROWS_AS(fedfog::complexity_bench(bad, 1), std::invalid_argument);

  const auto csv = lines_of(fedfog::bench_csv(rows));
  REQUIRE(csv.size() == 3);
  CHECK(csv[0] == "n_clients,fedfog_ops,naive_ops,random_ops");
}

TEST_CASE("scheduling work separates from quadratic redeployment as fleets grow") {
  const std::vector<int> counts = {64, 1024};
  const auto rows = fedfog::complexity_bench(counts, 7);
  const double small_ratio =
      double(rows[0].naive_ops) / double(rows[0].fedfog_ops);
  const double large_ratio =
      double(rows[1].naive_ops) / double(rows[1].fedfog_ops);
  CHECK(large_ratio >= 10.0 * small_ratio);
}
