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

#ifndef FEDFOG_SCENARIO_HPP_
#define FEDFOG_SCENARIO_HPP_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fedfog/adversary.hpp"
#include "fedfog/data_gen.hpp"
#include "fedfog/fl_engine.hpp"
#include "fedfog/health_drift.hpp"
#include "fedfog/privacy.hpp"
#include "fedfog/scheduler.hpp"
#include "fedfog/serverless.hpp"
#include "fedfog/types.hpp"

namespace fedfog {

// Cost model of one client invocation.
struct EnergyModel {
  double c_cpu = 0.001;    // joules per compute unit (one sample-pass)
  double c_tx = 1e-6;      // joules per transmitted byte
  double payload_bytes = 1e5;          // update size on the wire
  double bandwidth_bytes_per_ms = 1e3;  // uplink bandwidth
  double battery_capacity_j = 500.0;   // joules behind energy_level = 1.0
};

// Ranges for the seeded generation of client devices; all uniform draws.
struct FleetConfig {
  double cpu_min = 0.3, cpu_max = 1.0;
  double mem_min = 0.3, mem_max = 1.0;
  double batt_min = 0.3, batt_max = 1.0;
  double energy_min = 0.55, energy_max = 1.0;  // initial energy_level
};

struct TimingConfig {
  double aggregation_ms = 50.0;      // fixed fog aggregation cost per round
  double cost_per_sample_ms = 0.01;  // training time per sample-pass
};

// Component toggles for ablation runs. Disabling the scheduler falls back to
// the naive policy; disabling the drift manager lifts theta_d; disabling the
// energy model lifts theta_e and freezes the budget decay.
struct AblationConfig {
  bool disable_scheduler = false;
  bool disable_drift_manager = false;
  bool disable_energy_model = false;
};

// Full declarative description of one simulation.
struct ScenarioConfig {
  long rounds = 30;
  std::uint64_t seed = 1;
  PartitionConfig partition;
  DriftSchedule drift;
  DriftConfig drift_detection;
  TrainingConfig training;
  SchedulerPolicy policy;
  HealthWeights health;
  ObjectiveWeights objective;
  ColdStartParams cold_start;
  RoundConstraints constraints;
  EnergyBudgetConfig energy_budget;
  AttackConfig attack;
  DpConfig dp;
  EnergyModel energy_model;
  FleetConfig fleet;
  TimingConfig timing;
  AblationConfig ablation;
};

// Raised on malformed scenario text: syntax errors, unknown sections or
// keys, unparseable values. The message names the offending line.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses the INI-style scenario format documented in the README: top-level
// `key = value` lines, `[section]` groups mirroring the ScenarioConfig
// fields, `#`/`;` comments. Unknown keys are errors.
ScenarioConfig parse_scenario(std::string_view text);

// parse_scenario over the contents of a file.
ScenarioConfig load_scenario(const std::filesystem::path& path);

// Renders the config back in the scenario file format (scripted sweeps
// rewrite thresholds and re-emit configs).
std::string format_scenario(const ScenarioConfig& config);

// Checks every config-level invariant (weight sums, threshold ranges,
// positive bounds, enum consistency, nonempty fleet) and returns one message
// per violation; an empty list means the scenario is runnable. Never throws.
std::vector<std::string> validate_scenario(const ScenarioConfig& config);

}  // namespace fedfog

#endif  // FEDFOG_SCENARIO_HPP_
