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

#include "fedfog/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fedfog {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw ScenarioError("scenario line " + std::to_string(line) + ": " +
                      message);
}

double to_double(std::string_view v, int line) {
  try {
    std::size_t used = 0;
    const double value = std::stod(std::string(v), &used);
    if (used != v.size()) fail(line, "trailing junk in number '" + std::string(v) + "'");
    return value;
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, "expected a number, got '" + std::string(v) + "'");
  }
}

long to_long(std::string_view v, int line) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    fail(line, "expected an integer, got '" + std::string(v) + "'");
  }
  return value;
}

std::uint64_t to_u64(std::string_view v, int line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    fail(line, "expected an unsigned integer, got '" + std::string(v) + "'");
  }
  return value;
}

bool to_bool(std::string_view v, int line) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  fail(line, "expected true/false, got '" + std::string(v) + "'");
}

std::vector<int> to_int_list(std::string_view v, int line) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= v.size()) {
    std::size_t comma = v.find(',', start);
    if (comma == std::string_view::npos) comma = v.size();
    const std::string_view item = trim(v.substr(start, comma - start));
    if (!item.empty()) {
      values.push_back(static_cast<int>(to_long(item, line)));
    }
    start = comma + 1;
  }
  return values;
}

PolicyKind to_policy(std::string_view v, int line) {
  if (v == "fedfog") return PolicyKind::fedfog;
  if (v == "naive_faas") return PolicyKind::naive_faas;
  if (v == "random") return PolicyKind::random;
  fail(line, "unknown scheduler '" + std::string(v) + "'");
}

AttackRole to_attack(std::string_view v, int line) {
  if (v == "none") return AttackRole::honest;
  if (v == "label_flip") return AttackRole::label_flip;
  if (v == "noise") return AttackRole::noise;
  if (v == "dropout") return AttackRole::dropout;
  if (v == "replace") return AttackRole::replace;
  fail(line, "unknown attack '" + std::string(v) + "'");
}

// Applies one `key = value` line to the config. `section` is "" at top
// level. Unknown sections and keys are hard errors so typos cannot silently
// fall back to defaults.
void assign(ScenarioConfig& c, const std::string& section,
            const std::string& key, std::string_view value, int line) {
  if (section.empty()) {
    if (key == "rounds") {
      c.rounds = to_long(value, line);
    } else if (key == "seed") {
      c.seed = to_u64(value, line);
    } else if (key == "scheduler") {
      c.policy.kind = to_policy(value, line);
    } else if (key == "attack") {
      c.attack.role = to_attack(value, line);
    } else {
      fail(line, "unknown top-level key '" + key + "'");
    }
    return;
  }
  if (section == "partition") {
    if (key == "n_clients") c.partition.n_clients = static_cast<int>(to_long(value, line));
    else if (key == "n_classes") c.partition.n_classes = static_cast<int>(to_long(value, line));
    else if (key == "concentration") c.partition.concentration = to_double(value, line);
    else if (key == "samples_per_client") c.partition.samples_per_client = static_cast<int>(to_long(value, line));
    else if (key == "feature_dim") c.partition.feature_dim = static_cast<int>(to_long(value, line));
    else if (key == "blob_spread") c.partition.blob_spread = to_double(value, line);
    else if (key == "test_samples") c.partition.test_samples = static_cast<int>(to_long(value, line));
    else if (key == "seed") c.partition.seed = to_u64(value, line);
    else fail(line, "unknown key 'partition." + key + "'");
  } else if (section == "drift") {
    if (key == "period_rounds") c.drift.period_rounds = static_cast<int>(to_long(value, line));
    else if (key == "mode") {
      if (value == "class_shift") c.drift.mode = DriftSchedule::Mode::class_shift;
      else if (value == "imbalance") c.drift.mode = DriftSchedule::Mode::imbalance;
      else fail(line, "unknown drift mode '" + std::string(value) + "'");
    } else if (key == "magnitude") c.drift.magnitude = to_double(value, line);
    else if (key == "targets") c.drift.targets = to_int_list(value, line);
    else if (key == "smoothing_eps") c.drift_detection.smoothing_eps = to_double(value, line);
    else fail(line, "unknown key 'drift." + key + "'");
  } else if (section == "training") {
    if (key == "learning_rate") c.training.learning_rate = to_double(value, line);
    else if (key == "epochs") c.training.epochs = static_cast<int>(to_long(value, line));
    else if (key == "batch_size") c.training.batch_size = static_cast<int>(to_long(value, line));
    else if (key == "learner") {
      if (value == "linear_probe") c.training.learner = LearnerKind::linear_probe;
      else if (value == "logistic") c.training.learner = LearnerKind::logistic;
      else fail(line, "unknown learner '" + std::string(value) + "'");
    } else fail(line, "unknown key 'training." + key + "'");
  } else if (section == "policy") {
    if (key == "theta_h") c.policy.thresholds.theta_h = to_double(value, line);
    else if (key == "theta_e") c.policy.thresholds.theta_e = to_double(value, line);
    else if (key == "theta_d") c.policy.thresholds.theta_d = to_double(value, line);
    else if (key == "b1") c.policy.utility_weights.b1 = to_double(value, line);
    else if (key == "b2") c.policy.utility_weights.b2 = to_double(value, line);
    else if (key == "b3") c.policy.utility_weights.b3 = to_double(value, line);
    else if (key == "top_k") {
      if (value == "none") c.policy.top_k.reset();
      else c.policy.top_k = static_cast<int>(to_long(value, line));
    } else fail(line, "unknown key 'policy." + key + "'");
  } else if (section == "health") {
    if (key == "a1") c.health.a1 = to_double(value, line);
    else if (key == "a2") c.health.a2 = to_double(value, line);
    else if (key == "a3") c.health.a3 = to_double(value, line);
    else fail(line, "unknown key 'health." + key + "'");
  } else if (section == "objective") {
    if (key == "alpha") c.objective.alpha = to_double(value, line);
    else if (key == "beta") c.objective.beta = to_double(value, line);
    else if (key == "gamma") c.objective.gamma = to_double(value, line);
    else fail(line, "unknown key 'objective." + key + "'");
  } else if (section == "cold_start") {
    if (key == "delta_cold_ms") c.cold_start.delta_cold_ms = to_double(value, line);
    else if (key == "delta_warm_ms") c.cold_start.delta_warm_ms = to_double(value, line);
    else if (key == "warm_ttl_rounds") c.cold_start.warm_ttl_rounds = static_cast<int>(to_long(value, line));
    else if (key == "e_cold_j") c.cold_start.e_cold_j = to_double(value, line);
    else if (key == "jitter") c.cold_start.jitter = to_bool(value, line);
    else fail(line, "unknown key 'cold_start." + key + "'");
  } else if (section == "constraints") {
    if (key == "tau_max_ms") c.constraints.tau_max_ms = to_double(value, line);
    else if (key == "eps_max_j") c.constraints.eps_max_j = to_double(value, line);
    else fail(line, "unknown key 'constraints." + key + "'");
  } else if (section == "energy_budget") {
    if (key == "lambda") c.energy_budget.lambda = to_double(value, line);
    else if (key == "budget_avg") {
      if (value == "selected") c.energy_budget.budget_avg = EnergyBudgetConfig::Average::selected;
      else if (value == "all") c.energy_budget.budget_avg = EnergyBudgetConfig::Average::all;
      else fail(line, "unknown budget_avg '" + std::string(value) + "'");
    } else fail(line, "unknown key 'energy_budget." + key + "'");
  } else if (section == "attack") {
    if (key == "fraction") c.attack.fraction = to_double(value, line);
    else if (key == "noise_sigma") c.attack.noise_sigma = to_double(value, line);
    else if (key == "dropout_prob") c.attack.dropout_prob = to_double(value, line);
    else if (key == "replace_scale") c.attack.replace_scale = to_double(value, line);
    else if (key == "drop_after_invoke") c.attack.drop_after_invoke = to_bool(value, line);
    else if (key == "seed") c.attack.seed = to_u64(value, line);
    else fail(line, "unknown key 'attack." + key + "'");
  } else if (section == "dp") {
    if (key == "enabled") c.dp.enabled = to_bool(value, line);
    else if (key == "sigma") c.dp.sigma = to_double(value, line);
    else if (key == "clip_s") c.dp.clip_s = to_double(value, line);
    else if (key == "delta") c.dp.dp_delta = to_double(value, line);
    else if (key == "point") {
      if (value == "client") c.dp.point = DpConfig::Point::client;
      else if (value == "server") c.dp.point = DpConfig::Point::server;
      else fail(line, "unknown dp point '" + std::string(value) + "'");
    } else fail(line, "unknown key 'dp." + key + "'");
  } else if (section == "energy_model") {
    if (key == "c_cpu") c.energy_model.c_cpu = to_double(value, line);
    else if (key == "c_tx") c.energy_model.c_tx = to_double(value, line);
    else if (key == "payload_bytes") c.energy_model.payload_bytes = to_double(value, line);
    else if (key == "bandwidth_bytes_per_ms") c.energy_model.bandwidth_bytes_per_ms = to_double(value, line);
    else if (key == "battery_capacity_j") c.energy_model.battery_capacity_j = to_double(value, line);
    else fail(line, "unknown key 'energy_model." + key + "'");
  } else if (section == "fleet") {
    if (key == "cpu_min") c.fleet.cpu_min = to_double(value, line);
    else if (key == "cpu_max") c.fleet.cpu_max = to_double(value, line);
    else if (key == "mem_min") c.fleet.mem_min = to_double(value, line);
    else if (key == "mem_max") c.fleet.mem_max = to_double(value, line);
    else if (key == "batt_min") c.fleet.batt_min = to_double(value, line);
    else if (key == "batt_max") c.fleet.batt_max = to_double(value, line);
    else if (key == "energy_min") c.fleet.energy_min = to_double(value, line);
    else if (key == "energy_max") c.fleet.energy_max = to_double(value, line);
    else fail(line, "unknown key 'fleet." + key + "'");
  } else if (section == "timing") {
    if (key == "aggregation_ms") c.timing.aggregation_ms = to_double(value, line);
    else if (key == "cost_per_sample_ms") c.timing.cost_per_sample_ms = to_double(value, line);
    else fail(line, "unknown key 'timing." + key + "'");
  } else if (section == "ablation") {
    if (key == "disable_scheduler") c.ablation.disable_scheduler = to_bool(value, line);
    else if (key == "disable_drift_manager") c.ablation.disable_drift_manager = to_bool(value, line);
    else if (key == "disable_energy_model") c.ablation.disable_energy_model = to_bool(value, line);
    else fail(line, "unknown key 'ablation." + key + "'");
  } else {
    fail(line, "unknown section [" + section + "]");
  }
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view text) {
  ScenarioConfig config;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#' || line.front() == ';') {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        fail(line_no, "malformed section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(line_no, "expected 'key = value'");
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    if (value.empty()) fail(line_no, "empty value for '" + key + "'");
    assign(config, section, key, value, line_no);
  }
  return config;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ScenarioError("cannot open scenario file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string format_scenario(const ScenarioConfig& c) {
  std::ostringstream out;
  out.precision(17);
  const char* policy = c.policy.kind == PolicyKind::fedfog ? "fedfog"
                       : c.policy.kind == PolicyKind::naive_faas
                           ? "naive_faas"
                           : "random";
  const char* attack = "none";
  switch (c.attack.role) {
    case AttackRole::honest: attack = "none"; break;
    case AttackRole::label_flip: attack = "label_flip"; break;
    case AttackRole::noise: attack = "noise"; break;
    case AttackRole::dropout: attack = "dropout"; break;
    case AttackRole::replace: attack = "replace"; break;
  }
  out << "rounds = " << c.rounds << "\n";
  out << "seed = " << c.seed << "\n";
  out << "scheduler = " << policy << "\n";
  out << "attack = " << attack << "\n";
  out << "\n[partition]\n";
  out << "n_clients = " << c.partition.n_clients << "\n";
  out << "n_classes = " << c.partition.n_classes << "\n";
  out << "concentration = " << c.partition.concentration << "\n";
  out << "samples_per_client = " << c.partition.samples_per_client << "\n";
  out << "feature_dim = " << c.partition.feature_dim << "\n";
  out << "blob_spread = " << c.partition.blob_spread << "\n";
  out << "test_samples = " << c.partition.test_samples << "\n";
  if (c.partition.seed) out << "seed = " << *c.partition.seed << "\n";
  out << "\n[drift]\n";
  out << "period_rounds = " << c.drift.period_rounds << "\n";
  out << "mode = "
      << (c.drift.mode == DriftSchedule::Mode::class_shift ? "class_shift"
                                                           : "imbalance")
      << "\n";
  out << "magnitude = " << c.drift.magnitude << "\n";
  if (!c.drift.targets.empty()) {
    out << "targets = ";
    for (std::size_t i = 0; i < c.drift.targets.size(); ++i) {
      out << (i ? "," : "") << c.drift.targets[i];
    }
    out << "\n";
  }
  out << "smoothing_eps = " << c.drift_detection.smoothing_eps << "\n";
  out << "\n[training]\n";
  out << "learning_rate = " << c.training.learning_rate << "\n";
  out << "epochs = " << c.training.epochs << "\n";
  out << "batch_size = " << c.training.batch_size << "\n";
  out << "learner = "
      << (c.training.learner == LearnerKind::logistic ? "logistic"
                                                      : "linear_probe")
      << "\n";
  out << "\n[policy]\n";
  out << "theta_h = " << c.policy.thresholds.theta_h << "\n";
  out << "theta_e = " << c.policy.thresholds.theta_e << "\n";
  out << "theta_d = " << c.policy.thresholds.theta_d << "\n";
  out << "b1 = " << c.policy.utility_weights.b1 << "\n";
  out << "b2 = " << c.policy.utility_weights.b2 << "\n";
  out << "b3 = " << c.policy.utility_weights.b3 << "\n";
  if (c.policy.top_k) out << "top_k = " << *c.policy.top_k << "\n";
  out << "\n[health]\n";
  out << "a1 = " << c.health.a1 << "\n";
  out << "a2 = " << c.health.a2 << "\n";
  out << "a3 = " << c.health.a3 << "\n";
  out << "\n[objective]\n";
  out << "alpha = " << c.objective.alpha << "\n";
  out << "beta = " << c.objective.beta << "\n";
  out << "gamma = " << c.objective.gamma << "\n";
  out << "\n[cold_start]\n";
  out << "delta_cold_ms = " << c.cold_start.delta_cold_ms << "\n";
  out << "delta_warm_ms = " << c.cold_start.delta_warm_ms << "\n";
  out << "warm_ttl_rounds = " << c.cold_start.warm_ttl_rounds << "\n";
  out << "e_cold_j = " << c.cold_start.e_cold_j << "\n";
  out << "jitter = " << (c.cold_start.jitter ? "true" : "false") << "\n";
  out << "\n[constraints]\n";
  out << "tau_max_ms = " << c.constraints.tau_max_ms << "\n";
  out << "eps_max_j = " << c.constraints.eps_max_j << "\n";
  out << "\n[energy_budget]\n";
  out << "lambda = " << c.energy_budget.lambda << "\n";
  out << "budget_avg = "
      << (c.energy_budget.budget_avg == EnergyBudgetConfig::Average::all
              ? "all"
              : "selected")
      << "\n";
  out << "\n[attack]\n";
  out << "fraction = " << c.attack.fraction << "\n";
  out << "noise_sigma = " << c.attack.noise_sigma << "\n";
  out << "dropout_prob = " << c.attack.dropout_prob << "\n";
  out << "replace_scale = " << c.attack.replace_scale << "\n";
  out << "drop_after_invoke = "
      << (c.attack.drop_after_invoke ? "true" : "false") << "\n";
  if (c.attack.seed) out << "seed = " << *c.attack.seed << "\n";
  out << "\n[dp]\n";
  out << "enabled = " << (c.dp.enabled ? "true" : "false") << "\n";
  out << "sigma = " << c.dp.sigma << "\n";
  out << "clip_s = " << c.dp.clip_s << "\n";
  out << "delta = " << c.dp.dp_delta << "\n";
  out << "point = "
      << (c.dp.point == DpConfig::Point::server ? "server" : "client")
      << "\n";
  out << "\n[energy_model]\n";
  out << "c_cpu = " << c.energy_model.c_cpu << "\n";
  out << "c_tx = " << c.energy_model.c_tx << "\n";
  out << "payload_bytes = " << c.energy_model.payload_bytes << "\n";
  out << "bandwidth_bytes_per_ms = " << c.energy_model.bandwidth_bytes_per_ms
      << "\n";
  out << "battery_capacity_j = " << c.energy_model.battery_capacity_j << "\n";
  out << "\n[fleet]\n";
  out << "cpu_min = " << c.fleet.cpu_min << "\n";
  out << "cpu_max = " << c.fleet.cpu_max << "\n";
  out << "mem_min = " << c.fleet.mem_min << "\n";
  out << "mem_max = " << c.fleet.mem_max << "\n";
  out << "batt_min = " << c.fleet.batt_min << "\n";
  out << "batt_max = " << c.fleet.batt_max << "\n";
  out << "energy_min = " << c.fleet.energy_min << "\n";
  out << "energy_max = " << c.fleet.energy_max << "\n";
  out << "\n[timing]\n";
  out << "aggregation_ms = " << c.timing.aggregation_ms << "\n";
  out << "cost_per_sample_ms = " << c.timing.cost_per_sample_ms << "\n";
  if (c.ablation.disable_scheduler || c.ablation.disable_drift_manager ||
      c.ablation.disable_energy_model) {
    out << "\n[ablation]\n";
    out << "disable_scheduler = "
        << (c.ablation.disable_scheduler ? "true" : "false") << "\n";
    out << "disable_drift_manager = "
        << (c.ablation.disable_drift_manager ? "true" : "false") << "\n";
    out << "disable_energy_model = "
        << (c.ablation.disable_energy_model ? "true" : "false") << "\n";
  }
  return out.str();
}

std::vector<std::string> validate_scenario(const ScenarioConfig& c) {
  std::vector<std::string> violations;
  auto bad = [&violations](const std::string& message) {
    violations.push_back(message);
  };

  if (c.rounds < 1) bad("rounds: must be >= 1");

  if (c.partition.n_clients < 1) bad("partition.n_clients: no clients configured");
  if (c.partition.n_classes < 2) bad("partition.n_classes: must be >= 2");
  if (!(c.partition.concentration > 0.0)) bad("partition.concentration: must be > 0");
  if (c.partition.samples_per_client < 1) bad("partition.samples_per_client: must be >= 1");
  if (c.partition.feature_dim < 1) bad("partition.feature_dim: must be >= 1");
  if (!(c.partition.blob_spread > 0.0)) bad("partition.blob_spread: must be > 0");
  if (c.partition.test_samples < 1) bad("partition.test_samples: must be >= 1");

  if (c.drift.period_rounds < 1) bad("drift.period_rounds: must be >= 1");
  if (!(c.drift.magnitude > 0.0) || c.drift.magnitude > 1.0) {
    bad("drift.magnitude: must be in (0, 1]");
  }
  for (int id : c.drift.targets) {
    if (id < 0 || id >= c.partition.n_clients) {
      bad("drift.targets: client id " + std::to_string(id) + " out of range");
    }
  }
  if (!(c.drift_detection.smoothing_eps > 0.0)) {
    bad("drift.smoothing_eps: must be > 0");
  }

  if (!(c.training.learning_rate > 0.0)) bad("training.learning_rate: must be > 0");
  if (c.training.epochs < 1) bad("training.epochs: must be >= 1");
  if (c.training.batch_size < 1) bad("training.batch_size: must be >= 1");

  const SelectionThresholds& t = c.policy.thresholds;
  if (t.theta_h < 0.0 || t.theta_h > 1.0) bad("policy.theta_h: must be in [0, 1]");
  if (t.theta_e < 0.0 || t.theta_e > 1.0) bad("policy.theta_e: must be in [0, 1]");
  if (t.theta_d < 0.0) bad("policy.theta_d: must be >= 0");
  if (c.policy.top_k && *c.policy.top_k < 1) bad("policy.top_k: must be >= 1 when set");

  const UtilityWeights& b = c.policy.utility_weights;
  if (b.b1 < 0.0) bad("policy.b1: must be nonnegative");
  if (b.b2 < 0.0) bad("policy.b2: must be nonnegative");
  if (b.b3 < 0.0) bad("policy.b3: must be nonnegative");
  if (std::abs(b.b1 + b.b2 + b.b3 - 1.0) > 1e-9) {
    bad("policy.b1+b2+b3: utility weights must sum to 1");
  }

  const HealthWeights& a = c.health;
  if (a.a1 < 0.0) bad("health.a1: must be nonnegative");
  if (a.a2 < 0.0) bad("health.a2: must be nonnegative");
  if (a.a3 < 0.0) bad("health.a3: must be nonnegative");
  if (std::abs(a.a1 + a.a2 + a.a3 - 1.0) > 1e-9) {
    bad("health.a1+a2+a3: health weights must sum to 1");
  }

  const ObjectiveWeights& o = c.objective;
  if (o.alpha < 0.0) bad("objective.alpha: must be nonnegative");
  if (o.beta < 0.0) bad("objective.beta: must be nonnegative");
  if (o.gamma < 0.0) bad("objective.gamma: must be nonnegative");
  if (!(o.alpha > 0.0 || o.beta > 0.0 || o.gamma > 0.0)) {
    bad("objective: weights must not all be zero");
  }

  if (c.cold_start.delta_warm_ms < 0.0) bad("cold_start.delta_warm_ms: must be >= 0");
  if (c.cold_start.delta_cold_ms < c.cold_start.delta_warm_ms) {
    bad("cold_start.delta_cold_ms: must be >= delta_warm_ms");
  }
  if (c.cold_start.warm_ttl_rounds < 1) bad("cold_start.warm_ttl_rounds: must be >= 1");
  if (c.cold_start.e_cold_j < 0.0) bad("cold_start.e_cold_j: must be >= 0");

  if (!(c.constraints.tau_max_ms > 0.0)) bad("constraints.tau_max_ms: must be > 0");
  if (!(c.constraints.eps_max_j > 0.0)) bad("constraints.eps_max_j: must be > 0");

  if (c.energy_budget.lambda < 0.0) bad("energy_budget.lambda: must be >= 0");

  if (c.attack.fraction < 0.0 || c.attack.fraction > 1.0) {
    bad("attack.fraction: must be in [0, 1]");
  }
  if (!(c.attack.noise_sigma > 0.0)) bad("attack.noise_sigma: must be > 0");
  if (c.attack.dropout_prob < 0.0 || c.attack.dropout_prob > 1.0) {
    bad("attack.dropout_prob: must be in [0, 1]");
  }
  if (!(c.attack.replace_scale > 0.0)) bad("attack.replace_scale: must be > 0");

  if (c.dp.enabled) {
    if (!(c.dp.sigma > 0.0)) bad("dp.sigma: must be > 0 when enabled");
    if (!(c.dp.clip_s > 0.0)) bad("dp.clip_s: must be > 0 when enabled");
    if (!(c.dp.dp_delta > 0.0) || !(c.dp.dp_delta < 1.0)) {
      bad("dp.delta: must be in (0, 1) when enabled");
    }
  }

  if (c.energy_model.c_cpu < 0.0) bad("energy_model.c_cpu: must be >= 0");
  if (c.energy_model.c_tx < 0.0) bad("energy_model.c_tx: must be >= 0");
  if (c.energy_model.payload_bytes < 0.0) bad("energy_model.payload_bytes: must be >= 0");
  if (!(c.energy_model.bandwidth_bytes_per_ms > 0.0)) {
    bad("energy_model.bandwidth_bytes_per_ms: must be > 0");
  }
  if (!(c.energy_model.battery_capacity_j > 0.0)) {
    bad("energy_model.battery_capacity_j: must be > 0");
  }

  auto range = [&bad](const char* name, double lo, double hi, bool floor_pos) {
    if (!(lo <= hi)) bad(std::string("fleet.") + name + ": min must be <= max");
    if (lo < 0.0 || hi > 1.0) bad(std::string("fleet.") + name + ": must lie in [0, 1]");
    if (floor_pos && !(lo > 0.0)) bad(std::string("fleet.") + name + ": min must be > 0");
  };
  range("cpu", c.fleet.cpu_min, c.fleet.cpu_max, /*floor_pos=*/true);
  range("mem", c.fleet.mem_min, c.fleet.mem_max, false);
  range("batt", c.fleet.batt_min, c.fleet.batt_max, false);
  range("energy", c.fleet.energy_min, c.fleet.energy_max, false);

  if (c.timing.aggregation_ms < 0.0) bad("timing.aggregation_ms: must be >= 0");
  if (c.timing.cost_per_sample_ms < 0.0) bad("timing.cost_per_sample_ms: must be >= 0");

  return violations;
}

}  // namespace fedfog
