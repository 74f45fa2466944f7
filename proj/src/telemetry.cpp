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

#include "fedfog/telemetry.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fedfog {
namespace {

// Shortest representation that parses back to the same double; locale-free.
std::string format_double(double value) {
  char buffer[32];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) {
    throw std::runtime_error("telemetry: double formatting failed");
  }
  return std::string(buffer, ptr);
}

}  // namespace

std::string telemetry_csv(std::span<const RoundRecord> records) {
  std::string out =
      "round,selected_count,dropped_count,latency_ms,energy_j,cold_starts,"
      "accuracy,mean_utility,objective_j,epsilon\n";
  for (const RoundRecord& r : records) {
    out += std::to_string(r.round);
    out += ',';
    out += std::to_string(r.selected_ids.size());
    out += ',';
    out += std::to_string(r.dropped_ids.size());
    out += ',';
    out += format_double(r.latency_ms);
    out += ',';
    out += format_double(r.energy_j);
    out += ',';
    out += std::to_string(r.cold_starts);
    out += ',';
    out += format_double(r.accuracy);
    out += ',';
    out += format_double(r.mean_utility);
    out += ',';
    out += format_double(r.objective_score);
    out += ',';
    if (r.epsilon) {
      out += format_double(*r.epsilon);
    }
    out += '\n';
  }
  return out;
}

std::string telemetry_json(std::span<const RoundRecord> records) {
  nlohmann::json array = nlohmann::json::array();
  for (const RoundRecord& r : records) {
    nlohmann::json entry;
    entry["round"] = r.round;
    entry["selected_ids"] = r.selected_ids;
    entry["dropped_ids"] = r.dropped_ids;
    entry["latency_ms"] = r.latency_ms;
    entry["energy_j"] = r.energy_j;
    entry["cold_starts"] = r.cold_starts;
    entry["accuracy"] = r.accuracy;
    entry["mean_utility"] = r.mean_utility;
    entry["objective_j"] = r.objective_score;
    if (r.epsilon) {
      entry["epsilon"] = *r.epsilon;
    } else {
      entry["epsilon"] = nullptr;
    }
    entry["per_client_energy_j"] = r.per_client_energy_j;
    array.push_back(std::move(entry));
  }
  return array.dump(2) + "\n";
}

std::vector<RoundRecord> records_from_json(const std::string& text) {
  const nlohmann::json array = nlohmann::json::parse(text);
  std::vector<RoundRecord> records;
  for (const nlohmann::json& entry : array) {
    RoundRecord r;
    r.round = entry.at("round").get<long>();
    r.selected_ids = entry.at("selected_ids").get<std::vector<int>>();
    r.dropped_ids = entry.at("dropped_ids").get<std::vector<int>>();
    r.latency_ms = entry.at("latency_ms").get<double>();
    r.energy_j = entry.at("energy_j").get<double>();
    r.cold_starts = entry.at("cold_starts").get<int>();
    r.accuracy = entry.at("accuracy").get<double>();
    r.mean_utility = entry.at("mean_utility").get<double>();
    r.objective_score = entry.at("objective_j").get<double>();
    if (!entry.at("epsilon").is_null()) {
      r.epsilon = entry.at("epsilon").get<double>();
    }
    r.per_client_energy_j =
        entry.at("per_client_energy_j").get<std::vector<double>>();
    records.push_back(std::move(r));
  }
  return records;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path.string());
  }
  out << body;
}

std::string sweep_csv(const SweepReport& report) {
  std::string out =
      "theta_h,theta_e,theta_d,mean_accuracy,std_accuracy,"
      "mean_participation\n";
  for (const SweepCell& cell : report.cells) {
    out += format_double(cell.thresholds.theta_h);
    out += ',';
    out += format_double(cell.thresholds.theta_e);
    out += ',';
    out += format_double(cell.thresholds.theta_d);
    out += ',';
    out += format_double(cell.mean_accuracy);
    out += ',';
    out += format_double(cell.std_accuracy);
    out += ',';
    out += format_double(cell.mean_participation);
    out += '\n';
  }
  return out;
}

std::string bench_csv(std::span<const BenchRow> rows) {
  std::string out = "n_clients,fedfog_ops,naive_ops,random_ops\n";
  for (const BenchRow& row : rows) {
    out += std::to_string(row.n_clients);
    out += ',';
    out += std::to_string(row.fedfog_ops);
    out += ',';
    out += std::to_string(row.naive_ops);
    out += ',';
    out += std::to_string(row.random_ops);
    out += '\n';
  }
  return out;
}

}  // namespace fedfog
