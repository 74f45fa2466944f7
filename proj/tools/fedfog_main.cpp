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
//
// Command-line front end: runs scenarios, compares scheduling policies,
// sweeps thresholds, benches scheduling complexity and validates configs.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fedfog/scenario.hpp"
#include "fedfog/sim.hpp"
#include "fedfog/telemetry.hpp"

namespace {

namespace fs = std::filesystem;

fedfog::ScenarioConfig load_validated(const std::string& path) {
  fedfog::ScenarioConfig config = fedfog::load_scenario(path);
  const std::vector<std::string> violations =
      fedfog::validate_scenario(config);
  if (!violations.empty()) {
    std::string message = "invalid scenario '" + path + "':";
    for (const std::string& violation : violations) {
      message += "\n  " + violation;
    }
    throw fedfog::ScenarioError(message);
  }
  return config;
}

fedfog::PolicyKind parse_policy(const std::string& name) {
  if (name == "fedfog") return fedfog::PolicyKind::fedfog;
  if (name == "naive_faas") return fedfog::PolicyKind::naive_faas;
  if (name == "random") return fedfog::PolicyKind::random;
  throw fedfog::ScenarioError("unknown policy '" + name + "'");
}

std::vector<fedfog::SelectionThresholds> load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw fedfog::ScenarioError("cannot open grid file: " + path);
  }
  std::vector<fedfog::SelectionThresholds> grid;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line_no == 1 && line.find("theta") != std::string::npos) {
      continue;  // optional header row
    }
    std::istringstream row(line);
    fedfog::SelectionThresholds cell;
    char comma1 = 0, comma2 = 0;
    if (!(row >> cell.theta_h >> comma1 >> cell.theta_e >> comma2 >>
          cell.theta_d) ||
        comma1 != ',' || comma2 != ',') {
      throw fedfog::ScenarioError("grid line " + std::to_string(line_no) +
                                  ": expected 'theta_h,theta_e,theta_d'");
    }
    grid.push_back(cell);
  }
  if (grid.empty()) {
    throw fedfog::ScenarioError("grid file has no cells: " + path);
  }
  return grid;
}

void print_summary(const std::vector<fedfog::RoundRecord>& records) {
  if (records.empty()) {
    std::cout << "no rounds executed\n";
    return;
  }
  double energy = 0.0;
  long cold = 0;
  for (const fedfog::RoundRecord& r : records) {
    energy += r.energy_j;
    cold += r.cold_starts;
  }
  const fedfog::RoundRecord& last = records.back();
  std::printf("rounds=%zu final_accuracy=%.4f total_energy_j=%.3f "
              "cold_starts=%ld final_objective=%.4f\n",
              records.size(), last.accuracy, energy, cold,
              last.objective_score);
}

int cmd_run(const std::string& scenario_path, const std::string& out_dir,
            const std::string& format, bool seed_set, std::uint64_t seed) {
  fedfog::ScenarioConfig config = load_validated(scenario_path);
  if (seed_set) {
    config.seed = seed;
  }
  const std::vector<fedfog::RoundRecord> records =
      fedfog::run_simulation(config);
  fs::create_directories(out_dir);
  if (format == "json") {
    fedfog::write_file(fs::path(out_dir) / "telemetry.json",
                       fedfog::telemetry_json(records));
  } else {
    fedfog::write_file(fs::path(out_dir) / "telemetry.csv",
                       fedfog::telemetry_csv(records));
  }
  print_summary(records);
  return 0;
}

int cmd_compare(const std::string& scenario_path,
                const std::string& policies_arg, const std::string& out_dir) {
  fedfog::ScenarioConfig base = load_validated(scenario_path);
  std::vector<std::string> names;
  std::stringstream splitter(policies_arg);
  std::string token;
  while (std::getline(splitter, token, ',')) {
    if (!token.empty()) names.push_back(token);
  }
  if (names.empty()) {
    throw fedfog::ScenarioError("--policies must list at least one policy");
  }
  std::printf("%-12s %-10s %-14s %-14s %-12s\n", "policy", "accuracy",
              "mean_latency", "total_energy", "cold_starts");
  for (const std::string& name : names) {
    fedfog::ScenarioConfig config = base;
    config.policy.kind = parse_policy(name);
    const std::vector<fedfog::RoundRecord> records =
        fedfog::run_simulation(config);
    double latency = 0.0, energy = 0.0;
    long cold = 0;
    for (const fedfog::RoundRecord& r : records) {
      latency += r.latency_ms;
      energy += r.energy_j;
      cold += r.cold_starts;
    }
    std::printf("%-12s %-10.4f %-14.2f %-14.3f %-12ld\n", name.c_str(),
                records.back().accuracy,
                latency / static_cast<double>(records.size()), energy, cold);
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      fedfog::write_file(fs::path(out_dir) / (name + ".csv"),
                         fedfog::telemetry_csv(records));
    }
  }
  return 0;
}

int cmd_sweep(const std::string& scenario_path, const std::string& grid_path,
              int repeats, const std::string& out_dir) {
  const fedfog::ScenarioConfig base = load_validated(scenario_path);
  const std::vector<fedfog::SelectionThresholds> grid = load_grid(grid_path);
  const fedfog::SweepReport report = fedfog::sweep(base, grid, repeats);
  std::printf("%-8s %-8s %-8s %-14s %-13s %-14s\n", "theta_h", "theta_e",
              "theta_d", "mean_accuracy", "std_accuracy", "participation");
  for (const fedfog::SweepCell& cell : report.cells) {
    std::printf("%-8.3f %-8.3f %-8.3f %-14.4f %-13.4f %-14.3f\n",
                cell.thresholds.theta_h, cell.thresholds.theta_e,
                cell.thresholds.theta_d, cell.mean_accuracy,
                cell.std_accuracy, cell.mean_participation);
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    fedfog::write_file(fs::path(out_dir) / "sweep.csv",
                       fedfog::sweep_csv(report));
  }
  return 0;
}

int cmd_bench(const std::vector<int>& clients, std::uint64_t seed,
              const std::string& out_dir) {
  const std::vector<fedfog::BenchRow> rows =
      fedfog::complexity_bench(clients, seed);
  std::printf("%-10s %-12s %-14s %-12s\n", "n_clients", "fedfog_ops",
              "naive_ops", "random_ops");
  for (const fedfog::BenchRow& row : rows) {
    std::printf("%-10d %-12llu %-14llu %-12llu\n", row.n_clients,
                static_cast<unsigned long long>(row.fedfog_ops),
                static_cast<unsigned long long>(row.naive_ops),
                static_cast<unsigned long long>(row.random_ops));
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    fedfog::write_file(fs::path(out_dir) / "bench.csv",
                       fedfog::bench_csv(rows));
  }
  return 0;
}

int cmd_validate(const std::string& scenario_path) {
  const fedfog::ScenarioConfig config = fedfog::load_scenario(scenario_path);
  const std::vector<std::string> violations =
      fedfog::validate_scenario(config);
  if (violations.empty()) {
    std::cout << "ok\n";
    return 0;
  }
  for (const std::string& violation : violations) {
    std::cerr << "violation: " << violation << "\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serverless federated learning simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir = ".";
  std::string format = "csv";
  std::uint64_t seed = 0;
  bool seed_set = false;

  CLI::App* run = app.add_subcommand("run", "Run one scenario");
  run->add_option("scenario", scenario_path, "Scenario file")->required();
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--format", format, "Telemetry format")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--seed", seed, "Override the scenario seed")
      ->each([&seed_set](const std::string&) { seed_set = true; });

  std::string policies = "fedfog,naive_faas,random";
  std::string compare_out;
  CLI::App* compare =
      app.add_subcommand("compare", "Run the same scenario per policy");
  compare->add_option("scenario", scenario_path, "Scenario file")->required();
  compare->add_option("--policies", policies, "Comma-separated policies");
  compare->add_option("--out", compare_out, "Output directory");

  std::string grid_path;
  int repeats = 5;
  std::string sweep_out;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Threshold grid sweep with repeats");
  sweep_cmd->add_option("scenario", scenario_path, "Scenario file")
      ->required();
  sweep_cmd->add_option("--grid", grid_path, "Grid file")->required();
  sweep_cmd->add_option("--repeats", repeats, "Runs per cell")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sweep_out, "Output directory");

  std::vector<int> bench_clients{64, 256, 1024};
  std::uint64_t bench_seed = 7;
  std::string bench_out;
  CLI::App* bench =
      app.add_subcommand("bench", "Scheduling op-count benchmark");
  bench->add_option("--clients", bench_clients, "Client counts")
      ->delimiter(',');
  bench->add_option("--seed", bench_seed, "Bench seed");
  bench->add_option("--out", bench_out, "Output directory");

  CLI::App* validate =
      app.add_subcommand("validate", "Check a scenario file");
  validate->add_option("scenario", scenario_path, "Scenario file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(scenario_path, out_dir, format, seed_set, seed);
    }
    if (compare->parsed()) {
      return cmd_compare(scenario_path, policies, compare_out);
    }
    if (sweep_cmd->parsed()) {
      return cmd_sweep(scenario_path, grid_path, repeats, sweep_out);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_clients, bench_seed, bench_out);
    }
    if (validate->parsed()) {
      return cmd_validate(scenario_path);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 0;
}
