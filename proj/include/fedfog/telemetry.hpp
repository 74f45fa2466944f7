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

#ifndef FEDFOG_TELEMETRY_HPP_
#define FEDFOG_TELEMETRY_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "fedfog/sim.hpp"

namespace fedfog {

// Per-round CSV with the fixed column order
//   round,selected_count,dropped_count,latency_ms,energy_j,cold_starts,
//   accuracy,mean_utility,objective_j,epsilon
// Doubles are rendered shortest round-trip, so equal runs give equal bytes.
// The epsilon field is empty when privacy is disabled. An empty record list
// yields only the header line.
std::string telemetry_csv(std::span<const RoundRecord> records);

// JSON array of full per-round records (including id lists and per-client
// energy); reads back with records_from_json without loss.
std::string telemetry_json(std::span<const RoundRecord> records);
std::vector<RoundRecord> records_from_json(const std::string& text);

void write_file(const std::filesystem::path& path, const std::string& body);

// Sweep report CSV: one row per grid cell.
std::string sweep_csv(const SweepReport& report);

// Bench table CSV: one row per client count.
std::string bench_csv(std::span<const BenchRow> rows);

}  // namespace fedfog

#endif  // FEDFOG_TELEMETRY_HPP_
