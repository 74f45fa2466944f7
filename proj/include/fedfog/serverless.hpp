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

#ifndef FEDFOG_SERVERLESS_HPP_
#define FEDFOG_SERVERLESS_HPP_

#include <random>
#include <span>
#include <vector>

#include "fedfog/types.hpp"

namespace fedfog {

// Cold-start model of the per-client function containers.
struct ColdStartParams {
  double delta_cold_ms = 2000.0;  // latency of a cold invocation
  double delta_warm_ms = 200.0;   // latency of a warm invocation
  int warm_ttl_rounds = 5;        // idle rounds tolerated before eviction
  double e_cold_j = 0.5;          // extra energy charged per cold start
  // When set, each cold delay is drawn uniformly from
  // [0.9, 1.1] * delta_cold_ms instead of being deterministic.
  bool jitter = false;
};

struct InvocationResult {
  double delay_ms = 0.0;
  bool was_cold = false;
};

// True when the next invocation of this container would be cold, i.e. the
// container was never invoked or has been evicted.
bool is_cold(const ContainerState& container);

// Invokes the client's function: charges the cold or warm delay, marks the
// container warm and stamps last_used_round. jitter_rng is consumed only for
// a jittered cold start; pass nullptr when params.jitter is false.
InvocationResult invocation_delay(ContainerState& container,
                                  const ColdStartParams& params,
                                  long current_round,
                                  std::mt19937_64* jitter_rng = nullptr);

// Evicts the container if it is warm and has sat idle for more than
// params.warm_ttl_rounds. Returns true when an eviction happened.
bool expire_container(ContainerState& container, long current_round,
                      const ColdStartParams& params);

// Applies expire_container to every client's container; returns the number
// of evictions.
int expire_containers(std::vector<ClientNode>& clients, long current_round,
                      const ColdStartParams& params);

// Accumulated cold-start cost over a run. Latency and energy are summed
// separately; they carry different units.
struct ColdStartTotals {
  double total_delay_ms = 0.0;
  double total_energy_j = 0.0;
};

// Closed-form overhead for a sequence of per-round cold-start counts S_r:
// total delay = sum_r S_r * delta_cold_ms, total energy = sum_r S_r * e_cold_j.
ColdStartTotals cold_start_overhead(std::span<const int> cold_counts_per_round,
                                    const ColdStartParams& params);

}  // namespace fedfog

#endif  // FEDFOG_SERVERLESS_HPP_
