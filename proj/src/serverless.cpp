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

#include "fedfog/serverless.hpp"

#include <stdexcept>

namespace fedfog {

bool is_cold(const ContainerState& container) {
  return container.status != ContainerStatus::warm;
}

InvocationResult invocation_delay(ContainerState& container,
                                  const ColdStartParams& params,
                                  long current_round,
                                  std::mt19937_64* jitter_rng) {
  InvocationResult result;
  result.was_cold = is_cold(container);
  if (result.was_cold) {
    result.delay_ms = params.delta_cold_ms;
    if (params.jitter) {
      if (jitter_rng == nullptr) {
        throw std::invalid_argument(
            "invocation_delay: jitter enabled but no rng supplied");
      }
      std::uniform_real_distribution<double> factor(0.9, 1.1);
      result.delay_ms = factor(*jitter_rng) * params.delta_cold_ms;
    }
  } else {
    result.delay_ms = params.delta_warm_ms;
  }
  container.status = ContainerStatus::warm;
  container.last_used_round = current_round;
  return result;
}

bool expire_container(ContainerState& container, long current_round,
                      const ColdStartParams& params) {
  if (container.status != ContainerStatus::warm) {
    return false;
  }
  const long idle = current_round - container.last_used_round;
  if (idle > params.warm_ttl_rounds) {
    container.status = ContainerStatus::evicted;
    return true;
  }
  return false;
}

int expire_containers(std::vector<ClientNode>& clients, long current_round,
                      const ColdStartParams& params) {
  int evicted = 0;
  for (ClientNode& client : clients) {
    if (expire_container(client.container, current_round, params)) {
      ++evicted;
    }
  }
  return evicted;
}

ColdStartTotals cold_start_overhead(std::span<const int> cold_counts_per_round,
                                    const ColdStartParams& params) {
  ColdStartTotals totals;
  for (int count : cold_counts_per_round) {
    if (count < 0) {
      throw std::invalid_argument("cold_start_overhead: negative count");
    }
    totals.total_delay_ms += count * params.delta_cold_ms;
    totals.total_energy_j += count * params.e_cold_j;
  }
  return totals;
}

}  // namespace fedfog
