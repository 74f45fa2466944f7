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

#ifndef FEDFOG_SCHEDULER_HPP_
#define FEDFOG_SCHEDULER_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "fedfog/types.hpp"

namespace fedfog {

enum class PolicyKind : std::uint8_t {
  fedfog,      // threshold selection + utility-ranked scheduling
  naive_faas,  // redeploy everyone, quadratic status polling
  random,      // uniform sampling without replacement
};

struct SchedulerPolicy {
  PolicyKind kind = PolicyKind::fedfog;
  SelectionThresholds thresholds;
  UtilityWeights utility_weights;
  // When set, scheduling keeps only the top_k highest-utility clients.
  std::optional<int> top_k;
};

// Adaptive per-client energy budgeting.
struct EnergyBudgetConfig {
  double lambda = 0.0;  // decay rate; 0 freezes all thresholds
  // Population over which the round's mean energy is taken.
  enum class Average : std::uint8_t { selected, all };
  Average budget_avg = Average::all;
};

// Result of a scheduling pass. selected and utilities are parallel arrays,
// ordered by utility descending with ties broken by ascending client id.
// op_count is an abstract operation counter used by the complexity bench:
// the fedfog policy counts heap comparisons, the baselines count their
// modeled deployment/polling/sampling operations.
struct SelectionOutcome {
  std::vector<int> selected;
  std::vector<double> utilities;
  std::uint64_t op_count = 0;
};

// Per-client scores consumed by selection, computed once per round.
struct ClientScores {
  double health = 0.0;
  double energy = 0.0;
  double drift = 0.0;
};

// Eligibility filter: keeps client i iff
//   health > theta_h  AND  energy > client.energy_threshold  AND
//   drift < theta_d.
// All comparisons are strict; a client exactly at a threshold is excluded.
// The per-client adaptive threshold stands in for the global theta_e (it is
// initialized from it at round zero). Returns ids in ascending order.
// scores must be parallel to clients.
std::vector<int> select_clients(std::span<const ClientNode> clients,
                                std::span<const ClientScores> scores,
                                const SelectionThresholds& thresholds);

// Scheduling utility U = b1*health + b2*energy - b3*drift.
double utility(double health, double energy, double drift,
               const UtilityWeights& w);

struct RankedCandidate {
  int id = 0;
  double utility_score = 0.0;
};

// Orders candidates by utility descending (ties: ascending id) with a binary
// max-heap; op_count counts one per heap comparison. With top_k set, a
// bounded min-heap of size top_k keeps the best candidates in O(N log K).
SelectionOutcome rank_clients(std::vector<RankedCandidate> candidates,
                              std::optional<int> top_k = std::nullopt);

// One step of the multiplicative energy budget decay:
//   theta_new = theta_prev * exp(-lambda * energy_used_prev / energy_avg).
// energy_avg must be positive. Never increases the threshold.
double update_energy_threshold(double theta_prev, double energy_used_prev_j,
                               double energy_avg_j,
                               const EnergyBudgetConfig& cfg);

// Baseline FaaS orchestration: selects every client in ascending id order and
// models one deployment per client plus pairwise status polling,
// op_count = N + N*(N-1).
SelectionOutcome naive_schedule(std::span<const ClientNode> clients);

// Baseline random policy: k clients drawn uniformly without replacement,
// reported in ascending id order. op_count models one status scan per client
// (linear in N). Throws if k exceeds the client count.
SelectionOutcome random_schedule(std::span<const ClientNode> clients, int k,
                                 std::mt19937_64& rng);

// Scalarized round objective J = alpha*accuracy - beta*latency - gamma*energy.
// Callers pass latency and energy already normalized to [0, 1] against the
// scenario bounds.
double objective_value(double accuracy, double latency_norm,
                       double energy_norm, const ObjectiveWeights& w);

enum class ConstraintVerdict : std::uint8_t {
  feasible,
  latency_exceeded,
  energy_exceeded,  // reported when energy alone is out of bound
};

// Feasibility of a planned round: latency <= tau_max_ms and energy <=
// eps_max_j. When both bounds are violated the latency verdict is reported.
ConstraintVerdict check_constraints(double planned_latency_ms,
                                    double planned_energy_j,
                                    const RoundConstraints& constraints);

// One scheduled client with its planned round cost.
struct PlannedClient {
  int id = 0;
  double utility_score = 0.0;
  double latency_ms = 0.0;  // invocation + training + upload for this client
  double energy_j = 0.0;
};

struct ConstrainedPlan {
  std::vector<PlannedClient> kept;  // still utility-descending
  std::vector<int> dropped;         // in drop order (lowest utility first)
  ConstraintVerdict verdict = ConstraintVerdict::feasible;
};

// Greedy constraint repair: while the plan (max client latency +
// aggregation_ms, summed energy) violates the bounds, drop the
// lowest-utility client (ties: higher id drops first). An empty plan costs
// zero and is always feasible, so this terminates within N drops.
ConstrainedPlan enforce_constraints(std::vector<PlannedClient> ranked,
                                    double aggregation_ms,
                                    const RoundConstraints& constraints);

}  // namespace fedfog

#endif  // FEDFOG_SCHEDULER_HPP_
