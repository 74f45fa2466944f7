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

#include "fedfog/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fedfog {
namespace {

// Binary max-heap over RankedCandidate with an externally owned comparison
// counter. Pop order: utility descending, ties by ascending id.
class CountingHeap {
 public:
  explicit CountingHeap(std::uint64_t* ops) : ops_(ops) {}

  // a ranks strictly after b in the pop order.
  bool after(const RankedCandidate& a, const RankedCandidate& b) {
    ++*ops_;
    if (a.utility_score != b.utility_score) {
      return a.utility_score < b.utility_score;
    }
    return a.id > b.id;
  }

  // Floyd heap construction: sift down every internal node.
  void build(std::vector<RankedCandidate> items) {
    heap_ = std::move(items);
    for (std::size_t i = heap_.size() / 2; i-- > 0;) {
      sift_down(i);
    }
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  const RankedCandidate& top() const { return heap_.front(); }

  RankedCandidate pop() {
    RankedCandidate best = heap_.front();
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      sift_down(0);
    }
    return best;
  }

  void replace_top(const RankedCandidate& item) {
    heap_.front() = item;
    sift_down(0);
  }

 private:
  void sift_down(std::size_t i) {
    const std::size_t n = heap_.size();
    while (true) {
      const std::size_t left = 2 * i + 1;
      const std::size_t right = left + 1;
      if (left >= n) {
        return;
      }
      std::size_t best = left;
      if (right < n && after(heap_[left], heap_[right])) {
        best = right;
      }
      if (!after(heap_[i], heap_[best])) {
        return;
      }
      std::swap(heap_[i], heap_[best]);
      i = best;
    }
  }

  std::vector<RankedCandidate> heap_;
  std::uint64_t* ops_;
};

// Same heap with the order reversed (a min-heap on the pop order), used to
// track the current top-k set; its root is the weakest kept candidate.
class CountingMinHeap {
 public:
  explicit CountingMinHeap(std::uint64_t* ops) : ops_(ops) {}

  bool before(const RankedCandidate& a, const RankedCandidate& b) {
    ++*ops_;
    if (a.utility_score != b.utility_score) {
      return a.utility_score > b.utility_score;
    }
    return a.id < b.id;
  }

  void build(std::vector<RankedCandidate> items) {
    heap_ = std::move(items);
    for (std::size_t i = heap_.size() / 2; i-- > 0;) {
      sift_down(i);
    }
  }

  const RankedCandidate& weakest() const { return heap_.front(); }
  bool empty() const { return heap_.empty(); }

  RankedCandidate pop() {
    RankedCandidate weak = heap_.front();
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      sift_down(0);
    }
    return weak;
  }

  void replace_weakest(const RankedCandidate& item) {
    heap_.front() = item;
    sift_down(0);
  }

 private:
  void sift_down(std::size_t i) {
    const std::size_t n = heap_.size();
    while (true) {
      const std::size_t left = 2 * i + 1;
      const std::size_t right = left + 1;
      if (left >= n) {
        return;
      }
      // The weaker child is the swap candidate; the root must stay weakest.
      std::size_t weak = left;
      if (right < n && before(heap_[left], heap_[right])) {
        weak = right;
      }
      if (before(heap_[weak], heap_[i])) {
        return;
      }
      std::swap(heap_[i], heap_[weak]);
      i = weak;
    }
  }

  std::vector<RankedCandidate> heap_;
  std::uint64_t* ops_;
};

}  // namespace

std::vector<int> select_clients(std::span<const ClientNode> clients,
                                std::span<const ClientScores> scores,
                                const SelectionThresholds& thresholds) {
  if (clients.size() != scores.size()) {
    throw std::invalid_argument("select_clients: scores not parallel");
  }
  std::vector<int> ids;
  for (std::size_t i = 0; i < clients.size(); ++i) {
    const ClientScores& s = scores[i];
    if (s.health > thresholds.theta_h &&
        s.energy > clients[i].energy_threshold &&
        s.drift < thresholds.theta_d) {
      ids.push_back(clients[i].id);
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

double utility(double health, double energy, double drift,
               const UtilityWeights& w) {
  return w.b1 * health + w.b2 * energy - w.b3 * drift;
}

SelectionOutcome rank_clients(std::vector<RankedCandidate> candidates,
                              std::optional<int> top_k) {
  SelectionOutcome outcome;
  const std::size_t n = candidates.size();
  const std::size_t k =
      top_k.has_value()
          ? std::min(n, static_cast<std::size_t>(std::max(0, *top_k)))
          : n;
  if (k == 0) {
    return outcome;
  }

  if (k == n) {
    // Full ordering: heapsort with ~2*N*log2(N) comparisons.
    CountingHeap heap(&outcome.op_count);
    heap.build(std::move(candidates));
    outcome.selected.reserve(n);
    outcome.utilities.reserve(n);
    while (!heap.empty()) {
      RankedCandidate best = heap.pop();
      outcome.selected.push_back(best.id);
      outcome.utilities.push_back(best.utility_score);
    }
    return outcome;
  }

  // Bounded selection: keep the k best seen so far in a min-heap and stream
  // the rest past its root, O(N log K) comparisons total.
  CountingMinHeap kept(&outcome.op_count);
  kept.build({candidates.begin(), candidates.begin() + k});
  for (std::size_t i = k; i < n; ++i) {
    if (kept.before(candidates[i], kept.weakest())) {
      kept.replace_weakest(candidates[i]);
    }
  }
  std::vector<RankedCandidate> best(k);
  for (std::size_t i = k; i-- > 0;) {
    best[i] = kept.pop();  // min-heap pops weakest first
  }
  outcome.selected.reserve(k);
  outcome.utilities.reserve(k);
  for (const RankedCandidate& c : best) {
    outcome.selected.push_back(c.id);
    outcome.utilities.push_back(c.utility_score);
  }
  return outcome;
}

double update_energy_threshold(double theta_prev, double energy_used_prev_j,
                               double energy_avg_j,
                               const EnergyBudgetConfig& cfg) {
  if (!(energy_avg_j > 0.0)) {
    throw std::invalid_argument(
        "update_energy_threshold: energy_avg must be positive");
  }
  if (energy_used_prev_j < 0.0) {
    throw std::invalid_argument(
        "update_energy_threshold: negative energy use");
  }
  return theta_prev *
         std::exp(-cfg.lambda * energy_used_prev_j / energy_avg_j);
}

SelectionOutcome naive_schedule(std::span<const ClientNode> clients) {
  SelectionOutcome outcome;
  const std::uint64_t n = clients.size();
  outcome.selected.reserve(clients.size());
  for (const ClientNode& client : clients) {
    outcome.selected.push_back(client.id);
  }
  std::sort(outcome.selected.begin(), outcome.selected.end());
  outcome.utilities.assign(clients.size(), 0.0);
  outcome.op_count = n + n * (n - (n > 0 ? 1 : 0));
  return outcome;
}

SelectionOutcome random_schedule(std::span<const ClientNode> clients, int k,
                                 std::mt19937_64& rng) {
  const std::size_t n = clients.size();
  if (k < 0 || static_cast<std::size_t>(k) > n) {
    throw std::invalid_argument("random_schedule: k out of range");
  }
  std::vector<int> ids;
  ids.reserve(n);
  for (const ClientNode& client : clients) {
    ids.push_back(client.id);
  }
  // Partial Fisher-Yates: the first k slots end up a uniform sample.
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(ids[i], ids[pick(rng)]);
  }
  SelectionOutcome outcome;
  outcome.selected.assign(ids.begin(), ids.begin() + k);
  std::sort(outcome.selected.begin(), outcome.selected.end());
  outcome.utilities.assign(outcome.selected.size(), 0.0);
  outcome.op_count = n;  // one status scan per client
  return outcome;
}

double objective_value(double accuracy, double latency_norm,
                       double energy_norm, const ObjectiveWeights& w) {
  return w.alpha * accuracy - w.beta * latency_norm - w.gamma * energy_norm;
}

ConstraintVerdict check_constraints(double planned_latency_ms,
                                    double planned_energy_j,
                                    const RoundConstraints& constraints) {
  if (planned_latency_ms > constraints.tau_max_ms) {
    return ConstraintVerdict::latency_exceeded;
  }
  if (planned_energy_j > constraints.eps_max_j) {
    return ConstraintVerdict::energy_exceeded;
  }
  return ConstraintVerdict::feasible;
}

ConstrainedPlan enforce_constraints(std::vector<PlannedClient> ranked,
                                    double aggregation_ms,
                                    const RoundConstraints& constraints) {
  ConstrainedPlan plan;
  plan.kept = std::move(ranked);
  while (true) {
    double latency = 0.0;
    double energy = 0.0;
    for (const PlannedClient& c : plan.kept) {
      latency = std::max(latency, c.latency_ms);
      energy += c.energy_j;
    }
    if (!plan.kept.empty()) {
      latency += aggregation_ms;
    }
    plan.verdict = check_constraints(latency, energy, constraints);
    if (plan.verdict == ConstraintVerdict::feasible || plan.kept.empty()) {
      return plan;
    }
    // Drop the weakest: lowest utility, ties resolved against the higher id.
    std::size_t weakest = 0;
    for (std::size_t i = 1; i < plan.kept.size(); ++i) {
      const PlannedClient& a = plan.kept[i];
      const PlannedClient& b = plan.kept[weakest];
      if (a.utility_score < b.utility_score ||
          (a.utility_score == b.utility_score && a.id > b.id)) {
        weakest = i;
      }
    }
    plan.dropped.push_back(plan.kept[weakest].id);
    plan.kept.erase(plan.kept.begin() + static_cast<std::ptrdiff_t>(weakest));
  }
}

}  // namespace fedfog
