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

#include "fedfog/health_drift.hpp"

#include <cmath>
#include <stdexcept>

namespace fedfog {

double health_score(const ResourceSnapshot& snapshot, const HealthWeights& w) {
  return w.a1 * snapshot.cpu + w.a2 * snapshot.mem + w.a3 * snapshot.batt;
}

double kl_divergence(const Eigen::Ref<const Eigen::VectorXd>& p,
                     const Eigen::Ref<const Eigen::VectorXd>& q,
                     const DriftConfig& cfg) {
  if (p.size() == 0 || p.size() != q.size()) {
    throw std::invalid_argument("kl_divergence: dimension mismatch");
  }
  if (!(cfg.smoothing_eps > 0.0)) {
    throw std::invalid_argument("kl_divergence: smoothing_eps must be > 0");
  }
  const double eps = cfg.smoothing_eps;
  const Eigen::ArrayXd ps = p.array() + eps;
  const Eigen::ArrayXd qs = q.array() + eps;
  const Eigen::ArrayXd pn = ps / ps.sum();
  const Eigen::ArrayXd qn = qs / qs.sum();
  // Smoothed bins are strictly positive, so every log is finite.
  return (pn * (pn / qn).log()).sum();
}

double drift_score(const ClientNode& client, const DriftConfig& cfg) {
  if (client.prev_class_dist.size() == 0) {
    return 0.0;  // no history yet; first round reports no drift
  }
  return kl_divergence(client.class_dist, client.prev_class_dist, cfg);
}

}  // namespace fedfog
