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

#ifndef FEDFOG_HEALTH_DRIFT_HPP_
#define FEDFOG_HEALTH_DRIFT_HPP_

#include <Eigen/Dense>

#include "fedfog/types.hpp"

namespace fedfog {

// Numerical guards for the drift detector.
struct DriftConfig {
  // Additive smoothing applied to both distributions before the KL sum so
  // zero bins stay finite. Must be positive.
  double smoothing_eps = 1e-9;
};

// Weighted client health H = a1*cpu + a2*mem + a3*batt. With convex weights
// and snapshot entries in [0, 1] the result lies in [0, 1].
double health_score(const ResourceSnapshot& snapshot, const HealthWeights& w);

// KL(p || q) in nats. Both arguments are smoothed with cfg.smoothing_eps and
// renormalized, so the result is finite even with empty bins. Requires equal
// dimensions and at least one bin.
double kl_divergence(const Eigen::Ref<const Eigen::VectorXd>& p,
                     const Eigen::Ref<const Eigen::VectorXd>& q,
                     const DriftConfig& cfg = {});

// Divergence of the client's current label distribution from the previous
// round, KL(current || previous). Zero when the distribution is unchanged.
double drift_score(const ClientNode& client, const DriftConfig& cfg = {});

}  // namespace fedfog

#endif  // FEDFOG_HEALTH_DRIFT_HPP_
