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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "fedfog/adversary.hpp"

namespace {

using fedfog::ClientUpdate;
using fedfog::LabeledShard;

LabeledShard tiny_shard(int n, int n_classes, std::mt19937_64& rng) {
  LabeledShard shard;
  shard.features.resize(n, 2);
  shard.labels.resize(n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    shard.features(i, 0) = gauss(rng);
    shard.features(i, 1) = gauss(rng);
    shard.labels[i] = static_cast<int>(rng() % std::uint64_t(n_classes));
  }
  return shard;
}

ClientUpdate unit_update(int dim) {
  ClientUpdate u;
  u.client_id = 3;
  u.dataset_size = 50;
  u.delta = fedfog::ModelVector::Ones(dim);
  return u;
}

}  // namespace

TEST_CASE("label flipping mirrors the class index and nothing else") {
  std::mt19937_64 rng(7);
  const LabeledShard shard = tiny_shard(40, 10, rng);
  const LabeledShard flipped = fedfog::flip_labels(shard, 10);
  REQUIRE(flipped.labels.size() == shard.labels.size());
  CHECK(flipped.features == shard.features);
  for (Eigen::Index i = 0; i < shard.labels.size(); ++i) {
    CHECK(flipped.labels[i] == 9 - shard.labels[i]);
  }
  // Specific pairs: 0 <-> 9, 3 <-> 6.
  LabeledShard fixed;
  fixed.features.resize(2, 2);
  fixed.features.setZero();
  fixed.labels.resize(2);
  fixed.labels << 0, 3;
  const LabeledShard out = fedfog::flip_labels(fixed, 10);
  CHECK(out.labels[0] == 9);
  CHECK(out.labels[1] == 6);
}

TEST_CASE("flipping twice restores the original labels") {
  std::mt19937_64 rng(11);
  for (int n_classes : {2, 3, 7, 10}) {
    const LabeledShard shard = tiny_shard(30, n_classes, rng);
    const LabeledShard twice =
        fedfog::flip_labels(fedfog::flip_labels(shard, n_classes), n_classes);
    CHECK(twice.labels == shard.labels);
    CHECK(twice.features == shard.features);
  }
}

TEST_CASE("label flipping validates the class range") {
  std::mt19937_64 rng(13);
  LabeledShard shard = tiny_shard(5, 2, rng);
  CHECK_THROWS_AS(fedfog::flip_labels(shard, 1), std::invalid_argument);
  shard.labels[0] = 5;
  CHECK_THROWS_AS(fedfog::flip_labels(shard, 2), std::invalid_argument);
}

TEST_CASE("noise injection has the configured moments") {
  std::mt19937_64 rng(17);
  const int dim = 10000;
  const double sigma = 0.5;
  const ClientUpdate noisy =
      fedfog::inject_noise(unit_update(dim), sigma, rng);
  const Eigen::VectorXd residual =
      noisy.delta - fedfog::ModelVector::Ones(dim);
  const double mean = residual.mean();
  const double var =
      (residual.array() - mean).square().sum() / double(dim - 1);
  CHECK(std::abs(mean) < 5.0 * sigma / std::sqrt(double(dim)));
  CHECK(std::sqrt(var) == doctest::Approx(sigma).epsilon(0.05));
  CHECK(noisy.client_id == 3);  // metadata rides along
  CHECK(noisy.dataset_size == 50);
}

TEST_CASE("noise injection is reproducible and validates sigma") {
  std::mt19937_64 a(19), b(19);
  const ClientUpdate first = fedfog::inject_noise(unit_update(16), 0.3, a);
  const ClientUpdate second = fedfog::inject_noise(unit_update(16), 0.3, b);
  CHECK(first.delta == second.delta);
  std::mt19937_64 c(19);
  CHECK_THROWS_AS(fedfog::inject_noise(unit_update(4), 0.0, c),
                  std::invalid_argument);
  CHECK_THROWS_AS(fedfog::inject_noise(unit_update(4), -1.0, c),
                  std::invalid_argument);
}

TEST_CASE("dropout draws follow the configured rate") {
  std::mt19937_64 rng(23);
  CHECK_FALSE(fedfog::maybe_dropout(0.0, rng));
  CHECK(fedfog::maybe_dropout(1.0, rng));

  int drops = 0;
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    if (fedfog::maybe_dropout(0.3, rng)) ++drops;
  }
  CHECK(double(drops) / trials == doctest::Approx(0.3).epsilon(0.07));
  CHECK_THROWS_AS(fedfog::maybe_dropout(-0.1, rng), std::invalid_argument);
  CHECK_THROWS_AS(fedfog::maybe_dropout(1.1, rng), std::invalid_argument);
}

TEST_CASE("model replacement discards the honest update entirely") {
  std::mt19937_64 a(29), b(29);
  ClientUpdate honest = unit_update(64);
  ClientUpdate other = unit_update(64);
  other.delta *= -42.0;  // very different honest content

  const ClientUpdate ra = fedfog::replace_model(honest, 10.0, a);
  const ClientUpdate rb = fedfog::replace_model(other, 10.0, b);
  CHECK(ra.delta == rb.delta);  // output independent of the input delta
  CHECK(ra.delta.lpNorm<Eigen::Infinity>() <= 10.0);
  CHECK(ra.delta.lpNorm<Eigen::Infinity>() > 1.0);  // actually randomized
  CHECK(ra.dataset_size == 50);

  std::mt19937_64 c(29);
  CHECK_THROWS_AS(fedfog::replace_model(honest, 0.0, c),
                  std::invalid_argument);
}

TEST_CASE("the malicious set is a fixed uniform draw of the right size") {
  std::mt19937_64 a(31), b(31);
  const auto set_a = fedfog::designate_malicious(20, 0.2, a);
  const auto set_b = fedfog::designate_malicious(20, 0.2, b);
  CHECK(set_a == set_b);
  CHECK(set_a.size() == 4);
  CHECK(std::is_sorted(set_a.begin(), set_a.end()));
  CHECK(std::adjacent_find(set_a.begin(), set_a.end()) == set_a.end());
  for (int id : set_a) {
    CHECK(id >= 0);
    CHECK(id < 20);
  }

  std::mt19937_64 c(31);
  CHECK(fedfog::designate_malicious(20, 0.0, c).empty());
  CHECK(fedfog::designate_malicious(20, 1.0, c).size() == 20);
  // round() semantics: 0.24 of 20 clients -> 5 (4.8 rounds up).
  CHECK(fedfog::designate_malicious(20, 0.24, c).size() == 5);
  CHECK(fedfog::designate_malicious(20, 0.22, c).size() == 4);
  CHECK_THROWS_AS(fedfog::designate_malicious(-1, 0.2, c),
                  std::invalid_argument);
  CHECK_THROWS_AS(fedfog::designate_malicious(10, 1.5, c),
                  std::invalid_argument);
}

TEST_CASE("malicious draws cover the fleet roughly uniformly") {
  std::mt19937_64 rng(37);
  std::vector<int> hits(10, 0);
  const int trials = 3000;
  for (int t = 0; t < trials; ++t) {
    for (int id : fedfog::designate_malicious(10, 0.1, rng)) {
      hits[static_cast<std::size_t>(id)]++;
    }
  }
  for (int h : hits) {
    CHECK(double(h) / trials > 0.05);
    CHECK(double(h) / trials < 0.16);
  }
}
