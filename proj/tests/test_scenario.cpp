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

#include <string>

#include <doctest.h>

#include "fedfog/scenario.hpp"

namespace {

using fedfog::parse_scenario;
using fedfog::ScenarioConfig;
using fedfog::ScenarioError;

bool mentions(const std::exception& e, const std::string& needle) {
  return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("an empty scenario file yields the default configuration") {
  const ScenarioConfig c = parse_scenario("");
  CHECK(c.rounds == 30);
  CHECK(c.seed == 1);
  CHECK(c.policy.kind == fedfog::PolicyKind::fedfog);
  CHECK(c.attack.role == fedfog::AttackRole::honest);
  CHECK(c.partition.n_clients == 20);
  CHECK(c.partition.n_classes == 10);
  CHECK(c.policy.thresholds.theta_h == 0.6);
  CHECK(c.policy.thresholds.theta_e == 0.5);
  CHECK(c.policy.thresholds.theta_d == 0.1);
  CHECK_FALSE(c.policy.top_k.has_value());
  CHECK_FALSE(c.dp.enabled);
  CHECK(fedfog::validate_scenario(c).empty());
}

TEST_CASE("the parser reads sections, comments and whitespace") {
  const char* text = R"(# a comment
; another comment style
rounds = 12
seed = 99
scheduler = random
attack = noise

[partition]
  n_clients =  7
n_classes = 4

[policy]
theta_h = 0.25
top_k = 3

[drift]
mode = class_shift
targets = 1, 3 ,5

[dp]
enabled = true
point = client
delta = 0.001
)";
  const ScenarioConfig c = parse_scenario(text);
  CHECK(c.rounds == 12);
  CHECK(c.seed == 99);
  CHECK(c.policy.kind == fedfog::PolicyKind::random);
  CHECK(c.attack.role == fedfog::AttackRole::noise);
  CHECK(c.partition.n_clients == 7);
  CHECK(c.partition.n_classes == 4);
  CHECK(c.policy.thresholds.theta_h == 0.25);
  REQUIRE(c.policy.top_k.has_value());
  CHECK(*c.policy.top_k == 3);
  CHECK(c.drift.mode == fedfog::DriftSchedule::Mode::class_shift);
  CHECK(c.drift.targets == std::vector<int>{1, 3, 5});
  CHECK(c.dp.enabled);
  CHECK(c.dp.point == fedfog::DpConfig::Point::client);
  CHECK(c.dp.dp_delta == 0.001);
}

TEST_CASE("unknown keys and sections are hard errors naming the line") {
  CHECK_THROWS_AS(parse_scenario("bogus = 1\n"), ScenarioError);
  try {
    parse_scenario("rounds = 5\nbogus = 1\n");
    FAIL("expected a parse error");
  } catch (const ScenarioError& e) {
    CHECK(mentions(e, "line 2"));
    CHECK(mentions(e, "bogus"));
  }
  try {
    parse_scenario("[nosuch]\nx = 1\n");
    FAIL("expected a parse error");
  } catch (const ScenarioError& e) {
    CHECK(mentions(e, "nosuch"));
  }
  try {
    parse_scenario("[partition]\nn_cleints = 5\n");
    FAIL("expected a parse error");
  } catch (const ScenarioError& e) {
    CHECK(mentions(e, "n_cleints"));
  }
}

TEST_CASE("malformed values are rejected with context") {
  CHECK_THROWS_AS(parse_scenario("rounds = soon\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("rounds = 5x\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("[policy]\ntheta_h = big\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("[dp]\nenabled = maybe\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("scheduler = greedy\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("attack = ddos\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("rounds\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("rounds =\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("= 4\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("[policy\ntheta_h = 1\n"), ScenarioError);
}

TEST_CASE("top_k can be reset to unlimited with 'none'") {
  const ScenarioConfig c =
      parse_scenario("[policy]\ntop_k = 4\ntop_k = none\n");
  CHECK_FALSE(c.policy.top_k.has_value());
}

TEST_CASE("formatting and reparsing is the identity on the config") {
  ScenarioConfig original;
  original.rounds = 17;
  original.seed = 424242;
  original.policy.kind = fedfog::PolicyKind::random;
  original.policy.top_k = 6;
  original.policy.thresholds = {0.61, 0.47, 0.093};
  original.partition.concentration = 0.37;
  original.partition.seed = 777;
  original.drift.mode = fedfog::DriftSchedule::Mode::class_shift;
  original.drift.magnitude = 0.625;
  original.drift.targets = {0, 2, 4};
  original.training.learner = fedfog::LearnerKind::linear_probe;
  original.training.learning_rate = 0.0125;
  original.attack.role = fedfog::AttackRole::replace;
  original.attack.seed = 31337;
  original.attack.drop_after_invoke = false;
  original.dp.enabled = true;
  original.dp.point = fedfog::DpConfig::Point::client;
  original.energy_model.c_tx = 2.5e-7;
  original.cold_start.jitter = true;
  original.ablation.disable_energy_model = true;
  original.energy_budget.lambda = 0.55;
  original.energy_budget.budget_avg =
      fedfog::EnergyBudgetConfig::Average::selected;

  const std::string text = fedfog::format_scenario(original);
  const ScenarioConfig reparsed = parse_scenario(text);
  // A second render must be byte-identical; that implies field equality for
  // everything the format covers.
  CHECK(fedfog::format_scenario(reparsed) == text);

  CHECK(reparsed.rounds == original.rounds);
  CHECK(reparsed.seed == original.seed);
  CHECK(reparsed.policy.kind == original.policy.kind);
  CHECK(reparsed.policy.top_k == original.policy.top_k);
  CHECK(reparsed.policy.thresholds.theta_h == 0.61);
  CHECK(reparsed.policy.thresholds.theta_e == 0.47);
  CHECK(reparsed.policy.thresholds.theta_d == 0.093);
  CHECK(reparsed.partition.concentration == 0.37);
  CHECK(reparsed.partition.seed == original.partition.seed);
  CHECK(reparsed.drift.mode == original.drift.mode);
  CHECK(reparsed.drift.magnitude == 0.625);
  CHECK(reparsed.drift.targets == original.drift.targets);
  CHECK(reparsed.training.learner == original.training.learner);
  CHECK(reparsed.training.learning_rate == 0.0125);
  CHECK(reparsed.attack.role == original.attack.role);
  CHECK(reparsed.attack.seed == original.attack.seed);
  CHECK(reparsed.attack.drop_after_invoke == false);
  CHECK(reparsed.dp.enabled);
  CHECK(reparsed.dp.point == original.dp.point);
  CHECK(reparsed.energy_model.c_tx == 2.5e-7);
  CHECK(reparsed.cold_start.jitter);
  CHECK(reparsed.ablation.disable_energy_model);
  CHECK_FALSE(reparsed.ablation.disable_scheduler);
  CHECK(reparsed.energy_budget.lambda == 0.55);
  CHECK(reparsed.energy_budget.budget_avg == original.energy_budget.budget_avg);
}

TEST_CASE("the default configuration formats to a stable fixed point") {
  const ScenarioConfig defaults;
  const std::string once = fedfog::format_scenario(defaults);
  CHECK(fedfog::format_scenario(parse_scenario(once)) == once);
}

TEST_CASE("loading a missing scenario file fails loudly") {
  CHECK_THROWS_AS(fedfog::load_scenario("/nonexistent/path/scenario.ini"),
                  ScenarioError);
}

TEST_CASE("validation accepts the defaults and flags single violations") {
  ScenarioConfig c;
  CHECK(fedfog::validate_scenario(c).empty());

  SUBCASE("an empty fleet is exactly one violation") {
    c.partition.n_clients = 0;
    const auto v = fedfog::validate_scenario(c);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("clients") != std::string::npos);
  }
  SUBCASE("health weights must sum to one") {
    c.health = {0.5, 0.5, 0.5};
    const auto v = fedfog::validate_scenario(c);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("health") != std::string::npos);
  }
  SUBCASE("negative weight components are their own violation") {
    c.health = {-0.1, 0.55, 0.55};
    const auto v = fedfog::validate_scenario(c);
    REQUIRE(v.size() == 1);  // sums to 1, but a1 < 0
    CHECK(v[0].find("a1") != std::string::npos);
  }
  SUBCASE("thresholds outside the unit interval are rejected") {
    c.policy.thresholds.theta_h = 1.2;
    CHECK(fedfog::validate_scenario(c).size() == 1);
    c.policy.thresholds.theta_h = -0.2;
    CHECK(fedfog::validate_scenario(c).size() == 1);
  }
  SUBCASE("drift targets must be valid client ids") {
    c.drift.targets = {0, 19};
    CHECK(fedfog::validate_scenario(c).empty());
    c.drift.targets = {20};
    CHECK(fedfog::validate_scenario(c).size() == 1);
    c.drift.targets = {-1};
    CHECK(fedfog::validate_scenario(c).size() == 1);
  }
  SUBCASE("privacy settings only matter when enabled") {
    c.dp.sigma = -1.0;
    CHECK(fedfog::validate_scenario(c).empty());
    c.dp.enabled = true;
    const auto v = fedfog::validate_scenario(c);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("dp.sigma") != std::string::npos);
  }
  SUBCASE("cold delays must dominate warm delays") {
    c.cold_start.delta_cold_ms = 100.0;  // below the 200 ms warm delay
    CHECK(fedfog::validate_scenario(c).size() == 1);
  }
  SUBCASE("fleet ranges must be ordered and inside the unit interval") {
    c.fleet.cpu_min = 0.9;
    c.fleet.cpu_max = 0.5;
    CHECK(fedfog::validate_scenario(c).size() == 1);
    c.fleet.cpu_min = 0.0;  // health denominators need cpu > 0
    c.fleet.cpu_max = 1.0;
    CHECK(fedfog::validate_scenario(c).size() == 1);
  }
  SUBCASE("several problems are all reported") {
    c.rounds = 0;
    c.training.epochs = 0;
    c.constraints.tau_max_ms = 0.0;
    CHECK(fedfog::validate_scenario(c).size() == 3);
  }
}
