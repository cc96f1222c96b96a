/******************************************************************************
 * Copyright 2026 The Platoon Control Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "platoon/controllers.h"
#include "platoon/model.h"

namespace platoon {
namespace {

bool HasMessage(const std::vector<ParamViolation>& v, const std::string& text) {
  return std::any_of(v.begin(), v.end(), [&](const ParamViolation& p) {
    return p.message.find(text) != std::string::npos;
  });
}

TEST_CASE("defaults carry the nominal parameter set") {
  const auto [c, e] = DefaultParams();
  CHECK(c.time_gap == 1.0);
  CHECK(c.standstill_gap == 5.0);
  CHECK(c.kp == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(c.ki == doctest::Approx(0.04).epsilon(1e-15));
  CHECK(c.kd == 1.0);
  CHECK(c.tau_a == 0.4);
  CHECK(c.t_lead == 1.6);
  CHECK(e.mass == 40000.0);
  CHECK(e.cd0_a == doctest::Approx(5.141));
}

TEST_CASE("stored gains equal the gain map output exactly") {
  const auto [c, e] = DefaultParams();
  const PidGains g = GainsFromSpec({c.zeta, c.omega_n, c.time_gap});
  CHECK(c.kp == g.kp);
  CHECK(c.ki == g.ki);
  CHECK(c.kd == g.kd);
}

TEST_CASE("barrier gains follow from the safety time") {
  const auto [k1, k2] = CbfGainsFromSafetyTime(2.0);
  CHECK(k1 == 1.0);
  CHECK(k2 == 0.25);
  const auto [c, e] = DefaultParams();
  CHECK(c.cbf_k1 == k1);
  CHECK(c.cbf_k2 == k2);
  // Body-text gains are reachable through the same map.
  const auto [b1, b2] = CbfGainsFromSafetyTime(0.5);
  CHECK(b1 == 4.0);
  CHECK(b2 == 4.0);
  CHECK_THROWS(CbfGainsFromSafetyTime(0.0));
}

TEST_CASE("defaults validate cleanly") {
  const auto [c, e] = DefaultParams();
  CHECK(Validate(c).empty());
  CHECK(Validate(e).empty());
  CHECK(Validate(ScenarioSpec{}).empty());
}

TEST_CASE("bandwidth margin violation is reported") {
  auto [c, e] = DefaultParams();
  c.omega_n = 1.0;
  c.tau_a = 0.6;
  CHECK(HasMessage(Validate(c), "omega_n·tau_a=0.6 > 0.35"));
  c.tuning_guard = false;
  CHECK_FALSE(HasMessage(Validate(c), "omega_n·tau_a"));
}

TEST_CASE("minimum headway cannot exceed the time gap") {
  auto [c, e] = DefaultParams();
  c.tau_min = 1.5;
  CHECK(HasMessage(Validate(c), "tau_min > tau"));
}

TEST_CASE("leader filter must stay overdamped when strict") {
  auto [c, e] = DefaultParams();
  c.t_lead = 1.0;
  CHECK_FALSE(Validate(c).empty());
  c.strict_overdamped = false;
  CHECK(Validate(c).empty());
}

TEST_CASE("scenario validation") {
  ScenarioSpec s;
  s.n_vehicles = 1;
  CHECK_FALSE(Validate(s).empty());
  s = ScenarioSpec{};
  s.dt = 0.5;
  CHECK(HasMessage(Validate(s), "dt=0.5"));
  s = ScenarioSpec{};
  s.events = {{10.0, 20.0}, {10.0, 25.0}};
  CHECK_FALSE(Validate(s).empty());
}

TEST_CASE("controller names") {
  CHECK(ParseControllerKind("pid") == ControllerKind::kPid);
  CHECK(ParseControllerKind("baseline-a") == ControllerKind::kBaselineA);
  CHECK(ParseControllerKind("BaselineB") == ControllerKind::kBaselineB);
  CHECK(ToString(ControllerKind::kBaselineA) == "baseline-a");
  CHECK_THROWS(ParseControllerKind("mpc"));
}

}  // namespace
}  // namespace platoon
