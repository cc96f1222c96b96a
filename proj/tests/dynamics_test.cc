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

#include <cmath>
#include <limits>
#include <vector>

#include "platoon/dynamics.h"

namespace platoon {
namespace {

PlatoonState TwoTrucks(double p0, double p1) {
  PlatoonState s;
  s.vehicles.resize(2);
  s.vehicles[0].position = p0;
  s.vehicles[1].position = p1;
  return s;
}

TEST_CASE("spacing") {
  CHECK(Spacing(TwoTrucks(100.0, 60.0), 1, 16.5) == doctest::Approx(23.5));
  CHECK(Spacing(TwoTrucks(76.5, 60.0), 1, 16.5) == doctest::Approx(0.0));
  CHECK_THROWS_AS(Spacing(TwoTrucks(0, 0), 0, 16.5), std::out_of_range);
  CHECK_THROWS_AS(Spacing(TwoTrucks(0, 0), 2, 16.5), std::out_of_range);
}

TEST_CASE("equilibrium initialisation") {
  ControlParams p;
  const PlatoonState s = EquilibriumState(8, 18.0, p);
  for (int i = 1; i < 8; ++i) {
    CHECK(Spacing(s, i, p.vehicle_length) == doctest::Approx(23.0));
    CHECK(s.vehicles[i].speed == 18.0);
    CHECK(s.vehicles[i].accel == 0.0);
  }
  CHECK(s.vehicles[0].position == 0.0);
  CHECK(Spacing(EquilibriumState(4, 25.0, p), 3, p.vehicle_length) == doctest::Approx(30.0));
}

TEST_CASE("euler actuator update") {
  ControlParams p;
  PlatoonState s = EquilibriumState(2, 10.0, p);
  const std::vector<double> u{1.0, 0.0};
  const PlatoonState n = Step(s, u, 0.01, p);
  CHECK(n.vehicles[0].accel == doctest::Approx(0.025));
  // Speed uses the new accel, position the new speed.
  CHECK(n.vehicles[0].speed == doctest::Approx(10.00025));
  CHECK(n.vehicles[0].position == doctest::Approx(0.1000025));
  CHECK(n.time == doctest::Approx(0.01));
}

TEST_CASE("lag fixed point") {
  ControlParams p;
  PlatoonState s = EquilibriumState(2, 10.0, p);
  s.vehicles[1].accel = 0.7;
  const std::vector<double> u{0.0, 0.7};
  CHECK(Step(s, u, 0.01, p).vehicles[1].accel == doctest::Approx(0.7));
}

TEST_CASE("speed clamps at the limits without back-correcting accel") {
  ControlParams p;
  PlatoonState s = EquilibriumState(2, 30.0, p);
  s.vehicles[0].accel = 1.0;
  const std::vector<double> u{1.0, 0.0};
  const PlatoonState n = Step(s, u, 0.01, p);
  CHECK(n.vehicles[0].speed == 30.0);
  CHECK(n.vehicles[0].accel == doctest::Approx(1.0));

  PlatoonState z = EquilibriumState(2, 0.0, p);
  z.vehicles[1].accel = -5.0;
  const std::vector<double> brake{0.0, -5.0};
  const PlatoonState m = Step(z, brake, 0.01, p);
  CHECK(m.vehicles[1].speed == 0.0);
  CHECK(m.vehicles[1].position == z.vehicles[1].position);
}

TEST_CASE("non-finite command is rejected with the vehicle index") {
  ControlParams p;
  const PlatoonState s = EquilibriumState(3, 10.0, p);
  const std::vector<double> u{0.0, 0.0, std::numeric_limits<double>::quiet_NaN()};
  try {
    Step(s, u, 0.01, p);
    FAIL("expected a DynamicsError");
  } catch (const DynamicsError& err) {
    CHECK(err.vehicle() == 2);
  }
}

TEST_CASE("actuator tracking error") {
  ControlParams p;
  PlatoonState s = EquilibriumState(2, 10.0, p);
  s.vehicles[0].accel = 0.5;
  s.vehicles[1].accel = 0.2;
  const std::vector<double> u{0.5, 1.0};
  const auto r = ActuatorTrackingError(s, u);
  CHECK(r[0] == doctest::Approx(0.0));
  CHECK(r[1] == doctest::Approx(-0.8));
}

TEST_CASE("held command decays the tracking error exponentially") {
  ControlParams p;
  PlatoonState s = EquilibriumState(2, 10.0, p);
  const std::vector<double> u{1.0, 1.0};
  const double dt = 0.001;
  const int steps = static_cast<int>(5.0 * p.tau_a / dt);
  for (int k = 0; k < steps; ++k) s = Step(s, u, dt, p);
  const double r = std::abs(ActuatorTrackingError(s, u)[0]);
  CHECK(r < 0.01);
  CHECK(r == doctest::Approx(std::exp(-5.0)).epsilon(0.01));
}

TEST_CASE("first-order convergence in dt") {
  ControlParams p;
  auto final_pos = [&](double dt) {
    PlatoonState s = EquilibriumState(2, 10.0, p);
    const std::vector<double> u{1.0, -1.0};
    const int steps = static_cast<int>(std::lround(4.0 / dt));
    for (int k = 0; k < steps; ++k) s = Step(s, u, dt, p);
    return s.vehicles[0].position;
  };
  const double ref = final_pos(1e-5);
  const double e1 = std::abs(final_pos(0.02) - ref);
  const double e2 = std::abs(final_pos(0.01) - ref);
  CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.05));
}

}  // namespace
}  // namespace platoon
