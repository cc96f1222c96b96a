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
#include <random>

#include "platoon/safety_filter.h"

namespace platoon {
namespace {

PairState Pair(double s, double v, double a, double vp, double ap, double up) {
  PairState x;
  x.spacing = s;
  x.speed = v;
  x.accel = a;
  x.pred_speed = vp;
  x.pred_accel = ap;
  x.pred_command = up;
  return x;
}

TEST_CASE("barrier values") {
  ControlParams p;
  CHECK(Barrier(23.0, 18.0, 18.0, p).h == doctest::Approx(7.2));
  CHECK(Barrier(5.0, 0.0, 0.0, p).h == doctest::Approx(0.0));
  const BarrierEval closing = Barrier(30.0, 20.0, 15.0, p);
  CHECK(closing.h == doctest::Approx(10.5));
  CHECK(closing.closing);
  CHECK_FALSE(Barrier(30.0, 15.0, 20.0, p).closing);
}

TEST_CASE("barrier rate") {
  ControlParams p;
  const BarrierEval b = Barrier(Pair(30.0, 20.0, 0.5, 15.0, -1.0, -2.0), p);
  CHECK(b.h_dot == doctest::Approx(-6.8));
}

// Coefficients below come from symbolic differentiation of the barrier along
// the lagged double-integrator dynamics.
TEST_CASE("constraint at equilibrium") {
  ControlParams p;
  p.cbf_k1 = 4.0;
  p.cbf_k2 = 4.0;
  const AffineConstraint c = CbfConstraint(Pair(23.0, 18.0, 0.0, 18.0, 0.0, 0.0), p);
  CHECK(c.a == doctest::Approx(-1.5));
  CHECK(c.b == doctest::Approx(-28.8));
  const FeasibleInterval f = FeasibleRange(c, p);
  CHECK(f.feasible);
  CHECK(f.lower == -5.0);
  CHECK(f.upper == 1.5);

  ControlParams d;
  CHECK(CbfConstraint(Pair(23.0, 18.0, 0.0, 18.0, 0.0, 0.0), d).b == doctest::Approx(-1.8));
}

TEST_CASE("constraint while closing in") {
  ControlParams p;
  const AffineConstraint c = CbfConstraint(Pair(30.0, 20.0, 0.5, 15.0, -1.0, -2.0), p);
  CHECK(c.a == doctest::Approx(-4.0));
  CHECK(c.b == doctest::Approx(6.625));
  const FeasibleInterval f = FeasibleRange(c, p);
  CHECK(f.feasible);
  CHECK(f.upper == doctest::Approx(-1.65625));
  CHECK(f.lower == -5.0);
}

TEST_CASE("constraint while opening") {
  ControlParams p;
  const AffineConstraint c = CbfConstraint(Pair(40.0, 15.0, -0.3, 20.0, 0.2, 1.0), p);
  CHECK(c.a == doctest::Approx(-1.5));
  CHECK(c.b == doctest::Approx(-11.73));
}

TEST_CASE("closing surface") {
  ControlParams p;
  const double eps = 1e-9;
  // Matched accelerations: both branches agree on the surface.
  auto lo = CbfConstraint(Pair(25.0, 18.0 - eps, 0.3, 18.0, 0.3, -1.0), p);
  auto hi = CbfConstraint(Pair(25.0, 18.0 + eps, 0.3, 18.0, 0.3, -1.0), p);
  CHECK(lo.a == doctest::Approx(hi.a).epsilon(1e-6));
  CHECK(lo.b == doctest::Approx(hi.b).epsilon(1e-6));
  // Otherwise the curvature of the quadratic term shows up as a jump of
  // (a_prev - a_i)^2 / b_max in b.
  lo = CbfConstraint(Pair(25.0, 18.0 - eps, 0.3, 18.0, -0.4, -1.0), p);
  hi = CbfConstraint(Pair(25.0, 18.0 + eps, 0.3, 18.0, -0.4, -1.0), p);
  CHECK(lo.a == doctest::Approx(hi.a).epsilon(1e-6));
  CHECK(hi.b - lo.b == doctest::Approx(0.49 / 5.0).epsilon(1e-6));
}

TEST_CASE("feasible interval cases") {
  ControlParams p;
  FeasibleInterval f = FeasibleRange({1.5, -28.8}, p);
  CHECK(f.feasible);
  CHECK(f.lower == -5.0);
  CHECK(f.upper == 1.5);

  f = FeasibleRange({2.0, 4.0}, p);
  CHECK_FALSE(f.feasible);
  CHECK(f.lower == 2.0);
  CHECK(f.upper == 1.5);

  f = FeasibleRange({-1.0, 5.0}, p);
  CHECK(f.feasible);
  CHECK(f.lower == -5.0);
  CHECK(f.upper == -5.0);

  CHECK(FeasibleRange({0.0, -1.0}, p).feasible);
  CHECK_FALSE(FeasibleRange({0.0, 1.0}, p).feasible);
}

TEST_CASE("projection") {
  Projection r = Project(2.0, {-1.0, 1.5, true}, -5.0);
  CHECK(r.applied == 1.5);
  CHECK(r.clipped);
  r = Project(0.3, {-5.0, 1.5, true}, -5.0);
  CHECK(r.applied == 0.3);
  CHECK_FALSE(r.clipped);
  r = Project(0.3, {2.0, 1.5, false}, -5.0);
  CHECK(r.applied == -5.0);
  CHECK(r.infeasible);
}

TEST_CASE("projection stays in the actuator box") {
  ControlParams p;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int k = 0; k < 2000; ++k) {
    const FeasibleInterval f = FeasibleRange({u(rng), u(rng)}, p);
    const double nominal = u(rng);
    const Projection r = Project(nominal, f, p.u_min);
    CHECK(r.applied >= p.u_min);
    CHECK(r.applied <= p.u_max);
    if (f.feasible && nominal > f.upper) CHECK(r.applied == f.upper);
  }
}

TEST_CASE("discrete one-step check") {
  CHECK(DiscreteOneStepCheck(7.2, 7.2, 2.0, 0.01));
  CHECK_FALSE(DiscreteOneStepCheck(1.0, 0.97, 2.0, 0.01));
  CHECK(DiscreteOneStepCheck(0.0, 0.0, 2.0, 0.01));
  CHECK(DiscreteOneStepCheck(0.0, 3.0, 2.0, 0.01));
}

}  // namespace
}  // namespace platoon
