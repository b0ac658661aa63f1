#include <doctest.h>

#include <cmath>

#include "gaugeflow/cycle.hpp"
#include "gaugeflow/sampling.hpp"
#include "test_helpers.hpp"

using namespace gaugeflow;
using gaugeflow::testing::close;
using gaugeflow::testing::close2;

namespace {
// Frozen closed-form anchors for the default configuration.
const double kTau = 2.0 * std::log(7.0 / 3.0);
const double kTau0 = std::log(7.0 / 3.0);
const double kLeg02 = std::log(7.0 / 5.0);
const double kLeg01 = std::log(5.0 / 3.0);
}  // namespace

TEST_SUITE("cycle") {

TEST_CASE("default construction derives the expected legs and periods") {
  const CycleSpec spec = default_spec();
  CHECK(close(spec.tau, kTau, 1e-12));
  CHECK(close(spec.tau0, kTau0, 1e-12));
  CHECK(close(spec.leg_x2, kTau0, 1e-12));
  CHECK(close(spec.leg_x1, kTau0, 1e-12));
  CHECK(close(spec.leg_02, kLeg02, 1e-12));
  CHECK(close(spec.leg_01, kLeg01, 1e-12));
  // the inner period is half the outer one
  CHECK(std::abs(spec.tau0 - 0.5 * spec.tau) < 1e-12);
  CHECK_FALSE(spec.period_mismatch);
  CHECK(period(spec, Family::X) == spec.tau);
  CHECK(period(spec, Family::X0) == spec.tau0);
}

TEST_CASE("geometry validation") {
  const StableNodeField f1(Point2(0, 0), 1.0);
  const StableNodeField f2(Point2(1, 0), 1.0);

  // b1 off the midpoint
  CHECK_THROWS_AS(make_spec(f1, f2, Point2(0.3, 0), Point2(0.45, 0), Point2(0.7, 0)),
                  GeometryInvalid);
  // off the node segment
  CHECK_THROWS_AS(make_spec(f1, f2, Point2(0.3, 0), Point2(0.5, 0.1), Point2(0.7, 0)),
                  GeometryInvalid);
  // out of order
  CHECK_THROWS_AS(make_spec(f1, f2, Point2(0.7, 0), Point2(0.5, 0), Point2(0.3, 0)),
                  GeometryInvalid);
  // anchor on a node
  CHECK_THROWS_AS(make_spec(f1, f2, Point2(0.0, 0), Point2(0.35, 0), Point2(0.7, 0)),
                  GeometryInvalid);
  // coincident nodes
  CHECK_THROWS_AS(make_spec(f1, f1, Point2(0.3, 0), Point2(0.5, 0), Point2(0.7, 0)),
                  GeometryInvalid);
}

TEST_CASE("asymmetric configurations need the explicit flag") {
  const StableNodeField f1(Point2(0, 0), 1.0);
  const StableNodeField fast2(Point2(1, 0), 2.0);
  CHECK_THROWS_AS(
      make_spec(f1, fast2, Point2(0.3, 0), Point2(0.5, 0), Point2(0.7, 0)),
      PeriodMismatch);
  const CycleSpec spec =
      make_spec(f1, fast2, Point2(0.3, 0), Point2(0.5, 0), Point2(0.7, 0), true);
  CHECK(spec.period_mismatch);
  CHECK(std::abs(spec.tau0 - 0.5 * spec.tau) > 1e-12);
}

TEST_CASE("positions along both cycles") {
  const CycleSpec spec = default_spec();

  // phase origin: both families start at b0 (bitwise, time-zero identity)
  CHECK(pos(spec, Family::X, 0.0) == spec.b0);
  CHECK(pos(spec, Family::X0, 0.0) == spec.b0);

  // the b1 crossing on the outward leg
  CHECK(close2(pos(spec, Family::X, std::log(7.0 / 5.0)), Point2(0.5, 0), 1e-12));
  // end of the outward leg: the switching phase belongs to the return leg
  CHECK(pos(spec, Family::X, spec.leg_x2) == spec.b2);
  CHECK(close2(pos(spec, Family::X, 0.5 * spec.tau), spec.b2, 1e-12));
  // inner cycle, return leg: 0.5 * exp(-log(5/4)) = 0.4
  CHECK(close2(pos(spec, Family::X0, spec.tau0 - kLeg01 + std::log(5.0 / 4.0)),
               Point2(0.4, 0), 1e-12));
}

TEST_CASE("eval shifts the phase and wraps periodically") {
  const CycleSpec spec = default_spec();
  const Solution x{Family::X, 0.0};
  CHECK(close2(eval(spec, x, std::log(7.0 / 6.0)), Point2(0.4, 0), 1e-12));

  const Solution x0{Family::X0, 0.0};
  for (const int k : {-3, 1, 2, 5})
    CHECK(close2(eval(spec, x0, k * spec.tau0), spec.b0, 1e-12));

  Sampler rng(3);
  for (int i = 0; i < 100; ++i) {
    const Solution sol = rng.solution(spec);
    const double p = period(spec, sol.family);
    for (int j = 0; j < 20; ++j) {
      const double t = rng.uniform(-3.0 * spec.tau, 3.0 * spec.tau);
      CHECK(close2(eval(spec, sol, t + p), eval(spec, sol, t), 1e-12));
    }
  }
}

TEST_CASE("image containment and speed bounds") {
  const CycleSpec spec = default_spec();
  Sampler rng(5);
  const double vmax = max_speed(spec);
  CHECK(close(vmax, 0.7, 1e-15));
  CHECK(close(min_speed(spec, Family::X), 0.3, 1e-15));

  for (int i = 0; i < 50; ++i) {
    const Solution sol = rng.solution(spec);
    const double hi = sol.family == Family::X ? 0.7 : 0.5;
    for (int j = 0; j < 40; ++j) {
      const double t = rng.uniform(-10.0, 10.0);
      const Point2 p = eval(spec, sol, t);
      CHECK(p.y() == 0.0);
      CHECK(p.x() >= 0.3 - 1e-12);
      CHECK(p.x() <= hi + 1e-12);

      const double h = rng.uniform(1e-6, 0.2);
      const double step = (eval(spec, sol, t + h) - p).norm();
      CHECK(step <= vmax * h * (1.0 + 1e-9) + 1e-15);
    }
  }
}

TEST_CASE("speed follows the active leg and switches with it") {
  const CycleSpec spec = default_spec();
  CHECK(close(speed(spec, Family::X, 0.0), 0.7, 1e-15));
  // just after the switch at b2 the return field drives at distance 0.7
  CHECK(close(speed(spec, Family::X, spec.leg_x2), 0.7, 1e-15));
  CHECK(close(speed(spec, Family::X0, spec.leg_02), 0.5, 1e-15));

  double grid_min = 1e300;
  for (int i = 0; i < 10000; ++i)
    grid_min = std::min(grid_min, speed(spec, Family::X, spec.tau * i / 10000));
  CHECK(grid_min >= 0.3 - 1e-12);
  CHECK(grid_min <= 0.3 + 1e-3);
}

TEST_CASE("both families run the same outward prefix from b0") {
  const CycleSpec spec = default_spec();
  const Solution x{Family::X, 0.0};
  const Solution x0{Family::X0, 0.0};
  for (int i = 0; i < 200; ++i) {
    const double t = spec.leg_02 * i / 200;
    const Point2 a = eval(spec, x, t);
    const Point2 b = eval(spec, x0, t);
    CHECK(a.x() == b.x());  // identical switching history, bitwise
    CHECK(a.y() == b.y());
  }
  CHECK(close2(eval(spec, x, spec.leg_02), eval(spec, x0, spec.leg_02), 1e-15));
}

TEST_CASE("phases_through inverts both legs") {
  const CycleSpec spec = default_spec();

  const std::vector<double> two = phases_through(spec, Family::X, Point2(0.4, 0));
  REQUIRE(two.size() == 2);
  CHECK(close(two[0], std::log(7.0 / 6.0), 1e-12));
  CHECK(close(two[1], kTau0 + std::log(7.0 / 4.0), 1e-12));

  const std::vector<double> corner = phases_through(spec, Family::X, spec.b2);
  REQUIRE(corner.size() == 1);
  CHECK(corner[0] == spec.leg_x2);

  const std::vector<double> origin = phases_through(spec, Family::X0, spec.b0);
  REQUIRE(origin.size() == 1);
  CHECK(origin[0] == 0.0);

  CHECK(phases_through(spec, Family::X0, Point2(0.6, 0)).empty());
  CHECK(phases_through(spec, Family::X, Point2(0.4, 0.5)).empty());
  CHECK(phases_through(spec, Family::X, Point2(0.1, 0)).empty());
}

TEST_CASE("phases_through round trip on an image grid") {
  const CycleSpec spec = default_spec();
  for (int i = 1; i < 100; ++i) {
    const Point2 p(0.3 + 0.4 * i / 100.0, 0.0);
    const std::vector<double> us = phases_through(spec, Family::X, p);
    CHECK(us.size() == 2);
    for (const double u : us) CHECK(close2(pos(spec, Family::X, u), p, 1e-12));
  }
}

TEST_CASE("solution phases normalize into the canonical range") {
  const CycleSpec spec = default_spec();
  const Solution a = make_solution(spec, Family::X, 2.0 * spec.tau + 0.1);
  CHECK(a.phase >= 0.0);
  CHECK(a.phase < spec.tau);
  CHECK(close(a.phase, 0.1, 1e-12));

  const Solution b = make_solution(spec, Family::X, -0.3);
  CHECK(close(b.phase, spec.tau - 0.3, 1e-12));

  CHECK(same_solution(spec, a, make_solution(spec, Family::X, 0.1 - spec.tau)));
  CHECK(same_solution(spec, {Family::X, 0.0}, {Family::X, spec.tau - 1e-15}));
  CHECK_FALSE(same_solution(spec, {Family::X, 0.0}, {Family::X, 1e-3}));
  CHECK_FALSE(same_solution(spec, {Family::X, 0.0}, {Family::X0, 0.0}));
  CHECK_THROWS_AS(make_solution(spec, Family::X, std::nan("")), std::invalid_argument);
}

TEST_CASE("segment distance helper") {
  CHECK(close(segment_distance(Point2(0.6, 0), Point2(0.3, 0), Point2(0.5, 0)), 0.1,
              1e-15));
  CHECK(segment_distance(Point2(0.4, 0), Point2(0.3, 0), Point2(0.5, 0)) == 0.0);
  CHECK(close(segment_distance(Point2(0.4, 0.2), Point2(0.3, 0), Point2(0.5, 0)), 0.2,
              1e-15));
  CHECK(close(segment_distance(Point2(0.0, 0.0), Point2(0.3, 0), Point2(0.5, 0)), 0.3,
              1e-15));
}

}  // TEST_SUITE
