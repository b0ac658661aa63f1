#include <doctest.h>

#include <cmath>

#include "gaugeflow/action.hpp"
#include "gaugeflow/gauge.hpp"
#include "gaugeflow/sampling.hpp"
#include "test_helpers.hpp"

using namespace gaugeflow;
using gaugeflow::testing::close;
using gaugeflow::testing::close2;

TEST_SUITE("action") {

TEST_CASE("identity and full-period shifts") {
  const CycleSpec spec = default_spec();
  Sampler rng(21);
  for (int i = 0; i < 100; ++i) {
    const Solution sol = rng.solution(spec);
    const Solution same = act(spec, 0.0, sol);
    CHECK(same.family == sol.family);
    CHECK(same.phase == sol.phase);  // bitwise identity
    CHECK(same_solution(spec, act(spec, spec.tau, {Family::X, sol.phase}),
                        {Family::X, sol.phase}));
  }
  // shifting the b0 crossing by log(7/5) puts it at b1
  const Solution shifted = act(spec, std::log(7.0 / 5.0), {Family::X, 0.0});
  CHECK(close2(eval(spec, shifted, 0.0), Point2(0.5, 0), 1e-12));
}

TEST_CASE("group action laws on random triples") {
  const CycleSpec spec = default_spec();
  Sampler rng(22);
  for (int i = 0; i < 10000; ++i) {
    const Solution sol = rng.solution(spec);
    const double r = rng.uniform(-10.0 * spec.tau, 10.0 * spec.tau);
    const double s = rng.uniform(-10.0 * spec.tau, 10.0 * spec.tau);
    CHECK(same_solution(spec, act(spec, r, act(spec, s, sol)),
                        act(spec, r + s, sol)));
  }
}

TEST_CASE("shift compatibility with evaluation") {
  const CycleSpec spec = default_spec();
  Sampler rng(23);
  for (int i = 0; i < 2000; ++i) {
    const Solution sol = rng.solution(spec);
    const double s = rng.uniform(-5.0 * spec.tau, 5.0 * spec.tau);
    const double u = rng.uniform(-5.0 * spec.tau, 5.0 * spec.tau);
    CHECK(close2(eval(spec, act(spec, s, sol), u), eval(spec, sol, s + u), 1e-12));
  }
}

TEST_CASE("per-element continuity: shifting both arguments shifts the gauge") {
  const CycleSpec spec = default_spec();
  Sampler rng(24);
  for (int i = 0; i < 1000; ++i) {
    const Solution a = rng.solution(spec);
    const Solution b = rng.solution(spec);
    const double g = rng.uniform(-5.0 * spec.tau, 5.0 * spec.tau);
    const double t = rng.uniform(-5.0, 5.0);
    CHECK(close(gauge_dist(spec, t, act(spec, g, a), act(spec, g, b)),
                gauge_dist(spec, t + g, a, b), 1e-12));
  }
}

TEST_CASE("stabilizer generators are the family periods") {
  const CycleSpec spec = default_spec();
  CHECK(stabilizer_generator(spec, {Family::X, 0.123}) == spec.tau);
  CHECK(stabilizer_generator(spec, {Family::X0, 0.5}) == spec.tau0);
  CHECK(close(spec.tau, 2.0 * std::log(7.0 / 3.0), 1e-12));

  // no phase of the outer cycle is fixed by a half-period shift
  for (int i = 0; i < 100; ++i) {
    const Solution sol{Family::X, spec.tau * i / 100.0};
    CHECK_FALSE(same_solution(spec, act(spec, 0.5 * spec.tau, sol), sol));
  }
}

TEST_CASE("sampled periodicity accepts the generator and rejects others") {
  const CycleSpec spec = default_spec();
  Sampler rng(25);
  for (int i = 0; i < 100; ++i) {
    const Solution x = rng.solution(spec, Family::X);
    const Solution x0 = rng.solution(spec, Family::X0);
    CHECK(is_periodic(spec, x, 1e-12, 1000));
    CHECK(is_periodic(spec, x0, 1e-12, 1000));
  }

  const Solution x{Family::X, 0.2};
  const double gen = stabilizer_generator(spec, x);

  // a 1% detuned generator leaves a gap on the scale of the phase error
  CHECK_FALSE(is_periodic_with(spec, x, 1.01 * gen, 1e-12, 1000));
  CHECK(periodicity_gap(spec, x, 1.01 * gen, 1000) >=
        min_speed(spec, Family::X) * 0.01 * gen * 0.9);

  // the half period is not a stabilizer element
  CHECK_FALSE(is_periodic_with(spec, x, 0.5 * gen, 1e-12, 1000));

  // nor is any small divisor of the period
  for (int k = 2; k <= 7; ++k)
    CHECK_FALSE(is_periodic_with(spec, x, gen / k, 1e-12, 1000));
}

TEST_CASE("syndeticity of the stabilizer over a symmetric grid") {
  const CycleSpec spec = default_spec();
  const std::vector<double> grid =
      symmetric_grid(10.0 * spec.tau, spec.tau / 100.0);

  const SyndeticWitness k_tau(spec.tau);
  CHECK(right_syndetic_check(spec.tau, k_tau, grid));
  CHECK(syndetic_check(spec.tau, k_tau, grid));

  // kappa >= p also covers the inner generator
  CHECK(right_syndetic_check(spec.tau0, k_tau, grid));
  CHECK(syndetic_check(spec.tau0, k_tau, grid));

  // kappa = p exactly still reaches every grid point
  const SyndeticWitness k_exact(spec.tau);
  CHECK(right_syndetic_check(spec.tau, k_exact, grid));

  // a window of a third of the period misses t = -tau/2
  const SyndeticWitness k_small(spec.tau / 3.0);
  const std::vector<double> bad = {-0.5 * spec.tau};
  CHECK_FALSE(right_syndetic_check(spec.tau, k_small, bad));
  CHECK_FALSE(syndetic_check(spec.tau, k_small, bad));
  CHECK_FALSE(right_syndetic_check(spec.tau, k_small, grid));

  CHECK_THROWS_AS(SyndeticWitness(0.0), std::invalid_argument);
  CHECK_THROWS_AS(SyndeticWitness(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(right_syndetic_check(0.0, k_tau, grid), std::invalid_argument);
}

}  // TEST_SUITE
