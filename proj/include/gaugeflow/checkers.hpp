#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gaugeflow/action.hpp"
#include "gaugeflow/gauge.hpp"
#include "gaugeflow/report.hpp"

namespace gaugeflow {

struct BadWitnessPoint : std::runtime_error {
  explicit BadWitnessPoint(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotApplicable : std::runtime_error {
  explicit NotApplicable(const std::string& msg) : std::runtime_error(msg) {}
};

// Sampling knobs shared by the checkers.  Defaults reproduce the standard
// desk-scale verification run.
struct CheckConfig {
  double eq_tol = 1e-12;      // exactness tolerance (periodicity, residuals)
  double witness_tol = 1e-9;  // replay tolerance for witnesses
  double t_step = 1e-3;       // group-element grids
  int horizon_periods = 10;   // grid horizon in units of tau
  int phase_grid = 10000;     // phase-scan resolution
  int s_grid = 100;           // neighbourhood gauge-time sweep resolution
  int n_neighbors = 50;       // ball members sampled by the sensitivity check
  int n_ball_pairs = 200;     // ball pairs exercised by the transitivity check
  int n_solutions = 100;      // random solutions per family
  int periodicity_samples = 1000;
  std::uint64_t seed = 0;
  bool single_cycle = false;  // contrast fixture: restrict the space to X

  // Expansion-constant probe used by the sensitivity falsifier.
  double expansion_delta = 1e-3;
  double expansion_t_step = 1e-4;
};

// A constructive answer to "does some shift move ball Y1 into ball Y2":
// act(s, mover) lands in Y2 while mover lies in Y1.
struct TransitivityWitness {
  double s;
  Solution mover;
  char case_tag;  // construction route: a same family, b X -> X0, c X0 -> X
  double residual;  // distance to the target center at the target gauge
};

// Builds the witness for a pair of subbasic balls.  Same-family pairs align
// the centers; cross-family pairs invert the target position on the X cycle
// (the shared image makes the match exact).
TransitivityWitness transitivity_witness(const CycleSpec& spec,
                                         const GaugeBall& y1,
                                         const GaugeBall& y2);

// Exercises transitivity on cfg.n_ball_pairs random ball pairs spanning the
// same-family, X->X0, X0->X and mixed-ball situations; every witness is
// replayed through in_ball before it counts.
WitnessReport transitivity_check(const CycleSpec& spec, const CheckConfig& cfg = {});

// Certifies that the orbit closure of the inner family misses the solution
// of X through b: reports the separation m = d_0((X through b), X0) both
// analytically and by a refined phase-grid scan, plus the certified radius
// m/2.  b must lie strictly between b1 and b2.
WitnessReport minimality_falsifier(const CycleSpec& spec, const Point2& b,
                                   const CheckConfig& cfg = {});

// Periodicity of random solutions (sampled gap under the stabilizer
// generator), both syndeticity checks with K = [0, tau], and exact
// single-gauge density matches of X at random inner-family targets.
WitnessReport dense_periodicity_check(const CycleSpec& spec, int n_solutions,
                                      double tol, const CheckConfig& cfg = {});

// Exploratory probe: how closely can one X solution match x0 in several
// gauges at once?  Minimizes the max gauge gap over a phase grid with local
// refinement and reports the residual.  No claim is asserted either way; the
// status is always inconclusive.
WitnessReport density_probe_multi(const CycleSpec& spec, const Solution& x0,
                                  const std::vector<GaugeConstraint>& gauges,
                                  int resolution);

// Orbit-distance expansion factor: max over anchored X pairs with the given
// phase gaps and over a time grid of d_t / d_0.  For small gaps this
// approaches max_speed / min_speed.
double expansion_constant(const CycleSpec& spec, std::span<const double> deltas,
                          double t_step, double horizon);

// Checks that no sampled member of a small d_0-ball around the b2-crossing
// solution ever escapes the entourage u under the sampled shifts: with
// eps0 = 0.9 * min_radius(u) / C_est the expansion bound keeps every gap
// below min_radius(u).  Also verifies the ball contains no inner-family
// point.
WitnessReport sensitivity_falsifier(const CycleSpec& spec, const GaugeEntourage& u,
                                    int n_neighbors, std::span<const double> g_grid,
                                    const CheckConfig& cfg = {});

// Searches the given neighbourhood of x for a companion thrown out of the
// single-gauge entourage u (at time 0) by some shift.  Candidates are X
// solutions through positions near eval(x, nbhd.t) on both legs plus small
// phase perturbations; shifts include tau/2, multiples of tau0 and g_grid.
// In the standard space x must come from the inner family.
WitnessReport equicontinuity_falsifier(const CycleSpec& spec, const Solution& x,
                                       const GaugeEntourage& u, const GaugeBall& nbhd,
                                       std::span<const double> g_grid,
                                       std::span<const double> perturbations,
                                       const CheckConfig& cfg = {});

// Runs every property checker with the configured sampling, in a fixed
// order: transitivity, non-minimality, dense periodicity, non-sensitivity,
// non-equicontinuity, uniformity axioms.
std::vector<WitnessReport> verify_all(const CycleSpec& spec, const CheckConfig& cfg = {});

}  // namespace gaugeflow
