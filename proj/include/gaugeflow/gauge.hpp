#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gaugeflow/cycle.hpp"
#include "gaugeflow/report.hpp"

namespace gaugeflow {

// The gauge family: one pseudometric per time index,
//   d_t(x1, x2) = |x1(t) - x2(t)|  (Euclidean).
double gauge_dist(const CycleSpec& spec, double t, const Solution& s1,
                  const Solution& s2);

// Subbasic open ball B(center, d_t, radius) of the gauge topology.
struct GaugeBall {
  Solution center;
  double t;
  double radius;

  GaugeBall(const Solution& center_, double t_, double radius_);
};

struct GaugeConstraint {
  double t;
  double eps;
};

// Finite-intersection basis entourage of the uniformity: the pair set
// { (x1, x2) : d_{t_i}(x1, x2) < eps_i for every constraint i }.
// Only basis entourages are represented; supersets are not.
struct GaugeEntourage {
  std::vector<GaugeConstraint> constraints;

  explicit GaugeEntourage(std::vector<GaugeConstraint> cs);
  double min_radius() const;
};

// Membership is strict (< radius / < eps).
bool in_ball(const CycleSpec& spec, const GaugeBall& ball, const Solution& s);
bool in_entourage(const CycleSpec& spec, const GaugeEntourage& u,
                  const Solution& s1, const Solution& s2);

// A gauge index t with d_t(s1, s2) > 0, constructed analytically (the
// solution of family X is placed at its far turning point).  Empty iff the
// two solutions are equal.
std::optional<double> separate(const CycleSpec& spec, const Solution& s1,
                               const Solution& s2);

// Componentwise-min entourage: contained in both arguments.
GaugeEntourage entourage_min(const GaugeEntourage& u1, const GaugeEntourage& u2);
GaugeEntourage scale_radii(const GaugeEntourage& u, double factor);

// Sampled verification of the uniformity axioms on basis entourages:
// diagonal containment, the componentwise-min entourage sits inside the
// intersection, half-radius composition lands back in u (the triangle
// inequality), and each gauge is exactly symmetric.
WitnessReport uniformity_axiom_checks(const CycleSpec& spec,
                                      const GaugeEntourage& u, int n_samples,
                                      std::uint64_t seed,
                                      bool single_cycle = false);

}  // namespace gaugeflow
