#pragma once

#include <string_view>
#include <vector>

#include "gaugeflow/linear_flow.hpp"

namespace gaugeflow {

// The solution space D consists of two families of switching periodic
// cycles.  Family X runs b0 -> b2 under field2, then b2 -> b0 under field1;
// family X0 runs the inner loop b0 -> b1 -> b0 the same way.
enum class Family { X, X0 };

const char* family_name(Family f);
Family family_from_name(std::string_view name);  // throws std::invalid_argument

struct GeometryInvalid : std::runtime_error {
  explicit GeometryInvalid(const std::string& msg) : std::runtime_error(msg) {}
};

struct PeriodMismatch : std::runtime_error {
  explicit PeriodMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr double kPeriodTol = 1e-12;  // |tau0 - tau/2| admissible slack
inline constexpr double kImageTol = 1e-12;   // point-on-cycle coordinate tolerance
inline constexpr double kPhaseTol = 1e-12;   // solution equality tolerance (circular)

// Full cycle construction: the two fields, the switching anchors and the
// derived leg durations and periods.  Immutable once built.
struct CycleSpec {
  StableNodeField field1;  // node a1*, drives the return legs
  StableNodeField field2;  // node a2*, drives the outward legs
  Point2 b0, b1, b2;       // anchors, collinear with the nodes, b1 the midpoint

  double leg_x2 = 0;  // b0 -> b2 under field2
  double leg_x1 = 0;  // b2 -> b0 under field1
  double leg_02 = 0;  // b0 -> b1 under field2
  double leg_01 = 0;  // b1 -> b0 under field1
  double tau = 0;     // period of family X  (leg_x2 + leg_x1)
  double tau0 = 0;    // period of family X0 (leg_02 + leg_01)

  // Set only when an asymmetric configuration was admitted explicitly and
  // |tau0 - tau/2| exceeds kPeriodTol.
  bool period_mismatch = false;
};

// Validates the anchor geometry, derives leg durations via hit_time and
// enforces tau0 == tau/2 (within kPeriodTol) unless allow_asymmetric.
CycleSpec make_spec(const StableNodeField& field1, const StableNodeField& field2,
                    const Point2& b0, const Point2& b1, const Point2& b2,
                    bool allow_asymmetric = false);

// Canonical configuration: nodes (0,0) and (1,0), rate 1, anchors at
// x = 0.3, 0.5, 0.7 on the axis.
CycleSpec default_spec();

// A point of D: a family tag plus a cycle phase.  Phase 0 means the solution
// sits at b0 at time 0, entering the field2 leg.  Producers keep the phase
// canonical in [0, period).
struct Solution {
  Family family;
  double phase;
};

// Reduces u into [0, period).  Exact for u already in range.
double wrap_phase(double u, double period);

double period(const CycleSpec& spec, Family f);
Solution make_solution(const CycleSpec& spec, Family f, double phase);

// Equality of solutions: same family and circular phase distance <= tol.
bool same_solution(const CycleSpec& spec, const Solution& a, const Solution& b,
                   double tol = kPhaseTol);

// Cycle position at a phase (normalized internally).  Piecewise closed form;
// at a switching phase the post-switch leg owns the corner.
Point2 pos(const CycleSpec& spec, Family f, double phase);

// Solution value x(t) = pos(family, phase + t).
Point2 eval(const CycleSpec& spec, const Solution& sol, double t);

// All phases u with pos(f, u) == p within kImageTol, sorted ascending.
// Interior points of the cycle image give two phases (one per leg), the
// turning points give one, off-image points give none.
std::vector<double> phases_through(const CycleSpec& spec, Family f, const Point2& p);

// Scalar speed |x'(phase)| = rate * distance to the active node; at switching
// phases this is the post-switch value.
double speed(const CycleSpec& spec, Family f, double phase);

// Extremes of the speed along a cycle (attained at the leg corners).
double max_speed(const CycleSpec& spec, Family f);
double min_speed(const CycleSpec& spec, Family f);
double max_speed(const CycleSpec& spec);  // over both families

// The far turning point of a family (b2 for X, b1 for X0) and its phase.
Point2 far_point(const CycleSpec& spec, Family f);
double far_phase(const CycleSpec& spec, Family f);

// Distance from p to the closed segment [a, b].
double segment_distance(const Point2& p, const Point2& a, const Point2& b);

}  // namespace gaugeflow
