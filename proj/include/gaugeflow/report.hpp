#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaugeflow/cycle.hpp"

namespace gaugeflow {

enum class Property {
  Transitivity,
  NonMinimality,
  DensePeriodicity,
  NonSensitivity,
  NonEquicontinuity,
  UniformityAxioms,
};

enum class Status { Verified, Falsified, Inconclusive };

const char* property_name(Property p);
const char* status_name(Status s);

// One named value inside a witness: a solution, a group element, a gauge
// index, a measured distance, a plane point or a bare scalar.
struct Binding {
  enum class Kind { Solution, GroupElement, GaugeIndex, Distance, Point, Scalar };

  std::string name;
  Kind kind = Kind::Scalar;
  Family family = Family::X;  // meaningful for Kind::Solution only
  double a = 0.0;             // phase / value / x
  double b = 0.0;             // y (Kind::Point only)
};

Binding bind_solution(std::string name, const Solution& sol);
Binding bind_group(std::string name, double g);
Binding bind_gauge(std::string name, double t);
Binding bind_distance(std::string name, double d);
Binding bind_point(std::string name, const Point2& p);
Binding bind_scalar(std::string name, double v);

// Outcome of a property checker.  Witnesses replay through the public
// operations; constants are measured values, sampling records the grids,
// seeds and tolerances the run used.
struct WitnessReport {
  Property property;
  Status status = Status::Inconclusive;
  std::vector<Binding> witnesses;
  std::map<std::string, double> constants;
  std::map<std::string, double> sampling;
  std::vector<std::string> notes;
};

}  // namespace gaugeflow
