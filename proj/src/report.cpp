#include "gaugeflow/report.hpp"

namespace gaugeflow {

const char* property_name(Property p) {
  switch (p) {
    case Property::Transitivity: return "transitivity";
    case Property::NonMinimality: return "non_minimality";
    case Property::DensePeriodicity: return "dense_periodicity";
    case Property::NonSensitivity: return "non_sensitivity";
    case Property::NonEquicontinuity: return "non_equicontinuity";
    case Property::UniformityAxioms: return "uniformity_axioms";
  }
  return "?";
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Falsified: return "falsified";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

Binding bind_solution(std::string name, const Solution& sol) {
  return {std::move(name), Binding::Kind::Solution, sol.family, sol.phase, 0.0};
}

Binding bind_group(std::string name, double g) {
  return {std::move(name), Binding::Kind::GroupElement, Family::X, g, 0.0};
}

Binding bind_gauge(std::string name, double t) {
  return {std::move(name), Binding::Kind::GaugeIndex, Family::X, t, 0.0};
}

Binding bind_distance(std::string name, double d) {
  return {std::move(name), Binding::Kind::Distance, Family::X, d, 0.0};
}

Binding bind_point(std::string name, const Point2& p) {
  return {std::move(name), Binding::Kind::Point, Family::X, p.x(), p.y()};
}

Binding bind_scalar(std::string name, double v) {
  return {std::move(name), Binding::Kind::Scalar, Family::X, v, 0.0};
}

}  // namespace gaugeflow
