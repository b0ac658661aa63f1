#pragma once

#include <cmath>

#include "gaugeflow/cycle.hpp"

namespace gaugeflow::testing {

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close2(const Point2& p, const Point2& q, double tol) {
  return (p - q).norm() <= tol;
}

}  // namespace gaugeflow::testing
