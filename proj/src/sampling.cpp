#include "gaugeflow/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace gaugeflow {

std::vector<double> linear_grid(double a, double b, double step) {
  if (!(step > 0.0) || !(b >= a))
    throw std::invalid_argument("linear_grid: need step > 0 and b >= a");
  const auto n = static_cast<std::size_t>(std::floor((b - a) / step)) + 1;
  std::vector<double> g;
  g.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.push_back(a + static_cast<double>(i) * step);
  return g;
}

std::vector<double> symmetric_grid(double half_width, double step) {
  return linear_grid(-half_width, half_width, step);
}

}  // namespace gaugeflow
