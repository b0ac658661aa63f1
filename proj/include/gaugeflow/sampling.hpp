#pragma once

#include <cstdint>
#include <vector>

#include "gaugeflow/cycle.hpp"

namespace gaugeflow {

// Deterministic, platform-independent sampler (splitmix64).  The same seed
// yields the same stream on every build, which keeps reports byte-stable.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * unit(); }

  bool coin() { return (next() & 1u) != 0; }

  Solution solution(const CycleSpec& spec, Family f) {
    return {f, uniform(0.0, period(spec, f))};
  }

  // Random solution; restricted to family X when x0_allowed is false.
  Solution solution(const CycleSpec& spec, bool x0_allowed = true) {
    const Family f = (x0_allowed && coin()) ? Family::X0 : Family::X;
    return solution(spec, f);
  }

 private:
  std::uint64_t state_;
};

// Inclusive-start grid a, a+step, ... while <= b (within half a step of slack).
std::vector<double> linear_grid(double a, double b, double step);

// Symmetric grid over [-half_width, half_width].
std::vector<double> symmetric_grid(double half_width, double step);

}  // namespace gaugeflow
