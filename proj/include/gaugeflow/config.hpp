#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "gaugeflow/checkers.hpp"
#include "gaugeflow/cycle.hpp"

namespace gaugeflow {

struct ConfigParse : std::runtime_error {
  explicit ConfigParse(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigValue : std::runtime_error {
  explicit ConfigValue(const std::string& msg) : std::runtime_error(msg) {}
};

// Run configuration: geometry, tolerances, sampling and flags.  Defaults
// reproduce the canonical configuration; a missing file key keeps its
// default.
struct RunConfig {
  // [geometry]
  Point2 node1{0.0, 0.0};
  Point2 node2{1.0, 0.0};
  double rate = 1.0;
  Point2 b0{0.3, 0.0};
  Point2 b1{0.5, 0.0};
  Point2 b2{0.7, 0.0};

  // [tolerances]
  double eq_tol = 1e-12;
  double witness_tol = 1e-9;

  // [sampling]
  double t_step = 1e-3;
  int horizon_periods = 10;
  int phase_grid = 10000;
  int s_grid = 100;
  int n_neighbors = 50;
  std::uint64_t seed = 0;

  // [flags]
  bool allow_asymmetric = false;
  bool single_cycle_contrast = false;
};

// Flat INI-style text: sections [geometry], [tolerances], [sampling],
// [flags]; `key = value` lines; '#' or ';' comments.  Pairs are two reals
// separated by whitespace or a comma.  Unknown sections or keys are
// rejected (ConfigParse); invariant violations raise ConfigValue.  Both
// errors carry the key name and line number.
RunConfig load_config(const std::string& path);
RunConfig parse_config(std::istream& in);

// Builds the cycle from the configured geometry.  Geometry errors from the
// construction surface with the offending config section attached.
CycleSpec spec_from(const RunConfig& cfg);

// Sampling knobs for the checkers.
CheckConfig checks_from(const RunConfig& cfg);

}  // namespace gaugeflow
