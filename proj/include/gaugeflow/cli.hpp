#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gaugeflow/config.hpp"
#include "gaugeflow/gauge.hpp"

namespace gaugeflow::cli {

// Exit codes: 0 success / expected outcomes, 1 verify mismatch, 2 bad
// configuration or parameters.

// Runs every checker and prints the reports (text or JSON).
int verify(const RunConfig& cfg, bool json, std::ostream& out);

// Writes a trajectory sample as CSV `t,x,y` with 17-significant-digit
// values: rows t0, t0+dt, ... while <= t1.
int orbit(const RunConfig& cfg, const std::string& family, double phase,
          double t0, double t1, double dt, std::ostream& out,
          std::ostream& err);

struct ProbeParams {
  std::string kind;  // transitivity | density | sensitivity | equicontinuity

  // transitivity: the two subbasic balls
  std::string c1_family = "X";
  double c1_phase = 0.0, c1_time = 0.0, c1_radius = 0.05;
  std::string c2_family = "X0";
  double c2_phase = 0.0, c2_time = 0.0, c2_radius = 0.05;

  // density: inner-family target phase, gauges and grid resolution
  double x0_phase = 0.0;
  std::vector<GaugeConstraint> gauges;  // also the sensitivity entourage
  int resolution = 10000;

  // equicontinuity: center, neighbourhood and entourage radius
  std::string center_family = "X0";
  double center_phase = 0.0;
  double nbhd_time = 0.0, nbhd_radius = 1e-3, eps0 = 0.05;
};

// Runs one checker with explicit parameters and emits its report.  The exit
// code reflects completion, not the report status.
int probe(const RunConfig& cfg, const ProbeParams& p, bool json,
          std::ostream& out);

// Parses "t:eps,t:eps,..." into gauge constraints.
std::vector<GaugeConstraint> parse_gauge_list(const std::string& text);

}  // namespace gaugeflow::cli
