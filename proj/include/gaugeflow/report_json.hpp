#pragma once

#include <iosfwd>
#include <optional>

#include <json.hpp>

#include "gaugeflow/config.hpp"
#include "gaugeflow/report.hpp"

namespace gaugeflow {

// Expected outcome per property: the presentation policy the verify command
// compares against.  The contrast fixture flips non-minimality and
// non-equicontinuity; an admitted period mismatch downgrades
// non-equicontinuity to inconclusive.
Status expected_status(Property p, bool single_cycle, bool period_mismatch);

nlohmann::ordered_json binding_to_json(const Binding& b);
nlohmann::ordered_json report_to_json(const WitnessReport& r);
nlohmann::ordered_json spec_echo_json(const RunConfig& cfg, const CycleSpec& spec);

// Full verify payload: {"spec_echo":…, "reports":[…], "overall":…}.
nlohmann::ordered_json verify_json(const RunConfig& cfg, const CycleSpec& spec,
                                   const std::vector<WitnessReport>& reports);

// Probe payload: {"spec_echo":…, "reports":[r]}.
nlohmann::ordered_json probe_json(const RunConfig& cfg, const CycleSpec& spec,
                                  const WitnessReport& report);

// Locale-independent float text, 17 significant digits.
std::string format_real(double v);

void print_report_text(std::ostream& out, const WitnessReport& r,
                       std::optional<Status> expected);
void print_verify_text(std::ostream& out, const RunConfig& cfg,
                       const CycleSpec& spec,
                       const std::vector<WitnessReport>& reports);

}  // namespace gaugeflow
