#include "gaugeflow/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace gaugeflow {

Status expected_status(Property p, bool single_cycle, bool period_mismatch) {
  if (single_cycle &&
      (p == Property::NonMinimality || p == Property::NonEquicontinuity))
    return Status::Falsified;
  if (period_mismatch && p == Property::NonEquicontinuity)
    return Status::Inconclusive;
  return Status::Verified;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::ordered_json binding_to_json(const Binding& b) {
  nlohmann::ordered_json j;
  j["name"] = b.name;
  switch (b.kind) {
    case Binding::Kind::Solution:
      j["kind"] = "solution";
      j["family"] = family_name(b.family);
      j["phase"] = b.a;
      break;
    case Binding::Kind::GroupElement:
      j["kind"] = "group_element";
      j["value"] = b.a;
      break;
    case Binding::Kind::GaugeIndex:
      j["kind"] = "gauge_index";
      j["t"] = b.a;
      break;
    case Binding::Kind::Distance:
      j["kind"] = "distance";
      j["value"] = b.a;
      break;
    case Binding::Kind::Point:
      j["kind"] = "point";
      j["x"] = b.a;
      j["y"] = b.b;
      break;
    case Binding::Kind::Scalar:
      j["kind"] = "scalar";
      j["value"] = b.a;
      break;
  }
  return j;
}

nlohmann::ordered_json report_to_json(const WitnessReport& r) {
  nlohmann::ordered_json j;
  j["property"] = property_name(r.property);
  j["status"] = status_name(r.status);
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const Binding& b : r.witnesses) j["witnesses"].push_back(binding_to_json(b));
  j["constants"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.constants) j["constants"][k] = v;
  j["sampling"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.sampling) j["sampling"][k] = v;
  j["notes"] = r.notes;
  return j;
}

nlohmann::ordered_json spec_echo_json(const RunConfig& cfg, const CycleSpec& spec) {
  nlohmann::ordered_json j;
  j["geometry"] = {{"node1", {cfg.node1.x(), cfg.node1.y()}},
                   {"node2", {cfg.node2.x(), cfg.node2.y()}},
                   {"rate", cfg.rate},
                   {"b0", {cfg.b0.x(), cfg.b0.y()}},
                   {"b1", {cfg.b1.x(), cfg.b1.y()}},
                   {"b2", {cfg.b2.x(), cfg.b2.y()}}};
  j["derived"] = {{"tau", spec.tau},
                  {"tau0", spec.tau0},
                  {"leg_x2", spec.leg_x2},
                  {"leg_x1", spec.leg_x1},
                  {"leg_02", spec.leg_02},
                  {"leg_01", spec.leg_01},
                  {"period_mismatch", spec.period_mismatch}};
  j["tolerances"] = {{"eq_tol", cfg.eq_tol}, {"witness_tol", cfg.witness_tol}};
  j["sampling"] = {{"t_step", cfg.t_step},
                   {"horizon_periods", cfg.horizon_periods},
                   {"phase_grid", cfg.phase_grid},
                   {"s_grid", cfg.s_grid},
                   {"n_neighbors", cfg.n_neighbors},
                   {"seed", cfg.seed}};
  j["flags"] = {{"allow_asymmetric", cfg.allow_asymmetric},
                {"single_cycle_contrast", cfg.single_cycle_contrast}};
  return j;
}

nlohmann::ordered_json verify_json(const RunConfig& cfg, const CycleSpec& spec,
                                   const std::vector<WitnessReport>& reports) {
  nlohmann::ordered_json j;
  j["spec_echo"] = spec_echo_json(cfg, spec);
  j["reports"] = nlohmann::ordered_json::array();
  int matched = 0;
  nlohmann::ordered_json expectations = nlohmann::ordered_json::object();
  for (const WitnessReport& r : reports) {
    j["reports"].push_back(report_to_json(r));
    const Status want = expected_status(r.property, cfg.single_cycle_contrast,
                                        spec.period_mismatch);
    expectations[property_name(r.property)] = status_name(want);
    if (r.status == want) ++matched;
  }
  j["overall"] = {{"expected", expectations},
                  {"matched", matched},
                  {"total", static_cast<int>(reports.size())},
                  {"status", matched == static_cast<int>(reports.size())
                                 ? "pass"
                                 : "mismatch"}};
  return j;
}

nlohmann::ordered_json probe_json(const RunConfig& cfg, const CycleSpec& spec,
                                  const WitnessReport& report) {
  nlohmann::ordered_json j;
  j["spec_echo"] = spec_echo_json(cfg, spec);
  j["reports"] = nlohmann::ordered_json::array({report_to_json(report)});
  return j;
}

namespace {

std::string binding_text(const Binding& b) {
  switch (b.kind) {
    case Binding::Kind::Solution:
      return b.name + "=(" + family_name(b.family) + ", " + format_real(b.a) + ")";
    case Binding::Kind::Point:
      return b.name + "=(" + format_real(b.a) + ", " + format_real(b.b) + ")";
    default:
      return b.name + "=" + format_real(b.a);
  }
}

}  // namespace

void print_report_text(std::ostream& out, const WitnessReport& r,
                       std::optional<Status> expected) {
  out << property_name(r.property) << ": " << status_name(r.status);
  if (expected) {
    out << " (expected " << status_name(*expected) << ") "
        << (r.status == *expected ? "OK" : "MISMATCH");
  }
  out << "\n";
  if (!r.witnesses.empty()) {
    out << "  witnesses:";
    for (const Binding& b : r.witnesses) out << " " << binding_text(b);
    out << "\n";
  }
  if (!r.constants.empty()) {
    out << "  constants:";
    for (const auto& [k, v] : r.constants) out << " " << k << "=" << format_real(v);
    out << "\n";
  }
  if (!r.sampling.empty()) {
    out << "  sampling:";
    for (const auto& [k, v] : r.sampling) out << " " << k << "=" << format_real(v);
    out << "\n";
  }
  for (const std::string& n : r.notes) out << "  note: " << n << "\n";
}

void print_verify_text(std::ostream& out, const RunConfig& cfg,
                       const CycleSpec& spec,
                       const std::vector<WitnessReport>& reports) {
  out << "cycle: tau=" << format_real(spec.tau) << " tau0=" << format_real(spec.tau0)
      << " |tau0 - tau/2|=" << format_real(std::abs(spec.tau0 - 0.5 * spec.tau))
      << "\n";
  if (cfg.single_cycle_contrast) out << "mode: single-cycle contrast\n";
  if (spec.period_mismatch) out << "mode: asymmetric configuration admitted\n";
  int matched = 0;
  for (const WitnessReport& r : reports) {
    const Status want = expected_status(r.property, cfg.single_cycle_contrast,
                                        spec.period_mismatch);
    if (r.status == want) ++matched;
    print_report_text(out, r, want);
  }
  out << "overall: " << matched << "/" << reports.size() << " expected outcomes -> "
      << (matched == static_cast<int>(reports.size()) ? "PASS" : "MISMATCH") << "\n";
}

}  // namespace gaugeflow
