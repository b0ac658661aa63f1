#include "gaugeflow/cli.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "gaugeflow/checkers.hpp"
#include "gaugeflow/report_json.hpp"
#include "gaugeflow/sampling.hpp"

namespace gaugeflow::cli {

int verify(const RunConfig& cfg, bool json, std::ostream& out) {
  const CycleSpec spec = spec_from(cfg);
  const std::vector<WitnessReport> reports = verify_all(spec, checks_from(cfg));

  int matched = 0;
  for (const WitnessReport& r : reports)
    if (r.status == expected_status(r.property, cfg.single_cycle_contrast,
                                    spec.period_mismatch))
      ++matched;

  if (json)
    out << verify_json(cfg, spec, reports).dump(2) << "\n";
  else
    print_verify_text(out, cfg, spec, reports);
  return matched == static_cast<int>(reports.size()) ? 0 : 1;
}

int orbit(const RunConfig& cfg, const std::string& family, double phase,
          double t0, double t1, double dt, std::ostream& out,
          std::ostream& err) {
  Family f;
  try {
    f = family_from_name(family);
  } catch (const std::invalid_argument& e) {
    err << "orbit: " << e.what() << "\n";
    return 2;
  }
  if (!(dt > 0.0) || !(t1 > t0) || !std::isfinite(phase)) {
    err << "orbit: need finite phase, t1 > t0 and dt > 0\n";
    return 2;
  }
  const CycleSpec spec = spec_from(cfg);
  const Solution sol = make_solution(spec, f, phase);
  const auto rows = static_cast<long>(std::floor((t1 - t0) / dt)) + 1;
  out << "t,x,y\n";
  for (long i = 0; i < rows; ++i) {
    const double t = t0 + static_cast<double>(i) * dt;
    const Point2 p = eval(spec, sol, t);
    out << format_real(t) << "," << format_real(p.x()) << "," << format_real(p.y())
        << "\n";
  }
  return out.good() ? 0 : 2;
}

std::vector<GaugeConstraint> parse_gauge_list(const std::string& text) {
  std::vector<GaugeConstraint> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("gauge list entries look like 't:eps'");
    std::size_t used = 0;
    const double t = std::stod(item.substr(0, colon), &used);
    const double eps = std::stod(item.substr(colon + 1));
    out.push_back({t, eps});
  }
  if (out.empty()) throw std::invalid_argument("empty gauge list");
  return out;
}

int probe(const RunConfig& cfg, const ProbeParams& p, bool json,
          std::ostream& out) {
  const CycleSpec spec = spec_from(cfg);
  const CheckConfig checks = checks_from(cfg);
  WitnessReport report;

  if (p.kind == "transitivity") {
    const GaugeBall y1(make_solution(spec, family_from_name(p.c1_family), p.c1_phase),
                       p.c1_time, p.c1_radius);
    const GaugeBall y2(make_solution(spec, family_from_name(p.c2_family), p.c2_phase),
                       p.c2_time, p.c2_radius);
    const TransitivityWitness w = transitivity_witness(spec, y1, y2);
    report.property = Property::Transitivity;
    const bool ok = in_ball(spec, y1, w.mover) &&
                    in_ball(spec, y2, act(spec, w.s, w.mover)) &&
                    w.residual < checks.witness_tol;
    report.status = ok ? Status::Verified : Status::Falsified;
    report.witnesses = {bind_solution("mover", w.mover), bind_group("s", w.s),
                        bind_distance("residual", w.residual)};
    report.notes.push_back(std::string("case=") + w.case_tag);
  } else if (p.kind == "density") {
    report = density_probe_multi(spec, make_solution(spec, Family::X0, p.x0_phase),
                                 p.gauges, p.resolution);
  } else if (p.kind == "sensitivity") {
    const GaugeEntourage u(p.gauges.empty()
                               ? std::vector<GaugeConstraint>{{0.0, 0.1}}
                               : p.gauges);
    const std::vector<double> g_grid =
        linear_grid(0.0, checks.horizon_periods * spec.tau, checks.t_step);
    report = sensitivity_falsifier(spec, u, checks.n_neighbors, g_grid, checks);
  } else if (p.kind == "equicontinuity") {
    const Solution x =
        make_solution(spec, family_from_name(p.center_family), p.center_phase);
    const GaugeEntourage u({{0.0, p.eps0}});
    std::vector<double> fine;
    fine.reserve(1000);
    for (int i = 0; i < 1000; ++i) fine.push_back(spec.tau * i / 1000.0);
    const std::vector<double> perts = {-2e-4, -1e-4, 1e-4, 2e-4};
    report = equicontinuity_falsifier(spec, x, u, GaugeBall(x, p.nbhd_time, p.nbhd_radius),
                                      fine, perts, checks);
  } else {
    throw std::invalid_argument("unknown probe kind '" + p.kind + "'");
  }

  if (json)
    out << probe_json(cfg, spec, report).dump(2) << "\n";
  else
    print_report_text(out, report, std::nullopt);
  return 0;
}

}  // namespace gaugeflow::cli
