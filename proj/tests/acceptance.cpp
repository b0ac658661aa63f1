// Acceptance suite: one pass/fail line per criterion, each pinned to its
// stated tolerance.  Exits nonzero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaugeflow/checkers.hpp"
#include "gaugeflow/cli.hpp"
#include "gaugeflow/config.hpp"
#include "gaugeflow/report_json.hpp"
#include "gaugeflow/sampling.hpp"

using namespace gaugeflow;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// 1. Construction fidelity: the derived periods match the closed-form logs
// and the inner period is half the outer one.
bool construction_fidelity(std::string& detail) {
  const CycleSpec spec = default_spec();
  const double tau_expect = 2.0 * std::log(7.0 / 3.0);
  const double tau0_expect = std::log(7.0 / 3.0);
  const double half_gap = std::abs(spec.tau0 - 0.5 * spec.tau);
  detail = "tau=" + format_real(spec.tau) + " tau0=" + format_real(spec.tau0) +
           " |tau0-tau/2|=" + format_real(half_gap);
  return close(spec.tau, tau_expect, 1e-12) &&
         close(spec.tau0, tau0_expect, 1e-12) && half_gap < 1e-12;
}

// 2. Group-action suite: composition and identity hold in phase arithmetic,
// evaluation compatibility within 1e-12, over 10^4 random triples.
bool group_action_suite(std::string& detail) {
  const CycleSpec spec = default_spec();
  Sampler rng(0x41435431);
  double worst_eval = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Solution sol = rng.solution(spec);
    const double r = rng.uniform(-10.0 * spec.tau, 10.0 * spec.tau);
    const double s = rng.uniform(-10.0 * spec.tau, 10.0 * spec.tau);
    if (!same_solution(spec, act(spec, r, act(spec, s, sol)), act(spec, r + s, sol)))
      return false;
    const Solution id = act(spec, 0.0, sol);
    if (id.phase != sol.phase || id.family != sol.family) return false;
    const double u = rng.uniform(-5.0 * spec.tau, 5.0 * spec.tau);
    worst_eval = std::max(
        worst_eval, (eval(spec, act(spec, s, sol), u) - eval(spec, sol, s + u)).norm());
  }
  detail = "10000 triples, worst eval gap " + format_real(worst_eval);
  return worst_eval <= 1e-12;
}

// 3. Transitivity: 200 random subbasic-ball pairs across the four proof
// situations, each with a strict-membership witness and residual < 1e-9.
bool transitivity_pairs(std::string& detail) {
  const CycleSpec spec = default_spec();
  CheckConfig cfg;
  cfg.n_ball_pairs = 200;
  const WitnessReport r = transitivity_check(spec, cfg);
  detail = "max residual " + format_real(r.constants.count("max_residual")
                                             ? r.constants.at("max_residual")
                                             : -1.0);
  return r.status == Status::Verified && r.constants.at("max_residual") < 1e-9 &&
         r.sampling.at("cases_same_family") == 50 &&
         r.sampling.at("cases_x_to_inner") == 50 &&
         r.sampling.at("cases_inner_to_x") == 50 &&
         r.sampling.at("cases_mixed_balls") == 50;
}

// 4. Non-minimality: certified separation 0.1 +- 1e-9 at b = (0.6, 0), with
// the refined phase-grid oracle agreeing with the analytic segment distance.
bool minimality_certificate(std::string& detail) {
  const CycleSpec spec = default_spec();
  const WitnessReport r = minimality_falsifier(spec, Point2(0.6, 0.0));
  const double analytic = r.constants.at("separation_analytic");
  const double refined = r.constants.at("separation_refined");
  detail = "m_analytic=" + format_real(analytic) + " m_grid=" + format_real(refined);
  return r.status == Status::Verified && close(analytic, 0.1, 1e-9) &&
         close(refined, analytic, 1e-9);
}

// 5. Dense periodic points: 100 random solutions per family at tol 1e-12,
// both syndeticity checks with K = [0, tau] over [-10 tau, 10 tau], and 100
// exact single-gauge density matches.
bool dense_periodicity(std::string& detail) {
  const CycleSpec spec = default_spec();
  const WitnessReport r = dense_periodicity_check(spec, 100, 1e-12);
  if (r.status != Status::Verified) {
    detail = "status " + std::string(status_name(r.status));
    return false;
  }
  detail = "max periodicity gap " + format_real(r.constants.at("max_periodicity_gap")) +
           ", max density residual " +
           format_real(r.constants.at("max_density_residual"));
  return r.constants.at("max_periodicity_gap") < 1e-12 &&
         r.constants.at("max_density_residual") < 1e-12;
}

// 6. Non-sensitivity: with eps0 = 0.9 * 0.1 / C_est, the sup gauge gap over
// 50 ball members and the shift grid [0, 10 tau] (step 1e-3) stays below
// 0.1; C_est lands in [2.30, 2.37] at delta = 1e-3.
bool non_sensitivity(std::string& detail) {
  const CycleSpec spec = default_spec();
  CheckConfig cfg;
  const std::vector<double> g_grid = linear_grid(0.0, 10.0 * spec.tau, 1e-3);
  const WitnessReport r =
      sensitivity_falsifier(spec, GaugeEntourage({{0.0, 0.1}}), 50, g_grid, cfg);
  const double c = r.constants.at("c_est");
  const double sup = r.constants.at("sup_gap");
  detail = "C_est=" + format_real(c) + " sup_gap=" + format_real(sup);
  return r.status == Status::Verified && sup < 0.1 && c >= 2.30 && c <= 2.37;
}

// 7. Non-equicontinuity: the canonical witness realizes the b0-b2 gap 0.4
// against eps0 = 0.05, and the falsifier finds a witness at every one of
// 100 neighbourhood gauge times with gap >= 0.4 - 1e-9 (grid-oracle value;
// well above the 0.1 floor).
bool non_equicontinuity(std::string& detail) {
  const CycleSpec spec = default_spec();
  CheckConfig cfg;
  const Solution x{Family::X0, 0.0};
  const GaugeEntourage u({{0.0, 0.05}});
  std::vector<double> fine;
  fine.reserve(1000);
  for (int i = 0; i < 1000; ++i) fine.push_back(spec.tau * i / 1000.0);
  const std::vector<double> perts = {-2e-4, -1e-4, 1e-4, 2e-4};

  const WitnessReport canonical =
      equicontinuity_falsifier(spec, x, u, GaugeBall(x, 0.0, 1e-3), fine, perts, cfg);
  if (canonical.status != Status::Verified) return false;
  const double canonical_gap = canonical.constants.at("best_gap");

  double min_gap = 1e300;
  for (int i = 0; i < 100; ++i) {
    const double s = spec.tau0 * i / 100.0;
    const WitnessReport r =
        equicontinuity_falsifier(spec, x, u, GaugeBall(x, s, 1e-3), fine, perts, cfg);
    if (r.status != Status::Verified) {
      detail = "no witness at s=" + format_real(s);
      return false;
    }
    min_gap = std::min(min_gap, r.constants.at("best_gap"));
  }
  detail = "canonical gap " + format_real(canonical_gap) + ", sweep min gap " +
           format_real(min_gap);
  return canonical_gap >= 0.4 - 1e-9 && canonical_gap > 0.05 &&
         min_gap >= 0.4 - 1e-9 && min_gap >= 0.1;
}

// 8. Contrast fixture: restricted to one cycle the action is minimal and
// equicontinuous at the default resolution, yet still non-sensitive.
bool contrast_fixture(std::string& detail) {
  const CycleSpec spec = default_spec();
  CheckConfig cfg;
  cfg.single_cycle = true;
  const std::vector<WitnessReport> reports = verify_all(spec, cfg);
  const Status minimality = reports[1].status;
  const Status sensitivity = reports[3].status;
  const Status equicontinuity = reports[4].status;
  detail = std::string("non_minimality=") + status_name(minimality) +
           " non_sensitivity=" + status_name(sensitivity) +
           " non_equicontinuity=" + status_name(equicontinuity);
  return minimality == Status::Falsified && sensitivity == Status::Verified &&
         equicontinuity == Status::Falsified;
}

// 9. CLI: verify exits 0 with every expected status on the default config,
// orbit row counts and endpoints match the closed forms at 17 significant
// digits, and JSON reports are byte-stable across runs with one seed.
bool cli_contract(std::string& detail) {
  const RunConfig cfg;
  std::ostringstream a, b;
  if (cli::verify(cfg, true, a) != 0) {
    detail = "verify exit code nonzero";
    return false;
  }
  if (cli::verify(cfg, true, b) != 0 || a.str() != b.str()) {
    detail = "JSON not byte-stable";
    return false;
  }
  const auto j = nlohmann::ordered_json::parse(a.str());
  if (j["overall"]["status"] != "pass" || j["reports"].size() != 6) {
    detail = "unexpected overall status";
    return false;
  }

  const CycleSpec spec = spec_from(cfg);
  std::ostringstream csv, err;
  if (cli::orbit(cfg, "X", 0.0, 0.0, spec.tau, spec.tau / 4.0, csv, err) != 0) {
    detail = "orbit exit code nonzero";
    return false;
  }
  std::vector<std::string> lines;
  {
    std::istringstream in(csv.str());
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  if (lines.size() != 6 || lines[0] != "t,x,y") {
    detail = "unexpected orbit row count";
    return false;
  }
  const std::string b0_row = "0,0.29999999999999999,0";
  const std::string back_row = format_real(spec.tau) + ",0.29999999999999999,0";
  // the half-period row sits within 1e-12 of b2 and round-trips at 17 digits
  const double half = 2.0 * (spec.tau / 4.0);
  const std::string mid = lines[3].substr(lines[3].find(',') + 1);
  const double mid_x = std::stod(mid.substr(0, mid.find(',')));
  detail = "rows=5, endpoints exact, mid row " + format_real(mid_x);
  return lines[1] == b0_row && lines[5] == back_row &&
         mid_x == eval(spec, {Family::X, 0.0}, half).x() &&
         close(mid_x, 0.7, 1e-12);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"construction fidelity (tau, tau0, tau0 = tau/2)", construction_fidelity},
      {"group-action suite (10^4 triples)", group_action_suite},
      {"transitivity witnesses (200 ball pairs)", transitivity_pairs},
      {"non-minimality certificate (b = (0.6, 0))", minimality_certificate},
      {"dense periodic points (periodicity, syndetic, density)", dense_periodicity},
      {"non-sensitivity (sup gap < 0.1, C_est in [2.30, 2.37])", non_sensitivity},
      {"non-equicontinuity (canonical witness and 100-point sweep)",
       non_equicontinuity},
      {"contrast fixture (minimal, equicontinuous, non-sensitive)",
       contrast_fixture},
      {"CLI contract (verify, orbit, byte-stable JSON)", cli_contract},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %zu: %s%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), detail.empty() ? "" : " :: ",
                detail.c_str());
    if (!ok) ++failures;
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
