#include "gaugeflow/checkers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gaugeflow/sampling.hpp"

namespace gaugeflow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double circular_magnitude(double s, double p) {
  const double w = wrap_phase(s, p);
  return std::min(w, p - w);
}

// Among the X phases through a target position, pick the shift of least
// circular magnitude; returns the shift normalized into [0, tau).
double pick_shift(const CycleSpec& spec, const std::vector<double>& phases,
                  double base) {
  double best = 0.0, best_mag = kInf;
  for (const double u : phases) {
    const double s = wrap_phase(u - base, spec.tau);
    const double mag = circular_magnitude(s, spec.tau);
    if (mag < best_mag) {
      best_mag = mag;
      best = s;
    }
  }
  return best;
}

}  // namespace

TransitivityWitness transitivity_witness(const CycleSpec& spec,
                                         const GaugeBall& y1,
                                         const GaugeBall& y2) {
  const Solution& c1 = y1.center;
  const Solution& c2 = y2.center;

  if (c1.family == c2.family) {
    // Same orbit: align the centers.
    const double p = period(spec, c1.family);
    const double s = wrap_phase(c2.phase - c1.phase, p);
    return {s, c1, 'a', gauge_dist(spec, y2.t, act(spec, s, c1), c2)};
  }

  if (c1.family == Family::X) {
    // X into an inner-family ball: shift the center so it crosses the
    // target's position at the target's gauge time.  The inner image lies
    // inside the X image, so the crossing phase always exists.
    const Point2 q = eval(spec, c2, y2.t);
    const std::vector<double> us = phases_through(spec, Family::X, q);
    if (us.empty())
      throw std::logic_error("transitivity: inner-family position not on the X cycle");
    const double s = pick_shift(spec, us, wrap_phase(c1.phase + y2.t, spec.tau));
    return {s, c1, 'b', gauge_dist(spec, y2.t, act(spec, s, c1), c2)};
  }

  // Inner-family ball into an X ball: take the X solution that crosses the
  // first center's position at the first gauge time (it lies in y1 at
  // distance zero), then align it with the second center.
  const Point2 q = eval(spec, c1, y1.t);
  const std::vector<double> us = phases_through(spec, Family::X, q);
  if (us.empty())
    throw std::logic_error("transitivity: inner-family position not on the X cycle");
  double best_s = 0.0, best_u = 0.0, best_mag = kInf;
  for (const double u : us) {
    const double z_phase = wrap_phase(u - y1.t, spec.tau);
    const double s = wrap_phase(c2.phase - z_phase, spec.tau);
    const double mag = circular_magnitude(s, spec.tau);
    if (mag < best_mag) {
      best_mag = mag;
      best_s = s;
      best_u = u;
    }
  }
  const Solution mover{Family::X, wrap_phase(best_u - y1.t, spec.tau)};
  return {best_s, mover, 'c',
          gauge_dist(spec, y2.t, act(spec, best_s, mover), c2)};
}

WitnessReport transitivity_check(const CycleSpec& spec, const CheckConfig& cfg) {
  WitnessReport report;
  report.property = Property::Transitivity;
  report.sampling["n_pairs"] = cfg.n_ball_pairs;
  report.sampling["seed"] = static_cast<double>(cfg.seed);
  report.sampling["witness_tol"] = cfg.witness_tol;

  Sampler rng(cfg.seed ^ 0x5452414e53495456ULL);
  const double t_span = 5.0 * spec.tau;
  int case_count[4] = {0, 0, 0, 0};
  double max_residual = 0.0;
  TransitivityWitness worst{0.0, {Family::X, 0.0}, 'a', -1.0};
  GaugeBall worst_y1({Family::X, 0.0}, 0.0, 1.0), worst_y2 = worst_y1;

  for (int i = 0; i < cfg.n_ball_pairs; ++i) {
    const int want = cfg.single_cycle ? 0 : i % 4;
    const double t1 = rng.uniform(-t_span, t_span);
    const double t2 = rng.uniform(-t_span, t_span);
    const double r1 = rng.uniform(1e-3, 0.3);
    const double r2 = rng.uniform(1e-3, 0.3);

    Solution c1{Family::X, 0.0}, c2{Family::X, 0.0};
    switch (want) {
      case 0: {  // same family
        const Family f =
            (!cfg.single_cycle && rng.coin()) ? Family::X0 : Family::X;
        c1 = rng.solution(spec, f);
        c2 = rng.solution(spec, f);
        break;
      }
      case 1:  // X ball into inner ball
        c1 = rng.solution(spec, Family::X);
        c2 = rng.solution(spec, Family::X0);
        break;
      case 2:  // inner ball into X ball
        c1 = rng.solution(spec, Family::X0);
        c2 = rng.solution(spec, Family::X);
        break;
      case 3: {  // both balls meet both families; reduce by center side
        const Point2 q1 =
            spec.b0 + rng.uniform(0.15, 0.85) * (spec.b1 - spec.b0);
        const std::vector<double> us = phases_through(spec, Family::X, q1);
        const double u = us[rng.next() % us.size()];
        c1 = {Family::X, wrap_phase(u - t1, spec.tau)};
        c2 = rng.solution(spec, Family::X0);
        break;
      }
    }
    ++case_count[want];

    const GaugeBall y1(c1, t1, r1);
    const GaugeBall y2(c2, t2, r2);
    const TransitivityWitness w = transitivity_witness(spec, y1, y2);
    const bool ok = in_ball(spec, y1, w.mover) &&
                    in_ball(spec, y2, act(spec, w.s, w.mover)) &&
                    w.residual < cfg.witness_tol;
    if (!ok) {
      report.status = Status::Falsified;
      report.witnesses = {bind_solution("center1", c1), bind_gauge("t1", t1),
                          bind_scalar("radius1", r1),
                          bind_solution("center2", c2), bind_gauge("t2", t2),
                          bind_scalar("radius2", r2),
                          bind_solution("mover", w.mover), bind_group("s", w.s),
                          bind_distance("residual", w.residual)};
      report.notes.push_back(std::string("failed_case=") + w.case_tag);
      return report;
    }
    if (w.residual > max_residual || worst.residual < 0.0) {
      max_residual = std::max(max_residual, w.residual);
      worst = w;
      worst_y1 = y1;
      worst_y2 = y2;
    }
  }

  report.status = Status::Verified;
  report.constants["max_residual"] = max_residual;
  report.sampling["cases_same_family"] = case_count[0];
  report.sampling["cases_x_to_inner"] = case_count[1];
  report.sampling["cases_inner_to_x"] = case_count[2];
  report.sampling["cases_mixed_balls"] = case_count[3];
  report.witnesses = {bind_solution("center1", worst_y1.center),
                      bind_gauge("t1", worst_y1.t),
                      bind_scalar("radius1", worst_y1.radius),
                      bind_solution("center2", worst_y2.center),
                      bind_gauge("t2", worst_y2.t),
                      bind_scalar("radius2", worst_y2.radius),
                      bind_solution("mover", worst.mover),
                      bind_group("s", worst.s),
                      bind_distance("residual", worst.residual)};
  report.notes.push_back(std::string("worst_pair_case=") + worst.case_tag);
  return report;
}

WitnessReport minimality_falsifier(const CycleSpec& spec, const Point2& b,
                                   const CheckConfig& cfg) {
  WitnessReport report;
  report.property = Property::NonMinimality;
  report.sampling["phase_grid"] = cfg.phase_grid;
  report.sampling["seed"] = static_cast<double>(cfg.seed);

  if (cfg.single_cycle) {
    // One orbit is the whole space, so every orbit is dense: minimality
    // holds and no separation witness can exist.  Verify the alignment
    // positively instead.
    Sampler rng(cfg.seed ^ 0x4d494e494d414cULL);
    double worst = 0.0;
    for (int i = 0; i < 16; ++i) {
      const Solution a = rng.solution(spec, Family::X);
      const Solution c = rng.solution(spec, Family::X);
      const double s = wrap_phase(c.phase - a.phase, spec.tau);
      worst = std::max(worst, gauge_dist(spec, 0.0, act(spec, s, a), c));
    }
    report.status = Status::Falsified;
    report.constants["orbit_alignment_max_residual"] = worst;
    report.notes.push_back("single_cycle_contrast");
    return report;
  }

  if (!finite_point(b)) throw BadWitnessPoint("witness point must be finite");
  const Point2 axis = spec.field2.node - spec.field1.node;
  const double sep = axis.norm();
  const Point2 u = axis / sep;
  const Point2 r = b - spec.field1.node;
  const double tb = r.dot(u);
  const double off = (r - tb * u).norm();
  const double t1 = (spec.b1 - spec.field1.node).dot(u);
  const double t2 = (spec.b2 - spec.field1.node).dot(u);
  if (off > kImageTol * std::max(sep, 1.0) || !(tb > t1 && tb < t2))
    throw BadWitnessPoint("witness point must lie strictly between b1 and b2");

  const std::vector<double> ys = phases_through(spec, Family::X, b);
  if (ys.empty())
    throw BadWitnessPoint("witness point does not lie on the X cycle");
  const Solution y{Family::X, ys.front()};

  const double m_analytic = segment_distance(b, spec.b0, spec.b1);

  // Independent scan of the inner cycle: coarse grid plus per-leg ternary
  // refinement (the distance is monotone along each leg).
  const auto h = [&](double theta) {
    return (b - pos(spec, Family::X0, theta)).norm();
  };
  double m_grid = kInf;
  for (int i = 0; i < cfg.phase_grid; ++i)
    m_grid = std::min(m_grid, h(spec.tau0 * i / cfg.phase_grid));
  const auto refine = [&](double lo, double hi) {
    for (int it = 0; it < 120; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (h(m1) <= h(m2))
        hi = m2;
      else
        lo = m1;
    }
    return std::min({h(lo), h(0.5 * (lo + hi)), h(hi)});
  };
  const double m_refined =
      std::min(refine(0.0, spec.leg_02), refine(spec.leg_02, spec.tau0));

  const double m = std::min(m_analytic, m_refined);
  report.constants["separation_analytic"] = m_analytic;
  report.constants["separation_grid"] = m_grid;
  report.constants["separation_refined"] = m_refined;
  report.constants["certified_radius"] = 0.5 * m;

  // Companion probe: the X orbit closure does reach the inner family (exact
  // single-gauge matches), so the one-sided separation is what breaks
  // minimality.
  Sampler rng(cfg.seed ^ 0x434c4f53'55524521ULL);
  double closure_worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Solution x0 = rng.solution(spec, Family::X0);
    const double t = rng.uniform(-5.0 * spec.tau, 5.0 * spec.tau);
    const std::vector<double> us =
        phases_through(spec, Family::X, eval(spec, x0, t));
    const Solution x{Family::X, wrap_phase(us.front() - t, spec.tau)};
    closure_worst = std::max(closure_worst, gauge_dist(spec, t, x, x0));
  }
  report.constants["closure_probe_max_residual"] = closure_worst;

  report.witnesses = {bind_solution("y", y), bind_point("b", b),
                      bind_distance("separation", m),
                      bind_distance("certified_radius", 0.5 * m)};
  if (!(m_analytic > 0.0))
    report.status = Status::Falsified;
  else if (std::abs(m_refined - m_analytic) > cfg.witness_tol)
    report.status = Status::Inconclusive;
  else
    report.status = Status::Verified;
  return report;
}

WitnessReport dense_periodicity_check(const CycleSpec& spec, int n_solutions,
                                      double tol, const CheckConfig& cfg) {
  if (n_solutions < 1) throw std::invalid_argument("n_solutions must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

  WitnessReport report;
  report.property = Property::DensePeriodicity;
  report.sampling["n_solutions"] = n_solutions;
  report.sampling["tol"] = tol;
  report.sampling["periodicity_samples"] = cfg.periodicity_samples;
  report.sampling["seed"] = static_cast<double>(cfg.seed);

  Sampler rng(cfg.seed ^ 0x44454e534954'59ULL);

  // (1) sampled periodicity under the stabilizer generator
  double max_gap = 0.0;
  const bool with_inner = !cfg.single_cycle;
  for (const Family f : {Family::X, Family::X0}) {
    if (f == Family::X0 && !with_inner) continue;
    for (int i = 0; i < n_solutions; ++i) {
      const Solution sol = rng.solution(spec, f);
      const double gap = periodicity_gap(spec, sol, stabilizer_generator(spec, sol),
                                         cfg.periodicity_samples);
      max_gap = std::max(max_gap, gap);
      if (!(gap < tol)) {
        report.status = Status::Falsified;
        report.witnesses = {bind_solution("aperiodic", sol),
                            bind_distance("gap", gap)};
        return report;
      }
    }
  }
  report.constants["max_periodicity_gap"] = max_gap;

  // (2) both syndeticity notions with K = [0, tau]
  const SyndeticWitness k(spec.tau);
  const std::vector<double> grid =
      symmetric_grid(cfg.horizon_periods * spec.tau, spec.tau / 100.0);
  bool syndetic_ok = right_syndetic_check(spec.tau, k, grid) &&
                     syndetic_check(spec.tau, k, grid);
  if (with_inner)
    syndetic_ok = syndetic_ok && right_syndetic_check(spec.tau0, k, grid) &&
                  syndetic_check(spec.tau0, k, grid);
  report.constants["syndetic_kappa"] = k.kappa;
  // kappa >= generator settles the quantifier beyond the sampled grid
  report.constants["syndetic_criterion_holds"] =
      (k.kappa >= spec.tau && (!with_inner || k.kappa >= spec.tau0)) ? 1.0 : 0.0;
  report.sampling["syndetic_grid_points"] = static_cast<double>(grid.size());
  if (!syndetic_ok) {
    report.status = Status::Falsified;
    report.notes.push_back("syndeticity grid check failed");
    return report;
  }

  // (3) density of X at random targets: exact single-gauge matches
  double max_residual = 0.0;
  Solution sample_target{Family::X0, 0.0};
  Solution sample_match{Family::X, 0.0};
  double sample_t = 0.0;
  for (int i = 0; i < n_solutions; ++i) {
    const Solution target =
        with_inner ? rng.solution(spec, Family::X0) : rng.solution(spec, Family::X);
    const double t = rng.uniform(-cfg.horizon_periods * spec.tau,
                                 cfg.horizon_periods * spec.tau);
    const std::vector<double> us =
        phases_through(spec, Family::X, eval(spec, target, t));
    if (us.empty()) {
      report.status = Status::Falsified;
      report.witnesses = {bind_solution("unmatched_target", target),
                          bind_gauge("t", t)};
      return report;
    }
    const Solution x{Family::X, wrap_phase(us.front() - t, spec.tau)};
    const double residual = gauge_dist(spec, t, x, target);
    if (i == 0) {
      sample_target = target;
      sample_match = x;
      sample_t = t;
    }
    max_residual = std::max(max_residual, residual);
    if (!(residual < tol)) {
      report.status = Status::Falsified;
      report.witnesses = {bind_solution("target", target), bind_gauge("t", t),
                          bind_solution("candidate", x),
                          bind_distance("residual", residual)};
      return report;
    }
  }
  report.constants["max_density_residual"] = max_residual;
  report.witnesses = {bind_solution("density_target", sample_target),
                      bind_gauge("density_t", sample_t),
                      bind_solution("density_match", sample_match)};
  report.status = Status::Verified;
  return report;
}

WitnessReport density_probe_multi(const CycleSpec& spec, const Solution& x0,
                                  const std::vector<GaugeConstraint>& gauges,
                                  int resolution) {
  if (x0.family != Family::X0)
    throw std::invalid_argument("density probe expects an inner-family target");
  if (gauges.empty()) throw std::invalid_argument("need at least one gauge");
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");

  WitnessReport report;
  report.property = Property::DensePeriodicity;
  report.sampling["resolution"] = resolution;
  report.sampling["n_gauges"] = static_cast<double>(gauges.size());

  std::vector<Point2> targets;
  targets.reserve(gauges.size());
  for (const GaugeConstraint& c : gauges) targets.push_back(eval(spec, x0, c.t));

  const auto residual_at = [&](double theta) {
    double worst = 0.0;
    for (std::size_t i = 0; i < gauges.size(); ++i) {
      const Point2 at = pos(spec, Family::X, theta + gauges[i].t);
      worst = std::max(worst, (at - targets[i]).norm());
    }
    return worst;
  };

  double best_theta = 0.0, best = kInf;
  const auto consider = [&](double theta) {
    const double v = residual_at(theta);
    if (v < best) {
      best = v;
      best_theta = theta;
    }
  };

  // Constructive seeds: exact single-gauge matches for each constraint.
  for (std::size_t i = 0; i < gauges.size(); ++i)
    for (const double u : phases_through(spec, Family::X, targets[i]))
      consider(wrap_phase(u - gauges[i].t, spec.tau));

  // Coarse grid plus two rounds of local refinement around the best cell.
  for (int i = 0; i < resolution; ++i) consider(spec.tau * i / resolution);
  double window = spec.tau / resolution;
  for (int round = 0; round < 2; ++round) {
    const double center = best_theta;
    for (int i = -100; i <= 100; ++i) consider(center + window * i / 100.0);
    window /= 100.0;
  }

  report.status = Status::Inconclusive;  // exploratory by design
  report.constants["residual"] = best;
  report.witnesses = {bind_solution("target", x0),
                      bind_solution("best_candidate", {Family::X, wrap_phase(best_theta, spec.tau)}),
                      bind_distance("residual", best)};
  return report;
}

double expansion_constant(const CycleSpec& spec, std::span<const double> deltas,
                          double t_step, double horizon) {
  if (deltas.empty()) throw std::invalid_argument("need at least one phase gap");
  for (const double d : deltas)
    if (!(d > 0.0) || !std::isfinite(d))
      throw std::invalid_argument("phase gaps must be positive");
  if (!(t_step > 0.0)) throw std::invalid_argument("t_step must be positive");
  if (!(horizon >= spec.tau))
    throw std::invalid_argument("horizon must cover at least one period");

  const Solution anchor{Family::X, spec.leg_x2};  // the b2 crossing
  const auto steps = static_cast<long>(std::floor(horizon / t_step));
  double c_est = 0.0;
  for (const double delta : deltas) {
    for (const double sign : {1.0, -1.0}) {
      const Solution y = act(spec, sign * delta, anchor);
      const double d0 = gauge_dist(spec, 0.0, anchor, y);
      if (d0 == 0.0) continue;  // gap wrapped onto the anchor itself
      for (long i = 0; i <= steps; ++i) {
        const double t = t_step * static_cast<double>(i);
        c_est = std::max(c_est, gauge_dist(spec, t, anchor, y) / d0);
      }
    }
  }
  return c_est;
}

WitnessReport sensitivity_falsifier(const CycleSpec& spec, const GaugeEntourage& u,
                                    int n_neighbors, std::span<const double> g_grid,
                                    const CheckConfig& cfg) {
  if (n_neighbors < 1) throw std::invalid_argument("n_neighbors must be >= 1");
  if (g_grid.empty()) throw std::invalid_argument("empty shift grid");

  WitnessReport report;
  report.property = Property::NonSensitivity;
  report.sampling["n_neighbors"] = n_neighbors;
  report.sampling["g_grid_points"] = static_cast<double>(g_grid.size());
  report.sampling["expansion_delta"] = cfg.expansion_delta;
  report.sampling["expansion_t_step"] = cfg.expansion_t_step;
  report.sampling["phase_grid"] = cfg.phase_grid;

  const double eps_min = u.min_radius();
  const double deltas[1] = {cfg.expansion_delta};
  const double c_est = expansion_constant(spec, deltas, cfg.expansion_t_step,
                                          cfg.horizon_periods * spec.tau);
  const double eps0 = 0.9 * eps_min / c_est;
  report.constants["c_est"] = c_est;
  report.constants["eps_min"] = eps_min;
  report.constants["eps0"] = eps0;

  const Solution anchor{Family::X, spec.leg_x2};

  // The ball must contain X solutions only; its center sits at b2, a gap of
  // |b2 - b1| away from the inner image.
  const double exclusion = segment_distance(spec.b2, spec.b0, spec.b1);
  report.constants["inner_exclusion_analytic"] = exclusion;
  if (!(eps0 < exclusion)) {
    report.status = Status::Inconclusive;
    report.notes.push_back("entourage too coarse: ball could meet the inner family");
    return report;
  }
  if (!cfg.single_cycle) {
    double min_x0 = kInf;
    for (int i = 0; i < cfg.phase_grid; ++i)
      min_x0 = std::min(min_x0, (pos(spec, Family::X0, spec.tau0 * i / cfg.phase_grid) -
                                 spec.b2)
                                    .norm());
    report.constants["ball_min_dist_to_inner"] = min_x0;
  }

  // Ball members: X solutions through a radial position grid within eps0 of
  // b2, both legs.
  const GaugeBall ball(anchor, 0.0, eps0);
  const Point2 dir = (spec.b0 - spec.b2).normalized();
  std::vector<Solution> members;
  const int radii = (n_neighbors + 1) / 2;
  for (int j = 1; j <= radii && static_cast<int>(members.size()) < n_neighbors; ++j) {
    const double r = eps0 * j / (radii + 1);
    const Point2 p = spec.b2 + r * dir;
    for (const double u_phase : phases_through(spec, Family::X, p)) {
      if (static_cast<int>(members.size()) >= n_neighbors) break;
      const Solution y{Family::X, u_phase};
      if (in_ball(spec, ball, y)) members.push_back(y);
    }
  }
  report.sampling["ball_members"] = static_cast<double>(members.size());

  double sup_gap = 0.0;
  Solution sup_y = anchor;
  double sup_g = 0.0;
  for (const Solution& y : members) {
    for (const double g : g_grid) {
      const Solution xg = act(spec, g, anchor);
      const Solution yg = act(spec, g, y);
      for (const GaugeConstraint& c : u.constraints) {
        const double gap = gauge_dist(spec, c.t, xg, yg);
        if (gap > sup_gap) {
          sup_gap = gap;
          sup_y = y;
          sup_g = g;
        }
        if (!(gap < c.eps)) {
          report.status = Status::Falsified;
          report.constants["sup_gap"] = gap;
          report.witnesses = {bind_solution("escaper", y), bind_group("g", g),
                              bind_gauge("t", c.t), bind_distance("gap", gap)};
          return report;
        }
      }
    }
  }

  report.constants["sup_gap"] = sup_gap;
  report.witnesses = {bind_solution("widest_member", sup_y),
                      bind_group("widest_shift", sup_g),
                      bind_distance("sup_gap", sup_gap)};
  report.status = Status::Verified;
  return report;
}

WitnessReport equicontinuity_falsifier(const CycleSpec& spec, const Solution& x,
                                       const GaugeEntourage& u, const GaugeBall& nbhd,
                                       std::span<const double> g_grid,
                                       std::span<const double> perturbations,
                                       const CheckConfig& cfg) {
  if (!same_solution(spec, nbhd.center, x))
    throw std::invalid_argument("neighbourhood must be centred at x");
  if (u.constraints.size() != 1 || u.constraints[0].t != 0.0)
    throw std::invalid_argument("expected a single-gauge entourage at time 0");
  const double eps0 = u.constraints[0].eps;
  if (!(eps0 < (spec.b1 - spec.b0).norm()))
    throw std::invalid_argument("entourage radius must be below d(b0, b1)");
  if (!cfg.single_cycle && x.family == Family::X)
    throw NotApplicable(
        "the default search recipe falsifies at an inner-family center");
  if (cfg.single_cycle && x.family == Family::X0)
    throw std::invalid_argument("the contrast space has no inner-family points");

  WitnessReport report;
  report.property = Property::NonEquicontinuity;
  report.sampling["nbhd_time"] = nbhd.t;
  report.sampling["nbhd_radius"] = nbhd.radius;
  report.sampling["eps0"] = eps0;
  report.sampling["g_grid_points"] = static_cast<double>(g_grid.size());

  // Candidates: X solutions through positions near eval(x, nbhd.t), both
  // legs, plus small phase perturbations; all validated against the ball.
  const Point2 q = eval(spec, x, nbhd.t);
  const Point2 dir = (spec.b2 - spec.b0).normalized();
  std::vector<Solution> candidates;
  const auto add_through = [&](const Point2& p) {
    for (const double u_phase : phases_through(spec, Family::X, p)) {
      const Solution base{Family::X, wrap_phase(u_phase - nbhd.t, spec.tau)};
      candidates.push_back(base);
      for (const double pert : perturbations)
        candidates.push_back(act(spec, pert, base));
    }
  };
  add_through(q);
  for (int j = 1; j <= 3; ++j) {
    const double r = nbhd.radius * j / 4.0;
    add_through(q + r * dir);
    add_through(q - r * dir);
  }

  std::vector<double> shifts = {0.5 * spec.tau, spec.tau0, 2.0 * spec.tau0,
                                3.0 * spec.tau0};
  shifts.insert(shifts.end(), g_grid.begin(), g_grid.end());

  double best_gap = 0.0;
  Solution best_y = x;
  double best_g = 0.0;
  int n_valid = 0;
  for (const Solution& y : candidates) {
    if (!in_ball(spec, nbhd, y) || same_solution(spec, x, y)) continue;
    ++n_valid;
    for (const double g : shifts) {
      const double gap = gauge_dist(spec, 0.0, act(spec, g, x), act(spec, g, y));
      if (gap > best_gap) {
        best_gap = gap;
        best_y = y;
        best_g = g;
      }
    }
  }
  report.sampling["candidates"] = n_valid;
  report.constants["best_gap"] = best_gap;

  if (best_gap >= eps0) {
    report.status = Status::Verified;  // escape witnessed
    report.witnesses = {bind_solution("y", best_y), bind_group("g", best_g),
                        bind_distance("gap", best_gap)};
  } else {
    report.status = Status::Falsified;  // no member of this ball escapes
    report.witnesses = {bind_distance("max_gap", best_gap)};
  }
  return report;
}

std::vector<WitnessReport> verify_all(const CycleSpec& spec, const CheckConfig& cfg) {
  std::vector<WitnessReport> out;
  out.reserve(6);

  out.push_back(transitivity_check(spec, cfg));
  out.push_back(
      minimality_falsifier(spec, 0.5 * (spec.b1 + spec.b2), cfg));
  out.push_back(dense_periodicity_check(spec, cfg.n_solutions, cfg.eq_tol, cfg));

  {
    const GaugeEntourage u_sens({{0.0, 0.1}});
    const std::vector<double> g_grid =
        linear_grid(0.0, cfg.horizon_periods * spec.tau, cfg.t_step);
    out.push_back(sensitivity_falsifier(spec, u_sens, cfg.n_neighbors, g_grid, cfg));
  }

  {
    const Solution x = cfg.single_cycle ? Solution{Family::X, 0.0}
                                        : Solution{Family::X0, 0.0};
    const GaugeEntourage u_eq({{0.0, 0.05}});
    std::vector<double> fine;
    fine.reserve(1000);
    for (int i = 0; i < 1000; ++i) fine.push_back(spec.tau * i / 1000.0);
    const std::vector<double> perts = {-2e-4, -1e-4, 1e-4, 2e-4};

    WitnessReport rep = equicontinuity_falsifier(
        spec, x, u_eq, GaugeBall(x, 0.0, 1e-3), fine, perts, cfg);

    if (!cfg.single_cycle) {
      // Sweep the neighbourhood gauge over one inner period: a witness must
      // turn up at every sampled time.
      double sweep_min = kInf;
      int found = 0;
      for (int i = 0; i < cfg.s_grid; ++i) {
        const double s = spec.tau0 * i / cfg.s_grid;
        const WitnessReport r = equicontinuity_falsifier(
            spec, x, u_eq, GaugeBall(x, s, 1e-3), fine, perts, cfg);
        if (r.status == Status::Verified) {
          ++found;
          sweep_min = std::min(sweep_min, r.constants.at("best_gap"));
        }
      }
      rep.sampling["s_grid"] = cfg.s_grid;
      rep.constants["sweep_witnesses_found"] = found;
      if (found > 0) rep.constants["sweep_min_gap"] = sweep_min;
      if (found < cfg.s_grid) rep.status = Status::Falsified;
    }

    if (spec.period_mismatch) {
      // The half-period return of the inner family underpins this check;
      // without it the outcome is not certified either way.
      rep.status = Status::Inconclusive;
      rep.notes.push_back("PeriodMismatch");
    }
    out.push_back(std::move(rep));
  }

  out.push_back(uniformity_axiom_checks(spec, GaugeEntourage({{0.0, 0.2}}), 2000,
                                        cfg.seed, cfg.single_cycle));
  return out;
}

}  // namespace gaugeflow
