#include "gaugeflow/action.hpp"

#include <cmath>
#include <stdexcept>

namespace gaugeflow {

SyndeticWitness::SyndeticWitness(double kappa_) : kappa(kappa_) {
  if (!(kappa_ > 0.0) || !std::isfinite(kappa_))
    throw std::invalid_argument("syndetic witness needs kappa > 0");
}

Solution act(const CycleSpec& spec, double s, const Solution& sol) {
  return {sol.family, wrap_phase(sol.phase + s, period(spec, sol.family))};
}

double stabilizer_generator(const CycleSpec& spec, const Solution& sol) {
  return period(spec, sol.family);
}

double periodicity_gap(const CycleSpec& spec, const Solution& sol,
                       double generator, int n_samples) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  const double span = period(spec, sol.family);
  double gap = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double t = span * static_cast<double>(i) / n_samples;
    gap = std::max(gap, (eval(spec, sol, t + generator) - eval(spec, sol, t)).norm());
  }
  return gap;
}

bool is_periodic_with(const CycleSpec& spec, const Solution& sol,
                      double generator, double tol, int n_samples) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  return periodicity_gap(spec, sol, generator, n_samples) < tol;
}

bool is_periodic(const CycleSpec& spec, const Solution& sol, double tol,
                 int n_samples) {
  return is_periodic_with(spec, sol, stabilizer_generator(spec, sol), tol,
                          n_samples);
}

bool right_syndetic_check(double p, const SyndeticWitness& k,
                          std::span<const double> t_grid) {
  if (!(p > 0.0)) throw std::invalid_argument("stabilizer generator must be > 0");
  for (const double t : t_grid) {
    const double need = wrap_phase(-t, p);  // least k >= 0 with k + t in pZ
    if (!(need <= k.kappa)) return false;
  }
  return true;
}

bool syndetic_check(double p, const SyndeticWitness& k,
                    std::span<const double> t_grid) {
  if (!(p > 0.0)) throw std::invalid_argument("stabilizer generator must be > 0");
  for (const double t : t_grid) {
    // Kt = {k + t : k in [0, kappa]} meets pZ iff the gap up to the next
    // multiple of p fits inside kappa.
    const double need = wrap_phase(-t, p);
    if (!(need <= k.kappa)) return false;
  }
  return true;
}

}  // namespace gaugeflow
