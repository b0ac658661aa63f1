#pragma once

#include <span>
#include <vector>

#include "gaugeflow/cycle.hpp"

namespace gaugeflow {

// The acting group is (R, +); elements are plain reals, identity 0.
// The action is the time shift T(s, y) = y(s + .), which in phase terms is
// addition modulo the family period.

// Compact witness set K = [0, kappa] for the syndeticity checks.
struct SyndeticWitness {
  double kappa;

  explicit SyndeticWitness(double kappa_);
};

// T(s, sol): same family, phase shifted by s (canonicalized).
Solution act(const CycleSpec& spec, double s, const Solution& sol);

// Positive generator of the stabilizer {g : T(g, x) = x} = p Z, i.e. the
// family period.
double stabilizer_generator(const CycleSpec& spec, const Solution& sol);

// Largest sampled gap |x(t + generator) - x(t)| over a uniform grid of
// n_samples times covering one period.
double periodicity_gap(const CycleSpec& spec, const Solution& sol,
                       double generator, int n_samples);

// True iff the sampled gap for the given generator stays below tol.
bool is_periodic_with(const CycleSpec& spec, const Solution& sol,
                      double generator, double tol, int n_samples);

// Same, with the stabilizer generator of sol.
bool is_periodic(const CycleSpec& spec, const Solution& sol, double tol,
                 int n_samples);

// Right-syndeticity of S = pZ witnessed by K: for every t in the grid there
// is k in [0, kappa] with k + t in pZ; equivalently ((-t) mod p) <= kappa.
bool right_syndetic_check(double p, const SyndeticWitness& k,
                          std::span<const double> t_grid);

// Syndeticity in the translate form Kt = {k + t}: the same membership
// criterion, quantified over the grid.
bool syndetic_check(double p, const SyndeticWitness& k,
                    std::span<const double> t_grid);

}  // namespace gaugeflow
