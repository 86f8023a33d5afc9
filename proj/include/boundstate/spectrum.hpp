#pragma once

#include <vector>

#include "boundstate/model.hpp"

namespace boundstate {

struct BoundState {
  int n = 0;
  int ell = 0;
  double energy = 0;
  double c = 0;      // decay exponent of the level
  double gamma = 0;  // shared by all levels of the same (D, ell)
  // E > 0 is possible when V4 > 0; such states still sit below the
  // continuum threshold V3 + V4 and are reported with this flag set.
  bool positive_energy = false;
};

// Closed-form level energy
//   E_nl = V4 - (1/2M) [ alpha^2 (gamma+n)^2 + 2 M V2 alpha
//                        + M^2 (V2 + V3/alpha)^2 / (gamma+n)^2 ].
// Throws NotBoundError when the level fails the binding condition.
double energy(const PotentialSpec& pot, const RadialProblem& prob,
              const QuantumNumbers& q);

// Same energy reconstructed from a decay exponent: E = V4 - 2 a^2 (c^2 - B)/M.
// Used to turn iteration-engine roots into energies.
double energy_from_decay(const ReducedParams& red, double c);

// Binding condition (gamma+n)^2 + A + 2B < 0, strict.
bool admissible(const PotentialSpec& pot, const RadialProblem& prob,
                const QuantumNumbers& q);

// All bound levels with ell <= ell_max, ordered by (ell, n).  Returns an
// empty vector when nothing is bound.  The per-ell level count is bounded
// by sqrt(-(A+2B)) - gamma; a bound above 10^6 levels is rejected as a
// safety limit.
std::vector<BoundState> enumerate_bound_states(const PotentialSpec& pot,
                                               const RadialProblem& prob,
                                               int ell_max);

}  // namespace boundstate
