#pragma once

#include "boundstate/errors.hpp"

namespace boundstate {

// Screened radial potential (hbar = 1)
//
//   V(r) = V1/r^2 + V2 exp(-alpha r)/r + V3 coth(alpha r) + V4
//
// alpha > 0 sets the screening range.  Pure Coulomb-type limits are taken
// through a small finite alpha (see kSentinelAlpha); alpha = 0 is rejected.
struct PotentialSpec {
  double v1 = 0;
  double v2 = 0;
  double v3 = 0;
  double v4 = 0;
  double alpha = 1;

  void validate() const;  // throws InvalidParamsError
};

// Default stand-in for the alpha -> 0 limit.
inline constexpr double kSentinelAlpha = 1e-8;

// Mass M, spatial dimension D >= 1 and angular momentum l >= 0.
// D = 1 and D = 2 are allowed; the centrifugal constant can be negative there.
struct RadialProblem {
  double mass = 1;
  int dim = 3;
  int ell = 0;

  void validate() const;  // throws InvalidParamsError
};

struct QuantumNumbers {
  int n = 0;  // radial quantum number = node count
  int ell = 0;
};

// Parameters of the equation obtained by the substitution s = exp(-2 alpha r)
// after the exponential (Pekeris-type) replacement of the 1/r^2 and 1/r
// channels.  beta, delta, eta are the seed coefficients entering the
// iteration engine; they depend on the per-level decay exponent c.
struct ReducedParams {
  double n_d_ell;  // (D+2l-1)(D+2l-3)/4
  double gamma;    // positive root of g(g-1) = 2 M V1 + n_d_ell
  double a_coef;   // M V2 / alpha
  double b_coef;   // M V3 / (2 alpha^2)

  // carried along for energy reconstruction and grid sizing
  double alpha;
  double mass;
  double v4;

  double beta(double c) const { return 2 * c + 2 * gamma + 1; }
  double delta(double c) const { return 2 * c + 1; }
  double eta(double c) const {
    return gamma * gamma + 2 * c * gamma + a_coef + 2 * b_coef;
  }
};

// (D+2l-1)(D+2l-3)/4, computed in integer arithmetic; exact for all D, l.
double centrifugal_constant(const RadialProblem& prob);

// Maps (potential, problem) to the reduced parameter set.
// Throws FallToCenterError when 8 M V1 + (D+2l-2)^2 < 0.
ReducedParams reduce(const PotentialSpec& pot, const RadialProblem& prob);

// Decay exponent of level n:
//   c_n = -[(gamma+n)^2 + A + 2B] / (2 (gamma+n)),
// the positive branch of c^2 = eps_n^2 + B.  Throws NotBoundError when
// c_n <= 0 (level not bound).
double decay_exponent(const ReducedParams& red, int n);

}  // namespace boundstate
