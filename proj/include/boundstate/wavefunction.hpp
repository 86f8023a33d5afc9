#pragma once

#include <vector>

#include "boundstate/model.hpp"
#include "boundstate/spectrum.hpp"

namespace boundstate {

// Closed-form reduced radial eigenfunction
//
//   R(r) = K * s^c * (1-s)^gamma * P(s),   s = exp(-2 alpha r),
//
// where P is the terminating Gauss series of degree n.  The alternating
// prefactor and Pochhammer ratio conventionally attached to the polynomial
// are absorbed into K, so poly[0] = 1 always.
struct RadialWavefunction {
  int n = 0;
  int ell = 0;
  int dim = 3;
  double mass = 1;
  double alpha = 1;
  double c = 0;
  double gamma = 0;
  double k_norm = 1;
  std::vector<double> poly;  // ascending powers of s, size n+1
};

// Terminating series sum_{j=0}^{n} [(-n)_j (b)_j / ((c)_j j!)] s^j by forward
// recurrence on the term ratio.  Throws InvalidParamsError when c is a
// non-positive integer with |c| < n (a denominator Pochhammer hits zero).
double hypergeometric_2f1_terminating(int n, double b, double c, double s);

// Normalization factor from the closed-form integral of |R|^2, evaluated in
// log space.  Throws ScaleError if the result is outside double range.
double normalization_constant(const BoundState& st, double alpha);

// Builds the normalized eigenfunction for level (n, ell).
RadialWavefunction make_wavefunction(const PotentialSpec& pot,
                                     const RadialProblem& prob,
                                     const QuantumNumbers& q);

// R(r) for r >= 0.
double radial_eval(const RadialWavefunction& wf, double r);

// r^(-(D-1)/2) * R(r), the full radial dependence; requires r > 0.
double full_radial_factor(const RadialWavefunction& wf, double r);

// P(s) and derivatives by Horner on the stored coefficients.
double poly_eval(const RadialWavefunction& wf, double s);
double poly_deriv(const RadialWavefunction& wf, double s);
double poly_deriv2(const RadialWavefunction& wf, double s);

// Sign changes of R over a strictly increasing grid (>= 2 points).  Exact
// zeros at isolated grid points are skipped; two consecutive zeros raise
// GridTooCoarseError.
int count_nodes(const RadialWavefunction& wf, const std::vector<double>& grid);

// Evaluation grid for node counting: uniform in s across the region where
// both s^c and (1-s)^gamma are non-negligible, mapped to r.
std::vector<double> default_node_grid(const RadialWavefunction& wf,
                                      int points = 0);

// Radius beyond which exp(-2 alpha r c) has fallen below 1e-10.
double decay_radius(const RadialWavefunction& wf);

// (1/2a) * Integral of (R(s))^2 / s over (0,1); equals 1 for a correctly
// normalized state.  Quadrature tolerance ~1e-11.
double normalization_integral(const RadialWavefunction& wf);

}  // namespace boundstate
