#pragma once

#include <utility>
#include <vector>

#include "boundstate/errors.hpp"
#include "boundstate/model.hpp"

namespace boundstate {

// Dense polynomial in s, ascending powers.  An empty coefficient list is
// the zero polynomial; trailing exact zeros are trimmed by the arithmetic
// helpers so degree comparisons stay meaningful.
struct Polynomial {
  std::vector<double> coef;

  double eval(double s) const;
  double max_abs() const;
  int degree() const { return static_cast<int>(coef.size()) - 1; }
  bool is_zero() const { return coef.empty(); }
  void trim();
};

Polynomial poly_sum(const Polynomial& a, const Polynomial& b);
Polynomial poly_diff(const Polynomial& a, const Polynomial& b);
Polynomial poly_prod(const Polynomial& a, const Polynomial& b);
Polynomial poly_derivative(const Polynomial& a);

// numer(s) / (s^p (1-s)^q).  The iteration sequences live here: one
// iteration step raises p and q by exactly 1 and the numerator degree by
// at most 1, so everything stays closed under +, *, d/ds.
struct RationalFn {
  Polynomial numer;
  int p = 0;
  int q = 0;

  double eval(double s) const;
  double max_abs_coef() const { return numer.max_abs(); }
  bool is_zero() const { return numer.is_zero(); }
  RationalFn deriv() const;
};

// lifts to the larger of the two denominators before combining
RationalFn r_sum(const RationalFn& a, const RationalFn& b);
RationalFn r_diff(const RationalFn& a, const RationalFn& b);
RationalFn r_prod(const RationalFn& a, const RationalFn& b);

struct AimConfig {
  double s0 = 0.5;         // interior evaluation point for terminations
  int k_max = 30;          // iteration ceiling
  double c_lo = 0.0;       // search bracket; auto-derived when c_hi <= c_lo
  double c_hi = 0.0;
  double root_tol = 1e-12;       // absolute bisection tolerance in c
  double stability_tol = 1e-8;   // relative root matching across k

  void validate() const;  // throws InvalidParamsError
};

// Seed pair lambda_0 = (beta s - delta)/(s(1-s)), s_0 = eta/(s(1-s)) for a
// trial decay exponent c > 0.
std::pair<RationalFn, RationalFn> seed(const ReducedParams& red, double c);

// One iteration step:
//   lam_k = lam'_{k-1} + s_{k-1} + lam0 * lam_{k-1}
//   s_k   = s'_{k-1}   + s0 * lam_{k-1}
// Exact in the coefficients (no rescaling here).  Throws ScaleError once
// any output coefficient passes 1e300 in magnitude.
std::pair<RationalFn, RationalFn> iterate(const RationalFn& lam_prev,
                                          const RationalFn& s_prev,
                                          const RationalFn& lam0,
                                          const RationalFn& s0);

// Termination determinant lam_k s_{k-1} - lam_{k-1} s_k as a RationalFn.
RationalFn delta_k(const RationalFn& lam_k, const RationalFn& s_k,
                   const RationalFn& lam_prev, const RationalFn& s_prev);

// Sign-true values of the termination determinant at cfg.s0 for
// k = 1..k_max, computed over a ladder with per-step common rescaling of
// the (lam, s) pair; magnitudes are arbitrary but signs and zeros match
// the exact determinant.
std::vector<double> termination_values(const ReducedParams& red, double c,
                                       const AimConfig& cfg);

// Scans the c bracket (>= 512 samples), bisects every sign change of the
// termination value at each k, and keeps roots that recur at three
// consecutive k within stability_tol.  Returned descending in c, so index
// equals the radial quantum number.  Throws NoConvergenceError carrying
// the partial list if fewer than n_levels stable roots were found.
std::vector<double> solve_spectrum(const ReducedParams& red,
                                   const AimConfig& cfg = {},
                                   int n_levels = 0);

// Max over sample points of |Delta_k numerator| normalized by the product
// of the two lambda numerators' leading coefficient scales.  Near zero at
// an eigenvalue, O(coupling/lambda scale) away from one.
double s_independence_check(const ReducedParams& red, double c_root, int k,
                            const std::vector<double>& sample_points,
                            const AimConfig& cfg = {});

// True when the determinant numerator vanishes to 1e-8 relative to the
// lambda scales; at a closed-form eigenvalue c_n this holds from k = n+1.
bool polynomial_theorem_check(const RationalFn& lam_n, const RationalFn& s_n,
                              const RationalFn& lam_prev,
                              const RationalFn& s_prev);

}  // namespace boundstate
