#pragma once

#include <vector>

#include "boundstate/errors.hpp"
#include "boundstate/model.hpp"

namespace boundstate {

// Which radial potential the grid solver discretizes: the exact one, or the
// form whose 1/r and 1/r^2 channels are replaced by exponential-ratio
// surrogates in s = e^{-2 alpha r}.  The coth channel is identical in both.
enum class PotentialForm { exact, pekeris };

struct GridSpec {
  double r_min = 0;
  double r_max = 0;
  int points = 3000;          // interior nodes at the base resolution
  int refinement_levels = 1;  // grid doublings behind the error estimate
  // r_max * alpha < 5 truncates the tail of slowly decaying states; the
  // flag records that the caller (or default_grid, for tiny alpha) accepts
  // a window chosen from the decay exponent instead.
  bool override_range = false;

  void validate(double alpha) const;
};

// r_max = 8/alpha shortened to 12/(alpha c) when a decay exponent for the
// slowest-decaying state of interest is known; r_min deep enough that the
// r^gamma falloff makes the inner Dirichlet wall invisible.
GridSpec default_grid(const PotentialSpec& pot, const RadialProblem& prob,
                      double c_min_hint = 0.0);

struct OracleResult {
  std::vector<double> eigenvalues;          // ascending, extrapolated
  std::vector<double> grid_error_estimate;  // positive, same length
  PotentialForm form = PotentialForm::pekeris;
  std::vector<double> grid_r;                     // finest grid radii
  std::vector<std::vector<double>> eigenvectors;  // finest grid, max-norm 1
};

double effective_potential(const PotentialSpec& pot, const RadialProblem& prob,
                           PotentialForm form, double r);

// Lowest eigenvalues below the continuum threshold V3 + V4 of the 3-point
// discretization of -R''/(2M) + V_eff R on one uniform grid with Dirichlet
// ends.  Returns fewer than n_states when fewer are bound; throws
// NoBoundStatesError when none are.  Eigenvectors, when requested, come
// from inverse iteration and are scaled to unit max-norm.
std::vector<double> solve_single_grid(
    const PotentialSpec& pot, const RadialProblem& prob, PotentialForm form,
    double r_min, double r_max, int points, int n_states,
    std::vector<std::vector<double>>* vectors = nullptr);

// Runs solve_single_grid through refinement_levels grid doublings; returns
// Richardson-extrapolated eigenvalues with |E(h) - E(h/2)|/3 as the error
// estimate from the last pair.  Throws GridTooCoarseError when an estimate
// exceeds 1e-4 |E| at the finest grid.
OracleResult solve(const PotentialSpec& pot, const RadialProblem& prob,
                   PotentialForm form, const GridSpec& grid, int n_states);

struct PekerisErrorRow {
  int n = 0;
  double e_exact_oracle = 0;  // grid eigenvalue of the exact potential
  double e_closed_form = 0;   // closed-form level of the surrogate potential
  double rel_diff = 0;
};

// Pairs grid eigenvalues of the exact potential with closed-form levels by
// index, up to n_states or the first inadmissible level.
std::vector<PekerisErrorRow> pekeris_error_report(const PotentialSpec& pot,
                                                  const RadialProblem& prob,
                                                  const GridSpec& grid,
                                                  int n_states);

// Sign alternations in v, ignoring entries below rel_threshold * max|v|.
int count_sign_changes(const std::vector<double>& v,
                       double rel_threshold = 1e-7);

}  // namespace boundstate
