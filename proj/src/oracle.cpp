#include "boundstate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "boundstate/spectrum.hpp"

namespace boundstate {

void GridSpec::validate(double alpha) const {
  if (!(r_min > 0.0) || !(r_min < r_max)) {
    throw InvalidParamsError("GridSpec: need 0 < r_min < r_max");
  }
  if (points < 200) throw InvalidParamsError("GridSpec: points must be >= 200");
  if (refinement_levels < 1 || refinement_levels > 6) {
    throw InvalidParamsError("GridSpec: refinement_levels must be in [1, 6]");
  }
  if (!override_range && !(r_max * alpha >= 5.0)) {
    throw InvalidParamsError(
        "GridSpec: r_max * alpha < 5 truncates the decay tail; "
        "set override_range to accept the window");
  }
}

GridSpec default_grid(const PotentialSpec& pot, const RadialProblem& prob,
                      double c_min_hint) {
  pot.validate();
  prob.validate();
  GridSpec g;
  double rmax = 8.0 / pot.alpha;
  if (c_min_hint > 0.0) {
    rmax = std::min(rmax, 12.0 / (pot.alpha * c_min_hint));
  }
  g.r_max = rmax;
  g.r_min = 1e-9 * rmax;
  g.override_range = rmax * pot.alpha < 5.0;
  return g;
}

double effective_potential(const PotentialSpec& pot, const RadialProblem& prob,
                           PotentialForm form, double r) {
  if (!(r > 0.0)) {
    throw InvalidParamsError("effective_potential: r must be > 0");
  }
  const double cent = pot.v1 + centrifugal_constant(prob) / (2.0 * prob.mass);
  if (form == PotentialForm::exact) {
    return cent / (r * r) + pot.v2 * std::exp(-pot.alpha * r) / r +
           pot.v3 / std::tanh(pot.alpha * r) + pot.v4;
  }
  const double s = std::exp(-2.0 * pot.alpha * r);
  const double oms = -std::expm1(-2.0 * pot.alpha * r);
  const double a = pot.alpha;
  return cent * 4.0 * a * a * s / (oms * oms) + pot.v2 * 2.0 * a * s / oms +
         pot.v3 * (1.0 + s) / oms + pot.v4;
}

namespace {

// eigenvalues of the discretized operator strictly below x, by Sturm count
// on the LDL^T pivots of (T - x I)
int count_below(const std::vector<double>& diag, double off, double x) {
  int cnt = 0;
  double d = 1.0;
  const double off2 = off * off;
  for (size_t i = 0; i < diag.size(); ++i) {
    d = diag[i] - x - (i ? off2 / d : 0.0);
    if (d == 0.0) d = -std::numeric_limits<double>::min();
    if (d < 0.0) ++cnt;
  }
  return cnt;
}

// one inverse-iteration pass: solves (T - shift I) x = rhs in place via
// Gaussian elimination with partial pivoting (tridiagonal plus one fill-in
// band); near-singularity at an eigenvalue is the working regime, so zero
// pivots are nudged instead of rejected
void shifted_solve(const std::vector<double>& diag, double off, double shift,
                   std::vector<double>& x) {
  const size_t n = diag.size();
  std::vector<double> d0(n), d1(n, 0.0), d2(n, 0.0);
  for (size_t i = 0; i < n; ++i) d0[i] = diag[i] - shift;
  for (size_t i = 0; i + 1 < n; ++i) d1[i] = off;
  std::vector<double> sub(n, 0.0);
  for (size_t i = 0; i + 1 < n; ++i) sub[i] = off;

  const double tiny = 1e-30 * (std::abs(off) + 1.0);
  for (size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(sub[i]) > std::abs(d0[i])) {
      std::swap(d0[i], sub[i]);
      std::swap(d1[i], d0[i + 1]);
      std::swap(d2[i], d1[i + 1]);
      std::swap(x[i], x[i + 1]);
    }
    if (d0[i] == 0.0) d0[i] = tiny;
    const double m = sub[i] / d0[i];
    d0[i + 1] -= m * d1[i];
    d1[i + 1] -= m * d2[i];
    x[i + 1] -= m * x[i];
  }
  if (d0[n - 1] == 0.0) d0[n - 1] = tiny;
  for (size_t i = n; i-- > 0;) {
    double v = x[i] - (i + 1 < n ? d1[i] * x[i + 1] : 0.0) -
               (i + 2 < n ? d2[i] * x[i + 2] : 0.0);
    x[i] = v / d0[i];
  }
}

void normalize_max(std::vector<double>& x) {
  double m = 0;
  for (const double v : x) m = std::max(m, std::abs(v));
  if (m > 0) {
    for (double& v : x) v /= m;
  }
}

}  // namespace

std::vector<double> solve_single_grid(
    const PotentialSpec& pot, const RadialProblem& prob, PotentialForm form,
    double r_min, double r_max, int points, int n_states,
    std::vector<std::vector<double>>* vectors) {
  pot.validate();
  prob.validate();
  if (n_states < 1) {
    throw InvalidParamsError("solve_single_grid: n_states must be >= 1");
  }
  const double h = (r_max - r_min) / (points + 1);
  const double off = -1.0 / (2.0 * prob.mass * h * h);
  std::vector<double> diag(points);
  double vmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double v =
        effective_potential(pot, prob, form, r_min + (i + 1) * h);
    diag[i] = 1.0 / (prob.mass * h * h) + v;
    vmin = std::min(vmin, v);
  }

  const double threshold = pot.v3 + pot.v4;
  const int avail = count_below(diag, off, threshold);
  if (avail == 0) {
    throw NoBoundStatesError(
        "solve_single_grid: no eigenvalue below the continuum threshold");
  }
  const int m = std::min(n_states, avail);

  // diag - 2|off| = V(r_i), so the potential minimum is a Gershgorin floor
  const double floor = vmin - 1.0;
  std::vector<double> out(m);
  for (int idx = 0; idx < m; ++idx) {
    double lo = floor, hi = threshold;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (!(mid > lo && mid < hi)) break;
      if (count_below(diag, off, mid) >= idx + 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out[idx] = 0.5 * (lo + hi);
  }

  if (vectors) {
    vectors->clear();
    for (int idx = 0; idx < m; ++idx) {
      std::vector<double> x(points);
      for (int i = 0; i < points; ++i) {
        x[i] = std::sin(0.7 * (i + 1)) + 0.1;  // fixed nondegenerate start
      }
      for (int pass = 0; pass < 3; ++pass) {
        shifted_solve(diag, off, out[idx], x);
        normalize_max(x);
      }
      vectors->push_back(std::move(x));
    }
  }
  return out;
}

OracleResult solve(const PotentialSpec& pot, const RadialProblem& prob,
                   PotentialForm form, const GridSpec& grid, int n_states) {
  grid.validate(pot.alpha);
  int pts = grid.points;
  std::vector<double> coarse = solve_single_grid(pot, prob, form, grid.r_min,
                                                 grid.r_max, pts, n_states);
  OracleResult res;
  res.form = form;
  std::vector<double> fine;
  for (int lev = 0; lev < grid.refinement_levels; ++lev) {
    pts = 2 * pts + 1;  // halves h exactly
    const bool last = lev + 1 == grid.refinement_levels;
    fine = solve_single_grid(pot, prob, form, grid.r_min, grid.r_max, pts,
                             n_states, last ? &res.eigenvectors : nullptr);
    if (!last) coarse = fine;
  }

  const size_t m = std::min(coarse.size(), fine.size());
  for (size_t i = 0; i < m; ++i) {
    const double diff = fine[i] - coarse[i];
    const double extrap = fine[i] + diff / 3.0;
    const double est =
        std::max(std::abs(diff) / 3.0,
                 4.0 * std::numeric_limits<double>::epsilon() *
                     std::max(std::abs(extrap), 1.0));
    if (est > 1e-4 * std::max(std::abs(extrap), 1e-15)) {
      throw GridTooCoarseError(
          "solve: Richardson estimate " + std::to_string(est) +
          " exceeds 1e-4 |E| for state " + std::to_string(i));
    }
    res.eigenvalues.push_back(extrap);
    res.grid_error_estimate.push_back(est);
  }
  res.eigenvectors.resize(std::min(res.eigenvectors.size(), m));

  const double hf = (grid.r_max - grid.r_min) / (pts + 1);
  res.grid_r.resize(pts);
  for (int i = 0; i < pts; ++i) res.grid_r[i] = grid.r_min + (i + 1) * hf;
  return res;
}

std::vector<PekerisErrorRow> pekeris_error_report(const PotentialSpec& pot,
                                                  const RadialProblem& prob,
                                                  const GridSpec& grid,
                                                  int n_states) {
  const OracleResult ex =
      solve(pot, prob, PotentialForm::exact, grid, n_states);
  std::vector<PekerisErrorRow> rows;
  for (int n = 0; n < static_cast<int>(ex.eigenvalues.size()); ++n) {
    const QuantumNumbers q{n, prob.ell};
    if (!admissible(pot, prob, q)) break;
    const double ec = energy(pot, prob, q);
    const double eo = ex.eigenvalues[n];
    rows.push_back({n, eo, ec, std::abs(eo - ec) / std::abs(eo)});
  }
  return rows;
}

int count_sign_changes(const std::vector<double>& v, double rel_threshold) {
  double m = 0;
  for (const double x : v) m = std::max(m, std::abs(x));
  const double cut = rel_threshold * m;
  int count = 0;
  int last = 0;
  for (const double x : v) {
    if (std::abs(x) <= cut) continue;
    const int sgn = x > 0 ? 1 : -1;
    if (last != 0 && sgn != last) ++count;
    last = sgn;
  }
  return count;
}

}  // namespace boundstate
