#include "boundstate/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "boundstate/quadrature.hpp"

namespace boundstate {

double hypergeometric_2f1_terminating(int n, double b, double c, double s) {
  if (n < 0) {
    throw InvalidParamsError("hypergeometric_2f1_terminating: n must be >= 0");
  }
  if (c <= 0 && c == std::floor(c) && -c <= static_cast<double>(n - 1)) {
    throw InvalidParamsError(
        "hypergeometric_2f1_terminating: denominator parameter c = " +
        std::to_string(c) + " hits a Pochhammer zero within " +
        std::to_string(n) + " terms");
  }
  double term = 1.0, acc = 1.0;
  for (int j = 0; j < n; ++j) {
    term *= (static_cast<double>(-n + j) * (b + j)) /
            ((c + j) * (j + 1.0)) * s;
    acc += term;
  }
  return acc;
}

double normalization_constant(const BoundState& st, double alpha) {
  if (!(st.c > 0) || !(st.gamma > 0) || st.n < 0 || !(alpha > 0)) {
    throw InvalidParamsError("normalization_constant: need c > 0, gamma > 0, "
                             "n >= 0, alpha > 0");
  }
  const double n = st.n, c = st.c, g = st.gamma;
  const double log_k2 = std::log(2.0 * alpha) + std::log(n + c + g) +
                        std::lgamma(n + 2.0 * c + 1.0) +
                        std::lgamma(n + 2.0 * (c + g)) -
                        std::lgamma(n + 1.0) - std::log(n + g) -
                        std::lgamma(n + 2.0 * g) - std::lgamma(2.0 * c) -
                        std::lgamma(2.0 * c + 1.0);
  const double half = 0.5 * log_k2;
  if (!std::isfinite(half) || half > 709.0) {
    throw ScaleError("normalization_constant: log K = " +
                     std::to_string(half) + " outside double range");
  }
  return std::exp(half);
}

RadialWavefunction make_wavefunction(const PotentialSpec& pot,
                                     const RadialProblem& prob,
                                     const QuantumNumbers& q) {
  RadialProblem p = prob;
  p.ell = q.ell;
  const ReducedParams red = reduce(pot, p);
  const double c = decay_exponent(red, q.n);  // throws NotBoundError

  RadialWavefunction wf;
  wf.n = q.n;
  wf.ell = q.ell;
  wf.dim = prob.dim;
  wf.mass = prob.mass;
  wf.alpha = pot.alpha;
  wf.c = c;
  wf.gamma = red.gamma;

  // series coefficients of P(s) = F(-n, 2(c+gamma)+n, 1+2c; s)
  const double b2 = 2.0 * (c + red.gamma) + q.n;
  const double cc = 1.0 + 2.0 * c;
  wf.poly.assign(static_cast<size_t>(q.n) + 1, 0.0);
  wf.poly[0] = 1.0;
  for (int j = 0; j < q.n; ++j) {
    wf.poly[j + 1] = wf.poly[j] * (static_cast<double>(-q.n + j) * (b2 + j)) /
                     ((cc + j) * (j + 1.0));
  }

  BoundState st;
  st.n = q.n;
  st.c = c;
  st.gamma = red.gamma;
  wf.k_norm = normalization_constant(st, pot.alpha);
  return wf;
}

double poly_eval(const RadialWavefunction& wf, double s) {
  double acc = 0;
  for (size_t i = wf.poly.size(); i-- > 0;) acc = acc * s + wf.poly[i];
  return acc;
}

double poly_deriv(const RadialWavefunction& wf, double s) {
  double acc = 0;
  for (size_t i = wf.poly.size(); i-- > 1;) acc = acc * s + i * wf.poly[i];
  return acc;
}

double poly_deriv2(const RadialWavefunction& wf, double s) {
  double acc = 0;
  for (size_t i = wf.poly.size(); i-- > 2;)
    acc = acc * s + i * (i - 1.0) * wf.poly[i];
  return acc;
}

double radial_eval(const RadialWavefunction& wf, double r) {
  if (r < 0) throw InvalidParamsError("radial_eval: r must be >= 0");
  const double x = 2.0 * wf.alpha * r;
  const double s = std::exp(-x);
  const double one_minus_s = -std::expm1(-x);  // accurate for small alpha*r
  if (one_minus_s == 0.0) return 0.0;          // r = 0
  return wf.k_norm * std::exp(-x * wf.c) *
         std::pow(one_minus_s, wf.gamma) * poly_eval(wf, s);
}

double full_radial_factor(const RadialWavefunction& wf, double r) {
  if (!(r > 0)) {
    throw InvalidParamsError("full_radial_factor: r must be > 0");
  }
  return std::pow(r, -0.5 * (wf.dim - 1)) * radial_eval(wf, r);
}

int count_nodes(const RadialWavefunction& wf,
                const std::vector<double>& grid) {
  if (grid.size() < 2) {
    throw InvalidParamsError("count_nodes: grid needs at least 2 points");
  }
  for (size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw InvalidParamsError("count_nodes: grid must be strictly increasing");
    }
  }
  int nodes = 0, prev_sign = 0;
  bool prev_zero = false;
  for (const double r : grid) {
    const double v = radial_eval(wf, r);
    const int sgn = (v > 0) - (v < 0);
    if (sgn == 0) {
      if (prev_zero) {
        throw GridTooCoarseError(
            "count_nodes: consecutive zero samples near r = " +
            std::to_string(r));
      }
      prev_zero = true;
      continue;
    }
    if (prev_sign != 0 && sgn != prev_sign) ++nodes;
    prev_sign = sgn;
    prev_zero = false;
  }
  return nodes;
}

std::vector<double> default_node_grid(const RadialWavefunction& wf,
                                      int points) {
  if (points <= 0) points = std::max(4096, 64 * (wf.n + 1));
  // s^c = 1e-8 at s_lo (with margin), (1-s)^gamma = 1e-6 at s_hi
  const double s_lo = 0.5 * std::pow(10.0, -8.0 / wf.c);
  const double s_hi = 1.0 - std::pow(10.0, -6.0 / wf.gamma);
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    const double s = s_hi - (s_hi - s_lo) * i / (points - 1.0);
    grid[i] = -std::log(s) / (2.0 * wf.alpha);
  }
  return grid;
}

double decay_radius(const RadialWavefunction& wf) {
  return (10.0 / wf.c) * std::log(10.0) / (2.0 * wf.alpha);
}

double normalization_integral(const RadialWavefunction& wf) {
  const double c = wf.c, g = wf.gamma;
  const double log_k2 = 2.0 * std::log(wf.k_norm);
  // K^2 stays inside the exponential: the s -> 0 wing would otherwise
  // overflow for small decay exponents before the quadrature weight damps it
  const auto f = [&](double s, double one_minus_s) {
    const double p = poly_eval(wf, s);
    return std::exp(log_k2 + (2.0 * c - 1.0) * std::log(s) +
                    2.0 * g * std::log(one_minus_s)) *
           p * p;
  };
  return integrate01(f, 1e-11) / (2.0 * wf.alpha);
}

}  // namespace boundstate
