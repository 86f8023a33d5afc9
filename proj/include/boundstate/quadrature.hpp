#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "boundstate/errors.hpp"

namespace boundstate {

// 16-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::array<double, 16> x{};
  std::array<double, 16> w{};
};

inline const GaussRule& gauss16() {
  static const GaussRule rule = [] {
    GaussRule r;
    constexpr int n = 16;
    for (int i = 0; i < n / 2; ++i) {
      // Newton on P_n from the Chebyshev-angle starting guess
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0;
      for (int it = 0; it < 64; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      r.x[i] = -x;
      r.w[i] = w;
      r.x[n - 1 - i] = x;
      r.w[n - 1 - i] = w;
    }
    return r;
  }();
  return rule;
}

template <class F>
double gauss_panel(F&& f, double a, double b) {
  const GaussRule& g = gauss16();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0;
  for (int i = 0; i < 16; ++i) acc += g.w[i] * f(mid + half * g.x[i]);
  return acc * half;
}

// Tanh-sinh rule on (0, 1).  The substitution
//   s(t) = (1 + tanh((pi/2) sinh t)) / 2
// pushes both endpoints to infinity, where trapezoid weights decay
// double-exponentially; integrable endpoint singularities s^(p-1) or
// (1-s)^(q-1) with p, q > 0 cost nothing extra.  The step is halved until
// two successive sums agree to rel_tol.
//
// f receives (s, 1-s) with each distance computed in its own logistic
// form at full relative precision; writing the integrand in terms of the
// second argument near s = 1 avoids the 2^-53 quantization of 1-s there.
template <class F>
double integrate01(F&& f, double rel_tol = 1e-11) {
  constexpr double t_max = 6.5;
  const double half_pi = std::numbers::pi / 2.0;
  double prev = 0;
  bool have_prev = false;
  for (int level = 0; level <= 8; ++level) {
    const double h = 0.5 / (1 << level);
    const int m = static_cast<int>(t_max / h);
    double acc = 0;
    for (int k = -m; k <= m; ++k) {
      const double t = k * h;
      const double z = half_pi * std::sinh(t);
      const double e = std::exp(-2.0 * std::abs(z));
      const double near = e / (1.0 + e), far = 1.0 / (1.0 + e);
      if (near <= 0.0) continue;  // below double range, weight ~ e^-700
      const double x = z >= 0 ? far : near;
      const double omx = z >= 0 ? near : far;
      acc += std::cosh(t) * x * omx * f(x, omx);
    }
    acc *= 2.0 * half_pi * h;
    if (have_prev &&
        std::abs(acc - prev) <= rel_tol * std::max(1.0, std::abs(acc))) {
      return acc;
    }
    prev = acc;
    have_prev = true;
  }
  throw Error("integrate01: step halving did not converge");
}

}  // namespace boundstate
