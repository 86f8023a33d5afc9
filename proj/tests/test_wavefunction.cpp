#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "boundstate/errors.hpp"
#include "boundstate/quadrature.hpp"
#include "boundstate/wavefunction.hpp"
#include "support.hpp"

using namespace boundstate;

namespace {

double pochhammer(double x, int j) {
  double p = 1;
  for (int k = 0; k < j; ++k) p *= x + k;
  return p;
}

// term-by-term sum with independent Pochhammer products, accumulated from
// the highest power down (different rounding path than the implementation)
double gauss_sum_bruteforce(int n, double b, double c, double s) {
  double acc = 0;
  for (int j = n; j >= 0; --j) {
    acc += pochhammer(-n, j) * pochhammer(b, j) /
           (pochhammer(c, j) * pochhammer(1.0, j)) * std::pow(s, j);
  }
  return acc;
}

// closed form of Integral s^(2c-1) (1-s)^(2g) P_n(s)^2 ds over (0,1) for
// P_n(s) = F(-n, 2(c+g)+n; 1+2c; s); equals (2 alpha)/K^2
double poly_norm_closed_form(double c, double g, int n) {
  return std::exp(std::lgamma(n + 1.0) + std::log(n + g) +
                  std::lgamma(n + 2.0 * g) + std::lgamma(2.0 * c) +
                  std::lgamma(2.0 * c + 1.0) - std::log(n + c + g) -
                  std::lgamma(n + 2.0 * c + 1.0) -
                  std::lgamma(n + 2.0 * (c + g)));
}

double poly_norm_quadrature(double c, double g, int n) {
  const auto f = [&](double s, double one_minus_s) {
    const double p =
        hypergeometric_2f1_terminating(n, 2.0 * (c + g) + n, 1.0 + 2.0 * c, s);
    return std::pow(s, 2.0 * c - 1.0) * std::pow(one_minus_s, 2.0 * g) * p * p;
  };
  return integrate01(f, 1e-11);
}

}  // namespace

TEST_CASE("terminating series matches explicit Pochhammer sums") {
  const struct {
    int n;
    double b, c, s;
  } cases[] = {{3, 4.5, 3.2, 0.7},
               {5, 1.25, 0.75, 0.35},
               {2, -0.5, 1.1, 0.9},
               {6, 9.0, 2.4, 0.12}};
  for (const auto& cs : cases) {
    const double want = gauss_sum_bruteforce(cs.n, cs.b, cs.c, cs.s);
    const double got = hypergeometric_2f1_terminating(cs.n, cs.b, cs.c, cs.s);
    CHECK(got == doctest::Approx(want).epsilon(1e-14));
  }
}

TEST_CASE("terminating series special values") {
  CHECK(hypergeometric_2f1_terminating(0, 3.7, 1.2, 0.6) == 1.0);
  CHECK(hypergeometric_2f1_terminating(4, 3.7, 1.2, 0.0) == 1.0);
  // n=1: 1 - (b/c) s
  CHECK(hypergeometric_2f1_terminating(1, 5.0, 2.0, 0.5) ==
        doctest::Approx(-0.25).epsilon(1e-15));
  // equal upper/lower parameter collapses to the binomial (1-s)^n
  CHECK(hypergeometric_2f1_terminating(4, 2.7, 2.7, 0.3) ==
        doctest::Approx(std::pow(0.7, 4)).epsilon(1e-14));
  // s = 1 evaluates to (c-b)_n / (c)_n
  CHECK(hypergeometric_2f1_terminating(2, 1.5, 2.5, 1.0) ==
        doctest::Approx((1.0 * 2.0) / (2.5 * 3.5)).epsilon(1e-14));
}

TEST_CASE("denominator Pochhammer zeros are rejected") {
  CHECK_THROWS_AS(hypergeometric_2f1_terminating(2, 1.0, -1.0, 0.5),
                  InvalidParamsError);
  CHECK_THROWS_AS(hypergeometric_2f1_terminating(1, 1.0, 0.0, 0.5),
                  InvalidParamsError);
  CHECK_THROWS_AS(hypergeometric_2f1_terminating(-1, 1.0, 1.0, 0.5),
                  InvalidParamsError);
  // c = -3 with n = 3 stays clear: (c)_j only needs c..c+2 nonzero
  CHECK_NOTHROW(hypergeometric_2f1_terminating(3, 1.0, -3.0, 0.5));
}

TEST_CASE("polynomial norm integral matches the closed form") {
  // hand-reduced rational values first
  CHECK(poly_norm_closed_form(1.0, 1.0, 1) ==
        doctest::Approx(1.0 / 54.0).epsilon(1e-13));
  CHECK(poly_norm_closed_form(1.5, 2.0, 0) ==
        doctest::Approx(1.0 / 105.0).epsilon(1e-13));
  const struct {
    double c, g;
    int n;
  } cases[] = {{1.0, 1.0, 1},  {1.5, 2.0, 0}, {0.7, 1.25, 2},
               {2.2, 1.8, 3},  {0.35, 1.0, 1}, {3.0, 1.0, 4}};
  for (const auto& cs : cases) {
    const double want = poly_norm_closed_form(cs.c, cs.g, cs.n);
    const double got = poly_norm_quadrature(cs.c, cs.g, cs.n);
    CHECK(got == doctest::Approx(want).epsilon(2e-9));
  }
}

TEST_CASE("normalization constant, hand-checked case") {
  // c = gamma = 1, n = 0, alpha = 1/2: integral of K^2 s (1-s)^2 ds = 1
  // gives K^2 = 1/B(2,3) = 12
  BoundState st;
  st.n = 0;
  st.c = 1.0;
  st.gamma = 1.0;
  CHECK(normalization_constant(st, 0.5) ==
        doctest::Approx(std::sqrt(12.0)).epsilon(1e-14));
  st.c = -0.2;
  CHECK_THROWS_AS(normalization_constant(st, 0.5), InvalidParamsError);
}

TEST_CASE("randomized states integrate to unit norm") {
  std::mt19937_64 rng(testsupport::seed_from_env(7241u));
  for (int trial = 0; trial < 8; ++trial) {
    const auto rp = testsupport::draw_case(rng);
    for (int n = 0; n <= 3; ++n) {
      const auto wf =
          make_wavefunction(rp.pot, rp.prob, {n, rp.prob.ell});
      CAPTURE(trial);
      CAPTURE(n);
      CHECK(normalization_integral(wf) == doctest::Approx(1.0).epsilon(1e-8));
      CHECK(radial_eval(wf, 0.0) == 0.0);
    }
    CHECK_THROWS_AS(make_wavefunction(rp.pot, rp.prob, {9, rp.prob.ell}),
                    NotBoundError);
  }
}

TEST_CASE("node count equals the radial quantum number") {
  std::mt19937_64 rng(testsupport::seed_from_env(90217u));
  for (int trial = 0; trial < 12; ++trial) {
    const auto rp = testsupport::draw_case(rng);
    for (int n = 0; n <= 3; ++n) {
      const auto wf =
          make_wavefunction(rp.pot, rp.prob, {n, rp.prob.ell});
      CAPTURE(trial);
      CAPTURE(n);
      CHECK(count_nodes(wf, default_node_grid(wf)) == n);
    }
  }
}

TEST_CASE("transformed-equation residual vanishes for eigenstates") {
  std::mt19937_64 rng(testsupport::seed_from_env(31337u));
  std::uniform_real_distribution<double> sd(0.01, 0.99);
  for (int trial = 0; trial < 4; ++trial) {
    const auto rp = testsupport::draw_case(rng);
    const ReducedParams red = reduce(rp.pot, rp.prob);
    for (int n = 0; n <= 3; ++n) {
      const auto wf =
          make_wavefunction(rp.pot, rp.prob, {n, rp.prob.ell});
      for (int i = 0; i < 25; ++i) {
        const double s = sd(rng);
        CAPTURE(n);
        CAPTURE(s);
        CHECK(testsupport::ode_residual(wf, red, s) < 1e-8);
      }
    }
  }
}

TEST_CASE("tail is negligible beyond twice the decay radius") {
  std::mt19937_64 rng(testsupport::seed_from_env(40410u));
  for (int trial = 0; trial < 6; ++trial) {
    const auto rp = testsupport::draw_case(rng);
    for (int n : {0, 3}) {
      const auto wf =
          make_wavefunction(rp.pot, rp.prob, {n, rp.prob.ell});
      double peak = 0;
      for (const double r : default_node_grid(wf, 2048)) {
        peak = std::max(peak, std::abs(radial_eval(wf, r)));
      }
      CHECK(peak > 0);
      const double tail = std::abs(radial_eval(wf, 2.0 * decay_radius(wf)));
      CHECK(tail < 1e-10 * peak);
    }
  }
}

TEST_CASE("series termination is consistent with the coefficient root") {
  // eta(c_n) = -n (2(c_n+gamma) + n), the degree-n cutoff condition
  std::mt19937_64 rng(testsupport::seed_from_env(5150u));
  for (int trial = 0; trial < 50; ++trial) {
    const auto rp = testsupport::draw_case(rng);
    const ReducedParams red = reduce(rp.pot, rp.prob);
    const double scale = red.gamma * red.gamma + std::abs(red.a_coef) +
                         2.0 * std::abs(red.b_coef);
    for (int n = 0; n <= 3; ++n) {
      const double c = decay_exponent(red, n);
      const double want = -n * (2.0 * (c + red.gamma) + n);
      CHECK(std::abs(red.eta(c) - want) < 1e-10 * scale);
    }
  }
}

TEST_CASE("full radial factor restores the dimension weight") {
  std::mt19937_64 rng(testsupport::seed_from_env(2468u));
  const auto rp = testsupport::draw_case(rng);
  const auto wf = make_wavefunction(rp.pot, rp.prob, {1, rp.prob.ell});
  const double r = 1.7;
  CHECK(full_radial_factor(wf, r) ==
        doctest::Approx(std::pow(r, -0.5 * (rp.prob.dim - 1)) *
                        radial_eval(wf, r))
            .epsilon(1e-15));
  CHECK_THROWS_AS(full_radial_factor(wf, 0.0), InvalidParamsError);
  CHECK_THROWS_AS(radial_eval(wf, -1.0), InvalidParamsError);
}

TEST_CASE("node grid rejects degenerate input") {
  std::mt19937_64 rng(testsupport::seed_from_env(1112u));
  const auto rp = testsupport::draw_case(rng);
  const auto wf = make_wavefunction(rp.pot, rp.prob, {0, rp.prob.ell});
  CHECK_THROWS_AS(count_nodes(wf, {1.0}), InvalidParamsError);
  CHECK_THROWS_AS(count_nodes(wf, {1.0, 1.0}), InvalidParamsError);
  CHECK_THROWS_AS(count_nodes(wf, {2.0, 1.0}), InvalidParamsError);
}
