#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "boundstate/model.hpp"
#include "boundstate/oracle.hpp"
#include "boundstate/spectrum.hpp"

using namespace boundstate;

TEST_CASE("effective potential: coth channel is identical in both forms") {
  PotentialSpec pot{0.0, 0.0, 1.2, 0.3, 0.4};
  RadialProblem prob{1.0, 3, 0};
  for (const double r : {0.3, 1.0, 2.7, 10.0}) {
    const double ex = effective_potential(pot, prob, PotentialForm::exact, r);
    const double pk =
        effective_potential(pot, prob, PotentialForm::pekeris, r);
    CHECK(pk == doctest::Approx(ex).epsilon(1e-14));
  }
}

TEST_CASE("effective potential: pure centrifugal case") {
  PotentialSpec pot{0.0, 0.0, 0.0, 0.7, 0.4};
  RadialProblem prob{1.5, 4, 1};
  const double n_c = centrifugal_constant(prob);  // (D+2l-1)(D+2l-3)/4
  CHECK(n_c == doctest::Approx(15.0 / 4.0));
  const double r = 1.7;
  const double ex = effective_potential(pot, prob, PotentialForm::exact, r);
  CHECK(ex == doctest::Approx(0.7 + n_c / (2.0 * 1.5 * r * r)).epsilon(1e-14));

  const double s = std::exp(-2.0 * 0.4 * r);
  const double sur = 4.0 * 0.4 * 0.4 * s / ((1.0 - s) * (1.0 - s));
  const double pk = effective_potential(pot, prob, PotentialForm::pekeris, r);
  CHECK(pk == doctest::Approx(0.7 + n_c / (2.0 * 1.5) * sur).epsilon(1e-14));
}

TEST_CASE("effective potential: inverse-square surrogate error at small r") {
  // at alpha r = 0.01 the replacement in the 1/r^2 channel is accurate to
  // better than 1e-3 relative, and the two forms genuinely differ
  PotentialSpec pot{1.0, 0.0, 0.0, 0.0, 1.0};
  RadialProblem prob{1.0, 3, 0};
  const double r = 0.01;
  const double ex = effective_potential(pot, prob, PotentialForm::exact, r);
  const double pk = effective_potential(pot, prob, PotentialForm::pekeris, r);
  CHECK(std::abs(pk - ex) / std::abs(ex) < 1e-3);
  CHECK(pk != ex);
  CHECK_THROWS_AS(effective_potential(pot, prob, PotentialForm::exact, 0.0),
                  InvalidParamsError);
}

TEST_CASE("grid spec validation") {
  GridSpec g;
  g.r_min = 1e-6;
  g.r_max = 30.0;
  CHECK_NOTHROW(g.validate(0.3));

  GridSpec bad = g;
  bad.r_min = 40.0;
  CHECK_THROWS_AS(bad.validate(0.3), InvalidParamsError);
  bad = g;
  bad.points = 100;
  CHECK_THROWS_AS(bad.validate(0.3), InvalidParamsError);
  bad = g;
  bad.refinement_levels = 0;
  CHECK_THROWS_AS(bad.validate(0.3), InvalidParamsError);
  bad = g;
  CHECK_THROWS_AS(bad.validate(0.05), InvalidParamsError);  // r_max alpha < 5
  bad.override_range = true;
  CHECK_NOTHROW(bad.validate(0.05));
}

TEST_CASE("hydrogen ground state in the small-screening limit") {
  PotentialSpec pot{0.0, -1.0, 0.0, 0.0, kSentinelAlpha};
  RadialProblem prob{1.0, 3, 0};
  const ReducedParams red = reduce(pot, prob);
  const GridSpec grid = default_grid(pot, prob, decay_exponent(red, 0));
  CHECK(grid.override_range);  // r_max alpha is tiny here by design

  for (const PotentialForm form :
       {PotentialForm::exact, PotentialForm::pekeris}) {
    const OracleResult res = solve(pot, prob, form, grid, 1);
    REQUIRE(res.eigenvalues.size() == 1);
    CHECK(res.eigenvalues[0] == doctest::Approx(-0.5).epsilon(2e-5));
    CHECK(res.grid_error_estimate[0] > 0.0);
  }
}

TEST_CASE("eigenvalue error shrinks 4x per grid doubling") {
  PotentialSpec pot{0.0, 0.0, -1.0, 1.0, 0.25};
  RadialProblem prob{1.0, 3, 0};
  const double r_max = 32.0, r_min = 3.2e-8;
  const double e1 = solve_single_grid(pot, prob, PotentialForm::exact, r_min,
                                      r_max, 500, 1)[0];
  const double e2 = solve_single_grid(pot, prob, PotentialForm::exact, r_min,
                                      r_max, 1001, 1)[0];
  const double e3 = solve_single_grid(pot, prob, PotentialForm::exact, r_min,
                                      r_max, 2003, 1)[0];
  const double ratio = (e1 - e2) / (e2 - e3);
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);
}

TEST_CASE("surrogate-form grid eigenvalues match the closed form") {
  struct Case {
    PotentialSpec pot;
    RadialProblem prob;
    int n_states;
  };
  const Case cases[] = {
      {{0.3, -4.0, -0.4, 0.2, 0.3}, {1.2, 4, 1}, 2},
      {{0.0, 0.0, -0.5, 0.5, 0.1}, {1.0, 3, 0}, 3},
  };
  for (const Case& cs : cases) {
    const ReducedParams red = reduce(cs.pot, cs.prob);
    const GridSpec grid =
        default_grid(cs.pot, cs.prob, decay_exponent(red, cs.n_states - 1));
    const OracleResult res =
        solve(cs.pot, cs.prob, PotentialForm::pekeris, grid, cs.n_states);
    REQUIRE(static_cast<int>(res.eigenvalues.size()) == cs.n_states);
    for (int n = 0; n < cs.n_states; ++n) {
      const double closed = energy(cs.pot, cs.prob, {n, cs.prob.ell});
      CHECK(std::abs(res.eigenvalues[n] - closed) <=
            res.grid_error_estimate[n]);
      if (n > 0) CHECK(res.eigenvalues[n] > res.eigenvalues[n - 1]);
      CHECK(res.grid_error_estimate[n] > 0.0);
    }
  }
}

TEST_CASE("error report: screened-Coulomb-free case is grid-limited") {
  // V1 = V2 = 0 at l = 0 leaves only the coth channel, where the surrogate
  // is an identity, so the closed form is exact and the report measures
  // pure grid error
  PotentialSpec pot{0.0, 0.0, -0.5, 0.5, 0.1};
  RadialProblem prob{1.0, 3, 0};
  const ReducedParams red = reduce(pot, prob);
  const GridSpec grid = default_grid(pot, prob, decay_exponent(red, 1));
  const auto rows = pekeris_error_report(pot, prob, grid, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].e_closed_form == doctest::Approx(-12.005).epsilon(1e-12));
  for (const auto& row : rows) {
    CHECK(row.rel_diff < 1e-6);
  }
}

TEST_CASE("error report: surrogate error drops with the screening rate") {
  RadialProblem prob{1.0, 3, 1};
  double prev = -1.0;
  for (const double alpha : {0.2, 0.1}) {
    PotentialSpec pot{0.0, 0.0, -0.5, 0.5, alpha};
    const ReducedParams red = reduce(pot, prob);
    const GridSpec grid = default_grid(pot, prob, decay_exponent(red, 0));
    const auto rows = pekeris_error_report(pot, prob, grid, 1);
    REQUIRE(!rows.empty());
    if (prev >= 0.0) CHECK(rows[0].rel_diff < prev);
    prev = rows[0].rel_diff;
  }
  CHECK(prev > 0.0);
}

TEST_CASE("eigenvector node counts equal the level index") {
  PotentialSpec pot{0.0, 0.0, -0.5, 0.5, 0.1};
  RadialProblem prob{1.0, 3, 0};
  const ReducedParams red = reduce(pot, prob);
  const GridSpec grid = default_grid(pot, prob, decay_exponent(red, 2));
  const OracleResult res =
      solve(pot, prob, PotentialForm::pekeris, grid, 3);
  REQUIRE(res.eigenvectors.size() == 3);
  REQUIRE(res.grid_r.size() == res.eigenvectors[0].size());
  for (int n = 0; n < 3; ++n) {
    CHECK(count_sign_changes(res.eigenvectors[n]) == n);
  }
}

TEST_CASE("repulsive potential has no bound states") {
  PotentialSpec pot{0.5, 1.0, 0.0, 0.0, 0.3};
  RadialProblem prob{1.0, 3, 0};
  const GridSpec grid = default_grid(pot, prob);
  CHECK_THROWS_AS(solve(pot, prob, PotentialForm::exact, grid, 1),
                  NoBoundStatesError);
}

TEST_CASE("sign-change counter masks near-zero entries") {
  std::vector<double> v{0.0, 1.0, 2.0, 1e-12, -1.0, -2.0, 1e-13, 3.0};
  CHECK(count_sign_changes(v) == 2);
  CHECK(count_sign_changes({}) == 0);
  CHECK(count_sign_changes({0.0, 0.0}) == 0);
}
