#include "boundstate/model.hpp"

#include <cmath>
#include <string>

namespace boundstate {

void PotentialSpec::validate() const {
  if (!std::isfinite(v1) || !std::isfinite(v2) || !std::isfinite(v3) ||
      !std::isfinite(v4) || !std::isfinite(alpha)) {
    throw InvalidParamsError("PotentialSpec: non-finite coefficient");
  }
  if (alpha <= 0) {
    throw InvalidParamsError("PotentialSpec: alpha must be > 0 (got " +
                             std::to_string(alpha) + ")");
  }
}

void RadialProblem::validate() const {
  if (!std::isfinite(mass) || mass <= 0) {
    throw InvalidParamsError("RadialProblem: mass must be positive and finite");
  }
  if (dim < 1) {
    throw InvalidParamsError("RadialProblem: dim must be >= 1");
  }
  if (ell < 0) {
    throw InvalidParamsError("RadialProblem: ell must be >= 0");
  }
}

double centrifugal_constant(const RadialProblem& prob) {
  prob.validate();
  const long d2l = static_cast<long>(prob.dim) + 2L * prob.ell;
  // product of two ints, then an exact /4 (exponent shift in binary)
  return static_cast<double>((d2l - 1) * (d2l - 3)) / 4.0;
}

ReducedParams reduce(const PotentialSpec& pot, const RadialProblem& prob) {
  pot.validate();
  prob.validate();

  const double m = prob.mass;
  const long d2l = static_cast<long>(prob.dim) + 2L * prob.ell;
  const double u = static_cast<double>(d2l - 2);

  // gamma solves gamma(gamma-1) = 2 M V1 + (d2l-1)(d2l-3)/4;
  // discriminant simplifies to 8 M V1 + (d2l-2)^2.
  const double disc = 8.0 * m * pot.v1 + u * u;
  if (disc < 0) {
    throw FallToCenterError(
        "reduce: 8 M V1 + (D+2l-2)^2 = " + std::to_string(disc) +
        " < 0, attraction too singular at the origin");
  }

  ReducedParams red;
  red.n_d_ell = centrifugal_constant(prob);
  red.gamma = 0.5 * (1.0 + std::sqrt(disc));
  red.a_coef = m * pot.v2 / pot.alpha;
  red.b_coef = m * pot.v3 / (2.0 * pot.alpha * pot.alpha);
  red.alpha = pot.alpha;
  red.mass = m;
  red.v4 = pot.v4;
  return red;
}

double decay_exponent(const ReducedParams& red, int n) {
  if (n < 0) {
    throw InvalidParamsError("decay_exponent: n must be >= 0");
  }
  const double g = red.gamma + n;
  const double t = g * g + red.a_coef + 2.0 * red.b_coef;
  if (!(t < 0)) {
    throw NotBoundError("decay_exponent: level n = " + std::to_string(n) +
                        " is not bound ((gamma+n)^2 + A + 2B = " +
                        std::to_string(t) + " >= 0)");
  }
  return -t / (2.0 * g);
}

}  // namespace boundstate
