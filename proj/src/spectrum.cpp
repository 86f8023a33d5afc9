#include "boundstate/spectrum.hpp"

#include <cmath>
#include <string>

namespace boundstate {

namespace {

bool admissible_reduced(const ReducedParams& red, int n) {
  const double g = red.gamma + n;
  return g * g + red.a_coef + 2.0 * red.b_coef < 0;
}

}  // namespace

double energy(const PotentialSpec& pot, const RadialProblem& prob,
              const QuantumNumbers& q) {
  if (q.n < 0 || q.ell < 0) {
    throw InvalidParamsError("energy: quantum numbers must be >= 0");
  }
  RadialProblem p = prob;
  p.ell = q.ell;
  const ReducedParams red = reduce(pot, p);
  if (!admissible_reduced(red, q.n)) {
    throw NotBoundError("energy: level (n=" + std::to_string(q.n) +
                        ", ell=" + std::to_string(q.ell) + ") is not bound");
  }
  const double m = prob.mass;
  const double a = pot.alpha;
  const double g = red.gamma + q.n;
  const double w = pot.v2 + pot.v3 / a;
  return pot.v4 - (1.0 / (2.0 * m)) *
                      (a * a * g * g + 2.0 * m * pot.v2 * a +
                       m * m * w * w / (g * g));
}

double energy_from_decay(const ReducedParams& red, double c) {
  return red.v4 -
         2.0 * red.alpha * red.alpha * (c * c - red.b_coef) / red.mass;
}

bool admissible(const PotentialSpec& pot, const RadialProblem& prob,
                const QuantumNumbers& q) {
  if (q.n < 0 || q.ell < 0) {
    throw InvalidParamsError("admissible: quantum numbers must be >= 0");
  }
  RadialProblem p = prob;
  p.ell = q.ell;
  return admissible_reduced(reduce(pot, p), q.n);
}

std::vector<BoundState> enumerate_bound_states(const PotentialSpec& pot,
                                               const RadialProblem& prob,
                                               int ell_max) {
  if (ell_max < 0) {
    throw InvalidParamsError("enumerate_bound_states: ell_max must be >= 0");
  }
  constexpr double kLevelCap = 1e6;

  std::vector<BoundState> out;
  for (int ell = 0; ell <= ell_max; ++ell) {
    RadialProblem p = prob;
    p.ell = ell;
    const ReducedParams red = reduce(pot, p);

    const double t = -(red.a_coef + 2.0 * red.b_coef);
    if (t <= 0) continue;  // (gamma+n)^2 + A + 2B >= gamma^2 > 0 for all n
    const double n_env = std::sqrt(t) - red.gamma;
    if (n_env > kLevelCap) {
      throw Error("enumerate_bound_states: level count bound " +
                  std::to_string(n_env) + " exceeds safety cap");
    }

    for (int n = 0; admissible_reduced(red, n); ++n) {
      BoundState st;
      st.n = n;
      st.ell = ell;
      st.energy = energy(pot, p, QuantumNumbers{n, ell});
      st.c = decay_exponent(red, n);
      st.gamma = red.gamma;
      st.positive_energy = st.energy > 0;
      out.push_back(st);
    }
  }
  return out;
}

}  // namespace boundstate
