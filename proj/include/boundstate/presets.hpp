#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "boundstate/errors.hpp"
#include "boundstate/model.hpp"

namespace boundstate {

// Named special cases of the mixed potential.  Each carries its published
// parameterization; to_mixed() maps it onto PotentialSpec and
// direct_energy() evaluates the case's own closed formula, kept separate
// from the general spectrum path so the two can cross-check each other.

struct Yukawa {
  double v2 = 0;
  double alpha = 0;
};

// screening-free limit, realized at a small finite screening rate
struct Coulomb {
  double v2 = 0;
  double sentinel_alpha = kSentinelAlpha;
};

struct Mie {
  double v1 = 0;
  double v2 = 0;
  double v4 = 0;
  double sentinel_alpha = kSentinelAlpha;
};

struct KratzerFues {
  double v1 = 0;
  double v2 = 0;
  double sentinel_alpha = kSentinelAlpha;
};

// v1_prime = V1 alpha^2; bound states need v3 < 0 here
struct ManningRosen {
  double v1_prime = 0;
  double v3 = 0;
  double alpha = 0;
};

// ManningRosen with the hyperbolic coupling negated: bound states at v3 > 0
struct Eckart {
  double v1_prime = 0;
  double v3 = 0;
  double alpha = 0;
};

struct Hulthen {
  double v0_prime = 0;
  double b = 0;  // screening rate; maps to alpha = b/2
};

struct YukawaHulthen {
  double v2 = 0;
  double v0_prime = 0;
  double b = 0;
};

struct YukawaInverseSquare {
  double v1 = 0;
  double v2 = 0;
  double alpha = 0;
};

// V(r) = phi0 (xi1 e^{2 sigma r} + xi2 e^{sigma r} + xi3) / (e^{sigma r}-1)^2
struct QuadraticExponential {
  double phi0 = 0;
  double xi1 = 0;
  double xi2 = 0;
  double xi3 = 0;
  double sigma = 0;  // > 0
};

// V(r) = d_e (1 - delta0/(e^{sigma r}-1))^2 with delta0 = e^{sigma r_e} - 1
struct DengFan {
  double d_e = 0;
  double sigma = 0;
  double r_e = 0;
};

using PresetCase =
    std::variant<Yukawa, Coulomb, Mie, KratzerFues, ManningRosen, Eckart,
                 Hulthen, YukawaHulthen, YukawaInverseSquare,
                 QuadraticExponential, DengFan>;

std::string_view preset_name(const PresetCase& pc);

struct MixedMapping {
  PotentialSpec pot;
  bool uses_sentinel = false;  // closed forms then carry O(alpha) truncation
  std::string notes;
};

// The exact substitution for each case.  Throws InvalidParamsError when the
// case parameters violate their domain constraints.
MixedMapping to_mixed(const PresetCase& pc);

// The case's published energy formula, evaluated verbatim (q.ell overrides
// problem.ell, as in spectrum::energy).  Does not gate on the binding
// condition; callers pair it with admissible() when that matters.
double direct_energy(const PresetCase& pc, const RadialProblem& prob,
                     const QuantumNumbers& q);

// |direct_energy - energy(to_mixed)| / max(|direct_energy|, 1e-12).
// Expected < 1e-12 for finite-rate cases and < 1e-6 for sentinel cases.
double consistency_check(const PresetCase& pc, const RadialProblem& prob,
                         const QuantumNumbers& q);

// Decay-rate shorthand sqrt(2M (V3 + V4 - E)) of the mapped potential at
// the direct energy; equals the published per-case shorthand for the
// Coulomb-to-inverse-square family.
double derived_decay(const PresetCase& pc, const RadialProblem& prob,
                     const QuantumNumbers& q);

}  // namespace boundstate
