#include "boundstate/presets.hpp"

#include <cmath>
#include <cstdio>

#include "boundstate/spectrum.hpp"

namespace boundstate {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void need(bool ok, const char* msg) {
  if (!ok) throw InvalidParamsError(msg);
}

double sq(double x) { return x * x; }

// gamma for cases without an inverse-square coupling
double linear_gamma(int dim, int ell) { return 0.5 * dim + ell - 0.5; }

// gamma from the indicial equation of the inverse-square channel
double quadratic_gamma(double mass, double v1, int dim, int ell) {
  const double d2l = dim + 2.0 * ell - 2.0;
  const double disc = 8.0 * mass * v1 + d2l * d2l;
  if (disc < 0.0) {
    throw FallToCenterError(
        "preset: attractive inverse-square coupling below critical strength");
  }
  return 0.5 * (1.0 + std::sqrt(disc));
}

std::string sentinel_note(double alpha) {
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "screening sentinel alpha=%g; closed forms carry O(alpha) "
                "truncation",
                alpha);
  return buf;
}

}  // namespace

std::string_view preset_name(const PresetCase& pc) {
  return std::visit(
      overloaded{
          [](const Yukawa&) { return std::string_view{"yukawa"}; },
          [](const Coulomb&) { return std::string_view{"coulomb"}; },
          [](const Mie&) { return std::string_view{"mie"}; },
          [](const KratzerFues&) { return std::string_view{"kratzer_fues"}; },
          [](const ManningRosen&) {
            return std::string_view{"manning_rosen"};
          },
          [](const Eckart&) { return std::string_view{"eckart"}; },
          [](const Hulthen&) { return std::string_view{"hulthen"}; },
          [](const YukawaHulthen&) {
            return std::string_view{"yukawa_hulthen"};
          },
          [](const YukawaInverseSquare&) {
            return std::string_view{"yukawa_inverse_square"};
          },
          [](const QuadraticExponential&) {
            return std::string_view{"quadratic_exponential"};
          },
          [](const DengFan&) { return std::string_view{"deng_fan"}; },
      },
      pc);
}

MixedMapping to_mixed(const PresetCase& pc) {
  MixedMapping mm = std::visit(
      overloaded{
          [](const Yukawa& c) -> MixedMapping {
            need(c.alpha > 0.0, "yukawa: alpha must be > 0");
            return {{0.0, c.v2, 0.0, 0.0, c.alpha}, false,
                    "single screened 1/r channel"};
          },
          [](const Coulomb& c) -> MixedMapping {
            need(c.sentinel_alpha > 0.0, "coulomb: sentinel must be > 0");
            return {{0.0, c.v2, 0.0, 0.0, c.sentinel_alpha}, true,
                    sentinel_note(c.sentinel_alpha)};
          },
          [](const Mie& c) -> MixedMapping {
            need(c.sentinel_alpha > 0.0, "mie: sentinel must be > 0");
            return {{c.v1, c.v2, 0.0, c.v4, c.sentinel_alpha}, true,
                    sentinel_note(c.sentinel_alpha)};
          },
          [](const KratzerFues& c) -> MixedMapping {
            need(c.sentinel_alpha > 0.0, "kratzer_fues: sentinel must be > 0");
            return {{c.v1, c.v2, 0.0, 0.0, c.sentinel_alpha}, true,
                    sentinel_note(c.sentinel_alpha)};
          },
          [](const ManningRosen& c) -> MixedMapping {
            need(c.alpha > 0.0, "manning_rosen: alpha must be > 0");
            return {{c.v1_prime / sq(c.alpha), 0.0, c.v3, 0.0, c.alpha},
                    false,
                    "inverse-square strength v1_prime/alpha^2"};
          },
          [](const Eckart& c) -> MixedMapping {
            need(c.alpha > 0.0, "eckart: alpha must be > 0");
            return {{c.v1_prime / sq(c.alpha), 0.0, -c.v3, 0.0, c.alpha},
                    false,
                    "hyperbolic coupling negated relative to manning_rosen"};
          },
          [](const Hulthen& c) -> MixedMapping {
            need(c.b > 0.0, "hulthen: b must be > 0");
            return {{0.0, 0.0, -0.5 * c.v0_prime, 0.5 * c.v0_prime,
                     0.5 * c.b},
                    false,
                    "coth pair realizing -v0' e^{-br}/(1-e^{-br})"};
          },
          [](const YukawaHulthen& c) -> MixedMapping {
            need(c.b > 0.0, "yukawa_hulthen: b must be > 0");
            return {{0.0, c.v2, -0.5 * c.v0_prime, 0.5 * c.v0_prime,
                     0.5 * c.b},
                    false,
                    "hulthen pair plus screened 1/r channel"};
          },
          [](const YukawaInverseSquare& c) -> MixedMapping {
            need(c.alpha > 0.0, "yukawa_inverse_square: alpha must be > 0");
            return {{c.v1, c.v2, 0.0, 0.0, c.alpha}, false,
                    "screened 1/r plus inverse-square channel"};
          },
          [](const QuadraticExponential& c) -> MixedMapping {
            need(c.sigma > 0.0, "quadratic_exponential: sigma must be > 0");
            // The published coefficient relations live on the growing
            // branch e^{sigma r} > 1; rewriting the same V(r) on the
            // decaying branch e^{-sigma r} < 1 flips the 1/r-channel sign
            // and swaps xi1 into the coth slot.
            const double s = c.sigma;
            return {{(c.xi1 + c.xi2 + c.xi3) * c.phi0 / sq(s),
                     -(c.xi1 + c.xi3) * c.phi0 / s, c.xi1 * c.phi0, 0.0,
                     0.5 * s},
                    false,
                    "rewritten on the decaying exponential branch"};
          },
          [](const DengFan& c) -> MixedMapping {
            need(c.d_e > 0.0, "deng_fan: dissociation energy must be > 0");
            need(c.sigma > 0.0, "deng_fan: sigma must be > 0");
            need(c.r_e > 0.0, "deng_fan: equilibrium distance must be > 0");
            const double d0 = std::expm1(c.sigma * c.r_e);
            const QuadraticExponential qe{c.d_e, 1.0, -2.0 * (1.0 + d0),
                                          sq(1.0 + d0), c.sigma};
            MixedMapping mm = to_mixed(PresetCase{qe});
            mm.notes = "quadratic-exponential form with delta0 = e^{sigma "
                       "r_e} - 1";
            return mm;
          },
      },
      pc);
  mm.pot.validate();
  return mm;
}

double direct_energy(const PresetCase& pc, const RadialProblem& prob,
                     const QuantumNumbers& q) {
  prob.validate();
  if (q.n < 0 || q.ell < 0) {
    throw InvalidParamsError("direct_energy: quantum numbers must be >= 0");
  }
  const double m = prob.mass;
  const int dim = prob.dim;
  const int ell = q.ell;
  const int n = q.n;
  return std::visit(
      overloaded{
          [&](const Yukawa& c) {
            need(c.alpha > 0.0, "yukawa: alpha must be > 0");
            const double g = linear_gamma(dim, ell) + n;
            return -sq(c.alpha * g + m * c.v2 / g) / (2.0 * m);
          },
          [&](const Coulomb& c) {
            const double g = linear_gamma(dim, ell) + n;
            return -m * sq(c.v2) / (2.0 * sq(g));
          },
          [&](const Mie& c) {
            const double g = quadratic_gamma(m, c.v1, dim, ell) + n;
            return c.v4 - m * sq(c.v2) / (2.0 * sq(g));
          },
          [&](const KratzerFues& c) {
            const double g = quadratic_gamma(m, c.v1, dim, ell) + n;
            return -m * sq(c.v2) / (2.0 * sq(g));
          },
          [&](const ManningRosen& c) {
            need(c.alpha > 0.0, "manning_rosen: alpha must be > 0");
            const double g =
                quadratic_gamma(m, c.v1_prime / sq(c.alpha), dim, ell) + n;
            const double b_half = m * c.v3 / (2.0 * sq(c.alpha));
            return -sq(c.alpha) / (2.0 * m) *
                   (sq(g) + 4.0 * sq(b_half) / sq(g));
          },
          [&](const Eckart& c) {
            need(c.alpha > 0.0, "eckart: alpha must be > 0");
            const double g =
                quadratic_gamma(m, c.v1_prime / sq(c.alpha), dim, ell) + n;
            const double b_half = m * -c.v3 / (2.0 * sq(c.alpha));
            return -sq(c.alpha) / (2.0 * m) *
                   (sq(g) + 4.0 * sq(b_half) / sq(g));
          },
          [&](const Hulthen& c) {
            need(c.b > 0.0, "hulthen: b must be > 0");
            const double g = linear_gamma(dim, ell) + n;
            return -sq(0.5 * c.b * g - m * c.v0_prime / (c.b * g)) /
                   (2.0 * m);
          },
          [&](const YukawaHulthen& c) {
            need(c.b > 0.0, "yukawa_hulthen: b must be > 0");
            const double g = linear_gamma(dim, ell) + n;
            return -sq(0.5 * c.b * g +
                       m * (c.b * c.v2 - c.v0_prime) / (c.b * g)) /
                   (2.0 * m);
          },
          [&](const YukawaInverseSquare& c) {
            need(c.alpha > 0.0, "yukawa_inverse_square: alpha must be > 0");
            const double g = quadratic_gamma(m, c.v1, dim, ell) + n;
            return -sq(c.alpha * g + m * c.v2 / g) / (2.0 * m);
          },
          [&](const QuadraticExponential& c) {
            need(c.sigma > 0.0, "quadratic_exponential: sigma must be > 0");
            const double g =
                quadratic_gamma(
                    m, (c.xi1 + c.xi2 + c.xi3) * c.phi0 / sq(c.sigma), dim,
                    ell) +
                n;
            return c.phi0 * c.xi1 -
                   sq(0.5 * c.sigma * g +
                      m * c.phi0 * (c.xi1 - c.xi3) / (c.sigma * g)) /
                       (2.0 * m);
          },
          [&](const DengFan& c) {
            need(c.d_e > 0.0 && c.sigma > 0.0 && c.r_e > 0.0,
                 "deng_fan: d_e, sigma, r_e must be > 0");
            const double d0 = std::expm1(c.sigma * c.r_e);
            const double g =
                quadratic_gamma(m, c.d_e * sq(d0) / sq(c.sigma), dim, ell) +
                n;
            return c.d_e - sq(0.5 * c.sigma * g -
                              m * c.d_e * d0 * (2.0 + d0) / (c.sigma * g)) /
                               (2.0 * m);
          },
      },
      pc);
}

double consistency_check(const PresetCase& pc, const RadialProblem& prob,
                         const QuantumNumbers& q) {
  const MixedMapping mm = to_mixed(pc);
  const double direct = direct_energy(pc, prob, q);
  const double via = energy(mm.pot, prob, q);
  return std::abs(direct - via) / std::max(std::abs(direct), 1e-12);
}

double derived_decay(const PresetCase& pc, const RadialProblem& prob,
                     const QuantumNumbers& q) {
  const MixedMapping mm = to_mixed(pc);
  const double e = direct_energy(pc, prob, q);
  const double arg = 2.0 * prob.mass * (mm.pot.v3 + mm.pot.v4 - e);
  if (!(arg > 0.0)) {
    throw NotBoundError(
        "derived_decay: level energy is not below the continuum threshold");
  }
  return std::sqrt(arg);
}

}  // namespace boundstate
