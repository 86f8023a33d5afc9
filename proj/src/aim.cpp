#include "boundstate/aim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace boundstate {

double Polynomial::eval(double s) const {
  double acc = 0;
  for (size_t i = coef.size(); i-- > 0;) acc = acc * s + coef[i];
  return acc;
}

double Polynomial::max_abs() const {
  double m = 0;
  for (const double v : coef) m = std::max(m, std::abs(v));
  return m;
}

void Polynomial::trim() {
  while (!coef.empty() && coef.back() == 0.0) coef.pop_back();
}

Polynomial poly_sum(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.coef.assign(std::max(a.coef.size(), b.coef.size()), 0.0);
  for (size_t i = 0; i < a.coef.size(); ++i) out.coef[i] += a.coef[i];
  for (size_t i = 0; i < b.coef.size(); ++i) out.coef[i] += b.coef[i];
  out.trim();
  return out;
}

Polynomial poly_diff(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.coef.assign(std::max(a.coef.size(), b.coef.size()), 0.0);
  for (size_t i = 0; i < a.coef.size(); ++i) out.coef[i] += a.coef[i];
  for (size_t i = 0; i < b.coef.size(); ++i) out.coef[i] -= b.coef[i];
  out.trim();
  return out;
}

Polynomial poly_prod(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coef.assign(a.coef.size() + b.coef.size() - 1, 0.0);
  for (size_t i = 0; i < a.coef.size(); ++i)
    for (size_t j = 0; j < b.coef.size(); ++j)
      out.coef[i + j] += a.coef[i] * b.coef[j];
  out.trim();
  return out;
}

Polynomial poly_derivative(const Polynomial& a) {
  Polynomial out;
  if (a.coef.size() < 2) return out;
  out.coef.resize(a.coef.size() - 1);
  for (size_t i = 1; i < a.coef.size(); ++i) out.coef[i - 1] = i * a.coef[i];
  out.trim();
  return out;
}

double RationalFn::eval(double s) const {
  return numer.eval(s) / (std::pow(s, p) * std::pow(1.0 - s, q));
}

RationalFn RationalFn::deriv() const {
  // d/ds N/(s^p (1-s)^q) = [N' s(1-s) - N (p(1-s) - q s)] / (s^{p+1}(1-s)^{q+1})
  const Polynomial s_one_minus_s{{0.0, 1.0, -1.0}};
  const Polynomial lin{{static_cast<double>(p), -static_cast<double>(p + q)}};
  RationalFn out;
  out.numer = poly_diff(poly_prod(poly_derivative(numer), s_one_minus_s),
                        poly_prod(numer, lin));
  out.p = p + 1;
  out.q = q + 1;
  return out;
}

namespace {

// multiplies a numerator by s^dp (1-s)^dq
Polynomial lift(const Polynomial& n, int dp, int dq) {
  Polynomial out = n;
  const Polynomial s_pow{{0.0, 1.0}};
  const Polynomial one_minus_s{{1.0, -1.0}};
  for (int i = 0; i < dp; ++i) out = poly_prod(out, s_pow);
  for (int i = 0; i < dq; ++i) out = poly_prod(out, one_minus_s);
  return out;
}

void check_scale(const RationalFn& f) {
  for (const double v : f.numer.coef) {
    if (!std::isfinite(v) || std::abs(v) > 1e300) {
      throw ScaleError("iterate: coefficient magnitude passed 1e300; "
                       "rescale the (lambda, s) pair between steps");
    }
  }
}

}  // namespace

RationalFn r_sum(const RationalFn& a, const RationalFn& b) {
  RationalFn out;
  out.p = std::max(a.p, b.p);
  out.q = std::max(a.q, b.q);
  out.numer = poly_sum(lift(a.numer, out.p - a.p, out.q - a.q),
                       lift(b.numer, out.p - b.p, out.q - b.q));
  return out;
}

RationalFn r_diff(const RationalFn& a, const RationalFn& b) {
  RationalFn out;
  out.p = std::max(a.p, b.p);
  out.q = std::max(a.q, b.q);
  out.numer = poly_diff(lift(a.numer, out.p - a.p, out.q - a.q),
                        lift(b.numer, out.p - b.p, out.q - b.q));
  return out;
}

RationalFn r_prod(const RationalFn& a, const RationalFn& b) {
  RationalFn out;
  out.p = a.p + b.p;
  out.q = a.q + b.q;
  out.numer = poly_prod(a.numer, b.numer);
  return out;
}

void AimConfig::validate() const {
  if (!(s0 > 0.0) || !(s0 < 1.0)) {
    throw InvalidParamsError("AimConfig: s0 must lie in (0, 1)");
  }
  if (k_max < 2) throw InvalidParamsError("AimConfig: k_max must be >= 2");
  if (!(root_tol > 0.0)) {
    throw InvalidParamsError("AimConfig: root_tol must be > 0");
  }
  if (!(stability_tol > 0.0)) {
    throw InvalidParamsError("AimConfig: stability_tol must be > 0");
  }
}

std::pair<RationalFn, RationalFn> seed(const ReducedParams& red, double c) {
  if (!(c > 0.0)) {
    throw InvalidParamsError("seed: trial decay exponent must be > 0");
  }
  RationalFn lam{{{-red.delta(c), red.beta(c)}}, 1, 1};
  RationalFn s0f{{{red.eta(c)}}, 1, 1};
  lam.numer.trim();
  s0f.numer.trim();
  return {lam, s0f};
}

std::pair<RationalFn, RationalFn> iterate(const RationalFn& lam_prev,
                                          const RationalFn& s_prev,
                                          const RationalFn& lam0,
                                          const RationalFn& s0) {
  RationalFn lam =
      r_sum(r_sum(lam_prev.deriv(), s_prev), r_prod(lam0, lam_prev));
  RationalFn s = r_sum(s_prev.deriv(), r_prod(s0, lam_prev));
  check_scale(lam);
  check_scale(s);
  return {std::move(lam), std::move(s)};
}

RationalFn delta_k(const RationalFn& lam_k, const RationalFn& s_k,
                   const RationalFn& lam_prev, const RationalFn& s_prev) {
  return r_diff(r_prod(lam_k, s_prev), r_prod(lam_prev, s_k));
}

namespace {

// Iteration ladder with per-step common rescaling of the pair.  Rescaling
// multiplies the exact sequences by positive per-level factors, which
// leaves the sign and the zero set of the termination determinant intact
// while keeping coefficients near unit magnitude out to k ~ 30.
struct Ladder {
  RationalFn lam0, s0f;
  RationalFn lam_prev, s_prev;  // level k-1
  RationalFn lam, s;            // level k
  int k = 0;

  Ladder(const ReducedParams& red, double c) {
    auto sd = seed(red, c);
    lam0 = std::move(sd.first);
    s0f = std::move(sd.second);
    lam = lam0;
    s = s0f;
  }

  // advances one level and returns the sign-true termination value at s_pt:
  // both cross products share the denominator s^{2k+1}(1-s)^{2k+1}, so the
  // bare numerator combination carries the sign of the determinant
  double step(double s_pt, bool rescale) {
    auto nxt = iterate(lam, s, lam0, s0f);
    const double dv = nxt.first.numer.eval(s_pt) * s.numer.eval(s_pt) -
                      lam.numer.eval(s_pt) * nxt.second.numer.eval(s_pt);
    lam_prev = std::move(lam);
    s_prev = std::move(s);
    lam = std::move(nxt.first);
    s = std::move(nxt.second);
    if (rescale) {
      const double m = std::max(lam.max_abs_coef(), s.max_abs_coef());
      if (m > 0) {
        for (auto& v : lam.numer.coef) v /= m;
        for (auto& v : s.numer.coef) v /= m;
      }
    }
    ++k;
    return dv;
  }
};

double delta_at(const ReducedParams& red, double c, int k, double s_pt) {
  Ladder ladder(red, c);
  double dv = 0;
  for (int i = 0; i < k; ++i) dv = ladder.step(s_pt, true);
  return dv;
}

}  // namespace

std::vector<double> termination_values(const ReducedParams& red, double c,
                                       const AimConfig& cfg) {
  cfg.validate();
  Ladder ladder(red, c);
  std::vector<double> out;
  out.reserve(cfg.k_max);
  for (int k = 1; k <= cfg.k_max; ++k) out.push_back(ladder.step(cfg.s0, true));
  return out;
}

std::vector<double> solve_spectrum(const ReducedParams& red,
                                   const AimConfig& cfg, int n_levels) {
  cfg.validate();
  double lo = cfg.c_lo, hi = cfg.c_hi;
  if (!(hi > lo)) {
    // the admissibility envelope (gamma+n)^2 < -(A+2B) caps every root at
    // c_0 = [-(A+2B) - gamma^2]/(2 gamma); add margin and keep a minimal
    // window when nothing binds
    lo = cfg.root_tol;
    const double top =
        -(red.gamma * red.gamma + red.a_coef + 2.0 * red.b_coef);
    hi = (top > 0 ? top / (2.0 * red.gamma) : 0.0) + 2.0;
  }
  const double width = hi - lo;
  // consecutive physical roots are more than 1/2 apart in c, so 16 scan
  // points per unit width cannot step over two sign changes at once
  const int samples = std::clamp(static_cast<int>(width * 16.0), 256, 1 << 15);

  std::vector<double> cs(samples);
  std::vector<Ladder> ladders;
  ladders.reserve(samples);
  for (int j = 0; j < samples; ++j) {
    cs[j] = lo + width * j / (samples - 1.0);
    ladders.emplace_back(red, cs[j]);
  }

  // Bisected positions drift as k grows: past its first few levels a root's
  // determinant values at the scan point sink into roundoff and the crossing
  // wanders (and can even split into several nearby crossings).  So each
  // root is pinned early: confirmed after three consecutive sightings, the
  // first (most accurate) estimate kept, and any later crossing within the
  // physical spacing bound treated as a re-sighting rather than a new level.
  constexpr double kClaimRadius = 0.25;  // half the minimal root spacing
  struct Candidate {
    double first;   // estimate from the earliest sighting
    double latest;  // estimate from the current level
    int seen;
  };
  std::vector<Candidate> pending;
  std::vector<double> stable;
  std::vector<double> vals(samples);

  const auto claimed = [&](double c) {
    for (const double s : stable) {
      if (std::abs(c - s) <= kClaimRadius) return true;
    }
    return false;
  };

  // Every root of the termination determinant at level m stays a root at
  // all later levels, and level m introduces no root beyond index m.  Once
  // a level shows no unclaimed crossing and nothing awaits confirmation,
  // the spectrum is complete; a second quiet level guards against a
  // crossing lost to roundoff.
  int quiet = 0;
  for (int k = 1; k <= cfg.k_max && quiet < 2; ++k) {
    for (int j = 0; j < samples; ++j) vals[j] = ladders[j].step(cfg.s0, true);

    std::vector<double> sightings;
    for (int j = 0; j + 1 < samples; ++j) {
      const double a = vals[j], b = vals[j + 1];
      if (!(a == 0.0 || a * b < 0.0)) continue;
      if (claimed(0.5 * (cs[j] + cs[j + 1]))) continue;
      if (a == 0.0) {
        sightings.push_back(cs[j]);
        continue;
      }
      double x0 = cs[j], x1 = cs[j + 1], fa = a;
      for (int it = 0; it < 100 && x1 - x0 > cfg.root_tol; ++it) {
        const double mid = 0.5 * (x0 + x1);
        const double fm = delta_at(red, mid, k, cfg.s0);
        if (fm == 0.0) {
          x0 = mid;
          x1 = mid;
          break;
        }
        if ((fa < 0.0) == (fm < 0.0)) {
          x0 = mid;
          fa = fm;
        } else {
          x1 = mid;
        }
      }
      sightings.push_back(0.5 * (x0 + x1));
    }

    std::vector<char> used(pending.size(), 0);
    std::vector<Candidate> next;
    for (const double r : sightings) {
      int hit = -1;
      for (size_t i = 0; i < pending.size(); ++i) {
        if (!used[i] && std::abs(r - pending[i].latest) <=
                            cfg.stability_tol * std::max(1.0, std::abs(r))) {
          hit = static_cast<int>(i);
          break;
        }
      }
      if (hit >= 0) {
        used[hit] = 1;
        if (pending[hit].seen + 1 >= 3) {
          if (!claimed(pending[hit].first)) stable.push_back(pending[hit].first);
        } else {
          next.push_back({pending[hit].first, r, pending[hit].seen + 1});
        }
      } else if (!claimed(r)) {
        next.push_back({r, r, 1});
      }
    }
    pending = std::move(next);  // a candidate missing a level starts over

    quiet = (sightings.empty() && pending.empty()) ? quiet + 1 : 0;
  }
  std::sort(stable.rbegin(), stable.rend());

  if (static_cast<int>(stable.size()) < n_levels) {
    throw NoConvergenceError(
        "solve_spectrum: only " + std::to_string(stable.size()) + " of " +
            std::to_string(n_levels) + " levels stabilized by k_max = " +
            std::to_string(cfg.k_max),
        stable);
  }
  return stable;
}

double s_independence_check(const ReducedParams& red, double c_root, int k,
                            const std::vector<double>& sample_points,
                            const AimConfig& cfg) {
  cfg.validate();
  if (k < 1) throw InvalidParamsError("s_independence_check: k must be >= 1");
  Ladder ladder(red, c_root);
  for (int i = 0; i < k; ++i) ladder.step(cfg.s0, true);
  const RationalFn d = delta_k(ladder.lam, ladder.s, ladder.lam_prev,
                               ladder.s_prev);
  const double scale =
      ladder.lam.max_abs_coef() * ladder.lam_prev.max_abs_coef();
  double worst = 0;
  for (const double s : sample_points) {
    worst = std::max(worst, std::abs(d.numer.eval(s)));
  }
  return scale > 0 ? worst / scale : worst;
}

bool polynomial_theorem_check(const RationalFn& lam_n, const RationalFn& s_n,
                              const RationalFn& lam_prev,
                              const RationalFn& s_prev) {
  const RationalFn d = delta_k(lam_n, s_n, lam_prev, s_prev);
  const double scale = lam_n.max_abs_coef() * lam_prev.max_abs_coef();
  if (scale <= 0.0) return d.numer.max_abs() == 0.0;
  return d.numer.max_abs() < 1e-8 * scale;
}

}  // namespace boundstate
