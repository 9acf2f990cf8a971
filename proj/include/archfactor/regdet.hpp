#pragma once

// Zeta-regularized determinants det_inf((s - Theta)/2pi) for spectra made of
// arithmetic progressions.
//
// For the eigenvalues m0 - delta*k (k >= 0) the factors are
// (delta/2pi)(x + k) with x = (s - m0)/delta, so the spectral zeta function
// is (2pi/delta)^z zeta_H(z, x) and
//   log det = -zeta'(0) = -[log(2pi/delta) (1/2 - x) + log Gamma(x) - log(2pi)/2].
// delta = 1 gives GC(s - m0)^{-1}; delta = 2 gives 2^{1/2} GR(s - m0)^{-1}.

#include <cmath>
#include <numbers>
#include <string>

#include "archfactor/cyclic_dims.hpp"
#include "archfactor/error.hpp"
#include "archfactor/gamma_expr.hpp"

namespace archfactor {

inline GammaExpression regdet_progression(const Progression& p) {
  if (p.multiplicity < 0) throw InvalidInput("regdet_progression: negative multiplicity");
  if (p.step <= 0) throw InvalidInput("regdet_progression: step must be positive");
  GammaExpression out;
  if (p.multiplicity == 0) return out;
  if (p.count) {
    for (int k = 0; k < *p.count; ++k) detail::bump(out.lin, p.first - p.step * k, p.multiplicity);
    return out;
  }
  const int k = p.multiplicity;
  if (p.step == 1) return GammaExpression::gamma_c(-p.first, -k);
  if (p.step == 2) {
    out = GammaExpression::gamma_r(-p.first, -k);
    out.pre.log2_const = Rational(k, 2);
    return out;
  }
  throw InvalidInput("regdet_progression: infinite progression with step " +
                     std::to_string(p.step) + " has no closed form (steps 1 and 2 only)");
}

struct RegdetResult {
  GammaExpression even;
  GammaExpression odd;
  GammaExpression ratio;  // even / odd
};

inline RegdetResult regdet_measure(const SpectralMeasure& measure) {
  RegdetResult out;
  for (const auto& p : measure.even) out.even = multiply(out.even, regdet_progression(p));
  for (const auto& p : measure.odd) out.odd = multiply(out.odd, regdet_progression(p));
  out.ratio = multiply(out.even, inverse(out.odd));
  return out;
}

// ---------------------------------------------------------------------------
// Numerical route through the Hurwitz zeta function.

struct EulerMaclaurinOptions {
  int terms = 10000;  // explicit terms of the sum
};

/// zeta_H(0, x) by Euler-Maclaurin (the expansion terminates, so this is exact
/// up to rounding).
inline double hurwitz_zeta0_em(double x, EulerMaclaurinOptions opt = {}) {
  const double a = x + opt.terms;
  return static_cast<double>(opt.terms) - a + 0.5;
}

/// d/dz zeta_H(z, x) at z = 0 by Euler-Maclaurin with corrections through B_12:
///   -sum_{k<N} log(x+k) + a log a - a - (log a)/2 + sum_j B_2j / (2j (2j-1)) a^{1-2j},
/// a = x + N.
inline double hurwitz_zeta_prime0_em(double x, EulerMaclaurinOptions opt = {}) {
  if (!(x > 0)) throw DomainError("hurwitz_zeta_prime0_em: x must be positive");
  // B_2, B_4, ..., B_12
  static constexpr double bernoulli[] = {1.0 / 6.0,   -1.0 / 30.0,  1.0 / 42.0,
                                         -1.0 / 30.0, 5.0 / 66.0,   -691.0 / 2730.0};
  double sum = 0.0;
  double comp = 0.0;  // Kahan compensation
  for (int k = 0; k < opt.terms; ++k) {
    const double y = -std::log(x + k) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double a = x + opt.terms;
  double tail = a * std::log(a) - a - 0.5 * std::log(a);
  double a_pow = a;  // a^{2j-1}
  for (int j = 1; j <= 6; ++j) {
    tail += bernoulli[j - 1] / (2.0 * j * (2.0 * j - 1.0)) / a_pow;
    a_pow *= a * a;
  }
  return sum + tail;
}

/// log of the regularized product of (x+k) / two_pi_over_delta over k >= 0,
/// i.e. -zeta'(0) of the sequence, via Euler-Maclaurin.
inline double hurwitz_zeta_deriv0(double x, double two_pi_over_delta,
                                  EulerMaclaurinOptions opt = {}) {
  if (!(x > 0)) throw DomainError("hurwitz_zeta_deriv0: x must be positive, got " + std::to_string(x));
  if (!(two_pi_over_delta > 0)) throw DomainError("hurwitz_zeta_deriv0: scale must be positive");
  return -(std::log(two_pi_over_delta) * hurwitz_zeta0_em(x, opt) + hurwitz_zeta_prime0_em(x, opt));
}

/// Same quantity from Lerch's formula zeta_H'(0, x) = log Gamma(x) - log(2pi)/2.
inline double hurwitz_zeta_deriv0_closed(double x, double two_pi_over_delta) {
  if (!(x > 0)) throw DomainError("hurwitz_zeta_deriv0_closed: x must be positive");
  return -(std::log(two_pi_over_delta) * (0.5 - x) + std::lgamma(x) -
           0.5 * std::log(2.0 * std::numbers::pi));
}

/// log det_inf((s - Theta)/2pi) over an infinite progression with any
/// positive step, evaluated numerically; requires s > first.
inline double regdet_progression_numeric(const Progression& p, double s,
                                         EulerMaclaurinOptions opt = {}) {
  if (!p.infinite()) throw InvalidInput("regdet_progression_numeric: progression must be infinite");
  const double x = (s - p.first) / p.step;
  return p.multiplicity * hurwitz_zeta_deriv0(x, 2.0 * std::numbers::pi / p.step, opt);
}

}  // namespace archfactor
