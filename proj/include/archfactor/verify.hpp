#pragma once

// End-to-end check of
//   prod_w L_v(H^w, s)^{(-1)^{w+1}} = det((s-Theta)/2pi)|har_even / det((s-Theta)/2pi)|har_odd
// at the level of divisors (globally and weight by weight) together with
// numerical constancy of the ratio of the two sides.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "archfactor/cyclic_dims.hpp"
#include "archfactor/error.hpp"
#include "archfactor/gamma_expr.hpp"
#include "archfactor/hodge.hpp"
#include "archfactor/local_factors.hpp"
#include "archfactor/regdet.hpp"

namespace archfactor {

struct VerifyOptions {
  std::vector<double> samples;        // empty: four points right of every zero and pole
  std::optional<IntInterval> window;  // empty: [-30, max(5, d+2)]
  double tol = 1e-9;
  double guard = kDefaultSingularityGuard;
};

struct WeightMatch {
  int w = 0;
  bool match = false;
  std::optional<int> witness;
};

struct SamplePoint {
  double s = 0.0;
  double lhs_log = 0.0;
  double rhs_log = 0.0;
  bool sign_agree = false;
};

struct VerificationReport {
  std::string name;
  bool divisor_match = false;
  std::optional<int> witness;
  IntInterval window;
  std::vector<WeightMatch> per_weight;
  double constant_log = 0.0;  // mean of log(LHS/RHS)
  double constant_stddev = 0.0;
  bool constant_stable = false;  // constant_stddev < tol and all signs agree
  std::vector<SamplePoint> samples;
  GammaExpression lhs;
  GammaExpression rhs;
  SpectralMeasure spectrum;

  bool per_weight_match() const {
    return std::all_of(per_weight.begin(), per_weight.end(),
                       [](const WeightMatch& m) { return m.match; });
  }
  bool passed(bool require_per_weight = true) const {
    return divisor_match && constant_stable && (!require_per_weight || per_weight_match());
  }
};

namespace detail {

// Upper end of the support of the divisor: no Gamma pole or linear zero lies
// above it.
inline int support_top(const GammaExpression& x) {
  int top = 0;
  for (const auto& [a, e] : x.gr) top = std::max(top, -a);
  for (const auto& [a, e] : x.gc) top = std::max(top, -a);
  for (const auto& [m, e] : x.lin) top = std::max(top, m);
  return top;
}

inline void check_sample(const Divisor& div, double s, const char* side) {
  const int m = static_cast<int>(std::lround(s));
  if (std::abs(s - m) < 1e-6 && div.window.contains(m) && div.at(m) != 0)
    throw SingularityError(std::string("verify_theorem: sample s=") + std::to_string(s) +
                           " lies on a zero or pole of the " + side + " at " + std::to_string(m));
}

}  // namespace detail

inline VerificationReport verify_theorem(const HodgeData& data, const VerifyOptions& opt = {}) {
  if (auto problems = validate(data); !problems.empty())
    throw InvalidInput("verify_theorem: invalid Hodge data: " + problems.front());

  VerificationReport rep;
  rep.name = data.name;
  rep.lhs = completed_alternating_product(data);
  rep.spectrum = theta_spectrum(data);
  rep.rhs = regdet_measure(rep.spectrum).ratio;

  const int d = data.dim;
  const int head_top = std::max(d, rep.spectrum.span().hi);
  std::vector<double> samples = opt.samples;
  if (samples.empty())
    for (double offset : {0.5, 1.5, 2.5, 3.5}) samples.push_back(head_top + offset);

  // Widen the window until it covers the samples and both left tails.
  IntInterval window = opt.window.value_or(IntInterval{-30, std::max(5, d + 2)});
  const auto [smin, smax] = std::minmax_element(samples.begin(), samples.end());
  const Divisor lhs_probe = divisor_of(rep.lhs, {0, -1});
  const Divisor rhs_probe = divisor_of(rep.rhs, {0, -1});
  window.lo = std::min({window.lo, -20, static_cast<int>(std::floor(*smin)) - 5,
                        lhs_probe.tail_from - 1, rhs_probe.tail_from - 1});
  window.hi = std::max({window.hi, d + 2, head_top + 2, static_cast<int>(std::ceil(*smax)) + 1,
                        detail::support_top(rep.lhs) + 1, detail::support_top(rep.rhs) + 1});
  rep.window = window;

  const Divisor lhs_div = divisor_of(rep.lhs, window);
  const Divisor rhs_div = divisor_of(rep.rhs, window);
  const DivisorComparison global = compare_divisors(lhs_div, rhs_div);
  rep.divisor_match = global.equal;
  rep.witness = global.witness;

  // Weight-by-weight refinement along 2 Theta_0 - Gamma = w.
  for (const auto& [w, factor] : weight_factors(data)) {
    const GammaExpression lhs_w = power(factor, w % 2 == 0 ? -1 : 1);
    const GammaExpression rhs_w = regdet_measure(weight_spectrum(data, w)).ratio;
    IntInterval win = window;
    win.lo = std::min({win.lo, divisor_of(lhs_w, {0, -1}).tail_from - 1,
                       divisor_of(rhs_w, {0, -1}).tail_from - 1});
    const DivisorComparison cmp = compare_divisors(divisor_of(lhs_w, win), divisor_of(rhs_w, win));
    rep.per_weight.push_back({w, cmp.equal, cmp.witness});
  }

  bool signs = true;
  double sum = 0.0;
  for (double s : samples) {
    detail::check_sample(lhs_div, s, "left-hand side");
    detail::check_sample(rhs_div, s, "right-hand side");
    const LogValue l = evaluate_log(rep.lhs, s, opt.guard);
    const LogValue r = evaluate_log(rep.rhs, s, opt.guard);
    rep.samples.push_back({s, l.log_abs, r.log_abs, l.sign == r.sign});
    signs = signs && l.sign == r.sign;
    sum += l.log_abs - r.log_abs;
  }
  const double n = static_cast<double>(samples.size());
  rep.constant_log = sum / n;
  double var = 0.0;
  for (const auto& sp : rep.samples) {
    const double dev = (sp.lhs_log - sp.rhs_log) - rep.constant_log;
    var += dev * dev;
  }
  rep.constant_stddev = std::sqrt(var / n);
  rep.constant_stable = signs && rep.constant_stddev < opt.tol;
  return rep;
}

}  // namespace archfactor
