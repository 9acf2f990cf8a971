#pragma once

// Exact formal products of shifted archimedean Gamma factors
//
//   2^{a2 + b2 s} pi^{api + bpi s} * prod GR(s+a)^{e} * prod GC(s+a)^{e}
//                                  * prod ((s-m)/2pi)^{e}
//
// with GR(z) = pi^{-z/2} Gamma(z/2) and GC(z) = (2pi)^{-z} Gamma(z).
// All shifts are integers, so every zero and pole sits at an integer.

#include <array>
#include <climits>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/rational.hpp>

#include "archfactor/error.hpp"

namespace archfactor {

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// 2^{log2_const + log2_slope s} * pi^{pi_const + pi_slope s}
struct Prefactor {
  Rational log2_const{0};
  Rational log2_slope{0};
  Rational pi_const{0};
  Rational pi_slope{0};

  bool is_one() const {
    const Rational zero{0};
    return log2_const == zero && log2_slope == zero && pi_const == zero && pi_slope == zero;
  }
  friend bool operator==(const Prefactor&, const Prefactor&) = default;
};

struct GammaExpression {
  std::map<int, int> gr;   // shift a -> exponent of GR(s+a)
  std::map<int, int> gc;   // shift a -> exponent of GC(s+a)
  std::map<int, int> lin;  // m -> exponent of (s-m)/(2pi)
  Prefactor pre;

  static GammaExpression identity() { return {}; }
  static GammaExpression gamma_r(int shift, int exponent = 1) {
    GammaExpression x;
    if (exponent != 0) x.gr[shift] = exponent;
    return x;
  }
  static GammaExpression gamma_c(int shift, int exponent = 1) {
    GammaExpression x;
    if (exponent != 0) x.gc[shift] = exponent;
    return x;
  }
  static GammaExpression linear(int m, int exponent = 1) {
    GammaExpression x;
    if (exponent != 0) x.lin[m] = exponent;
    return x;
  }
  static GammaExpression prefactor(Prefactor pre) {
    GammaExpression x;
    x.pre = pre;
    return x;
  }

  bool is_identity() const { return gr.empty() && gc.empty() && lin.empty() && pre.is_one(); }

  friend bool operator==(const GammaExpression&, const GammaExpression&) = default;
};

namespace detail {

inline void bump(std::map<int, int>& table, int key, int delta) {
  if (delta == 0) return;
  int& slot = table[key];
  slot += delta;
  if (slot == 0) table.erase(key);
}

inline int lookup(const std::map<int, int>& table, int key) {
  auto it = table.find(key);
  return it == table.end() ? 0 : it->second;
}

inline int parity(int m) { return ((m % 2) + 2) % 2; }

inline int sgn(int v) { return (v > 0) - (v < 0); }

}  // namespace detail

inline GammaExpression multiply(const GammaExpression& x, const GammaExpression& y) {
  GammaExpression out = x;
  for (const auto& [a, e] : y.gr) detail::bump(out.gr, a, e);
  for (const auto& [a, e] : y.gc) detail::bump(out.gc, a, e);
  for (const auto& [m, e] : y.lin) detail::bump(out.lin, m, e);
  out.pre.log2_const += y.pre.log2_const;
  out.pre.log2_slope += y.pre.log2_slope;
  out.pre.pi_const += y.pre.pi_const;
  out.pre.pi_slope += y.pre.pi_slope;
  return out;
}

inline GammaExpression operator*(const GammaExpression& x, const GammaExpression& y) {
  return multiply(x, y);
}

inline GammaExpression power(const GammaExpression& x, int k) {
  if (k == 0) return GammaExpression::identity();
  GammaExpression out;
  for (const auto& [a, e] : x.gr) out.gr[a] = e * k;
  for (const auto& [a, e] : x.gc) out.gc[a] = e * k;
  for (const auto& [m, e] : x.lin) out.lin[m] = e * k;
  out.pre = {x.pre.log2_const * k, x.pre.log2_slope * k, x.pre.pi_const * k, x.pre.pi_slope * k};
  return out;
}

inline GammaExpression inverse(const GammaExpression& x) { return power(x, -1); }

// ---------------------------------------------------------------------------
// Divisors

struct IntInterval {
  int lo = 0;
  int hi = -1;

  bool contains(int m) const { return lo <= m && m <= hi; }
  bool empty() const { return hi < lo; }
  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

/// Orders of vanishing (positive) and poles (negative) at integers. Inside
/// `window` the table is exact; for every m <= tail_from the order equals
/// tail[m mod 2], which describes the divisor globally to the left.
struct Divisor {
  IntInterval window;
  std::map<int, int> ord;  // nonzero entries within window
  int tail_from = 0;
  std::array<int, 2> tail{0, 0};

  int at(int m) const {
    if (window.contains(m)) return detail::lookup(ord, m);
    if (m <= tail_from) return tail[detail::parity(m)];
    throw DomainError("Divisor::at: " + std::to_string(m) + " outside the computed window");
  }
};

/// Pointwise sum on the common window; tails add.
inline Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor out;
  out.window = {std::max(a.window.lo, b.window.lo), std::min(a.window.hi, b.window.hi)};
  for (int m = out.window.lo; m <= out.window.hi; ++m)
    detail::bump(out.ord, m, detail::lookup(a.ord, m) + detail::lookup(b.ord, m));
  out.tail_from = std::min(a.tail_from, b.tail_from);
  out.tail = {a.tail[0] + b.tail[0], a.tail[1] + b.tail[1]};
  return out;
}

inline Divisor divisor_of(const GammaExpression& x, IntInterval window) {
  Divisor div;
  div.window = window;
  for (int m = window.lo; m <= window.hi; ++m) {
    int order = detail::lookup(x.lin, m);
    for (const auto& [a, e] : x.gr)
      if (m + a <= 0 && (m + a) % 2 == 0) order -= e;
    for (const auto& [a, e] : x.gc)
      if (m + a <= 0) order -= e;
    detail::bump(div.ord, m, order);
  }

  int threshold = INT_MAX;
  for (const auto& [a, e] : x.gr) threshold = std::min(threshold, -a);
  for (const auto& [a, e] : x.gc) threshold = std::min(threshold, -a);
  if (!x.lin.empty()) threshold = std::min(threshold, x.lin.begin()->first - 1);
  div.tail_from = threshold == INT_MAX ? 0 : threshold;
  for (const auto& [a, e] : x.gr) div.tail[detail::parity(a)] -= e;
  for (const auto& [a, e] : x.gc) {
    div.tail[0] -= e;
    div.tail[1] -= e;
  }
  return div;
}

struct DivisorComparison {
  bool equal = true;
  std::optional<int> witness;  // mismatch point of smallest |m|
};

/// Pointwise comparison on the common window plus comparison of the left
/// tails per parity class.
inline DivisorComparison compare_divisors(const Divisor& a, const Divisor& b) {
  DivisorComparison out;
  auto consider = [&out](int m) {
    out.equal = false;
    if (!out.witness || std::abs(m) < std::abs(*out.witness) ||
        (std::abs(m) == std::abs(*out.witness) && m < *out.witness))
      out.witness = m;
  };
  const int lo = std::max(a.window.lo, b.window.lo);
  const int hi = std::min(a.window.hi, b.window.hi);
  for (int m = lo; m <= hi; ++m)
    if (detail::lookup(a.ord, m) != detail::lookup(b.ord, m)) consider(m);
  const int tail_top = std::min(a.tail_from, b.tail_from);
  for (int par = 0; par < 2; ++par) {
    if (a.tail[par] == b.tail[par]) continue;
    // Largest m <= tail_top with this parity; when tail_top >= 0 the
    // smallest |m| of that parity is 0 or -1.
    int m = tail_top;
    if (m >= 0) m = par == 0 ? 0 : (tail_top >= 1 ? 1 : -1);
    if (detail::parity(m) != par) --m;
    consider(m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normalization

namespace detail {

// Moves a linear factor into an adjacent Gamma factor using
//   GC(z+1) = (z/2pi) GC(z),   GR(z+2) = (z/2pi) GR(z),
// with z = s+a. Returns true if anything changed.
inline bool absorb_linear(std::map<int, int>& gamma, std::map<int, int>& lin, int step) {
  for (auto it = lin.begin(); it != lin.end(); ++it) {
    const int m = it->first;
    const int e = it->second;
    const int a = -m;
    const int low = lookup(gamma, a);
    const int high = lookup(gamma, a + step);
    // GAMMA(z)^k (z/2pi)^k = GAMMA(z+step)^k
    if (low != 0 && sgn(low) == sgn(e)) {
      const int k = sgn(e) * std::min(std::abs(low), std::abs(e));
      bump(gamma, a, -k);
      bump(gamma, a + step, k);
      bump(lin, m, -k);
      return true;
    }
    // GAMMA(z+step)^k (z/2pi)^{-k} = GAMMA(z)^k
    if (high != 0 && sgn(high) == -sgn(e)) {
      const int k = sgn(high) * std::min(std::abs(high), std::abs(e));
      bump(gamma, a + step, -k);
      bump(gamma, a, k);
      bump(lin, m, k);
      return true;
    }
  }
  return false;
}

// GR(z) GR(z+1) = 2 GC(z), paired greedily from the lowest shift.
inline bool pair_duplication(GammaExpression& x) {
  bool changed = false;
  for (auto it = x.gr.begin(); it != x.gr.end();) {
    const int a = it->first;
    const int e0 = it->second;
    const int e1 = lookup(x.gr, a + 1);
    ++it;
    if (e1 == 0 || sgn(e0) != sgn(e1)) continue;
    const int k = sgn(e0) * std::min(std::abs(e0), std::abs(e1));
    bump(x.gr, a, -k);
    bump(x.gr, a + 1, -k);
    bump(x.gc, a, k);
    x.pre.log2_const += k;
    changed = true;
    it = x.gr.upper_bound(a);
  }
  return changed;
}

}  // namespace detail

/// Value-preserving canonical form: linear factors are absorbed into Gamma
/// factors where a matching shift exists and adjacent same-sign GR pairs
/// are merged into GC (carrying the factor 2 into the prefactor).
inline GammaExpression normalize(const GammaExpression& x) {
  GammaExpression out = x;
  for (;;) {
    bool changed = false;
    while (detail::absorb_linear(out.gc, out.lin, 1)) changed = true;
    while (detail::absorb_linear(out.gr, out.lin, 2)) changed = true;
    if (detail::pair_duplication(out)) changed = true;
    if (!changed) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

struct LogValue {
  double log_abs = 0.0;
  int sign = 1;
};

inline constexpr double kDefaultSingularityGuard = 1e-9;

/// log|Gamma(x)| and sign(Gamma(x)) for real non-pole x.
inline LogValue log_gamma(double x) {
  int sign = 1;
  const double value = boost::math::lgamma(x, &sign);
  return {value, sign};
}

namespace detail {

// True if z lies within `guard` of a nonpositive integer n with n % modulus == 0.
inline bool near_gamma_pole(double z, double guard, int modulus) {
  const double n = std::round(z);
  if (n > 0.5 || std::abs(z - n) >= guard) return false;
  return static_cast<long long>(n) % modulus == 0;
}

inline bool factor_singular(const GammaExpression& x, double s, double guard) {
  for (const auto& [a, e] : x.gr)
    if (near_gamma_pole((s + a) / 2.0, guard / 2.0, 1)) return true;
  for (const auto& [a, e] : x.gc)
    if (near_gamma_pole(s + a, guard, 1)) return true;
  for (const auto& [m, e] : x.lin)
    if (std::abs(s - m) < guard) return true;
  return false;
}

inline void accumulate(LogValue& acc, LogValue term, int exponent) {
  acc.log_abs += exponent * term.log_abs;
  if (term.sign < 0 && exponent % 2 != 0) acc.sign = -acc.sign;
}

inline LogValue evaluate_regular(const GammaExpression& x, double s) {
  const double log2 = std::log(2.0);
  const double logpi = std::log(std::numbers::pi);
  const double log2pi = std::log(2.0 * std::numbers::pi);
  LogValue acc;
  acc.log_abs = (to_double(x.pre.log2_const) + to_double(x.pre.log2_slope) * s) * log2 +
                (to_double(x.pre.pi_const) + to_double(x.pre.pi_slope) * s) * logpi;
  for (const auto& [a, e] : x.gr) {
    const double z = s + a;
    LogValue g = log_gamma(z / 2.0);
    g.log_abs -= 0.5 * z * logpi;
    accumulate(acc, g, e);
  }
  for (const auto& [a, e] : x.gc) {
    const double z = s + a;
    LogValue g = log_gamma(z);
    g.log_abs -= z * log2pi;
    accumulate(acc, g, e);
  }
  for (const auto& [m, e] : x.lin) {
    const double z = s - m;
    accumulate(acc, {std::log(std::abs(z)) - log2pi, z < 0 ? -1 : 1}, e);
  }
  return acc;
}

}  // namespace detail

/// log|x(s)| and the sign of x(s) for real s. A singular factor whose
/// singularity cancels in the divisor is evaluated through normalize().
inline LogValue evaluate_log(const GammaExpression& x, double s,
                             double guard = kDefaultSingularityGuard) {
  if (!std::isfinite(s)) throw InvalidInput("evaluate_log: non-finite argument");
  if (!detail::factor_singular(x, s, guard)) return detail::evaluate_regular(x, s);
  const int m = static_cast<int>(std::lround(s));
  const Divisor div = divisor_of(x, {m, m});
  if (div.at(m) != 0)
    throw SingularityError("evaluate_log: s=" + std::to_string(s) + " is within " +
                           std::to_string(guard) + " of a " + (div.at(m) > 0 ? "zero" : "pole") +
                           " of order " + std::to_string(std::abs(div.at(m))) + " at " +
                           std::to_string(m));
  const GammaExpression canon = normalize(x);
  if (detail::factor_singular(canon, s, guard))
    throw SingularityError("evaluate_log: removable singularity at " + std::to_string(m) +
                           " could not be eliminated");
  return detail::evaluate_regular(canon, s);
}

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline std::string shifted(int a) {
  return a >= 0 ? "s+" + std::to_string(a) : "s-" + std::to_string(-a);
}

}  // namespace detail

/// Text form: "2^(a2+b2 s) pi^(api+bpi s) * GR(s+a)^n * GC(s+a)^n * ((s-m)/2pi)^n";
/// the identity renders as "1".
inline std::string render(const GammaExpression& x) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&]() -> std::ostream& {
    if (!first) out << " * ";
    first = false;
    return out;
  };
  if (!x.pre.is_one())
    sep() << "2^(" << to_string(x.pre.log2_const) << "+" << to_string(x.pre.log2_slope)
          << " s) pi^(" << to_string(x.pre.pi_const) << "+" << to_string(x.pre.pi_slope)
          << " s)";
  for (const auto& [a, e] : x.gr) sep() << "GR(" << detail::shifted(a) << ")^" << e;
  for (const auto& [a, e] : x.gc) sep() << "GC(" << detail::shifted(a) << ")^" << e;
  for (const auto& [m, e] : x.lin) sep() << "((" << detail::shifted(-m) << ")/2pi)^" << e;
  if (first) out << "1";
  return out.str();
}

}  // namespace archfactor
