#pragma once

// Dimension bookkeeping for the lambda-decomposed cyclic theories of a
// smooth projective variety, read off from its Hodge numbers:
//
//   HC_n^{(j)}         = H^{2j-n}_dR / F^{j+1}
//   HN_{n+2}^{(j+1)}   = F^{j+1} H^{2j-n}_dR
//   HP_n^{(j)}         = H^{2j-n}_B(X(C), C)
//   HP_n^{real,(j)}    = H^{2j-n}_B(X(C), R(j))
//   0 -> HP^{real,(j+1)}_{n+2} -> HC_n^{(j)} -> har_n^{Theta_0 = j} -> 0
//
// and the spectral measure of Theta = Theta_0 - Gamma on har_*, where
// Theta_0 acts by j and the grading Gamma by n.

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "archfactor/deligne.hpp"
#include "archfactor/error.hpp"
#include "archfactor/hodge.hpp"

namespace archfactor {

/// (n, j): cyclic degree n and lambda-weight j.
struct IndexPair {
  int n = 0;
  int j = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// (q, m): Hodge weight q and pole location m.
struct PoleIndex {
  int q = 0;
  int m = 0;
  friend bool operator==(const PoleIndex&, const PoleIndex&) = default;
};

/// E_d = {(n,j) | n >= 0, 0 <= 2j-n <= 2d}
inline bool in_e(IndexPair e, int d) { return e.n >= 0 && 0 <= 2 * e.j - e.n && 2 * e.j - e.n <= 2 * d; }

/// A_d = {(q,m) | 0 <= q <= 2d, m <= q/2}
inline bool in_a(PoleIndex a, int d) { return 0 <= a.q && a.q <= 2 * d && 2 * a.m <= a.q; }

inline PoleIndex e_to_a(IndexPair e, int d) {
  if (!in_e(e, d))
    throw DomainError("e_to_a: (" + std::to_string(e.n) + "," + std::to_string(e.j) +
                      ") is not in E_" + std::to_string(d));
  return {2 * e.j - e.n, e.j - e.n};
}

inline IndexPair a_to_e(PoleIndex a, int d) {
  if (!in_a(a, d))
    throw DomainError("a_to_e: (" + std::to_string(a.q) + "," + std::to_string(a.m) +
                      ") is not in A_" + std::to_string(d));
  return {a.q - 2 * a.m, a.q - a.m};
}

// ---------------------------------------------------------------------------
// Dimensions. Real and complex dimensions are kept apart explicitly.

struct HcDimension {
  int real = 0;     // dim over R of HC_n^{(j)}(X_v)
  int complex = 0;  // dim over C of HC_n^{(j)}(X_C)
};

namespace detail {

inline bool weight_in_range(const HodgeData& data, int n, int j) {
  const int w = 2 * j - n;
  return n >= 0 && j >= 0 && 0 <= w && w <= 2 * data.dim;
}

}  // namespace detail

/// HC_n^{(j)}: h^{p,q} summed over p <= j, p+q = 2j-n. At a complex place the
/// real dimension is twice the complex one; at a real place HC(X_R) is a real
/// form of HC(X_C), so both numbers coincide.
inline HcDimension hc_dim(const HodgeData& data, int n, int j) {
  if (!detail::weight_in_range(data, n, j)) return {};
  const int c = detail::hodge_below(data, 2 * j - n, j + 1);
  return {data.place == Place::complex ? 2 * c : c, c};
}

/// dim_C HP_n^{(j)} = b_{2j-n}.
inline int hp_dim(const HodgeData& data, int n, int j) {
  if (!detail::weight_in_range(data, n, j)) return 0;
  return betti(data, 2 * j - n);
}

/// dim_C HN_n^{(j)} = dim F^j H^{2j-n}_dR.
inline int hn_dim(const HodgeData& data, int n, int j) {
  if (!detail::weight_in_range(data, n, j)) return 0;
  const int w = 2 * j - n;
  return betti(data, w) - detail::hodge_below(data, w, j);
}

/// dim_R HP_n^{real,(j)}. At a real place only the de Rham-conjugation fixed
/// part survives, which on R(j)-coefficients is the (-1)^j eigenspace of F_inf.
inline int hp_real_dim(const HodgeData& data, int n, int j) {
  if (!detail::weight_in_range(data, n, j)) return 0;
  const int w = 2 * j - n;
  if (data.place == Place::complex) return betti(data, w);
  return betti_eigen(data, w, sign_pow(j));
}

/// dim_R har_n^{Theta_0 = j}, from the HP^real -> HC -> har sequence; zero
/// outside E_d.
inline int har_dim(const HodgeData& data, int n, int j) {
  if (j < 0 || !in_e({n, j}, data.dim)) return 0;
  return hc_dim(data, n, j).real - hp_real_dim(data, n + 2, j + 1);
}

// ---------------------------------------------------------------------------
// Spectral measures

enum class Parity { even, odd };

inline Parity parity_of(int n) { return (n % 2 == 0) ? Parity::even : Parity::odd; }

/// Eigenvalues first, first-step, first-2*step, ... with a common multiplicity.
/// `count` empty means the progression is infinite.
struct Progression {
  int first = 0;
  int step = 1;
  std::optional<int> count;
  int multiplicity = 1;

  bool infinite() const { return !count.has_value(); }

  int multiplicity_at(int m) const {
    if (m > first) return 0;
    const int diff = first - m;
    if (diff % step != 0) return 0;
    if (count && diff / step >= *count) return 0;
    return multiplicity;
  }

  /// Smallest eigenvalue of a finite progression; `first` for infinite ones.
  int lowest() const { return count ? first - step * (*count - 1) : first; }
};

struct SpectralMeasure {
  std::vector<Progression> even;
  std::vector<Progression> odd;

  const std::vector<Progression>& part(Parity p) const { return p == Parity::even ? even : odd; }
  std::vector<Progression>& part(Parity p) { return p == Parity::even ? even : odd; }

  bool empty() const { return even.empty() && odd.empty(); }

  int multiplicity(Parity p, int m) const {
    int sum = 0;
    for (const auto& prog : part(p)) sum += prog.multiplicity_at(m);
    return sum;
  }

  /// Window on which two measures must agree for their multiplicity
  /// functions to agree everywhere: below `lo` every finite progression has
  /// ended and the remaining infinite ones are periodic with period `period`.
  struct Span {
    int lo = 0;
    int hi = -1;
    int period = 2;
  };

  Span span() const {
    Span sp{std::numeric_limits<int>::max(), std::numeric_limits<int>::min(), 2};
    bool any = false;
    for (const auto* list : {&even, &odd})
      for (const auto& prog : *list) {
        any = true;
        sp.lo = std::min(sp.lo, prog.lowest());
        sp.hi = std::max(sp.hi, prog.first);
        if (prog.infinite()) sp.period = std::lcm(sp.period, prog.step);
      }
    if (!any) return {0, -1, 2};
    return sp;
  }

  friend SpectralMeasure operator+(const SpectralMeasure& a, const SpectralMeasure& b) {
    SpectralMeasure out = a;
    out.even.insert(out.even.end(), b.even.begin(), b.even.end());
    out.odd.insert(out.odd.end(), b.odd.begin(), b.odd.end());
    return out;
  }

  /// Semantic equality of the multiplicity functions.
  friend bool operator==(const SpectralMeasure& a, const SpectralMeasure& b) {
    const Span sa = a.span();
    const Span sb = b.span();
    const int period = std::lcm(sa.period, sb.period);
    const int lo = std::min(sa.lo, sb.lo) - period;
    const int hi = std::max(sa.hi, sb.hi);
    for (Parity p : {Parity::even, Parity::odd})
      for (int m = lo; m <= hi; ++m)
        if (a.multiplicity(p, m) != b.multiplicity(p, m)) return false;
    return true;
  }
};

/// Largest eigenvalue that is listed individually rather than via a tail.
inline constexpr int kHeadBottom = -2;

/// Part of the Theta-spectrum on har_* cut out by 2 Theta_0 - Gamma = w.
/// Eigenvalue m sits in degree n = w - 2m with Theta_0 = j = w - m.
inline SpectralMeasure weight_spectrum(const HodgeData& data, int w) {
  if (w < 0 || w > 2 * data.dim)
    throw DomainError("weight_spectrum: weight " + std::to_string(w) + " outside [0, " +
                      std::to_string(2 * data.dim) + "]");
  SpectralMeasure out;
  const WeightPiece* piece = data.piece(w);
  if (!piece || piece->empty()) return out;
  auto& list = out.part(parity_of(w));
  auto mult = [&](int m) { return har_dim(data, w - 2 * m, w - m); };

  const int top = w / 2;
  for (int m = top; m >= kHeadBottom; --m)
    if (const int k = mult(m); k > 0) list.push_back({m, 1, 1, k});

  // For m <= -1 every Hodge column lies below the twist, so multiplicities
  // only depend on the parity of m from here on.
  const int t3 = mult(kHeadBottom - 1);
  const int t4 = mult(kHeadBottom - 2);
  if (t3 == t4 && t3 > 0) {
    list.push_back({kHeadBottom - 1, 1, std::nullopt, t3});
  } else {
    if (t3 > 0) list.push_back({kHeadBottom - 1, 2, std::nullopt, t3});
    if (t4 > 0) list.push_back({kHeadBottom - 2, 2, std::nullopt, t4});
  }
  return out;
}

/// Theta-spectrum on har_even (even part) and har_odd (odd part).
inline SpectralMeasure theta_spectrum(const HodgeData& data) {
  SpectralMeasure out;
  for (int w = 0; w <= 2 * data.dim; ++w) out = out + weight_spectrum(data, w);
  return out;
}

}  // namespace archfactor
