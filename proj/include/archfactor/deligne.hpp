#pragma once

// Dimensions of real Deligne cohomology H^{w+1}_D(X_v, R(r)) in the range
// w+1 < 2r, where
//   0 -> H^w_B(X(C), R(r)) -> H^w_dR / F^r -> H^{w+1}_D(X_v, R(r)) -> 0
// is exact. At a real place everything is cut down to the fixed points of
// the de Rham conjugation, which acts on R(r)-coefficients as (-1)^r F_inf.

#include <string>

#include "archfactor/error.hpp"
#include "archfactor/hodge.hpp"

namespace archfactor {

namespace detail {

/// sum over p<r, p+q=w of h^{p,q} (complex dimension of H^w_dR / F^r).
inline int hodge_below(const HodgeData& data, int w, int r) {
  const WeightPiece* piece = data.piece(w);
  if (!piece) return 0;
  int sum = 0;
  for (const auto& [idx, n] : piece->hpq)
    if (idx.first < r) sum += n;
  return sum;
}

inline void check_weight(const HodgeData& data, int w, const char* who) {
  if (w < 0 || w > 2 * data.dim)
    throw DomainError(std::string(who) + ": weight " + std::to_string(w) + " outside [0, " +
                      std::to_string(2 * data.dim) + "]");
}

}  // namespace detail

/// dim_R H^{w+1}_D(X_v, R(r)); requires w+1 < 2r.
inline int deligne_dim(const HodgeData& data, int w, int r) {
  detail::check_weight(data, w, "deligne_dim");
  if (w + 1 >= 2 * r)
    throw DomainError("deligne_dim: w+1 >= 2r (w=" + std::to_string(w) + ", r=" +
                      std::to_string(r) + ") is outside the short exact sequence regime");
  const int below = detail::hodge_below(data, w, r);
  if (data.place == Place::complex) return 2 * below - betti(data, w);
  return below - betti_eigen(data, w, sign_pow(r));
}

/// ord_{s=m} L_v(H^w, s)^{-1} = dim_R H^{w+1}_D(X_v, R(w+1-m)); zero for m > w/2.
inline int pole_order(const HodgeData& data, int w, int m) {
  detail::check_weight(data, w, "pole_order");
  if (2 * m > w) return 0;
  return deligne_dim(data, w, w + 1 - m);
}

}  // namespace archfactor
