#pragma once

// Serre's archimedean local factors L_v(H^w, s) built from Hodge numbers.

#include <string>
#include <utility>
#include <vector>

#include "archfactor/gamma_expr.hpp"
#include "archfactor/hodge.hpp"

namespace archfactor {

/// L_v(H^w, s) for one weight.
///   complex place: prod over ordered (p,q) of GC(s - min(p,q))^{h^{p,q}}
///   real place:    prod over p<q of GC(s-p)^{h^{p,q}}
///                  * GR(s-p)^{h_plus} GR(s-p+1)^{h_minus} on the middle type w = 2p
inline GammaExpression serre_factor(const WeightPiece& piece, Place place) {
  GammaExpression out;
  for (const auto& [idx, n] : piece.hpq) {
    const auto [p, q] = idx;
    if (place == Place::complex) {
      detail::bump(out.gc, -std::min(p, q), n);
    } else if (p < q) {
      detail::bump(out.gc, -p, n);
    }
  }
  if (place == Place::real && piece.w % 2 == 0 && piece.middle() != 0) {
    if (!piece.middle_split)
      throw InvalidInput("serre_factor: weight " + std::to_string(piece.w) +
                         " at a real place needs middle_split");
    const int p = piece.w / 2;
    detail::bump(out.gr, -p, piece.middle_split->plus);
    detail::bump(out.gr, -p + 1, piece.middle_split->minus);
  }
  return out;
}

/// Factors per weight w = 0..2d; absent weights give the identity.
inline std::vector<std::pair<int, GammaExpression>> weight_factors(const HodgeData& data) {
  std::vector<std::pair<int, GammaExpression>> out;
  for (int w = 0; w <= 2 * data.dim; ++w) {
    const WeightPiece* piece = data.piece(w);
    out.emplace_back(w, piece ? serre_factor(*piece, data.place) : GammaExpression::identity());
  }
  return out;
}

/// prod_{0<=w<=2d} L_v(H^w, s)^{(-1)^{w+1}}
inline GammaExpression completed_alternating_product(const HodgeData& data) {
  GammaExpression out;
  for (const auto& [w, factor] : weight_factors(data))
    out = multiply(out, power(factor, w % 2 == 0 ? -1 : 1));
  return out;
}

}  // namespace archfactor
