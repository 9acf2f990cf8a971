#pragma once

// Test-only helpers: random valid Hodge data and small numeric utilities.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "archfactor/hodge.hpp"

namespace archfactor::testing {

struct RandomHodgeOptions {
  int max_dim = 3;
  int max_entry = 5;
  std::optional<Place> place;  // random when empty
  double zero_weight_probability = 0.2;
};

/// Random Hodge data satisfying every invariant checked by validate().
inline HodgeData random_hodge(std::mt19937& rng, const RandomHodgeOptions& opt = {}) {
  std::uniform_int_distribution<int> dim_dist(0, opt.max_dim);
  std::uniform_int_distribution<int> entry(0, opt.max_entry);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution drop(opt.zero_weight_probability);

  HodgeData data;
  data.dim = dim_dist(rng);
  data.place = opt.place.value_or(coin(rng) ? Place::real : Place::complex);
  data.name = "random";
  for (int w = 0; w <= 2 * data.dim; ++w) {
    if (drop(rng)) continue;
    WeightPiece piece{w, {}, std::nullopt};
    for (int p = 0; 2 * p < w; ++p) {
      const int q = w - p;
      // Hodge numbers vanish for p or q beyond the dimension.
      if (q > data.dim) continue;
      if (const int h = entry(rng); h > 0) {
        piece.hpq[{p, q}] = h;
        piece.hpq[{q, p}] = h;
      }
    }
    if (w % 2 == 0) {
      if (const int h = entry(rng); h > 0) {
        piece.hpq[{w / 2, w / 2}] = h;
        if (data.place == Place::real) {
          const int plus = std::uniform_int_distribution<int>(0, h)(rng);
          piece.middle_split = MiddleSplit{plus, h - plus};
        }
      }
    }
    if (!piece.empty()) data.weights.push_back(std::move(piece));
  }
  return data;
}

inline std::vector<HodgeData> all_presets() {
  std::vector<HodgeData> out;
  for (const auto& n : preset_names()) out.push_back(preset(n));
  return out;
}

/// |a - b| <= tol * max(1, |b|)
inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace archfactor::testing
