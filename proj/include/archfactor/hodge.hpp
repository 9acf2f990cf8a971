#pragma once

// Hodge-theoretic input data of a smooth projective variety at one
// archimedean place: per-weight Hodge numbers h^{p,q} and, at real places,
// the F_inf eigenvalue split of the middle Hodge number h^{p,p}.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "archfactor/error.hpp"

namespace archfactor {

enum class Place { real, complex };

inline std::string_view to_string(Place place) {
  return place == Place::real ? "real" : "complex";
}

/// Eigenvalue sign of the involution F_inf.
enum class Sign { plus = 1, minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign negate(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
/// (-1)^k as a Sign.
inline Sign sign_pow(int k) { return (k % 2 == 0) ? Sign::plus : Sign::minus; }

/// Dimensions of the F_inf eigenspaces on H^{p,p} (weight w = 2p).
/// `plus` counts eigenvalue (-1)^p, `minus` counts eigenvalue -(-1)^p.
struct MiddleSplit {
  int plus = 0;
  int minus = 0;

  friend bool operator==(const MiddleSplit&, const MiddleSplit&) = default;
};

using HodgeIndex = std::pair<int, int>;  // (p, q)

struct WeightPiece {
  int w = 0;
  std::map<HodgeIndex, int> hpq;
  std::optional<MiddleSplit> middle_split;

  int h(int p, int q) const {
    auto it = hpq.find({p, q});
    return it == hpq.end() ? 0 : it->second;
  }

  /// h^{w/2,w/2}, or 0 for odd weight.
  int middle() const { return (w % 2 == 0) ? h(w / 2, w / 2) : 0; }

  int total() const {
    int sum = 0;
    for (const auto& [idx, n] : hpq) sum += n;
    return sum;
  }

  bool empty() const { return hpq.empty(); }
};

namespace detail {

inline bool same_tables(const WeightPiece& a, const WeightPiece& b) {
  if (a.w != b.w || a.hpq != b.hpq) return false;
  MiddleSplit sa = a.middle_split.value_or(MiddleSplit{});
  MiddleSplit sb = b.middle_split.value_or(MiddleSplit{});
  return sa == sb;
}

}  // namespace detail

struct HodgeData {
  std::string name;
  int dim = 0;
  Place place = Place::complex;
  std::vector<WeightPiece> weights;

  /// Piece of weight w, or nullptr when absent.
  const WeightPiece* piece(int w) const {
    for (const auto& p : weights)
      if (p.w == w) return &p;
    return nullptr;
  }

  static HodgeData empty(Place place, std::string name = "empty") {
    return HodgeData{std::move(name), 0, place, {}};
  }

  /// Table equality: the name is a label and does not participate; absent
  /// pieces equal zero pieces; an absent split equals (0,0).
  friend bool operator==(const HodgeData& a, const HodgeData& b) {
    if (a.place != b.place || a.dim != b.dim) return false;
    auto nonempty = [](const HodgeData& d) {
      std::map<int, const WeightPiece*> out;
      for (const auto& p : d.weights)
        if (!p.empty()) out[p.w] = &p;
      return out;
    };
    auto ma = nonempty(a);
    auto mb = nonempty(b);
    if (ma.size() != mb.size()) return false;
    for (auto ia = ma.begin(), ib = mb.begin(); ia != ma.end(); ++ia, ++ib)
      if (ia->first != ib->first || !detail::same_tables(*ia->second, *ib->second))
        return false;
    return true;
  }
};

/// Returns every invariant violation, each prefixed with a path such as
/// "weights[1].hpq(1,0)". Empty means valid.
inline std::vector<std::string> validate(const HodgeData& data) {
  std::vector<std::string> out;
  if (data.dim < 0) out.push_back("dim: must be nonnegative, got " + std::to_string(data.dim));
  std::map<int, int> seen;
  for (std::size_t i = 0; i < data.weights.size(); ++i) {
    const WeightPiece& piece = data.weights[i];
    const std::string path = "weights[" + std::to_string(i) + "]";
    const int w = piece.w;
    if (w < 0 || w > 2 * data.dim)
      out.push_back(path + ".w: weight " + std::to_string(w) + " outside [0, " +
                    std::to_string(2 * data.dim) + "]");
    if (auto [it, inserted] = seen.emplace(w, static_cast<int>(i)); !inserted)
      out.push_back(path + ".w: duplicate weight " + std::to_string(w) + " (also at weights[" +
                    std::to_string(it->second) + "])");

    for (const auto& [idx, n] : piece.hpq) {
      const auto [p, q] = idx;
      const std::string cell =
          path + ".hpq(" + std::to_string(p) + "," + std::to_string(q) + ")";
      if (p < 0 || q < 0) out.push_back(cell + ": negative Hodge index");
      if (p + q != w)
        out.push_back(cell + ": p+q=" + std::to_string(p + q) + " differs from weight " +
                      std::to_string(w));
      if (n < 0) out.push_back(cell + ": negative Hodge number " + std::to_string(n));
      if (n == 0) out.push_back(cell + ": zero entry must be omitted");
      // Report each asymmetric pair once.
      if (p < q && piece.h(q, p) != n)
        out.push_back(cell + ": Hodge symmetry violated, h(" + std::to_string(p) + "," +
                      std::to_string(q) + ")=" + std::to_string(n) + " but h(" +
                      std::to_string(q) + "," + std::to_string(p) + ")=" +
                      std::to_string(piece.h(q, p)));
      if (p > q && piece.hpq.find({q, p}) == piece.hpq.end())
        out.push_back(path + ".hpq(" + std::to_string(q) + "," + std::to_string(p) +
                      "): Hodge symmetry violated, h(" + std::to_string(q) + "," +
                      std::to_string(p) + ")=0 but h(" + std::to_string(p) + "," +
                      std::to_string(q) + ")=" + std::to_string(n));
    }

    if (piece.middle_split) {
      const MiddleSplit s = *piece.middle_split;
      if (data.place == Place::complex)
        out.push_back(path + ".middle_split: not allowed at a complex place");
      else if (w % 2 != 0)
        out.push_back(path + ".middle_split: not allowed on odd weight " + std::to_string(w));
      if (s.plus < 0 || s.minus < 0) out.push_back(path + ".middle_split: negative entry");
      if (w % 2 == 0 && s.plus + s.minus != piece.middle())
        out.push_back(path + ".middle_split: " + std::to_string(s.plus) + "+" +
                      std::to_string(s.minus) + " differs from h(" + std::to_string(w / 2) +
                      "," + std::to_string(w / 2) + ")=" + std::to_string(piece.middle()));
    } else if (data.place == Place::real && w % 2 == 0 && piece.middle() != 0) {
      out.push_back(path + ".middle_split: missing at a real place (h(" + std::to_string(w / 2) +
                    "," + std::to_string(w / 2) + ")=" + std::to_string(piece.middle()) + ")");
    }
  }
  return out;
}

/// Opt-in Poincare duality lint: h^{p,q} in weight w against h^{d-p,d-q}
/// in weight 2d-w. Not part of validate().
inline std::vector<std::string> poincare_lint(const HodgeData& data) {
  std::vector<std::string> out;
  const int d = data.dim;
  for (int w = 0; w <= d; ++w) {
    const WeightPiece* lo = data.piece(w);
    const WeightPiece* hi = data.piece(2 * d - w);
    for (int p = 0; p <= w; ++p) {
      const int q = w - p;
      const int a = lo ? lo->h(p, q) : 0;
      const int b = hi ? hi->h(d - p, d - q) : 0;
      if (a != b)
        out.push_back("h(" + std::to_string(p) + "," + std::to_string(q) + ")=" +
                      std::to_string(a) + " in weight " + std::to_string(w) + " but h(" +
                      std::to_string(d - p) + "," + std::to_string(d - q) + ")=" +
                      std::to_string(b) + " in weight " + std::to_string(2 * d - w));
    }
  }
  return out;
}

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"point_R", "point_C",    "P1_R",      "P1_C",
                                                 "P2_C",    "elliptic_R", "elliptic_C"};
  return names;
}

namespace detail {

inline WeightPiece diagonal_piece(int p, int h, Place place) {
  WeightPiece piece{2 * p, {{{p, p}, h}}, std::nullopt};
  if (place == Place::real) piece.middle_split = MiddleSplit{h, 0};
  return piece;
}

}  // namespace detail

/// Built-in Hodge data. At real places the middle classes of projective
/// spaces and curves (powers of the hyperplane class) carry F_inf = (-1)^p,
/// so they are counted in `plus`.
inline HodgeData preset(std::string_view name) {
  using detail::diagonal_piece;
  if (name == "point_R" || name == "point_C") {
    const Place place = name == "point_R" ? Place::real : Place::complex;
    return HodgeData{std::string(name), 0, place, {diagonal_piece(0, 1, place)}};
  }
  if (name == "P1_R" || name == "P1_C") {
    const Place place = name == "P1_R" ? Place::real : Place::complex;
    return HodgeData{std::string(name), 1, place,
                     {diagonal_piece(0, 1, place), diagonal_piece(1, 1, place)}};
  }
  if (name == "P2_C") {
    return HodgeData{std::string(name), 2, Place::complex,
                     {diagonal_piece(0, 1, Place::complex), diagonal_piece(1, 1, Place::complex),
                      diagonal_piece(2, 1, Place::complex)}};
  }
  if (name == "elliptic_R" || name == "elliptic_C") {
    const Place place = name == "elliptic_R" ? Place::real : Place::complex;
    WeightPiece h1{1, {{{1, 0}, 1}, {{0, 1}, 1}}, std::nullopt};
    return HodgeData{std::string(name), 1, place,
                     {diagonal_piece(0, 1, place), h1, diagonal_piece(1, 1, place)}};
  }
  throw InvalidInput("unknown preset '" + std::string(name) + "'");
}

/// Disjoint union: Hodge tables and middle splits add weight by weight.
inline HodgeData direct_sum(const HodgeData& a, const HodgeData& b) {
  if (a.place != b.place)
    throw InvalidInput("direct_sum: places differ (" + std::string(to_string(a.place)) + " vs " +
                       std::string(to_string(b.place)) + ")");
  HodgeData out{a.name + "+" + b.name, std::max(a.dim, b.dim), a.place, {}};
  std::map<int, WeightPiece> acc;
  for (const HodgeData* src : {&a, &b}) {
    for (const WeightPiece& piece : src->weights) {
      auto [it, inserted] = acc.try_emplace(piece.w, WeightPiece{piece.w, {}, std::nullopt});
      WeightPiece& dst = it->second;
      for (const auto& [idx, n] : piece.hpq) {
        int& slot = dst.hpq[idx];
        slot += n;
        if (slot == 0) dst.hpq.erase(idx);
      }
      if (piece.middle_split) {
        MiddleSplit s = dst.middle_split.value_or(MiddleSplit{});
        s.plus += piece.middle_split->plus;
        s.minus += piece.middle_split->minus;
        dst.middle_split = s;
      }
    }
  }
  for (auto& [w, piece] : acc)
    if (!piece.empty()) out.weights.push_back(std::move(piece));
  return out;
}

/// Total Betti number b_w = sum over p+q=w of h^{p,q}.
inline int betti(const HodgeData& data, int w) {
  if (w < 0 || w > 2 * data.dim) return 0;
  const WeightPiece* piece = data.piece(w);
  return piece ? piece->total() : 0;
}

/// Dimension of the F_inf eigenspace of the given sign on H^w_B(X(C), R).
/// Each unordered pair {p,q}, p<q, contributes h^{p,q} to both eigenspaces
/// (F_inf swaps the two types); the middle type contributes per the split.
inline int betti_eigen(const HodgeData& data, int w, Sign sign) {
  if (data.place != Place::real)
    throw DomainError("betti_eigen: F_inf eigenspaces exist only at a real place");
  if (w < 0 || w > 2 * data.dim) return 0;
  const WeightPiece* piece = data.piece(w);
  if (!piece) return 0;
  int sum = 0;
  for (const auto& [idx, n] : piece->hpq)
    if (idx.first < idx.second) sum += n;
  if (w % 2 == 0 && piece->middle() != 0) {
    if (!piece->middle_split)
      throw InvalidInput("betti_eigen: weight " + std::to_string(w) + " lacks middle_split");
    const int p = w / 2;
    sum += (sign == sign_pow(p)) ? piece->middle_split->plus : piece->middle_split->minus;
  }
  return sum;
}

}  // namespace archfactor
