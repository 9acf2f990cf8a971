#pragma once

// JSON renderings of library values, used by the CLI's --json output.

#include <json.hpp>

#include "archfactor/cyclic_dims.hpp"
#include "archfactor/gamma_expr.hpp"
#include "archfactor/verify.hpp"

namespace archfactor {

namespace detail {

inline nlohmann::json table_json(const std::map<int, int>& table) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [k, e] : table) out[std::to_string(k)] = e;
  return out;
}

}  // namespace detail

inline nlohmann::json to_json(const GammaExpression& x) {
  return {{"text", render(x)},
          {"gr", detail::table_json(x.gr)},
          {"gc", detail::table_json(x.gc)},
          {"lin", detail::table_json(x.lin)},
          {"prefactor",
           {{"log2_const", to_string(x.pre.log2_const)},
            {"log2_slope", to_string(x.pre.log2_slope)},
            {"pi_const", to_string(x.pre.pi_const)},
            {"pi_slope", to_string(x.pre.pi_slope)}}}};
}

inline nlohmann::json to_json(const Progression& p) {
  nlohmann::json out = {{"first", p.first}, {"step", p.step}, {"multiplicity", p.multiplicity}};
  out["count"] = p.count ? nlohmann::json(*p.count) : nlohmann::json("infinite");
  return out;
}

inline nlohmann::json to_json(const SpectralMeasure& m) {
  nlohmann::json even = nlohmann::json::array();
  nlohmann::json odd = nlohmann::json::array();
  for (const auto& p : m.even) even.push_back(to_json(p));
  for (const auto& p : m.odd) odd.push_back(to_json(p));
  return {{"even", even}, {"odd", odd}};
}

inline nlohmann::json optional_int(const std::optional<int>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline nlohmann::json to_json(const VerificationReport& rep) {
  nlohmann::json per_weight = nlohmann::json::array();
  for (const auto& m : rep.per_weight)
    per_weight.push_back({{"w", m.w}, {"divisor_match", m.match}, {"witness", optional_int(m.witness)}});
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : rep.samples)
    samples.push_back(
        {{"s", s.s}, {"lhs_log", s.lhs_log}, {"rhs_log", s.rhs_log}, {"sign_agree", s.sign_agree}});
  return {{"name", rep.name},
          {"divisor_match", rep.divisor_match},
          {"witness", optional_int(rep.witness)},
          {"window", {rep.window.lo, rep.window.hi}},
          {"per_weight", per_weight},
          {"constant_log", rep.constant_log},
          {"constant_stddev", rep.constant_stddev},
          {"constant_stable", rep.constant_stable},
          {"samples", samples},
          {"lhs", to_json(rep.lhs)},
          {"rhs", to_json(rep.rhs)},
          {"lhs_normalized", render(normalize(rep.lhs))},
          {"rhs_normalized", render(normalize(rep.rhs))},
          {"spectrum", to_json(rep.spectrum)}};
}

}  // namespace archfactor
