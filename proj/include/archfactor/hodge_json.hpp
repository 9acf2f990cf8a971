#pragma once

// JSON schema for HodgeData:
//   {"name": str, "dim": int, "place": "real"|"complex",
//    "weights": [{"w": int, "hpq": {"p,q": int, ...}, "middle_split": [int, int]?}]}

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "archfactor/error.hpp"
#include "archfactor/hodge.hpp"

namespace archfactor {

namespace detail {

inline int parse_decimal(std::string_view text, const std::string& context) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw InvalidInput(context + ": '" + std::string(text) + "' is not a decimal integer");
  return value;
}

inline HodgeIndex parse_hodge_key(const std::string& key, const std::string& context) {
  const auto comma = key.find(',');
  if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
    throw InvalidInput(context + ": key '" + key + "' must have the form \"p,q\"");
  return {parse_decimal(std::string_view(key).substr(0, comma), context),
          parse_decimal(std::string_view(key).substr(comma + 1), context)};
}

inline int get_int(const nlohmann::json& j, const std::string& context) {
  if (!j.is_number_integer()) throw InvalidInput(context + ": expected an integer");
  return j.get<int>();
}

}  // namespace detail

/// Parses a HodgeData document. Zero Hodge numbers and (0,0) splits are
/// dropped so the result is in canonical form; semantic checks are left to
/// validate().
inline HodgeData hodge_from_json(const nlohmann::json& j) {
  using detail::get_int;
  if (!j.is_object()) throw InvalidInput("document: expected a JSON object");
  HodgeData data;
  data.name = j.value("name", std::string("unnamed"));
  if (!j.contains("dim")) throw InvalidInput("dim: missing");
  data.dim = get_int(j.at("dim"), "dim");
  if (!j.contains("place") || !j.at("place").is_string())
    throw InvalidInput("place: expected \"real\" or \"complex\"");
  const auto place = j.at("place").get<std::string>();
  if (place == "real")
    data.place = Place::real;
  else if (place == "complex")
    data.place = Place::complex;
  else
    throw InvalidInput("place: expected \"real\" or \"complex\", got \"" + place + "\"");

  const nlohmann::json weights = j.value("weights", nlohmann::json::array());
  if (!weights.is_array()) throw InvalidInput("weights: expected an array");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const std::string path = "weights[" + std::to_string(i) + "]";
    const auto& wj = weights[i];
    if (!wj.is_object()) throw InvalidInput(path + ": expected an object");
    if (!wj.contains("w")) throw InvalidInput(path + ".w: missing");
    WeightPiece piece{get_int(wj.at("w"), path + ".w"), {}, std::nullopt};
    if (wj.contains("hpq")) {
      const auto& table = wj.at("hpq");
      if (!table.is_object()) throw InvalidInput(path + ".hpq: expected an object");
      for (const auto& [key, value] : table.items()) {
        const std::string cell = path + ".hpq[\"" + key + "\"]";
        const HodgeIndex idx = detail::parse_hodge_key(key, cell);
        if (piece.hpq.count(idx)) throw InvalidInput(cell + ": duplicate Hodge index");
        const int n = get_int(value, cell);
        if (n != 0) piece.hpq[idx] = n;
      }
    }
    if (wj.contains("middle_split") && !wj.at("middle_split").is_null()) {
      const auto& s = wj.at("middle_split");
      if (!s.is_array() || s.size() != 2)
        throw InvalidInput(path + ".middle_split: expected [h_plus, h_minus]");
      MiddleSplit split{get_int(s[0], path + ".middle_split[0]"),
                        get_int(s[1], path + ".middle_split[1]")};
      if (split.plus != 0 || split.minus != 0) piece.middle_split = split;
    }
    data.weights.push_back(std::move(piece));
  }
  return data;
}

inline nlohmann::json to_json(const HodgeData& data) {
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& piece : data.weights) {
    nlohmann::json table = nlohmann::json::object();
    for (const auto& [idx, n] : piece.hpq)
      table[std::to_string(idx.first) + "," + std::to_string(idx.second)] = n;
    nlohmann::json wj = {{"w", piece.w}, {"hpq", table}};
    if (piece.middle_split)
      wj["middle_split"] = {piece.middle_split->plus, piece.middle_split->minus};
    weights.push_back(std::move(wj));
  }
  return {{"name", data.name},
          {"dim", data.dim},
          {"place", std::string(to_string(data.place))},
          {"weights", weights}};
}

inline HodgeData hodge_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return hodge_from_json(j);
}

/// Loads "preset:NAME" or a path to a JSON document.
inline HodgeData load_hodge(const std::string& source) {
  constexpr std::string_view prefix = "preset:";
  if (source.rfind(prefix, 0) == 0) return preset(std::string_view(source).substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw InvalidInput("cannot open '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return hodge_from_json_text(buf.str());
}

}  // namespace archfactor
