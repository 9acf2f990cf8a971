#pragma once

// archfactor command-line front end. Kept in a header so tests can drive
// run() in-process.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "archfactor/archfactor.hpp"

namespace archfactor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInput = 2;

namespace detail {

using nlohmann::json;

struct Globals {
  bool json = false;
  double guard = kDefaultSingularityGuard;
};

inline HodgeData load_valid(const std::string& source) {
  HodgeData data = load_hodge(source);
  if (auto problems = validate(data); !problems.empty()) {
    std::string msg = "invalid Hodge data in '" + source + "':";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InvalidInput(msg);
  }
  return data;
}

inline int cmd_presets(const std::optional<std::string>& emit, const Globals& g,
                       std::ostream& out) {
  if (emit) {
    out << to_json(preset(*emit)).dump(2) << "\n";
    return kExitOk;
  }
  if (g.json) {
    out << json(preset_names()).dump() << "\n";
  } else {
    for (const auto& n : preset_names()) out << n << "\n";
  }
  return kExitOk;
}

inline int cmd_factors(const std::string& input, bool show_normalized, const Globals& g,
                       std::ostream& out) {
  const HodgeData data = load_valid(input);
  const auto factors = weight_factors(data);
  const GammaExpression alt = completed_alternating_product(data);
  if (g.json) {
    json weights = json::array();
    for (const auto& [w, f] : factors) weights.push_back({{"w", w}, {"factor", to_json(f)}});
    json doc = {{"name", data.name},
                {"place", std::string(to_string(data.place))},
                {"weights", weights},
                {"alternating", to_json(alt)},
                {"alternating_normalized", to_json(normalize(alt))}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << data.name << " (" << to_string(data.place) << " place, d=" << data.dim << ")\n";
  for (const auto& [w, f] : factors) out << "  L(H^" << w << ", s) = " << render(f) << "\n";
  out << "  alternating product = " << render(alt) << "\n";
  if (show_normalized) out << "  normalized          = " << render(normalize(alt)) << "\n";
  return kExitOk;
}

inline int cmd_deligne(const std::string& input, int w, int r, const Globals& g,
                       std::ostream& out) {
  const HodgeData data = load_valid(input);
  const int dim = deligne_dim(data, w, r);
  if (g.json)
    out << json({{"name", data.name}, {"w", w}, {"r", r}, {"dim", dim}}).dump() << "\n";
  else
    out << "dim_R H^" << w + 1 << "_D(X, R(" << r << ")) = " << dim << "\n";
  return kExitOk;
}

inline int cmd_poles(const std::string& input, int w, int from, int to, const Globals& g,
                     std::ostream& out) {
  const HodgeData data = load_valid(input);
  if (from > to) std::swap(from, to);
  const WeightPiece* piece = data.piece(w);
  const GammaExpression factor =
      piece ? serre_factor(*piece, data.place) : GammaExpression::identity();
  const Divisor div = divisor_of(factor, {from, to});
  json rows = json::array();
  for (int m = to; m >= from; --m) {
    const int deligne = pole_order(data, w, m);
    const int serre = -div.at(m);
    rows.push_back({{"m", m}, {"pole_order", deligne}, {"serre_pole_order", serre}});
  }
  if (g.json) {
    out << json({{"name", data.name}, {"w", w}, {"poles", rows}}).dump(2) << "\n";
    return kExitOk;
  }
  out << "poles of L(H^" << w << ", s) for " << data.name << "\n";
  out << std::setw(6) << "m" << std::setw(10) << "deligne" << std::setw(8) << "serre" << "\n";
  for (const auto& r : rows)
    out << std::setw(6) << r["m"].get<int>() << std::setw(10) << r["pole_order"].get<int>()
        << std::setw(8) << r["serre_pole_order"].get<int>() << "\n";
  return kExitOk;
}

inline int cmd_spectrum(const std::string& input, std::optional<int> weight, int depth,
                        const Globals& g, std::ostream& out) {
  const HodgeData data = load_valid(input);
  const SpectralMeasure measure = weight ? weight_spectrum(data, *weight) : theta_spectrum(data);
  const int top = std::max(data.dim, measure.span().hi);
  json head = {{"even", json::array()}, {"odd", json::array()}};
  for (Parity p : {Parity::even, Parity::odd}) {
    auto& list = head[p == Parity::even ? "even" : "odd"];
    for (int m = top; m > top - depth; --m)
      if (const int k = measure.multiplicity(p, m); k != 0) list.push_back({{"m", m}, {"mult", k}});
  }
  if (g.json) {
    json doc = {{"name", data.name}, {"depth", depth}, {"head", head}, {"measure", to_json(measure)}};
    if (weight) doc["weight"] = *weight;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "Theta spectrum of " << data.name;
  if (weight) out << " (2 Theta_0 - Gamma = " << *weight << ")";
  out << "\n";
  for (Parity p : {Parity::even, Parity::odd}) {
    const char* label = p == Parity::even ? "even" : "odd";
    out << "  har_" << label << ":";
    if (head[label].empty()) out << " (empty)";
    for (const auto& e : head[label]) out << " " << e["m"].get<int>() << "^" << e["mult"].get<int>();
    out << "\n";
    for (const auto& prog : measure.part(p))
      if (prog.infinite())
        out << "    tail: " << prog.first << ", " << prog.first - prog.step << ", ... (step "
            << prog.step << ", mult " << prog.multiplicity << ")\n";
  }
  return kExitOk;
}

inline int cmd_regdet(int first, int step, int mult, std::optional<int> finite,
                      std::vector<double> samples, const Globals& g, std::ostream& out) {
  const Progression prog{first, step, finite, mult};
  if (finite && *finite < 0) throw InvalidInput("--finite must be nonnegative");
  const GammaExpression closed = regdet_progression(prog);
  if (samples.empty())
    for (double off : {0.7, 1.3, 2.6}) samples.push_back(first + off);
  json rows = json::array();
  double worst = 0.0;
  for (double s : samples) {
    if (!(s > first)) throw InvalidInput("sample s=" + std::to_string(s) + " must exceed --first");
    const double lhs = evaluate_log(closed, s, g.guard).log_abs;
    double oracle = 0.0;
    if (prog.infinite()) {
      oracle = regdet_progression_numeric(prog, s);
    } else {
      for (int k = 0; k < *finite; ++k)
        oracle += mult * std::log((s - (first - step * k)) / (2.0 * std::numbers::pi));
    }
    const double residual = std::abs(lhs - oracle);
    worst = std::max(worst, residual);
    rows.push_back({{"s", s}, {"closed_form_log", lhs}, {"oracle_log", oracle}, {"residual", residual}});
  }
  if (g.json) {
    out << json({{"progression", to_json(prog)},
                 {"closed_form", to_json(closed)},
                 {"samples", rows},
                 {"max_residual", worst}})
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "det((s - Theta)/2pi) = " << render(closed) << "\n";
  for (const auto& r : rows)
    out << "  s=" << r["s"].get<double>() << "  log det=" << std::setprecision(15)
        << r["closed_form_log"].get<double>() << "  oracle=" << r["oracle_log"].get<double>()
        << "  residual=" << std::setprecision(3) << r["residual"].get<double>() << "\n";
  return kExitOk;
}

inline int cmd_verify(const std::string& input, const std::vector<double>& samples,
                      const std::vector<int>& window, double tol, bool per_weight,
                      const Globals& g, std::ostream& out) {
  const HodgeData data = load_valid(input);
  VerifyOptions opt;
  opt.samples = samples;
  if (window.size() == 2) opt.window = IntInterval{window[0], window[1]};
  opt.tol = tol;
  opt.guard = g.guard;
  const VerificationReport rep = verify_theorem(data, opt);
  out << to_json(rep).dump(2) << "\n";
  return rep.passed(per_weight) ? kExitOk : kExitMismatch;
}

inline int cmd_eval(const std::string& input, double s, const Globals& g, std::ostream& out) {
  const HodgeData data = load_valid(input);
  const GammaExpression alt = completed_alternating_product(data);
  const LogValue v = evaluate_log(alt, s, g.guard);
  if (g.json)
    out << json({{"name", data.name}, {"s", s}, {"log_abs", v.log_abs}, {"sign", v.sign}}).dump()
        << "\n";
  else
    out << std::setprecision(17) << "log|value| = " << v.log_abs << "  sign = " << v.sign << "\n";
  return kExitOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Archimedean local factors, Theta spectra and regularized determinants",
               "archfactor"};
  app.require_subcommand(1);
  app.fallthrough();
  detail::Globals g;
  app.add_flag("--json", g.json, "Emit machine-readable JSON");
  app.add_option("--guard", g.guard, "Singularity guard radius for evaluation")
      ->check(CLI::PositiveNumber);

  std::string input;
  auto add_input = [&input](CLI::App* sub) {
    sub->add_option("input", input, "Hodge data JSON file or preset:NAME")->required();
  };

  auto* presets = app.add_subcommand("presets", "List built-in presets or emit one as JSON");
  std::optional<std::string> emit;
  presets->add_option("--emit", emit, "Preset name to print as JSON");

  auto* factors = app.add_subcommand("factors", "Serre local factors per weight");
  add_input(factors);
  bool show_normalized = false;
  factors->add_flag("--normalized", show_normalized, "Also print the normalized product");

  int w = 0, r = 0, from = 0, to = 0;
  auto* deligne = app.add_subcommand("deligne", "Dimension of real Deligne cohomology");
  add_input(deligne);
  deligne->add_option("--w", w, "Hodge weight")->required();
  deligne->add_option("--r", r, "Twist")->required();

  auto* poles = app.add_subcommand("poles", "Pole orders of L(H^w, s) on a range");
  add_input(poles);
  poles->add_option("--w", w, "Hodge weight")->required();
  poles->add_option("--from", from, "Lowest m")->required();
  poles->add_option("--to", to, "Highest m")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum of Theta on archimedean cyclic homology");
  add_input(spectrum);
  std::optional<int> weight;
  int depth = 20;
  spectrum->add_option("--weight", weight, "Restrict to 2 Theta_0 - Gamma = w");
  spectrum->add_option("--depth", depth, "Number of head eigenvalues to print")
      ->check(CLI::PositiveNumber);

  auto* regdet = app.add_subcommand("regdet", "Regularized determinant over a progression");
  int first = 0, step = 1, mult = 1;
  std::optional<int> finite;
  std::vector<double> samples;
  regdet->add_option("--first", first, "First eigenvalue m0")->required();
  regdet->add_option("--step", step, "Step delta")->required()->check(CLI::PositiveNumber);
  regdet->add_option("--mult", mult, "Multiplicity")->required()->check(CLI::NonNegativeNumber);
  regdet->add_option("--finite", finite, "Number of eigenvalues (default: infinite)");
  regdet->add_option("--s", samples, "Sample points for the oracle residual");

  auto* verify = app.add_subcommand("verify", "Check the determinant formula for a variety");
  add_input(verify);
  std::vector<double> vsamples;
  std::vector<int> window;
  double tol = 1e-9;
  bool per_weight = false;
  verify->add_option("--samples", vsamples, "Sample points s");
  verify->add_option("--window", window, "Divisor window LO HI")->expected(2);
  verify->add_option("--tol", tol, "Ratio-constancy tolerance");
  verify->add_flag("--per-weight", per_weight, "Require weight-by-weight matches for exit 0");

  auto* eval = app.add_subcommand("eval", "Evaluate the alternating product at s");
  add_input(eval);
  double s = 0.0;
  eval->add_option("--s", s, "Point of evaluation")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "archfactor: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (presets->parsed()) return detail::cmd_presets(emit, g, out);
    if (factors->parsed()) return detail::cmd_factors(input, show_normalized, g, out);
    if (deligne->parsed()) return detail::cmd_deligne(input, w, r, g, out);
    if (poles->parsed()) return detail::cmd_poles(input, w, from, to, g, out);
    if (spectrum->parsed()) return detail::cmd_spectrum(input, weight, depth, g, out);
    if (regdet->parsed()) return detail::cmd_regdet(first, step, mult, finite, samples, g, out);
    if (verify->parsed())
      return detail::cmd_verify(input, vsamples, window, tol, per_weight, g, out);
    if (eval->parsed()) return detail::cmd_eval(input, s, g, out);
  } catch (const Error& e) {
    err << "archfactor: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace archfactor::cli
