#ifndef LOGHM_CLI_HPP
#define LOGHM_CLI_HPP

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "loghm/error.hpp"
#include "loghm/extremal.hpp"
#include "loghm/grid.hpp"
#include "loghm/logharmonic_map.hpp"
#include "loghm/manifest.hpp"
#include "loghm/random_instances.hpp"
#include "loghm/render.hpp"
#include "loghm/schwarz.hpp"
#include "loghm/starlike.hpp"

namespace loghm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundViolation = 1;
inline constexpr int kExitInputError = 2;

inline constexpr double kBoundSlack = 1e-6;
inline constexpr double kGrowthSlack = 1e-8;

struct RunConfig {
  std::string subcommand;
  std::string manifest;
  GridSpec grid;
  bool grid_set = false;  ///< grid overridden on the command line
  int order = kDefaultOrder;
  std::uint64_t seed = 0;
  int count = 200;
  std::string out;  ///< empty: standard output
  std::string format = "json";
  std::optional<double> alpha;
  std::string instances;
  double oracle_radius = 0.7;
  int oracle_steps = 4096;
};

namespace detail {

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& fallback) {
  if (cfg.out.empty())
    fallback << text;
  else
    write_text_file(cfg.out, text);
}

inline void emit_json(const RunConfig& cfg, const nlohmann::json& j, std::ostream& fallback) {
  emit(cfg, j.dump(2) + "\n", fallback);
}

inline Manifest require_manifest(const RunConfig& cfg) {
  if (cfg.manifest.empty()) throw Error(ErrorKind::InputError, cfg.subcommand + " needs --manifest");
  return load_manifest(cfg.manifest, cfg.order);
}

inline const LogharmonicMap& require_map(const Manifest& m, const std::string& what) {
  if (!m.map) throw Error(ErrorKind::InputError, what + " needs an e^h conj(e^g) manifest");
  return *m.map;
}

// Bounds are theorems about L_R; a manifest counts as a candidate
// falsification only if h looks like a class-R member and |omega| < 1.
inline bool is_lr_candidate(const LogharmonicMap& f) {
  if (f.variant() != Variant::Nonvanishing) return false;
  try {
    if (!check_class_R(f.h()).member()) return false;
    const auto grid = class_r_grid();
    const auto angles = grid.angles();
    for (double r : grid.radii())
      for (double t : angles)
        if (!(std::abs(f.omega().value(std::polar(r, t))) < 1.0)) return false;
    return true;
  } catch (const Error&) {
    return false;
  }
}

inline int norm_like(const RunConfig& cfg, std::ostream& out) {
  const auto m = require_manifest(cfg);
  SupremumReport rep;
  double bound = 0.0;
  bool candidate = false;
  if (m.logharmonic_koebe) {
    if (cfg.subcommand != "norm") throw Error(ErrorKind::InputError, "LOGHARMONIC_KOEBE supports only `norm`");
    rep = norm_estimate([](cplx z) { return pre_schwarzian_koebe(z); }, cfg.grid);
  } else {
    const auto& f = require_map(m, cfg.subcommand);
    candidate = is_lr_candidate(f);
    if (cfg.subcommand == "norm") {
      rep = logharmonic_norm(f, cfg.grid);
      bound = kNormBound;
    } else if (cfg.subcommand == "bloch") {
      rep = bloch_seminorm(f, cfg.grid);
      bound = kBlochBound;
    } else {
      rep = harmonic_norm(f, cfg.grid);
      bound = kHarmonicNormBound;
    }
  }
  auto j = to_json(rep);
  j["manifest"] = m.source;
  const bool violated = candidate && rep.value > bound + kBoundSlack;
  if (candidate) {
    j["bound"] = bound;
    j["bound_violated"] = violated;
  }
  emit_json(cfg, j, out);
  return violated ? kExitBoundViolation : kExitOk;
}

inline int verify_sharpness(const RunConfig& cfg, std::ostream& out) {
  std::vector<SharpnessScan> scans;
  for (int k = 1; k <= 6; ++k) scans.push_back(sharpness_scan(1.0 - std::pow(10.0, -k)));
  if (cfg.format == "csv") {
    std::ostringstream csv;
    csv.precision(17);
    csv << "t,r,E\n";
    for (const auto& s : scans)
      for (const auto& [r, e] : s.samples) csv << s.t << ',' << r << ',' << e << '\n';
    emit(cfg, csv.str(), out);
    bool ok = true;
    for (const auto& s : scans) ok = ok && s.sup_E <= kNormBound + 1e-12;
    return ok ? kExitOk : kExitBoundViolation;
  }
  nlohmann::json j;
  j["scans"] = nlohmann::json::array();
  bool monotone = true;
  for (std::size_t i = 0; i < scans.size(); ++i) {
    j["scans"].push_back(to_json(scans[i]));
    if (i > 0 && scans[i].sup_E < scans[i - 1].sup_E - 1e-9) monotone = false;
  }
  j["monotone_in_t"] = monotone;
  double grid_max = 0.0;
  constexpr int n = 1000;
  for (int a = 1; a <= n; ++a) {
    const double r = static_cast<double>(a - 1) / n;
    for (int b = 1; b <= n; ++b) grid_max = std::max(grid_max, sharpness_E(r, static_cast<double>(b) / (n + 1)));
  }
  j["grid_max_E"] = grid_max;
  j["cross_checks"] = nlohmann::json::array();
  for (double t : {0.5, 0.9, 0.99}) j["cross_checks"].push_back(to_json(cross_check_norm_vs_E(t, cfg.grid)));
  j["limit_trend"] = to_json(sharpness_limit_trend());
  auto inner = nlohmann::json::array();
  for (const auto& [r, e] : iterated_limit_trend()) inner.push_back({r, e});
  j["iterated_limit"] = inner;
  const bool violated = grid_max > kNormBound + 1e-12 || scans.back().sup_E > kNormBound + 1e-12;
  j["bound_violated"] = violated;
  emit_json(cfg, j, out);
  return violated ? kExitBoundViolation : kExitOk;
}

inline std::vector<double> growth_radii() { return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}; }

inline int verify_growth(const RunConfig& cfg, std::ostream& out) {
  const auto radii = growth_radii();
  const int order = std::max(cfg.order, growth_series_order(radii.back()));
  std::vector<GrowthBoundReport> reports;
  for (double alpha : {0.0, 0.25, 0.5, 0.75}) reports.push_back(growth_verify(growth_family(alpha, order), alpha, radii));
  if (cfg.format == "csv") {
    std::ostringstream csv;
    csv.precision(17);
    csv << "alpha,r,lhs,rhs_oracle,rhs_printed,rhs_proof\n";
    for (const auto& g : reports)
      for (std::size_t i = 0; i < g.r_samples.size(); ++i)
        csv << g.alpha << ',' << g.r_samples[i] << ',' << g.lhs[i] << ',' << g.rhs_oracle[i] << ','
            << g.rhs_closed_form[i].printed << ',' << g.rhs_closed_form[i].proof << '\n';
    emit(cfg, csv.str(), out);
    return kExitOk;
  }
  nlohmann::json j;
  j["families"] = nlohmann::json::array();
  for (const auto& g : reports) j["families"].push_back(to_json(g));
  InstanceRng probe_rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  double worst = -std::numeric_limits<double>::infinity();
  nlohmann::json witness;
  const auto instances = random_instances(cfg.count, cfg.seed);
  for (const auto& inst : instances) {
    const auto f = build_instance(inst, order);
    std::vector<cplx> probes;
    for (int p = 0; p < 10; ++p) probes.push_back(std::polar(0.05 + 0.85 * probe_rng.uniform(), 2.0 * std::numbers::pi * probe_rng.uniform()));
    const double v = growth_probe_violation(f, probes);
    if (v > worst) {
      worst = v;
      witness = to_json(inst);
    }
  }
  j["random"] = {{"count", cfg.count}, {"seed", cfg.seed}, {"max_violation", worst}};
  const bool violated = worst > kGrowthSlack;
  if (violated) j["random"]["witness"] = witness;
  j["bound_violated"] = violated;
  emit_json(cfg, j, out);
  return violated ? kExitBoundViolation : kExitOk;
}

inline int starlike(const RunConfig& cfg, std::ostream& out) {
  const auto m = require_manifest(cfg);
  const auto& f = require_map(m, "starlike");
  const GridSpec grid = cfg.grid_set ? cfg.grid : starlike_grid();
  const auto rep = field_scan(f, grid, cfg.order);
  auto j = to_json(rep);
  j["oracle"] = {{"radius", cfg.oracle_radius},
                 {"theta_steps", cfg.oracle_steps},
                 {"discrepancy", argument_monotonicity_oracle(f, cfg.oracle_radius, cfg.oracle_steps)}};
  j["manifest"] = m.source;
  emit_json(cfg, j, out);
  return kExitOk;
}

inline int render(const RunConfig& cfg, std::ostream& out) {
  std::optional<LogharmonicMap> f;
  nlohmann::json src;
  if (!cfg.manifest.empty()) {
    src = read_json_file(cfg.manifest);
    if (cfg.alpha && src.contains("h") && src["h"].value("preset", "") == "QUAD") src["h"]["params"]["alpha"] = *cfg.alpha;
    auto m = manifest_from_json(src, cfg.order);
    f = require_map(m, "render");
  } else if (cfg.alpha) {
    f = f_alpha(*cfg.alpha, cfg.order);
  } else {
    throw Error(ErrorKind::InputError, "render needs --manifest or --alpha");
  }
  const auto set = sample_image(*f, default_render_radii());
  if (cfg.format == "csv")
    emit(cfg, csv_document(set), out);
  else if (cfg.format == "svg" || cfg.format == "json")
    emit(cfg, svg_document(set), out);
  else
    throw Error(ErrorKind::InputError, "render supports --format svg or csv");
  return kExitOk;
}

inline int random_suite(const RunConfig& cfg, std::ostream& out) {
  std::vector<LRInstance> instances;
  if (!cfg.instances.empty()) {
    const auto j = read_json_file(cfg.instances);
    if (!j.is_array()) throw Error(ErrorKind::InputError, "instance list must be a JSON array");
    for (const auto& e : j) instances.push_back(instance_from_json(e));
  } else {
    instances = random_instances(cfg.count, cfg.seed);
  }
  double max_norm = 0.0, max_bloch = 0.0, max_harm = 0.0;
  nlohmann::json violations = nlohmann::json::array();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto f = build_instance(instances[i], cfg.order);
    const auto n = logharmonic_norm(f, cfg.grid);
    const auto b = bloch_seminorm(f, cfg.grid);
    const auto h = harmonic_norm(f, cfg.grid);
    max_norm = std::max(max_norm, n.value);
    max_bloch = std::max(max_bloch, b.value);
    max_harm = std::max(max_harm, h.value);
    rows.push_back({{"index", i}, {"norm", n.value}, {"bloch", b.value}, {"harmonic_norm", h.value}});
    const auto flag = [&](const char* which, const SupremumReport& r, double bound) {
      if (r.value > bound + kBoundSlack)
        violations.push_back({{"index", i}, {"quantity", which}, {"value", r.value}, {"bound", bound},
                              {"argmax", complex_to_json(r.argmax)}, {"instance", to_json(instances[i])}});
    };
    flag("norm", n, kNormBound);
    flag("bloch", b, kBlochBound);
    flag("harmonic_norm", h, kHarmonicNormBound);
  }
  nlohmann::json j{{"count", instances.size()},
                   {"seed", cfg.seed},
                   {"grid", to_json(cfg.grid)},
                   {"max_norm", max_norm},
                   {"max_bloch", max_bloch},
                   {"max_harmonic_norm", max_harm},
                   {"instances", rows},
                   {"violations", violations}};
  emit_json(cfg, j, out);
  return violations.empty() ? kExitOk : kExitBoundViolation;
}

}  // namespace detail

/// Executes one subcommand. Exit codes: 0 success, 1 a bound from the
/// theory was violated numerically (witness in the report), 2 input or
/// tool error.
inline int run(const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    cfg.grid.validate();
    if (cfg.order < 1) throw Error(ErrorKind::InputError, "--order must be positive");
    const auto& s = cfg.subcommand;
    if (s == "norm" || s == "bloch" || s == "harmonic-norm") return detail::norm_like(cfg, out);
    if (s == "verify-sharpness") return detail::verify_sharpness(cfg, out);
    if (s == "verify-growth") return detail::verify_growth(cfg, out);
    if (s == "starlike") return detail::starlike(cfg, out);
    if (s == "render") return detail::render(cfg, out);
    if (s == "random-suite") return detail::random_suite(cfg, out);
    throw Error(ErrorKind::InputError, "unknown subcommand \"" + s + "\"");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace loghm::cli

#endif  // LOGHM_CLI_HPP
