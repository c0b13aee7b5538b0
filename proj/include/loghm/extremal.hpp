#ifndef LOGHM_EXTREMAL_HPP
#define LOGHM_EXTREMAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "loghm/analytic_map.hpp"
#include "loghm/error.hpp"
#include "loghm/golden.hpp"
#include "loghm/grid.hpp"
#include "loghm/logharmonic_map.hpp"
#include "loghm/quadrature.hpp"
#include "loghm/schwarz.hpp"

namespace loghm {

/// Bound on ||P_f|| over L_R and the value approached by the f_t family.
inline constexpr double kNormBound = 11.0;
inline constexpr double kBlochBound = 8.0;
inline constexpr double kHarmonicNormBound = 3.0;

/// (1 - r^2) |P_{f_t}(r)| on the positive real axis for the family
/// h = -z - 2 log(1 - z), omega_t = (t - z)/(1 - t z):
///   E(r, t) = |2 + ((1+t)(1+r)(1-r^2) + (t - r)) / (1 - t r)|.
inline double sharpness_E(double r, double t) {
  return std::abs(2.0 + ((1.0 + t) * (1.0 + r) * (1.0 - r * r) + (t - r)) / (1.0 - t * r));
}

/// f_t = e^h conj(e^g) with h = KOEBE_LOG and dilatation MOBIUS_t.
inline LogharmonicMap sharpness_family(double t, int order = kDefaultOrder) {
  return LogharmonicMap::from_dilatation(presets::koebe_log(), presets::mobius(t), Variant::Nonvanishing, order);
}

struct SharpnessScan {
  double t = 0.0;
  double sup_E = 0.0;
  double argmax_r = 0.0;
  std::vector<std::pair<double, double>> samples;
};

/// sup over r in [0, 1 - 1e-9] of E(r, t): a scan on radii that cluster
/// logarithmically toward 1, then golden-section refinement.
inline SharpnessScan sharpness_scan(double t, int resolution = 4000, int refine_iters = 80) {
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorKind::InputError, "sharpness scan needs t in (0, 1)");
  if (resolution < 8) throw Error(ErrorKind::InputError, "sharpness scan needs resolution >= 8");
  SharpnessScan scan;
  scan.t = t;
  scan.samples.reserve(static_cast<std::size_t>(resolution));
  std::size_t best = 0;
  for (int j = 0; j < resolution; ++j) {
    const double r = 1.0 - std::pow(10.0, -9.0 * j / (resolution - 1));
    scan.samples.emplace_back(r, sharpness_E(r, t));
    if (scan.samples.back().second > scan.samples[best].second) best = scan.samples.size() - 1;
  }
  scan.sup_E = scan.samples[best].second;
  scan.argmax_r = scan.samples[best].first;
  const double lo = best == 0 ? 0.0 : scan.samples[best - 1].first;
  const double hi = best + 1 < scan.samples.size() ? scan.samples[best + 1].first : scan.samples[best].first;
  const auto g = golden_maximize([t](double r) { return sharpness_E(r, t); }, lo, hi, refine_iters, 1e-15);
  if (g.fx > scan.sup_E) {
    scan.sup_E = g.fx;
    scan.argmax_r = g.x;
    const auto pos = std::lower_bound(scan.samples.begin(), scan.samples.end(), std::make_pair(g.x, g.fx));
    scan.samples.insert(pos, {g.x, g.fx});
  }
  return scan;
}

/// One-sided approach of sup_r E(r, t) to its t -> 1 limit along
/// t_k = 1 - 2^-k. Successive differences d_k are fitted to a geometric
/// decay; `ratio` is the last d_k / d_{k-1} and `extrapolated` the
/// Richardson (Aitken) estimate of the limit.
struct LimitTrend {
  std::vector<std::pair<double, double>> points;  ///< (t, sup_E)
  double ratio = 0.0;
  double extrapolated = 0.0;
  bool monotone = true;
};

inline LimitTrend sharpness_limit_trend(int k_max = 20) {
  LimitTrend trend;
  for (int k = 1; k <= k_max; ++k) {
    const double t = 1.0 - std::ldexp(1.0, -k);
    trend.points.emplace_back(t, sharpness_scan(t).sup_E);
  }
  for (std::size_t i = 1; i < trend.points.size(); ++i)
    if (trend.points[i].second < trend.points[i - 1].second - 1e-9) trend.monotone = false;
  const std::size_t n = trend.points.size();
  if (n >= 3) {
    const double s0 = trend.points[n - 3].second;
    const double s1 = trend.points[n - 2].second;
    const double s2 = trend.points[n - 1].second;
    trend.ratio = (s2 - s1) / (s1 - s0);
    trend.extrapolated = s2 + (s2 - s1) * trend.ratio / (1.0 - trend.ratio);
  } else {
    trend.extrapolated = trend.points.back().second;
  }
  return trend;
}

/// Inner limit t -> 1 at fixed r, then r -> 1 along r_k = 1 - 2^-k.
/// E is continuous in t at t = 1 for r < 1, so the inner limit is E(r, 1).
/// Returns (r_k, E(r_k, 1)).
inline std::vector<std::pair<double, double>> iterated_limit_trend(int k_max = 30) {
  std::vector<std::pair<double, double>> out;
  for (int k = 1; k <= k_max; ++k) {
    const double r = 1.0 - std::ldexp(1.0, -k);
    out.emplace_back(r, sharpness_E(r, 1.0));
  }
  return out;
}

struct NormVsE {
  double t = 0.0;
  SupremumReport disk;
  SharpnessScan real_axis;
  double difference = 0.0;  ///< disk supremum minus real-axis supremum
  double argmax_imag = 0.0;
};

/// ||P_{f_t}|| from the generic disk search against the real-axis E scan.
inline NormVsE cross_check_norm_vs_E(double t, const GridSpec& grid = {}) {
  NormVsE out;
  out.t = t;
  const auto f = sharpness_family(t, 16);
  out.disk = logharmonic_norm(f, grid);
  out.real_axis = sharpness_scan(t);
  out.difference = out.disk.value - out.real_axis.sup_E;
  out.argmax_imag = out.disk.argmax.imag();
  return out;
}

// Growth theorem.

struct GrowthBoundPair {
  double printed;  ///< exponent coefficient (1/alpha - alpha)^2
  double proof;    ///< exponent coefficient ((1 - alpha)/alpha)^2
};

/// Closed-form bounds on |f(z)| at |z| = r. For alpha != 0,
///   exp(-r(1+alpha)/alpha) (1 + alpha r)^c / (1 - r)^4
/// with c read two ways; for alpha = 0, exp(-3r - r^2/2) / (1 - r)^4.
inline GrowthBoundPair growth_bound_closed_form(double alpha, double r) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::InputError, "alpha must lie in [0, 1)");
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::InputError, "r must lie in [0, 1)");
  const double denom = std::pow(1.0 - r, 4);
  if (alpha == 0.0) {
    const double b = std::exp(-3.0 * r - 0.5 * r * r) / denom;
    return {b, b};
  }
  const double base = std::exp(-r * (1.0 + alpha) / alpha) / denom;
  const double l = std::log1p(alpha * r);
  const double printed_c = std::pow(1.0 / alpha - alpha, 2);
  const double proof_c = std::pow((1.0 - alpha) / alpha, 2);
  return {base * std::exp(printed_c * l), base * std::exp(proof_c * l)};
}

/// Ground-truth growth bound by quadrature:
///   exp(-r - 2 log(1 - r)) * exp(int_0^r (alpha+t)(1+t)/((1+alpha t)(1-t)) dt).
inline double growth_bound_oracle(double alpha, double r, const SimpsonOptions& opt = {}) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::InputError, "alpha must lie in [0, 1)");
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::InputError, "r must lie in [0, 1)");
  const auto integrand = [alpha](double t) { return (alpha + t) * (1.0 + t) / ((1.0 + alpha * t) * (1.0 - t)); };
  const double integral = adaptive_simpson(integrand, 0.0, r, opt);
  return std::exp(-r - 2.0 * std::log1p(-r) + integral);
}

enum class GrowthReading { Proof, Printed, Both, Neither };

inline std::string_view to_string(GrowthReading g) {
  switch (g) {
    case GrowthReading::Proof: return "proof";
    case GrowthReading::Printed: return "printed";
    case GrowthReading::Both: return "both";
    case GrowthReading::Neither: return "neither";
  }
  return "neither";
}

struct GrowthBoundReport {
  double alpha = 0.0;
  std::vector<double> r_samples;
  std::vector<double> lhs;
  std::vector<GrowthBoundPair> rhs_closed_form;
  std::vector<double> rhs_oracle;
  double max_violation = -std::numeric_limits<double>::infinity();  ///< max lhs - oracle
  double max_relative_gap = 0.0;                                    ///< max |lhs - oracle| / oracle
  GrowthReading confirmed_reading = GrowthReading::Neither;
};

/// Which closed-form reading agrees with the quadrature oracle to `rel_tol`
/// at every r.
inline GrowthReading confirm_growth_reading(double alpha, const std::vector<double>& r_samples, double rel_tol = 1e-8) {
  bool printed = true;
  bool proof = true;
  for (double r : r_samples) {
    const double o = growth_bound_oracle(alpha, r);
    const auto p = growth_bound_closed_form(alpha, r);
    printed = printed && std::abs(p.printed - o) <= rel_tol * o;
    proof = proof && std::abs(p.proof - o) <= rel_tol * o;
  }
  if (printed && proof) return GrowthReading::Both;
  if (proof) return GrowthReading::Proof;
  if (printed) return GrowthReading::Printed;
  return GrowthReading::Neither;
}

/// Order for the g series so its truncation error at radius r is far below
/// double precision relative to the growth bound.
inline int growth_series_order(double r_max) {
  return std::max(kDefaultOrder, static_cast<int>(std::ceil(std::log(1e-18) / std::log(r_max))) + 32);
}

/// Extremal growth family: h = KOEBE_LOG, omega = (alpha+z)/(1+alpha z)
/// (SCALEZ when alpha = 0).
inline LogharmonicMap growth_family(double alpha, int order) {
  auto omega = alpha == 0.0 ? presets::scalez() : presets::mobius_plus(alpha);
  return LogharmonicMap::from_dilatation(presets::koebe_log(), std::move(omega), Variant::Nonvanishing, order);
}

/// Compares |f(r)| on the positive real axis with the growth bounds.
inline GrowthBoundReport growth_verify(const LogharmonicMap& f, double alpha, const std::vector<double>& r_grid) {
  if (f.variant() != Variant::Nonvanishing) throw Error(ErrorKind::WrongVariant, "growth theorem is for L_R");
  GrowthBoundReport rep;
  rep.alpha = alpha;
  rep.r_samples = r_grid;
  for (double r : r_grid) {
    const double lhs = std::abs(evaluate_f(f, r));
    const double oracle = growth_bound_oracle(alpha, r);
    rep.lhs.push_back(lhs);
    rep.rhs_oracle.push_back(oracle);
    rep.rhs_closed_form.push_back(growth_bound_closed_form(alpha, r));
    rep.max_violation = std::max(rep.max_violation, lhs - oracle);
    rep.max_relative_gap = std::max(rep.max_relative_gap, std::abs(lhs - oracle) / oracle);
  }
  rep.confirmed_reading = confirm_growth_reading(alpha, r_grid);
  return rep;
}

/// max over probes of |f(z)| - oracle(|omega(0)|, |z|).
inline double growth_probe_violation(const LogharmonicMap& f, const std::vector<cplx>& probes) {
  const double alpha = std::abs(f.omega().value(0.0));
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& z : probes) worst = std::max(worst, std::abs(evaluate_f(f, z)) - growth_bound_oracle(alpha, std::abs(z)));
  return worst;
}

inline nlohmann::json to_json(const SharpnessScan& s, bool with_samples = false) {
  nlohmann::json j{{"t", s.t}, {"sup_E", s.sup_E}, {"argmax_r", s.argmax_r}};
  if (with_samples) {
    auto arr = nlohmann::json::array();
    for (const auto& [r, e] : s.samples) arr.push_back({r, e});
    j["samples"] = std::move(arr);
  }
  return j;
}

inline nlohmann::json to_json(const LimitTrend& t) {
  auto pts = nlohmann::json::array();
  for (const auto& [tt, v] : t.points) pts.push_back({tt, v});
  return {{"points", pts}, {"ratio", t.ratio}, {"extrapolated", t.extrapolated}, {"monotone", t.monotone}};
}

inline nlohmann::json to_json(const NormVsE& c) {
  return {{"t", c.t},
          {"disk_sup", c.disk.value},
          {"disk_argmax", complex_to_json(c.disk.argmax)},
          {"real_axis_sup", c.real_axis.sup_E},
          {"real_axis_argmax_r", c.real_axis.argmax_r},
          {"difference", c.difference},
          {"argmax_imag", c.argmax_imag}};
}

inline nlohmann::json to_json(const GrowthBoundReport& g) {
  auto printed = nlohmann::json::array();
  auto proof = nlohmann::json::array();
  for (const auto& p : g.rhs_closed_form) {
    printed.push_back(p.printed);
    proof.push_back(p.proof);
  }
  return {{"alpha", g.alpha},
          {"r_samples", g.r_samples},
          {"lhs", g.lhs},
          {"rhs_printed", printed},
          {"rhs_proof", proof},
          {"rhs_oracle", g.rhs_oracle},
          {"max_violation", g.max_violation},
          {"max_relative_gap", g.max_relative_gap},
          {"confirmed_reading", std::string(to_string(g.confirmed_reading))}};
}

}  // namespace loghm

#endif  // LOGHM_EXTREMAL_HPP
