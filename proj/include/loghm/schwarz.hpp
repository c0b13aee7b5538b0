#ifndef LOGHM_SCHWARZ_HPP
#define LOGHM_SCHWARZ_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "json.hpp"

#include "loghm/analytic_map.hpp"
#include "loghm/error.hpp"
#include "loghm/golden.hpp"
#include "loghm/grid.hpp"
#include "loghm/logharmonic_map.hpp"
#include "loghm/parallel.hpp"

namespace loghm {

inline constexpr double kBoundaryTol = 1e-12;
inline constexpr int kMaxAscentCycles = 32;

namespace detail {

inline double checked_unit_gap(cplx w) {
  const double gap = 1.0 - std::norm(w);
  if (!(std::abs(w) < 1.0 - kBoundaryTol)) throw Error(ErrorKind::DilatationOnBoundary, "|omega(z)| >= 1");
  return gap;
}

inline cplx checked_ratio(cplx num, cplx den, const char* what) {
  if (std::abs(den) <= kDegenerateTol) throw Error(ErrorKind::DegenerateDerivative, what);
  return num / den;
}

}  // namespace detail

/// P_h = h''/h'.
inline cplx pre_schwarzian_analytic(const AnalyticMap& h, cplx z) {
  const auto j = h.jet(z, false);
  return detail::checked_ratio(j.derivative(2), j.derivative(1), "h'(z) = 0");
}

/// Pre-Schwarzian of the harmonic map h + conj(log G) with dilatation omega:
/// h''/h' - conj(omega) omega' / (1 - |omega|^2).
inline cplx pre_schwarzian_harmonic(const AnalyticMap& h, const AnalyticMap& omega, cplx z) {
  const auto w = omega.jet(z, true);
  const double gap = detail::checked_unit_gap(w.value());
  return pre_schwarzian_analytic(h, z) - std::conj(w.value()) * w.derivative(1) / gap;
}

/// P_f = (log J_f)_z for f = e^h conj(e^g). With H = e^h,
///   P_f = (h' + h''/h') + omega h' - conj(omega) omega' / (1 - |omega|^2).
inline cplx pre_schwarzian_logharmonic(const LogharmonicMap& f, cplx z) {
  if (f.variant() != Variant::Nonvanishing)
    throw Error(ErrorKind::WrongVariant, "logharmonic pre-Schwarzian needs the NONVANISHING variant");
  const auto hj = f.h().jet(z, false);
  const cplx hp = hj.derivative(1);
  const cplx ph = detail::checked_ratio(hj.derivative(2), hp, "h'(z) = 0");
  const auto w = f.omega().jet(z, true);
  const double gap = detail::checked_unit_gap(w.value());
  return (hp + ph) + w.value() * hp - std::conj(w.value()) * w.derivative(1) / gap;
}

/// Pre-Schwarzian of the logharmonic Koebe map K = H conj(G),
/// H = z/(1-z) e^{2z/(1-z)}, G = (1-z) e^{2z/(1-z)}, dilatation z. Uses
///   P_K = (log H')' + (log G)' - conj(z)/(1 - |z|^2),
/// with log H' = log(1+z) - 3 log(1-z) + 2z/(1-z), which stays finite where
/// H and G themselves overflow.
inline cplx pre_schwarzian_koebe(cplx z) {
  const auto x = MapJet::variable(z);
  const auto mobius = 2.0 * x / (1.0 - x);
  const auto log_hprime = log(1.0 + x) - 3.0 * log(1.0 - x) + mobius;
  const auto log_g = log(1.0 - x) + mobius;
  const double gap = detail::checked_unit_gap(z);
  return log_hprime.derivative(1) + log_g.derivative(1) - std::conj(z) / gap;
}

/// Outcome of a supremum search over the disk.
struct SupremumReport {
  double value = 0.0;
  cplx argmax{};
  bool boundary_divergent = false;
  /// (r, max over theta) after angular refinement, sorted by r.
  std::vector<std::pair<double, double>> radial_profile;
  /// Probe points whose evaluation failed and were skipped.
  long failed_points = 0;
};

namespace detail {

inline double profile_at(const std::vector<std::pair<double, double>>& p, double r) {
  if (r <= p.front().first) return p.front().second;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i].first >= r) {
      const auto [r0, v0] = p[i - 1];
      const auto [r1, v1] = p[i];
      return v0 + (v1 - v0) * (r - r0) / (r1 - r0);
    }
  }
  return p.back().second;
}

}  // namespace detail

/// Strictly increasing over the last quarter of the profile and the last
/// value more than 10x the value at r_max/2.
inline bool looks_boundary_divergent(const std::vector<std::pair<double, double>>& profile, double r_max) {
  if (profile.size() < 4) return false;
  const std::size_t start = profile.size() - profile.size() / 4 - 1;
  for (std::size_t i = start + 1; i < profile.size(); ++i)
    if (!(profile[i].second > profile[i - 1].second)) return false;
  return profile.back().second > 10.0 * detail::profile_at(profile, 0.5 * r_max);
}

/// Estimates sup over |z| <= r_max of a non-negative weight q(z). Coarse
/// polar grid, golden-section refinement in theta at every radius, then
/// alternating r and theta sweeps around the global maximizer. Points that throw or return non-finite
/// values are skipped and counted. q must be callable concurrently.
template <typename Weight>
SupremumReport supremum_search(const Weight& q, const GridSpec& grid) {
  grid.validate();
  const auto radii = grid.radii();
  const auto angles = grid.angles();
  const double dtheta = angles.size() > 1 ? angles[1] - angles[0] : 0.0;
  std::atomic<long> failures{0};

  const auto safe = [&](double r, double theta) {
    try {
      const double v = q(std::polar(r, theta));
      if (std::isfinite(v)) return v;
    } catch (const Error&) {
    }
    failures.fetch_add(1, std::memory_order_relaxed);
    return -std::numeric_limits<double>::infinity();
  };

  struct RadialBest {
    double value;
    double theta;
  };
  std::vector<RadialBest> best(radii.size());
  detail::parallel_for(radii.size(), [&](std::size_t i) {
    const double r = radii[i];
    RadialBest b{-std::numeric_limits<double>::infinity(), 0.0};
    for (double t : angles) {
      const double v = safe(r, t);
      if (v > b.value) b = {v, t};
    }
    if (std::isfinite(b.value) && grid.refine_iters > 0 && r > 0.0) {
      const auto g = golden_maximize([&](double t) { return safe(r, t); }, b.theta - dtheta, b.theta + dtheta,
                                     grid.refine_iters);
      if (g.fx > b.value) b = {g.fx, g.x};
    }
    best[i] = b;
  });

  SupremumReport rep;
  std::size_t imax = radii.size();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!std::isfinite(best[i].value)) continue;
    rep.radial_profile.emplace_back(radii[i], best[i].value);
    if (imax == radii.size() || best[i].value > best[imax].value) imax = i;
  }
  if (imax == radii.size()) throw Error(ErrorKind::AllPointsFailed, "every probe point failed");
  rep.value = best[imax].value;
  rep.argmax = std::polar(radii[imax], best[imax].theta);

  if (grid.refine_iters > 0) {
    // Alternate r and theta sweeps until the 2-D local maximum stops moving.
    const double lo = imax == 0 ? 0.0 : radii[imax - 1];
    const double hi = imax + 1 < radii.size() ? radii[imax + 1] : grid.r_max;
    double r_best = radii[imax];
    double theta = best[imax].theta;
    double value = rep.value;
    for (int cycle = 0; cycle < kMaxAscentCycles; ++cycle) {
      const double before = value;
      const auto gr = golden_maximize([&](double r) { return safe(r, theta); }, lo, hi, grid.refine_iters);
      if (gr.fx > value) {
        value = gr.fx;
        r_best = gr.x;
      }
      if (r_best > 0.0) {
        const auto gt = golden_maximize([&](double t) { return safe(r_best, t); }, theta - dtheta, theta + dtheta,
                                        grid.refine_iters);
        if (gt.fx > value) {
          value = gt.fx;
          theta = gt.x;
        }
      }
      if (value - before <= 1e-15 * std::abs(value)) break;
    }
    if (value > rep.value) {
      rep.value = value;
      rep.argmax = std::polar(r_best, theta);
      const auto pos = std::lower_bound(rep.radial_profile.begin(), rep.radial_profile.end(),
                                        std::make_pair(r_best, -std::numeric_limits<double>::infinity()));
      if (pos != rep.radial_profile.end() && pos->first == r_best)
        pos->second = std::max(pos->second, value);
      else
        rep.radial_profile.insert(pos, {r_best, value});
    }
  }
  rep.failed_points = failures.load();
  rep.boundary_divergent = looks_boundary_divergent(rep.radial_profile, grid.r_max);
  return rep;
}

/// sup (1 - |z|^2) |P(z)| for a pointwise complex field P.
template <typename Field>
SupremumReport norm_estimate(const Field& field, const GridSpec& grid = {}) {
  return supremum_search([&](cplx z) { return (1.0 - std::norm(z)) * std::abs(field(z)); }, grid);
}

/// ||P_f|| for f = e^h conj(e^g).
inline SupremumReport logharmonic_norm(const LogharmonicMap& f, const GridSpec& grid = {}) {
  return norm_estimate([&](cplx z) { return pre_schwarzian_logharmonic(f, z); }, grid);
}

/// ||P_F|| for F = log f = h + conj(g).
inline SupremumReport harmonic_norm(const LogharmonicMap& f, const GridSpec& grid = {}) {
  return norm_estimate([&](cplx z) { return pre_schwarzian_harmonic(f.h(), f.omega(), z); }, grid);
}

inline SupremumReport analytic_norm(const AnalyticMap& h, const GridSpec& grid = {}) {
  return norm_estimate([&](cplx z) { return pre_schwarzian_analytic(h, z); }, grid);
}

/// beta_f = sup (1 - |z|^2)(|h'| + |g'|) for f = e^h conj(e^g).
inline SupremumReport bloch_seminorm(const LogharmonicMap& f, const GridSpec& grid = {}) {
  if (f.variant() != Variant::Nonvanishing)
    throw Error(ErrorKind::WrongVariant, "Bloch seminorm needs the NONVANISHING variant");
  return supremum_search(
      [&](cplx z) { return (1.0 - std::norm(z)) * (std::abs(f.h().d1(z)) + std::abs(f.gprime(z))); }, grid);
}

inline nlohmann::json to_json(const SupremumReport& r) {
  auto profile = nlohmann::json::array();
  for (const auto& [radius, m] : r.radial_profile) profile.push_back({radius, m});
  return {{"value", r.value},
          {"argmax", complex_to_json(r.argmax)},
          {"boundary_divergent", r.boundary_divergent},
          {"radial_profile", std::move(profile)},
          {"failed_points", r.failed_points}};
}

}  // namespace loghm

#endif  // LOGHM_SCHWARZ_HPP
