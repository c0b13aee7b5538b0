#ifndef LOGHM_STARLIKE_HPP
#define LOGHM_STARLIKE_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "json.hpp"

#include "loghm/error.hpp"
#include "loghm/grid.hpp"
#include "loghm/logharmonic_map.hpp"

namespace loghm {

/// Slack allowed when comparing the coefficient sum with 1; sums such as
/// 2(1 - alpha)/2 + 3(alpha/3) round to 1 +- a few ulp.
inline constexpr double kCriterionSlack = 1e-12;
inline constexpr double kFieldMinRadius = 0.05;

enum class StarlikeVerdict { PassCriterion, FailCriterion, FieldNegative };

inline std::string_view to_string(StarlikeVerdict v) {
  switch (v) {
    case StarlikeVerdict::PassCriterion: return "PASS_CRITERION";
    case StarlikeVerdict::FailCriterion: return "FAIL_CRITERION";
    case StarlikeVerdict::FieldNegative: return "FIELD_NEGATIVE";
  }
  return "FAIL_CRITERION";
}

struct CriterionValue {
  double sum = 0.0;   ///< |1 - b_1| + sum_{n=2}^N n |a_n - b_n|
  double tail = 0.0;  ///< 0 for exact polynomials of degree <= N, +inf otherwise
};

struct StarlikeReport {
  double coefficient_sum = 0.0;
  double tail_bound = 0.0;
  double min_re_field = std::numeric_limits<double>::infinity();
  cplx witness{};  ///< grid point attaining min_re_field
  GridSpec grid;
  StarlikeVerdict verdict = StarlikeVerdict::FailCriterion;

  bool criterion_passes() const { return coefficient_sum + tail_bound <= 1.0 + kCriterionSlack; }
};

/// f_alpha = z e^h conj(e^g) with h = z + alpha z^2/2 and dilatation z;
/// g = z + z^2/2 + alpha z^3/3.
inline LogharmonicMap f_alpha(double alpha, int order = kDefaultOrder) {
  return LogharmonicMap::from_dilatation(presets::quad(alpha), presets::scalez(), Variant::OriginFixed, order);
}

/// h = log(1 + z), dilatation -z: Re(Df/f) = Re(1 + 2z) changes sign.
inline LogharmonicMap starlike_counterexample(int order = kDefaultOrder) {
  return LogharmonicMap::from_dilatation(presets::log1p(), presets::negz(), Variant::OriginFixed, order);
}

inline void require_origin_fixed(const LogharmonicMap& f) {
  if (f.variant() != Variant::OriginFixed) throw Error(ErrorKind::WrongVariant, "starlikeness needs ORIGIN_FIXED");
}

/// Coefficient sum of the full-starlikeness criterion for
/// f = z e^h conj(e^g), h = z + a_2 z^2 + ..., g = b_1 z + b_2 z^2 + ...
inline CriterionValue coefficient_criterion(const LogharmonicMap& f, int order = kDefaultOrder) {
  require_origin_fixed(f);
  const auto a = f.h().taylor(order);
  const auto b = f.g().taylor(order);
  if (std::abs(a[1] - 1.0) > 1e-12) throw Error(ErrorKind::NotNormalized, "h'(0) must equal 1");
  CriterionValue out;
  out.sum = std::abs(1.0 - b[1]);
  for (int n = 2; n <= order; ++n) out.sum += n * std::abs(a[static_cast<std::size_t>(n)] - b[static_cast<std::size_t>(n)]);
  const auto dh = f.h().polynomial_degree();
  const auto dg = f.g().polynomial_degree();
  const bool exact = dh && dg && *dh <= order && *dg <= order;
  out.tail = exact ? 0.0 : std::numeric_limits<double>::infinity();
  return out;
}

/// Df/f = 1 + z h'(z) - conj(z g'(z)) for f = z e^h conj(e^g); d/dtheta arg f(re^{i theta})
/// equals its real part.
inline cplx radial_field(const LogharmonicMap& f, cplx z) {
  require_origin_fixed(f);
  if (z == cplx{}) throw Error(ErrorKind::OriginExcluded, "Df/f is not defined at z = 0");
  return 1.0 + z * f.h().d1(z) - std::conj(z * f.gprime(z));
}

inline GridSpec starlike_grid() { return GridSpec{96, 384, 0.999, 0}; }

/// Minimum of Re(Df/f) over kFieldMinRadius <= |z| <= r_max plus the
/// coefficient criterion.
inline StarlikeReport field_scan(const LogharmonicMap& f, const GridSpec& grid = starlike_grid(),
                                 int order = kDefaultOrder) {
  require_origin_fixed(f);
  grid.validate();
  StarlikeReport rep;
  rep.grid = grid;
  const auto angles = grid.angles();
  for (double r : grid.radii(kFieldMinRadius)) {
    for (double t : angles) {
      const cplx z = std::polar(r, t);
      const double v = radial_field(f, z).real();
      if (v < rep.min_re_field) {
        rep.min_re_field = v;
        rep.witness = z;
      }
    }
  }
  // The field tends to 1 at the origin; the excluded disk contributes that value.
  if (rep.min_re_field > 1.0) {
    rep.min_re_field = 1.0;
    rep.witness = cplx{};
  }
  const auto c = coefficient_criterion(f, order);
  rep.coefficient_sum = c.sum;
  rep.tail_bound = c.tail;
  if (rep.min_re_field <= 0.0)
    rep.verdict = StarlikeVerdict::FieldNegative;
  else
    rep.verdict = rep.criterion_passes() ? StarlikeVerdict::PassCriterion : StarlikeVerdict::FailCriterion;
  return rep;
}

/// max over theta of |d/dtheta arg f(re^{i theta}) - Re(Df/f)(re^{i theta})|,
/// the derivative taken by central differences of the unwrapped argument.
inline double argument_monotonicity_oracle(const LogharmonicMap& f, double r, int theta_steps = 4096) {
  require_origin_fixed(f);
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::InputError, "oracle radius must lie in (0, 1)");
  if (theta_steps < 8) throw Error(ErrorKind::InputError, "oracle needs at least 8 steps");
  const double step = 2.0 * std::numbers::pi / theta_steps;
  const auto n = static_cast<std::size_t>(theta_steps);
  std::vector<double> arg(n + 2);
  // arg[k] samples theta_k = (k - 1) step, k = 0..n+1
  double prev = 0.0;
  for (std::size_t k = 0; k < n + 2; ++k) {
    const double theta = (static_cast<double>(k) - 1.0) * step;
    const cplx w = evaluate_f(f, std::polar(r, theta));
    if (std::abs(w) == 0.0 || !std::isfinite(std::abs(w))) throw Error(ErrorKind::ZeroOnCircle, "f vanishes on the circle");
    double a = std::arg(w);
    if (k > 0) {
      while (a - prev > std::numbers::pi) a -= 2.0 * std::numbers::pi;
      while (a - prev < -std::numbers::pi) a += 2.0 * std::numbers::pi;
    }
    arg[k] = a;
    prev = a;
  }
  double worst = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double theta = (static_cast<double>(k) - 1.0) * step;
    const double fd = (arg[k + 1] - arg[k - 1]) / (2.0 * step);
    const double exact = radial_field(f, std::polar(r, theta)).real();
    worst = std::max(worst, std::abs(fd - exact));
  }
  return worst;
}

inline nlohmann::json to_json(const StarlikeReport& r) {
  nlohmann::json tail = std::isfinite(r.tail_bound) ? nlohmann::json(r.tail_bound) : nlohmann::json("unbounded");
  return {{"coefficient_sum", r.coefficient_sum},
          {"tail_bound", tail},
          {"criterion_inconclusive", !std::isfinite(r.tail_bound)},
          {"min_re_field", r.min_re_field},
          {"witness", complex_to_json(r.witness)},
          {"grid", to_json(r.grid)},
          {"verdict", std::string(to_string(r.verdict))},
          {"conclusion", r.verdict == StarlikeVerdict::PassCriterion ? "fully starlike (criterion)" : "not established"},
          {"univalence", "untested"}};
}

}  // namespace loghm

#endif  // LOGHM_STARLIKE_HPP
