#ifndef LOGHM_LOGHARMONIC_MAP_HPP
#define LOGHM_LOGHARMONIC_MAP_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

#include "loghm/analytic_map.hpp"
#include "loghm/complex_series.hpp"
#include "loghm/error.hpp"
#include "loghm/grid.hpp"

namespace loghm {

enum class Variant {
  Nonvanishing,  ///< f = e^h conj(e^g)
  OriginFixed,   ///< f = z e^h conj(e^g)
};

inline std::string_view to_string(Variant v) {
  return v == Variant::Nonvanishing ? "NONVANISHING" : "ORIGIN_FIXED";
}

inline Variant variant_from_string(const std::string& s) {
  if (s == "NONVANISHING") return Variant::Nonvanishing;
  if (s == "ORIGIN_FIXED") return Variant::OriginFixed;
  throw Error(ErrorKind::InputError, "unknown variant \"" + s + "\"");
}

inline constexpr double kDegenerateTol = 1e-12;

namespace detail {

inline std::optional<int> sum_degrees(std::optional<int> a, std::optional<int> b, int order) {
  if (!a || !b) return std::nullopt;
  const int d = *a + *b;
  return d <= order ? std::optional<int>(d) : std::nullopt;
}

// (z s')_k = k s_k
inline ComplexSeries z_times_derivative(const ComplexSeries& s) {
  std::vector<cplx> out(s.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<double>(k) * s[k];
  return ComplexSeries(std::move(out));
}

}  // namespace detail

/// omega = g'/h' for f = e^h conj(e^g) (G = e^g gives G'/G = g').
inline AnalyticMap dilatation_nonvanishing(const AnalyticMap& h, const AnalyticMap& g) {
  if (h.is_series() && g.is_series()) {
    const auto hp = derivative(h.series());
    if (std::abs(hp[0]) <= kDegenerateTol) throw Error(ErrorKind::DegenerateDerivative, "h'(0) = 0");
    return AnalyticMap::from_series(div(derivative(g.series()), hp));
  }
  AnalyticMap::TaylorFn taylor;
  if (h.has_taylor() && g.has_taylor())
    taylor = [h, g](int n) { return div(derivative(g.taylor(n + 1)), derivative(h.taylor(n + 1))); };
  return AnalyticMap::preset(
      "DILATATION", nlohmann::json{{"h", h.describe()}, {"g", g.describe()}},
      [h, g](cplx z, bool) {
        const auto hp = h.jet(z, false).differentiated();
        if (std::abs(hp.value()) < kDegenerateTol) throw Error(ErrorKind::DegenerateDerivative, "h' vanishes");
        return g.jet(z, false).differentiated() / hp;
      },
      std::move(taylor), std::nullopt, static_cast<int>(kJetDegree) - 1);
}

/// omega = z g' / (1 + z h') for f = z e^h conj(e^g); omega(0) = 0.
inline AnalyticMap dilatation_origin_fixed(const AnalyticMap& h, const AnalyticMap& g) {
  if (h.is_series() && g.is_series()) {
    const auto den = add(ComplexSeries::constant(1.0, h.series().order()), detail::z_times_derivative(h.series()));
    return AnalyticMap::from_series(div(detail::z_times_derivative(g.series()), den));
  }
  AnalyticMap::TaylorFn taylor;
  if (h.has_taylor() && g.has_taylor())
    taylor = [h, g](int n) {
      const auto hs = h.taylor(n);
      const auto den = add(ComplexSeries::constant(1.0, n), detail::z_times_derivative(hs));
      return div(detail::z_times_derivative(g.taylor(n)), den);
    };
  return AnalyticMap::preset(
      "DILATATION_ORIGIN_FIXED", nlohmann::json{{"h", h.describe()}, {"g", g.describe()}},
      [h, g](cplx z, bool) {
        const auto x = MapJet::variable(z);
        const auto den = 1.0 + x * h.jet(z, false).differentiated();
        if (std::abs(den.value()) < kDegenerateTol)
          throw Error(ErrorKind::DegenerateDerivative, "1 + z h' vanishes");
        return (x * g.jet(z, false).differentiated()) / den;
      },
      std::move(taylor), std::nullopt, static_cast<int>(kJetDegree) - 1);
}

/// Recovers the co-analytic exponent g (g(0) = 0) from h and the dilatation
/// as a series of the given order, working at the level of g:
///   NONVANISHING: g = int_0^z omega h'
///   ORIGIN_FIXED: g = int_0^z omega (1 + zeta h') / zeta
inline AnalyticMap solve_g_from_dilatation(const AnalyticMap& h, const AnalyticMap& omega, Variant variant,
                                           int order = kDefaultOrder) {
  if (order < 1) throw Error(ErrorKind::ZeroOrder, "g needs order >= 1");
  const auto hs = h.taylor(order + 1);
  const auto ws = omega.taylor(order + 1);
  if (variant == Variant::Nonvanishing) {
    const auto gp = mul(ws.with_order(order), derivative(hs));
    auto poly = detail::sum_degrees(omega.polynomial_degree(), h.polynomial_degree(), order);
    return AnalyticMap::from_series(antiderivative(gp).with_order(order), poly);
  }
  if (std::abs(ws[0]) > 1e-12)
    throw Error(ErrorKind::DilatationNotVanishingAtZero, "origin-fixed maps need omega(0) = 0");
  const auto one_plus_zhp =
      add(ComplexSeries::constant(1.0, order), detail::z_times_derivative(hs.with_order(order)));
  const auto gp = mul(shift_down(ws), one_plus_zhp);
  auto poly = detail::sum_degrees(omega.polynomial_degree(), h.polynomial_degree(), order);
  return AnalyticMap::from_series(antiderivative(gp).with_order(order), poly);
}

/// A logharmonic mapping in the normalization e^h conj(e^g), optionally
/// multiplied by z. Carries its dilatation; when constructed from (h, omega)
/// the dilatation is kept exact and g is derived as a series.
class LogharmonicMap {
 public:
  static LogharmonicMap from_parts(AnalyticMap h, AnalyticMap g, Variant variant) {
    auto omega = variant == Variant::Nonvanishing ? dilatation_nonvanishing(h, g) : dilatation_origin_fixed(h, g);
    return LogharmonicMap(std::move(h), std::move(g), std::move(omega), variant, false);
  }

  static LogharmonicMap from_dilatation(AnalyticMap h, AnalyticMap omega, Variant variant,
                                        int order = kDefaultOrder) {
    auto g = solve_g_from_dilatation(h, omega, variant, order);
    return LogharmonicMap(std::move(h), std::move(g), std::move(omega), variant, true);
  }

  const AnalyticMap& h() const { return h_; }
  const AnalyticMap& g() const { return g_; }
  const AnalyticMap& omega() const { return omega_; }
  Variant variant() const { return variant_; }
  /// True when omega was supplied and g derived from it.
  bool omega_is_primary() const { return omega_primary_; }

  /// g'(z). With a supplied dilatation this uses the defining relation
  /// (exact up to the boundary); otherwise it differentiates g.
  cplx gprime(cplx z) const {
    if (!omega_primary_) return g_.d1(z);
    if (variant_ == Variant::Nonvanishing) return omega_.value(z) * h_.d1(z);
    if (z == cplx{}) return omega_.d1(z);
    return omega_.value(z) * (1.0 + z * h_.d1(z)) / z;
  }

  nlohmann::json describe() const {
    nlohmann::json j{{"variant", std::string(to_string(variant_))}, {"h", h_.describe()}};
    if (omega_primary_)
      j["omega"] = omega_.describe();
    else
      j["g"] = g_.describe();
    return j;
  }

 private:
  LogharmonicMap(AnalyticMap h, AnalyticMap g, AnalyticMap omega, Variant variant, bool omega_primary)
      : h_(std::move(h)), g_(std::move(g)), omega_(std::move(omega)), variant_(variant), omega_primary_(omega_primary) {
    if (std::abs(h_.value(0.0)) > 1e-12) throw Error(ErrorKind::InputError, "h(0) must be 0");
    if (std::abs(g_.value(0.0)) > 1e-12) throw Error(ErrorKind::InputError, "g(0) must be 0");
  }

  AnalyticMap h_;
  AnalyticMap g_;
  AnalyticMap omega_;
  Variant variant_;
  bool omega_primary_;
};

inline AnalyticMap dilatation_nonvanishing(const LogharmonicMap& f) {
  if (f.variant() != Variant::Nonvanishing) throw Error(ErrorKind::WrongVariant, "expected NONVANISHING");
  return dilatation_nonvanishing(f.h(), f.g());
}

inline AnalyticMap dilatation_origin_fixed(const LogharmonicMap& f) {
  if (f.variant() != Variant::OriginFixed) throw Error(ErrorKind::WrongVariant, "expected ORIGIN_FIXED");
  return dilatation_origin_fixed(f.h(), f.g());
}

inline cplx evaluate_f(const LogharmonicMap& f, cplx z) {
  const cplx w = std::exp(f.h().value(z) + std::conj(f.g().value(z)));
  return f.variant() == Variant::OriginFixed ? z * w : w;
}

/// J_f = |f_z|^2 (1 - |omega|^2).
inline double jacobian(const LogharmonicMap& f, cplx z) {
  const auto hj = f.h().jet(z, true);
  const cplx e = std::exp(hj.value() + std::conj(f.g().value(z)));
  cplx fz;
  if (f.variant() == Variant::Nonvanishing) {
    fz = hj.derivative(1) * e;
  } else {
    if (z == cplx{}) throw Error(ErrorKind::OriginSingularity, "Jacobian of an origin-fixed map at z = 0");
    fz = (1.0 + z * hj.derivative(1)) * e;
  }
  const double w = std::abs(f.omega().value(z));
  return std::norm(fz) * (1.0 - w * w);
}

struct ClassRCertificate {
  double min_re_hprime = std::numeric_limits<double>::infinity();
  cplx argmin{};
  GridSpec grid;
  bool normalized = false;

  /// Numerical support for membership, never a proof.
  bool member() const { return normalized && min_re_hprime > 0.0; }
};

/// Probes Re h' > 0 and h(0) = 0, h'(0) = 1 on a polar grid.
inline ClassRCertificate check_class_R(const AnalyticMap& h, const GridSpec& grid = class_r_grid()) {
  grid.validate();
  ClassRCertificate cert;
  cert.grid = grid;
  const auto probe = [&](cplx z) {
    cplx d;
    try {
      d = h.d1(z);
    } catch (const Error& e) {
      throw Error(ErrorKind::EvaluationFailure, "h' failed at a probe point: " + std::string(e.what()));
    }
    if (!std::isfinite(d.real()) || !std::isfinite(d.imag()))
      throw Error(ErrorKind::EvaluationFailure, "h' not finite at a probe point");
    if (d.real() < cert.min_re_hprime) {
      cert.min_re_hprime = d.real();
      cert.argmin = z;
    }
  };
  probe(0.0);
  const auto angles = grid.angles();
  for (double r : grid.radii())
    for (double t : angles) probe(std::polar(r, t));
  cert.normalized = std::abs(h.value(0.0)) <= 1e-10 && std::abs(h.d1(0.0) - 1.0) <= 1e-10;
  return cert;
}

inline nlohmann::json to_json(const ClassRCertificate& c) {
  return {{"min_re_hprime", c.min_re_hprime}, {"argmin", complex_to_json(c.argmin)}, {"grid", to_json(c.grid)},
          {"normalized", c.normalized}, {"member", c.member()}};
}

}  // namespace loghm

#endif  // LOGHM_LOGHARMONIC_MAP_HPP
