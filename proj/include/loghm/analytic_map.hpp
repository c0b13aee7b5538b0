#ifndef LOGHM_ANALYTIC_MAP_HPP
#define LOGHM_ANALYTIC_MAP_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "loghm/complex_series.hpp"
#include "loghm/error.hpp"
#include "loghm/jet.hpp"
#include "loghm/quadrature.hpp"
#include "loghm/series_kernels.hpp"

namespace loghm {

inline constexpr std::size_t kJetDegree = 3;
using MapJet = Jet<kJetDegree>;

/// An analytic function on the unit disk, either a truncated series or a
/// named closed form. Closed forms evaluate exactly up to the boundary,
/// which is where the extremal behavior of the pre-Schwarzian lives.
class AnalyticMap {
 public:
  enum class Kind { Series, Preset };

  /// Jet of the map about z. When `need_value` is false the constant term
  /// may be left unevaluated (NaN); callers only read derivatives then.
  using JetFn = std::function<MapJet(cplx z, bool need_value)>;
  using TaylorFn = std::function<ComplexSeries(int order)>;

  static AnalyticMap from_series(ComplexSeries s, std::optional<int> polynomial_degree = std::nullopt) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Series;
    impl->name = "SERIES";
    impl->poly_degree = polynomial_degree;
    impl->series = std::move(s);
    return AnalyticMap(std::move(impl));
  }

  static AnalyticMap preset(std::string name, nlohmann::json params, JetFn jet, TaylorFn taylor,
                            std::optional<int> polynomial_degree, int valid_degree = kJetDegree) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Preset;
    impl->name = std::move(name);
    impl->params = std::move(params);
    impl->jet = std::move(jet);
    impl->taylor = std::move(taylor);
    impl->poly_degree = polynomial_degree;
    impl->valid_degree = valid_degree;
    return AnalyticMap(std::move(impl));
  }

  Kind kind() const { return impl_->kind; }
  bool is_series() const { return impl_->kind == Kind::Series; }
  const std::string& name() const { return impl_->name; }
  const nlohmann::json& params() const { return impl_->params; }
  /// Highest derivative order the jet carries reliably.
  int valid_degree() const { return impl_->valid_degree; }
  /// Degree when the map is known to be an exact polynomial.
  std::optional<int> polynomial_degree() const { return impl_->poly_degree; }

  const ComplexSeries& series() const {
    if (!is_series()) throw Error(ErrorKind::NoSeriesForm, name() + " is not a series map");
    return *impl_->series;
  }

  MapJet jet(cplx z, bool need_value = true) const {
    if (is_series()) {
      MapJet j;
      detail::taylor_shift_kernel(impl_->series->coeffs(), z, j.c);
      return j;
    }
    return impl_->jet(z, need_value);
  }

  cplx value(cplx z) const { return jet(z, true).value(); }
  cplx d1(cplx z) const { return checked(jet(z, false), 1).derivative(1); }
  cplx d2(cplx z) const { return checked(jet(z, false), 2).derivative(2); }

  bool has_taylor() const { return is_series() || static_cast<bool>(impl_->taylor); }

  /// Taylor coefficients about 0 up to `order`.
  ComplexSeries taylor(int order) const {
    if (is_series()) return impl_->series->with_order(order);
    if (!impl_->taylor) throw Error(ErrorKind::NoSeriesForm, name() + " has no Taylor expansion");
    return impl_->taylor(order);
  }

  nlohmann::json describe() const {
    if (is_series()) return {{"series", to_json(*impl_->series)}};
    nlohmann::json j{{"preset", name()}};
    if (!params().is_null()) j["params"] = params();
    return j;
  }

 private:
  struct Impl {
    Kind kind = Kind::Series;
    std::string name;
    nlohmann::json params;
    JetFn jet;
    TaylorFn taylor;
    std::optional<ComplexSeries> series;
    std::optional<int> poly_degree;
    int valid_degree = kJetDegree;
  };

  explicit AnalyticMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  const MapJet& checked(const MapJet& j, int k) const {
    if (k > valid_degree())
      throw Error(ErrorKind::EvaluationFailure, name() + " does not carry derivative order " + std::to_string(k));
    return j;
  }

  std::shared_ptr<const Impl> impl_;
};

namespace presets {

namespace detail {

inline ComplexSeries coefficients(int order, const std::function<cplx(int)>& c) {
  std::vector<cplx> v(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) v[static_cast<std::size_t>(k)] = c(k);
  return ComplexSeries(std::move(v));
}

}  // namespace detail

/// h(z) = z
inline AnalyticMap identity() {
  return AnalyticMap::preset(
      "IDENTITY", nullptr, [](cplx z, bool) { return MapJet::variable(z); },
      [](int n) { return detail::coefficients(n, [](int k) { return k == 1 ? cplx(1.0) : cplx{}; }); }, 1);
}

/// h(z) = -z - 2 log(1 - z), the extremal member of class R.
inline AnalyticMap koebe_log() {
  return AnalyticMap::preset(
      "KOEBE_LOG", nullptr,
      [](cplx z, bool) {
        const auto x = MapJet::variable(z);
        return -x - 2.0 * log(1.0 - x);
      },
      [](int n) {
        return detail::coefficients(n, [](int k) {
          if (k == 0) return cplx{};
          if (k == 1) return cplx(1.0);
          return cplx(2.0 / k);
        });
      },
      std::nullopt);
}

/// h(z) = log(1 + z)
inline AnalyticMap log1p() {
  return AnalyticMap::preset(
      "LOG1P", nullptr, [](cplx z, bool) { return log(1.0 + MapJet::variable(z)); },
      [](int n) {
        return detail::coefficients(n, [](int k) {
          if (k == 0) return cplx{};
          return cplx((k % 2 == 1 ? 1.0 : -1.0) / k);
        });
      },
      std::nullopt);
}

/// h(z) = z + alpha z^2 / 2
inline AnalyticMap quad(double alpha) {
  return AnalyticMap::preset(
      "QUAD", nlohmann::json{{"alpha", alpha}},
      [alpha](cplx z, bool) {
        const auto x = MapJet::variable(z);
        return x + (alpha / 2.0) * (x * x);
      },
      [alpha](int n) {
        return detail::coefficients(n, [alpha](int k) {
          if (k == 1) return cplx(1.0);
          if (k == 2) return cplx(alpha / 2.0);
          return cplx{};
        });
      },
      2);
}

/// omega(z) = (t - z) / (1 - t z)
inline AnalyticMap mobius(double t) {
  return AnalyticMap::preset(
      "MOBIUS", nlohmann::json{{"t", t}},
      [t](cplx z, bool) {
        const auto x = MapJet::variable(z);
        return (t - x) / (1.0 - t * x);
      },
      [t](int n) {
        return detail::coefficients(n, [t](int k) {
          if (k == 0) return cplx(t);
          return cplx(std::pow(t, k - 1) * (t * t - 1.0));
        });
      },
      std::nullopt);
}

/// omega(z) = (alpha + z) / (1 + alpha z)
inline AnalyticMap mobius_plus(double alpha) {
  return AnalyticMap::preset(
      "MOBIUS_PLUS", nlohmann::json{{"alpha", alpha}},
      [alpha](cplx z, bool) {
        const auto x = MapJet::variable(z);
        return (alpha + x) / (1.0 + alpha * x);
      },
      [alpha](int n) {
        return detail::coefficients(n, [alpha](int k) {
          if (k == 0) return cplx(alpha);
          return cplx(std::pow(-alpha, k - 1) * (1.0 - alpha * alpha));
        });
      },
      std::nullopt);
}

/// omega(z) = z
inline AnalyticMap scalez() {
  return AnalyticMap::preset(
      "SCALEZ", nullptr, [](cplx z, bool) { return MapJet::variable(z); },
      [](int n) { return detail::coefficients(n, [](int k) { return k == 1 ? cplx(1.0) : cplx{}; }); }, 1);
}

/// omega(z) = -z
inline AnalyticMap negz() {
  return AnalyticMap::preset(
      "NEGZ", nullptr, [](cplx z, bool) { return -MapJet::variable(z); },
      [](int n) { return detail::coefficients(n, [](int k) { return k == 1 ? cplx(-1.0) : cplx{}; }); }, 1);
}

inline AnalyticMap constant(cplx c) {
  return AnalyticMap::preset(
      "CONST", nlohmann::json{{"c", complex_to_json(c)}}, [c](cplx, bool) { return MapJet::constant(c); },
      [c](int n) { return ComplexSeries::constant(c, n); }, 0);
}

/// scale * e^{i rotation} * prod (z - a_k) / (1 - conj(a_k) z). Zeros must
/// lie strictly inside the disk.
inline AnalyticMap blaschke(std::vector<cplx> zeros, double scale = 1.0, double rotation = 0.0) {
  for (const auto& a : zeros)
    if (!(std::abs(a) < 1.0)) throw Error(ErrorKind::InputError, "Blaschke zero outside the open disk");
  const cplx factor = scale * std::polar(1.0, rotation);
  nlohmann::json params{{"zeros", nlohmann::json::array()}, {"scale", scale}, {"rotation", rotation}};
  for (const auto& a : zeros) params["zeros"].push_back(complex_to_json(a));
  const std::optional<int> poly = zeros.empty() ? std::optional<int>(0) : std::nullopt;
  return AnalyticMap::preset(
      "BLASCHKE", std::move(params),
      [zeros, factor](cplx z, bool) {
        const auto x = MapJet::variable(z);
        auto b = MapJet::constant(factor);
        for (const auto& a : zeros) b = b * ((x - a) / (1.0 - std::conj(a) * x));
        return b;
      },
      [zeros, factor](int n) {
        auto b = ComplexSeries::constant(factor, n);
        for (const auto& a : zeros) {
          const auto num = ComplexSeries::from_coefficients(std::vector<cplx>{-a, 1.0}, n);
          const auto den = ComplexSeries::from_coefficients(std::vector<cplx>{1.0, -std::conj(a)}, n);
          b = mul(b, div(num, den));
        }
        return b;
      },
      poly);
}

/// Analytic factor H(z) = z/(1-z) exp(2z/(1-z)) of the logharmonic Koebe map.
inline AnalyticMap koebe_h() {
  return AnalyticMap::preset(
      "KOEBE_H", nullptr,
      [](cplx z, bool) {
        const auto x = MapJet::variable(z);
        return (x / (1.0 - x)) * exp(2.0 * x / (1.0 - x));
      },
      [](int n) {
        const auto x = ComplexSeries::variable(n);
        const auto one_minus = sub(ComplexSeries::constant(1.0, n), x);
        return mul(div(x, one_minus), exp_series(scale(div(x, one_minus), 2.0)));
      },
      std::nullopt);
}

/// Co-analytic factor G(z) = (1-z) exp(2z/(1-z)) of the logharmonic Koebe map.
inline AnalyticMap koebe_g() {
  return AnalyticMap::preset(
      "KOEBE_G", nullptr,
      [](cplx z, bool) {
        const auto x = MapJet::variable(z);
        return (1.0 - x) * exp(2.0 * x / (1.0 - x));
      },
      [](int n) {
        const auto x = ComplexSeries::variable(n);
        const auto one_minus = sub(ComplexSeries::constant(1.0, n), x);
        return mul(one_minus, exp_series(scale(div(x, one_minus), 2.0)));
      },
      std::nullopt);
}

/// The member of class R determined by a Schwarz function epsilon
/// (epsilon(0) = 0): h' = (1 + epsilon) / (1 - epsilon), h(0) = 0.
/// Derivatives are closed form; h itself is a segment quadrature of h'.
inline AnalyticMap herglotz(AnalyticMap epsilon) {
  nlohmann::json params{{"epsilon", epsilon.describe()}};
  std::optional<int> poly;
  if (epsilon.polynomial_degree() == 0) poly = 1;
  auto hprime_jet = [epsilon](cplx z) {
    const auto e = epsilon.jet(z, true);
    return (1.0 + e) / (1.0 - e);
  };
  AnalyticMap::TaylorFn taylor;
  if (epsilon.has_taylor()) {
    taylor = [epsilon](int n) {
      const auto e = epsilon.taylor(n);
      const auto one = ComplexSeries::constant(1.0, n);
      return antiderivative(div(add(one, e), sub(one, e))).with_order(n);
    };
  }
  return AnalyticMap::preset(
      "HERGLOTZ", std::move(params),
      [hprime_jet](cplx z, bool need_value) {
        const auto q = hprime_jet(z);
        MapJet h;
        for (std::size_t k = 0; k < kJetDegree; ++k) h.c[k + 1] = q.c[k] / static_cast<double>(k + 1);
        if (need_value) {
          // h(z) = z * int_0^1 h'(s z) ds
          const auto integrand = [&](double s) { return hprime_jet(s * z).value(); };
          h.c[0] = z * adaptive_simpson(integrand, 0.0, 1.0, SimpsonOptions{1e-13, 40});
        } else {
          h.c[0] = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
        }
        return h;
      },
      std::move(taylor), poly);
}

}  // namespace presets

/// Looks up a preset by name with parameters as they appear in a manifest.
AnalyticMap preset_from_json(const std::string& name, const nlohmann::json& params);

inline AnalyticMap analytic_map_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InputError, "analytic map must be an object");
  if (j.contains("series")) {
    const auto s = series_from_json(j.at("series"));
    return AnalyticMap::from_series(s, s.order());
  }
  if (j.contains("preset")) {
    if (!j.at("preset").is_string()) throw Error(ErrorKind::InputError, "preset name must be a string");
    return preset_from_json(j.at("preset").get<std::string>(), j.value("params", nlohmann::json::object()));
  }
  throw Error(ErrorKind::InputError, "analytic map needs \"series\" or \"preset\": " + j.dump());
}

inline AnalyticMap preset_from_json(const std::string& name, const nlohmann::json& params) {
  const auto number = [&](const char* key) {
    if (!params.is_object() || !params.contains(key) || !params.at(key).is_number())
      throw Error(ErrorKind::InputError, name + " needs numeric parameter \"" + key + "\"");
    return params.at(key).get<double>();
  };
  if (name == "IDENTITY") return presets::identity();
  if (name == "KOEBE_LOG") return presets::koebe_log();
  if (name == "LOG1P") return presets::log1p();
  if (name == "QUAD") return presets::quad(number("alpha"));
  if (name == "MOBIUS") {
    const double t = number("t");
    if (!(t > -1.0 && t < 1.0)) throw Error(ErrorKind::InputError, "MOBIUS needs |t| < 1");
    return presets::mobius(t);
  }
  if (name == "MOBIUS_PLUS") {
    const double a = number("alpha");
    if (!(a > -1.0 && a < 1.0)) throw Error(ErrorKind::InputError, "MOBIUS_PLUS needs |alpha| < 1");
    return presets::mobius_plus(a);
  }
  if (name == "SCALEZ") return presets::scalez();
  if (name == "NEGZ") return presets::negz();
  if (name == "CONST") {
    if (!params.is_object() || !params.contains("c")) throw Error(ErrorKind::InputError, "CONST needs \"c\"");
    return presets::constant(complex_from_json(params.at("c")));
  }
  if (name == "BLASCHKE") {
    std::vector<cplx> zeros;
    if (params.contains("zeros")) {
      if (!params.at("zeros").is_array()) throw Error(ErrorKind::InputError, "BLASCHKE zeros must be an array");
      for (const auto& z : params.at("zeros")) zeros.push_back(complex_from_json(z));
    }
    const double scale = params.value("scale", 1.0);
    const double rotation = params.value("rotation", 0.0);
    return presets::blaschke(std::move(zeros), scale, rotation);
  }
  if (name == "KOEBE_H") return presets::koebe_h();
  if (name == "KOEBE_G") return presets::koebe_g();
  if (name == "HERGLOTZ") {
    if (!params.contains("epsilon")) throw Error(ErrorKind::InputError, "HERGLOTZ needs \"epsilon\"");
    auto eps = analytic_map_from_json(params.at("epsilon"));
    if (std::abs(eps.value(0.0)) > 1e-12) throw Error(ErrorKind::InputError, "HERGLOTZ needs epsilon(0) = 0");
    return presets::herglotz(std::move(eps));
  }
  throw Error(ErrorKind::InputError, "unknown preset \"" + name + "\"");
}

}  // namespace loghm

#endif  // LOGHM_ANALYTIC_MAP_HPP
