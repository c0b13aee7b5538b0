#ifndef LOGHM_COMPLEX_SERIES_HPP
#define LOGHM_COMPLEX_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "loghm/error.hpp"
#include "loghm/series_kernels.hpp"

namespace loghm {

using cplx = std::complex<double>;

inline constexpr int kDefaultOrder = 64;
inline constexpr double kZeroConstantTol = 1e-12;
inline constexpr double kCoefficientCeiling = 1e150;

/// Truncated Taylor series c_0 + c_1 z + ... + c_N z^N with complex
/// coefficients. Immutable once built; binary operations truncate to the
/// smaller of the two orders.
class ComplexSeries {
 public:
  /// The zero series of the given order.
  explicit ComplexSeries(int order = 0) : coeffs_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw Error(ErrorKind::InputError, "negative series order");
  }

  /// Takes ownership of c_0..c_N; N = coeffs.size() - 1.
  explicit ComplexSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorKind::InputError, "series needs at least one coefficient");
    validate();
  }

  ComplexSeries(std::initializer_list<cplx> coeffs) : ComplexSeries(std::vector<cplx>(coeffs)) {}

  /// coeffs padded with zeros (or truncated) to the requested order.
  static ComplexSeries from_coefficients(std::span<const cplx> coeffs, int order) {
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
    std::copy_n(coeffs.begin(), std::min(coeffs.size(), c.size()), c.begin());
    return ComplexSeries(std::move(c));
  }

  static ComplexSeries constant(cplx c, int order) {
    std::vector<cplx> v(static_cast<std::size_t>(order) + 1);
    v[0] = c;
    return ComplexSeries(std::move(v));
  }

  /// The series z (requires order >= 1).
  static ComplexSeries variable(int order) {
    if (order < 1) throw Error(ErrorKind::ZeroOrder, "the variable z needs order >= 1");
    std::vector<cplx> v(static_cast<std::size_t>(order) + 1);
    v[1] = 1.0;
    return ComplexSeries(std::move(v));
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  cplx operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }

  /// Same coefficients, truncated or zero-padded to `order`.
  ComplexSeries with_order(int order) const { return from_coefficients(coeffs_, order); }

  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

 private:
  void validate() const {
    for (const auto& c : coeffs_) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw Error(ErrorKind::CoefficientOverflow, "non-finite series coefficient");
      if (std::abs(c) > kCoefficientCeiling)
        throw Error(ErrorKind::CoefficientOverflow, "series coefficient exceeds 1e150");
    }
  }

  std::vector<cplx> coeffs_;
};

inline ComplexSeries add(const ComplexSeries& s, const ComplexSeries& t) {
  const int n = std::min(s.order(), t.order());
  std::vector<cplx> out(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = s[k] + t[k];
  return ComplexSeries(std::move(out));
}

inline ComplexSeries sub(const ComplexSeries& s, const ComplexSeries& t) {
  const int n = std::min(s.order(), t.order());
  std::vector<cplx> out(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = s[k] - t[k];
  return ComplexSeries(std::move(out));
}

inline ComplexSeries scale(const ComplexSeries& s, cplx a) {
  std::vector<cplx> out(s.coeffs().begin(), s.coeffs().end());
  for (auto& c : out) c *= a;
  return ComplexSeries(std::move(out));
}

/// Cauchy product truncated at min(order(s), order(t)).
inline ComplexSeries mul(const ComplexSeries& s, const ComplexSeries& t) {
  const int n = std::min(s.order(), t.order());
  std::vector<cplx> out(static_cast<std::size_t>(n) + 1);
  detail::mul_kernel(s.coeffs(), t.coeffs(), out);
  return ComplexSeries(std::move(out));
}

inline ComplexSeries div(const ComplexSeries& s, const ComplexSeries& t) {
  if (std::abs(t[0]) <= kZeroConstantTol)
    throw Error(ErrorKind::ZeroConstantTerm, "divisor has vanishing constant term");
  const int n = std::min(s.order(), t.order());
  std::vector<cplx> out(static_cast<std::size_t>(n) + 1);
  detail::div_kernel(s.coeffs(), t.coeffs(), out);
  return ComplexSeries(std::move(out));
}

inline ComplexSeries derivative(const ComplexSeries& s) {
  if (s.order() == 0) throw Error(ErrorKind::ZeroOrder, "cannot differentiate an order-0 series");
  std::vector<cplx> out(static_cast<std::size_t>(s.order()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<double>(k + 1) * s[k + 1];
  return ComplexSeries(std::move(out));
}

/// Integral from 0 to z; order grows by one.
inline ComplexSeries antiderivative(const ComplexSeries& s) {
  std::vector<cplx> out(static_cast<std::size_t>(s.order()) + 2);
  for (std::size_t k = 0; k + 1 < out.size(); ++k) out[k + 1] = s[k] / static_cast<double>(k + 1);
  return ComplexSeries(std::move(out));
}

inline ComplexSeries exp_series(const ComplexSeries& s) {
  std::vector<cplx> out(s.coeffs().size());
  detail::exp_kernel(s.coeffs(), out);
  return ComplexSeries(std::move(out));
}

/// Principal branch for the constant term.
inline ComplexSeries log_series(const ComplexSeries& s) {
  if (std::abs(s[0]) <= kZeroConstantTol)
    throw Error(ErrorKind::ZeroConstantTerm, "log of a series vanishing at 0");
  std::vector<cplx> out(s.coeffs().size());
  detail::log_kernel(s.coeffs(), out);
  return ComplexSeries(std::move(out));
}

inline cplx evaluate(const ComplexSeries& s, cplx z) { return detail::horner(s.coeffs(), z); }

/// Drops the constant term and divides by z; order decreases by one.
inline ComplexSeries shift_down(const ComplexSeries& s) {
  if (s.order() == 0) throw Error(ErrorKind::ZeroOrder, "cannot divide an order-0 series by z");
  return ComplexSeries(std::vector<cplx>(s.coeffs().begin() + 1, s.coeffs().end()));
}

// JSON: array of [re, im] pairs, index = degree.

inline nlohmann::json to_json(const ComplexSeries& s) {
  auto arr = nlohmann::json::array();
  for (const auto& c : s.coeffs()) arr.push_back({c.real(), c.imag()});
  return arr;
}

inline cplx complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorKind::InputError, "expected a number or [re, im] pair, got " + j.dump());
}

inline nlohmann::json complex_to_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline ComplexSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::InputError, "series must be a non-empty array");
  std::vector<cplx> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(complex_from_json(e));
  return ComplexSeries(std::move(c));
}

}  // namespace loghm

#endif  // LOGHM_COMPLEX_SERIES_HPP
