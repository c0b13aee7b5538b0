#ifndef LOGHM_JET_HPP
#define LOGHM_JET_HPP

#include <array>
#include <complex>
#include <cstddef>

#include "loghm/series_kernels.hpp"

namespace loghm {

/// Local Taylor expansion of an analytic function about a point:
/// c[k] = f^{(k)}(z0) / k!. Arithmetic on jets is the same truncated
/// power-series algebra as ComplexSeries, in the local variable z - z0,
/// with fixed storage so pointwise evaluation never allocates.
template <std::size_t K>
struct Jet {
  using cplx = std::complex<double>;
  static constexpr std::size_t degree = K;

  std::array<cplx, K + 1> c{};

  static Jet constant(cplx v) {
    Jet j;
    j.c[0] = v;
    return j;
  }

  /// The identity function expanded about z0.
  static Jet variable(cplx z0) {
    Jet j;
    j.c[0] = z0;
    if constexpr (K >= 1) j.c[1] = 1.0;
    return j;
  }

  cplx value() const { return c[0]; }

  /// k-th derivative at the expansion point.
  cplx derivative(std::size_t k) const {
    double fact = 1.0;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
    return fact * c[k];
  }

  /// Jet of f' (degree drops by one, top coefficient set to zero).
  Jet differentiated() const {
    Jet d;
    for (std::size_t k = 0; k < K; ++k) d.c[k] = static_cast<double>(k + 1) * c[k + 1];
    return d;
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t k = 0; k <= K; ++k) c[k] += o.c[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t k = 0; k <= K; ++k) c[k] -= o.c[k];
    return *this;
  }
  Jet& operator*=(cplx a) {
    for (auto& x : c) x *= a;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend Jet operator+(Jet a, cplx s) {
    a.c[0] += s;
    return a;
  }
  friend Jet operator+(cplx s, Jet a) { return a + s; }
  friend Jet operator-(Jet a, cplx s) {
    a.c[0] -= s;
    return a;
  }
  friend Jet operator-(cplx s, const Jet& a) { return -a + s; }
  friend Jet operator*(Jet a, cplx s) { return a *= s; }
  friend Jet operator*(cplx s, Jet a) { return a *= s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet out;
    detail::mul_kernel(a.c, b.c, out.c);
    return out;
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet out;
    detail::div_kernel(a.c, b.c, out.c);
    return out;
  }
  friend Jet operator/(cplx s, const Jet& b) { return constant(s) / b; }
  friend Jet operator/(Jet a, cplx s) { return a *= (1.0 / s); }

  friend Jet exp(const Jet& a) {
    Jet out;
    detail::exp_kernel(a.c, out.c);
    return out;
  }
  /// Principal branch at the expansion point.
  friend Jet log(const Jet& a) {
    Jet out;
    detail::log_kernel(a.c, out.c);
    return out;
  }
};

}  // namespace loghm

#endif  // LOGHM_JET_HPP
