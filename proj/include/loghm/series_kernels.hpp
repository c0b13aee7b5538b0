#ifndef LOGHM_SERIES_KERNELS_HPP
#define LOGHM_SERIES_KERNELS_HPP

// Coefficient recurrences shared by the dynamic ComplexSeries and the
// fixed-size Jet. All kernels write out[0..out.size()) and read only the
// first out.size() input coefficients; inputs must be at least that long.

#include <complex>
#include <cstddef>
#include <span>

namespace loghm::detail {

using cplx = std::complex<double>;

inline void mul_kernel(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  const std::size_t n = out.size();
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc{};
    for (std::size_t i = 0; i <= k; ++i) acc += a[i] * b[k - i];
    out[k] = acc;
  }
}

// a / b with b[0] != 0; out may not alias a or b.
inline void div_kernel(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  const std::size_t n = out.size();
  const cplx inv = 1.0 / b[0];
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = a[k];
    for (std::size_t i = 1; i <= k; ++i) acc -= b[i] * out[k - i];
    out[k] = acc * inv;
  }
}

// E = exp(s) from E' = s' E.
inline void exp_kernel(std::span<const cplx> s, std::span<cplx> out) {
  const std::size_t n = out.size();
  if (n == 0) return;
  out[0] = std::exp(s[0]);
  for (std::size_t k = 1; k < n; ++k) {
    cplx acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * s[j] * out[k - j];
    out[k] = acc / static_cast<double>(k);
  }
}

// L = log(s) from s L' = s', principal branch for L[0]. Requires s[0] != 0.
inline void log_kernel(std::span<const cplx> s, std::span<cplx> out) {
  const std::size_t n = out.size();
  if (n == 0) return;
  out[0] = std::log(s[0]);
  const cplx inv = 1.0 / s[0];
  for (std::size_t k = 1; k < n; ++k) {
    cplx acc = static_cast<double>(k) * s[k];
    for (std::size_t j = 1; j < k; ++j) acc -= static_cast<double>(k - j) * out[k - j] * s[j];
    out[k] = acc * inv / static_cast<double>(k);
  }
}

inline cplx horner(std::span<const cplx> c, cplx z) {
  cplx acc{};
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

// Taylor coefficients of the polynomial c re-expanded about z, up to
// out.size()-1 (i.e. out[k] = p^{(k)}(z)/k!). Repeated synthetic division.
inline void taylor_shift_kernel(std::span<const cplx> c, cplx z, std::span<cplx> out) {
  const std::size_t m = out.size();
  for (std::size_t k = 0; k < m; ++k) out[k] = cplx{};
  const std::size_t n = c.size();
  if (n == 0) return;
  for (std::size_t i = n; i-- > 0;) {
    // out <- out * (z + delta) + c[i], truncated to m terms
    for (std::size_t k = m; k-- > 1;) out[k] = out[k] * z + out[k - 1];
    out[0] = out[0] * z + c[i];
  }
}

}  // namespace loghm::detail

#endif  // LOGHM_SERIES_KERNELS_HPP
