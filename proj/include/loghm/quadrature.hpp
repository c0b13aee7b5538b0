#ifndef LOGHM_QUADRATURE_HPP
#define LOGHM_QUADRATURE_HPP

#include <cmath>
#include <complex>

#include "loghm/error.hpp"

namespace loghm {

struct SimpsonOptions {
  double abs_tol = 1e-12;
  int max_depth = 40;
};

namespace detail {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }

template <typename F, typename T>
T simpson_step(const F& f, double a, double b, T fa, T fm, T fb, T whole, double tol, int depth,
               double span, const SimpsonOptions& opt) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const T flm = f(lm);
  const T frm = f(rm);
  const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const T delta = left + right - whole;
  // Tolerance is shared in proportion to interval length.
  if (magnitude(delta) <= 15.0 * tol * (b - a) / span) return left + right + delta / 15.0;
  if (depth >= opt.max_depth)
    throw Error(ErrorKind::QuadratureNonConvergence, "adaptive Simpson exceeded maximum depth");
  return simpson_step(f, a, m, fa, flm, fm, left, tol, depth + 1, span, opt) +
         simpson_step(f, m, b, fm, frm, fb, right, tol, depth + 1, span, opt);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b]; f returns double or
/// std::complex<double>.
template <typename F>
auto adaptive_simpson(const F& f, double a, double b, const SimpsonOptions& opt = {}) {
  using T = decltype(f(a));
  if (a == b) return T{};
  const T fa = f(a);
  const T fb = f(b);
  const T fm = f(0.5 * (a + b));
  const T whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, opt.abs_tol, 0, std::abs(b - a), opt);
}

}  // namespace loghm

#endif  // LOGHM_QUADRATURE_HPP
