#ifndef LOGHM_TESTS_TEST_UTIL_HPP
#define LOGHM_TESTS_TEST_UTIL_HPP

// Test-only oracles, kept independent of the library's evaluation paths.

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace loghm::test {

using cplx = std::complex<double>;

/// Central difference of an analytic function along the real direction.
inline cplx fd_derivative(const std::function<cplx(cplx)>& f, cplx z, double h = 1e-5) {
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

/// Wirtinger derivative d/dz of a real function by central differences.
inline cplx fd_wirtinger(const std::function<double(cplx)>& u, cplx z, double h = 1e-6) {
  const double ux = (u(z + h) - u(z - h)) / (2.0 * h);
  const double uy = (u(z + cplx(0, h)) - u(z - cplx(0, h))) / (2.0 * h);
  return 0.5 * cplx(ux, -uy);
}

/// Composite Simpson with a fixed even number of panels.
inline double fixed_simpson(const std::function<double(double)>& f, double a, double b, int panels = 20000) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

inline std::vector<cplx> random_coeffs(std::mt19937_64& rng, int order, double box = 1.0) {
  std::uniform_real_distribution<double> u(-box, box);
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = {u(rng), u(rng)};
  return c;
}

inline cplx random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * 3.141592653589793 * u(rng));
}

}  // namespace loghm::test

#endif
