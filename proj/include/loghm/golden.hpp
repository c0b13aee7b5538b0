#ifndef LOGHM_GOLDEN_HPP
#define LOGHM_GOLDEN_HPP

#include <cmath>
#include <utility>

namespace loghm {

struct GoldenResult {
  double x;
  double fx;
};

/// Golden-section search for a maximum of f on [a, b]. Stops after `iters`
/// bracket reductions or once the bracket is narrower than `tol`. Returns
/// the best point evaluated, which is never worse than either interior probe.
template <typename F>
GoldenResult golden_maximize(const F& f, double a, double b, int iters, double tol = 1e-12) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  GoldenResult best = fc >= fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
  for (int i = 0; i < iters && std::abs(b - a) > tol; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc > best.fx) best = {c, fc};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd > best.fx) best = {d, fd};
    }
  }
  return best;
}

}  // namespace loghm

#endif  // LOGHM_GOLDEN_HPP
