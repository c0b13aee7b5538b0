#ifndef LOGHM_GRID_HPP
#define LOGHM_GRID_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "json.hpp"

#include "loghm/error.hpp"

namespace loghm {

/// Polar discretization of the disk |z| <= r_max used by every supremum
/// and minimum search.
struct GridSpec {
  int radii_count = 96;
  int angles_count = 384;
  double r_max = 1.0 - 1e-4;
  int refine_iters = 30;

  void validate() const {
    if (radii_count < 8 || angles_count < 8)
      throw Error(ErrorKind::InputError, "grid needs at least 8 radii and 8 angles");
    if (!(r_max > 0.0 && r_max <= 1.0 - 1e-6))
      throw Error(ErrorKind::InputError, "grid r_max must lie in (0, 1 - 1e-6]");
    if (refine_iters < 0) throw Error(ErrorKind::InputError, "refine_iters must be non-negative");
  }

  /// Sine-spaced radii in (r_min, r_max], denser toward r_max; r_min itself is
  /// included when positive. Doubling radii_count yields a superset.
  std::vector<double> radii(double r_min = 0.0) const {
    std::vector<double> r;
    r.reserve(static_cast<std::size_t>(radii_count) + 1);
    if (r_min > 0.0) r.push_back(r_min);
    for (int i = 1; i <= radii_count; ++i)
      r.push_back(r_min + (r_max - r_min) * std::sin(0.5 * std::numbers::pi * i / radii_count));
    return r;
  }

  /// Equally spaced angles 2 pi k / angles_count, k = 0..angles_count-1.
  std::vector<double> angles() const {
    std::vector<double> a(static_cast<std::size_t>(angles_count));
    for (int k = 0; k < angles_count; ++k) a[static_cast<std::size_t>(k)] = 2.0 * std::numbers::pi * k / angles_count;
    return a;
  }
};

/// Grid used for class-R membership probes.
inline GridSpec class_r_grid() { return GridSpec{64, 256, 0.995, 0}; }

inline nlohmann::json to_json(const GridSpec& g) {
  return {{"radii_count", g.radii_count}, {"angles_count", g.angles_count}, {"r_max", g.r_max},
          {"refine_iters", g.refine_iters}};
}

}  // namespace loghm

#endif  // LOGHM_GRID_HPP
