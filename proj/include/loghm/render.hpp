#ifndef LOGHM_RENDER_HPP
#define LOGHM_RENDER_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "json.hpp"

#include "loghm/error.hpp"
#include "loghm/logharmonic_map.hpp"
#include "loghm/parallel.hpp"

namespace loghm {

inline constexpr double kRenderRMax = 0.995;

struct CurvePoint {
  double r;
  double theta;
  cplx w;  ///< f(r e^{i theta})
};

struct Curve {
  double param;  ///< radius for circles, angle for rays
  std::vector<CurvePoint> points;
};

struct CurveSet {
  std::vector<Curve> circles;  ///< sorted by increasing radius
  std::vector<Curve> rays;
  nlohmann::json meta;
};

struct SampleOptions {
  int theta_count = 512;
  int ray_count = 24;
  int ray_samples = 128;
  int max_subdivision = 8;
  double gap_fraction = 0.01;
};

inline std::vector<double> default_render_radii() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, kRenderRMax};
}

namespace detail {

// e^{2 pi i u} for u in [0, 1], computed so that u and 1 - u give exact
// conjugates.
inline cplx unit_point(double u) {
  if (u <= 0.5) return std::polar(1.0, 2.0 * std::numbers::pi * u);
  return std::conj(std::polar(1.0, 2.0 * std::numbers::pi * (1.0 - u)));
}

inline double bbox_diagonal(const std::vector<Curve>& curves) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& c : curves)
    for (const auto& p : c.points) {
      x0 = std::min(x0, p.w.real());
      x1 = std::max(x1, p.w.real());
      y0 = std::min(y0, p.w.imag());
      y1 = std::max(y1, p.w.imag());
    }
  return std::hypot(x1 - x0, y1 - y0);
}

inline void require_finite(const cplx& w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    throw Error(ErrorKind::EvaluationFailure, "non-finite image point");
}

}  // namespace detail

/// Images of concentric circles and radial segments under f. Circle
/// segments whose image is longer than gap_fraction of the bounding-box
/// diagonal are subdivided (at most max_subdivision pieces per segment).
inline CurveSet sample_image(const LogharmonicMap& f, const std::vector<double>& radii, const SampleOptions& opt = {}) {
  if (radii.empty()) throw Error(ErrorKind::InputError, "no radii to sample");
  for (double r : radii)
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::InputError, "radii must lie in (0, 1)");
  if (opt.theta_count < 64) throw Error(ErrorKind::InputError, "theta_count must be at least 64");
  std::vector<double> sorted = radii;
  std::sort(sorted.begin(), sorted.end());

  CurveSet set;
  set.meta = f.describe();
  const auto n = static_cast<std::size_t>(opt.theta_count);
  set.circles.resize(sorted.size());
  // Base sampling
  detail::parallel_for(sorted.size(), [&](std::size_t i) {
    Curve c{sorted[i], {}};
    c.points.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      const double u = static_cast<double>(k) / static_cast<double>(n);
      const cplx w = evaluate_f(f, sorted[i] * detail::unit_point(u));
      detail::require_finite(w);
      c.points.push_back({sorted[i], 2.0 * std::numbers::pi * u, w});
    }
    set.circles[i] = std::move(c);
  });

  const double threshold = opt.gap_fraction * detail::bbox_diagonal(set.circles);
  detail::parallel_for(sorted.size(), [&](std::size_t i) {
    const double r = sorted[i];
    const auto& base = set.circles[i].points;
    std::vector<CurvePoint> refined;
    refined.reserve(base.size());
    for (std::size_t k = 0; k + 1 < base.size(); ++k) {
      refined.push_back(base[k]);
      const double gap = std::abs(base[k + 1].w - base[k].w);
      if (!(threshold > 0.0) || gap <= threshold) continue;
      const int m = std::min(opt.max_subdivision, static_cast<int>(std::ceil(gap / threshold)));
      for (int j = 1; j < m; ++j) {
        const double u = (static_cast<double>(k) + static_cast<double>(j) / m) / static_cast<double>(n);
        const cplx w = evaluate_f(f, r * detail::unit_point(u));
        detail::require_finite(w);
        refined.push_back({r, 2.0 * std::numbers::pi * u, w});
      }
    }
    refined.push_back(base.back());
    set.circles[i].points = std::move(refined);
  });

  const double r_out = sorted.back();
  for (int j = 0; j < opt.ray_count; ++j) {
    const double u = static_cast<double>(j) / opt.ray_count;
    const cplx dir = detail::unit_point(u);
    Curve ray{2.0 * std::numbers::pi * u, {}};
    for (int s = 0; s <= opt.ray_samples; ++s) {
      const double r = r_out * s / opt.ray_samples;
      const cplx w = evaluate_f(f, r * dir);
      detail::require_finite(w);
      ray.points.push_back({r, ray.param, w});
    }
    set.rays.push_back(std::move(ray));
  }
  return set;
}

inline bool is_closed(const Curve& c, double tol = 1e-9) {
  return c.points.size() >= 2 && std::abs(c.points.front().w - c.points.back().w) <= tol;
}

/// max |w_k - conj(w_{n-k})| along a circle sampled symmetrically in theta.
inline double conjugate_asymmetry(const Curve& c) {
  double worst = 0.0;
  const std::size_t n = c.points.size();
  for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(c.points[k].w - std::conj(c.points[n - 1 - k].w)));
  return worst;
}

namespace detail {

inline double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

inline bool segments_cross(cplx p1, cplx p2, cplx q1, cplx q2) {
  const double d1 = cross(p2 - p1, q1 - p1);
  const double d2 = cross(p2 - p1, q2 - p1);
  const double d3 = cross(q2 - q1, p1 - q1);
  const double d4 = cross(q2 - q1, p2 - q1);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

}  // namespace detail

/// Brute-force sweep over segment pairs of a closed polyline, decimated to
/// at most max_segments segments.
inline bool self_intersects(const Curve& c, std::size_t max_segments = 4096) {
  std::vector<cplx> pts;
  const std::size_t segs = c.points.size() - 1;
  const std::size_t stride = (segs + max_segments - 1) / max_segments;
  for (std::size_t k = 0; k < segs; k += stride) pts.push_back(c.points[k].w);
  pts.push_back(c.points.back().w);
  const std::size_t m = pts.size() - 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;  // adjacent through the closing point
      if (detail::segments_cross(pts[i], pts[i + 1], pts[j], pts[j + 1])) return true;
    }
  }
  return false;
}

/// Unwrapped arg f along a circle increases between consecutive samples;
/// decreases smaller than `tie_tol` count as ties.
inline bool argument_strictly_increasing(const Curve& c, double tie_tol = 1e-10) {
  double prev = std::arg(c.points.front().w);
  for (std::size_t k = 1; k < c.points.size(); ++k) {
    double a = std::arg(c.points[k].w);
    while (a - prev > std::numbers::pi) a -= 2.0 * std::numbers::pi;
    while (a - prev < -std::numbers::pi) a += 2.0 * std::numbers::pi;
    if (a - prev < -tie_tol) return false;
    prev = a;
  }
  return true;
}

namespace detail {

inline std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string path_data(const Curve& c, bool close) {
  std::string d;
  for (std::size_t k = 0; k < c.points.size(); ++k) {
    d += k == 0 ? "M" : " L";
    d += fmt_num(c.points[k].w.real()) + " " + fmt_num(-c.points[k].w.imag());
  }
  if (close) d += " Z";
  return d;
}

}  // namespace detail

/// Standalone SVG 1.1 document: background rect, rays, circles (outermost
/// emphasized). y is flipped so the picture has the usual orientation.
inline std::string svg_document(const CurveSet& c) {
  if (c.circles.empty() && c.rays.empty()) throw Error(ErrorKind::InputError, "empty curve set");
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  const auto grow = [&](const std::vector<Curve>& curves) {
    for (const auto& cv : curves)
      for (const auto& p : cv.points) {
        x0 = std::min(x0, p.w.real());
        x1 = std::max(x1, p.w.real());
        y0 = std::min(y0, -p.w.imag());
        y1 = std::max(y1, -p.w.imag());
      }
  };
  grow(c.circles);
  grow(c.rays);
  const double pad_x = 0.05 * std::max(x1 - x0, 1e-9);
  const double pad_y = 0.05 * std::max(y1 - y0, 1e-9);
  x0 -= pad_x;
  x1 += pad_x;
  y0 -= pad_y;
  y1 += pad_y;
  const double diag = std::hypot(x1 - x0, y1 - y0);
  using detail::fmt_num;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\"" +
       fmt_num(x0) + " " + fmt_num(y0) + " " + fmt_num(x1 - x0) + " " + fmt_num(y1 - y0) +
       "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  s += "<rect x=\"" + fmt_num(x0) + "\" y=\"" + fmt_num(y0) + "\" width=\"" + fmt_num(x1 - x0) + "\" height=\"" +
       fmt_num(y1 - y0) + "\" fill=\"white\"/>\n";
  for (const auto& ray : c.rays)
    s += "<path d=\"" + detail::path_data(ray, false) + "\" fill=\"none\" stroke=\"#9aa7b8\" stroke-width=\"" +
         fmt_num(0.0015 * diag) + "\"/>\n";
  for (std::size_t i = 0; i < c.circles.size(); ++i) {
    const bool outer = i + 1 == c.circles.size();
    s += "<path d=\"" + detail::path_data(c.circles[i], true) + "\" fill=\"none\" stroke=\"" +
         (outer ? std::string("#1f3b73") : std::string("#4a6fa5")) + "\" stroke-width=\"" +
         fmt_num((outer ? 0.005 : 0.002) * diag) + "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

/// Rows (r, theta, Re f, Im f) for every circle point, then every ray point.
inline std::string csv_document(const CurveSet& c) {
  std::string s = "r,theta,re,im\n";
  char buf[128];
  const auto rows = [&](const std::vector<Curve>& curves) {
    for (const auto& cv : curves)
      for (const auto& p : cv.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", p.r, p.theta, p.w.real(), p.w.imag());
        s += buf;
      }
  };
  rows(c.circles);
  rows(c.rays);
  return s;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IOFailure, "cannot open " + path);
  out << content;
  if (!out) throw Error(ErrorKind::IOFailure, "write failed for " + path);
}

inline void emit_svg(const CurveSet& c, const std::string& path) { write_text_file(path, svg_document(c)); }
inline void emit_csv(const CurveSet& c, const std::string& path) { write_text_file(path, csv_document(c)); }

}  // namespace loghm

#endif  // LOGHM_RENDER_HPP
