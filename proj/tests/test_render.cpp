#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "loghm/loghm.hpp"

namespace loghm {
namespace {

using test_cplx = std::complex<double>;

LogharmonicMap identity_map() {
  return LogharmonicMap::from_parts(AnalyticMap::from_series(ComplexSeries(4), 0),
                                    AnalyticMap::from_series(ComplexSeries(4), 0), Variant::OriginFixed);
}

TEST(SampleImage, IdentityGivesCircle) {
  const auto set = sample_image(identity_map(), {0.5});
  ASSERT_EQ(set.circles.size(), 1u);
  for (const auto& p : set.circles[0].points) EXPECT_NEAR(std::abs(p.w), 0.5, 1e-15);
  EXPECT_TRUE(is_closed(set.circles[0]));
  EXPECT_EQ(set.rays.size(), 24u);
}

TEST(SampleImage, FirstPointOfFOneAtHalf) {
  const auto set = sample_image(f_alpha(1.0), {0.5});
  const auto w = set.circles[0].points.front().w;
  EXPECT_NEAR(w.real(), 0.5 * std::exp(0.625 + 0.625 + 0.125 / 3.0), 1e-13);
  EXPECT_EQ(w.imag(), 0.0);
}

TEST(SampleImage, FAlphaCurvesClosedSymmetricSimple) {
  for (double a : {0.2, 0.6, 0.8, 1.0}) {
    const auto set = sample_image(f_alpha(a), default_render_radii());
    ASSERT_EQ(set.circles.size(), default_render_radii().size());
    for (const auto& c : set.circles) {
      EXPECT_TRUE(is_closed(c));
      EXPECT_LE(conjugate_asymmetry(c), 1e-12);
      for (const auto& p : c.points) ASSERT_TRUE(std::isfinite(p.w.real()) && std::isfinite(p.w.imag()));
    }
    const auto& outer = set.circles.back();
    EXPECT_DOUBLE_EQ(outer.param, kRenderRMax);
    EXPECT_FALSE(self_intersects(outer)) << a;
    EXPECT_TRUE(argument_strictly_increasing(outer)) << a;
  }
}

TEST(SampleImage, RefinementAddsPointsWhereImageStretches) {
  SampleOptions opt;
  opt.theta_count = 64;
  const auto set = sample_image(f_alpha(1.0), {kRenderRMax}, opt);
  EXPECT_GT(set.circles[0].points.size(), 65u);
  EXPECT_LE(set.circles[0].points.size(), 64u * 8u + 1u);
}

TEST(SampleImage, RejectsBadInput) {
  EXPECT_THROW(sample_image(identity_map(), {}), Error);
  EXPECT_THROW(sample_image(identity_map(), {1.0}), Error);
  SampleOptions opt;
  opt.theta_count = 16;
  EXPECT_THROW(sample_image(identity_map(), {0.5}, opt), Error);
}

TEST(CurveChecks, DetectSelfIntersectionAndBacktracking) {
  Curve figure_eight{1.0, {}};
  for (int k = 0; k <= 200; ++k) {
    const double t = 2 * std::numbers::pi * k / 200 + 0.01;  // crossing falls inside a segment
    figure_eight.points.push_back({1.0, t, test_cplx(std::sin(t), std::sin(t) * std::cos(t))});
  }
  EXPECT_TRUE(self_intersects(figure_eight));
  EXPECT_FALSE(argument_strictly_increasing(figure_eight));
}

TEST(Emit, SvgDeterministicAndWellFormed) {
  const auto a = svg_document(sample_image(f_alpha(0.6), default_render_radii()));
  const auto b = svg_document(sample_image(f_alpha(0.6), default_render_radii()));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<?xml", 0), 0u);
  EXPECT_NE(a.find("viewBox="), std::string::npos);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  std::size_t paths = 0;
  for (auto pos = a.find("<path"); pos != std::string::npos; pos = a.find("<path", pos + 1)) ++paths;
  EXPECT_EQ(paths, default_render_radii().size() + 24u);
}

TEST(Emit, UnitCircleSvgHasOneClosedPath) {
  CurveSet set;
  set.circles = sample_image(identity_map(), {0.99}).circles;
  const auto svg = svg_document(set);
  std::size_t paths = 0;
  for (auto pos = svg.find("<path"); pos != std::string::npos; pos = svg.find("<path", pos + 1)) ++paths;
  EXPECT_EQ(paths, 1u);
  EXPECT_NE(svg.find("Z\""), std::string::npos);
}

TEST(Emit, EmptySetIsAnError) { EXPECT_THROW(svg_document(CurveSet{}), Error); }

TEST(Emit, CsvHeaderAndRows) {
  const auto set = sample_image(identity_map(), {0.5});
  const auto csv = csv_document(set);
  EXPECT_EQ(csv.rfind("r,theta,re,im\n", 0), 0u);
  std::size_t rows = 0;
  for (char ch : csv) rows += ch == '\n';
  std::size_t points = set.circles[0].points.size();
  for (const auto& r : set.rays) points += r.points.size();
  EXPECT_EQ(rows, points + 1);
}

TEST(Emit, WritesFilesAndReportsIOFailure) {
  const auto dir = std::filesystem::temp_directory_path() / "loghm_render_test";
  std::filesystem::create_directories(dir);
  const auto set = sample_image(identity_map(), {0.5});
  emit_svg(set, (dir / "a.svg").string());
  std::ifstream in(dir / "a.svg");
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), svg_document(set));
  try {
    emit_csv(set, (dir / "missing" / "x.csv").string());
    FAIL() << "expected IOFailure";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IOFailure);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace loghm
