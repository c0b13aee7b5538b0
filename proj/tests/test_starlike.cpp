#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "loghm/loghm.hpp"
#include "test_util.hpp"

namespace loghm {
namespace {

using test::cplx;

std::vector<double> alpha_grid() {
  std::vector<double> a;
  for (int i = 0; i <= 10; ++i) a.push_back(i / 10.0);
  return a;
}

TEST(Criterion, FAlphaFamilyIsExactlyOne) {
  for (double a : alpha_grid()) {
    const auto c = coefficient_criterion(f_alpha(a));
    EXPECT_NEAR(c.sum, 1.0, 1e-12) << a;
    EXPECT_EQ(c.tail, 0.0);
  }
}

TEST(Criterion, Examples) {
  const auto id = LogharmonicMap::from_parts(presets::identity(), presets::identity(), Variant::OriginFixed);
  EXPECT_EQ(coefficient_criterion(id).sum, 0.0);
  const auto cex = coefficient_criterion(starlike_counterexample());
  EXPECT_TRUE(std::isinf(cex.tail));
  EXPECT_GT(cex.sum, 1.0);
  const auto scaled = LogharmonicMap::from_parts(presets::scalez(), presets::identity(), Variant::OriginFixed);
  EXPECT_NO_THROW(coefficient_criterion(scaled));
  const auto unnormalized = LogharmonicMap::from_parts(
      AnalyticMap::from_series(ComplexSeries{0, 2}, 1), presets::identity(), Variant::OriginFixed);
  try {
    coefficient_criterion(unnormalized);
    FAIL() << "expected NotNormalized";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormalized);
  }
  EXPECT_THROW(coefficient_criterion(sharpness_family(0.5)), Error);
}

TEST(RadialField, Examples) {
  const auto f1 = f_alpha(1.0);
  EXPECT_NEAR(radial_field(f1, 0.5).real(), 0.875, 1e-14);
  EXPECT_NEAR(std::abs(radial_field(f1, cplx(1e-8, 0)) - 1.0), 0.0, 1e-7);
  EXPECT_NEAR(radial_field(starlike_counterexample(), -0.75).real(), -0.5, 1e-12);
  try {
    radial_field(f1, 0.0);
    FAIL() << "expected OriginExcluded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OriginExcluded);
  }
}

TEST(RadialField, CounterexampleIsReOnePlusTwoZ) {
  std::mt19937_64 rng(2);
  const auto f = starlike_counterexample();
  for (int i = 0; i < 200; ++i) {
    const cplx z = test::random_point(rng, 0.99);
    ASSERT_NEAR(radial_field(f, z).real(), 1.0 + 2.0 * z.real(), 1e-12);
  }
}

TEST(FieldScan, FAlphaPositive) {
  for (double a : alpha_grid()) {
    const auto rep = field_scan(f_alpha(a));
    EXPECT_GT(rep.min_re_field, 0.0) << a;
    EXPECT_EQ(rep.verdict, StarlikeVerdict::PassCriterion) << a;
  }
}

TEST(FieldScan, CounterexampleWitness) {
  const auto rep = field_scan(starlike_counterexample());
  EXPECT_EQ(rep.verdict, StarlikeVerdict::FieldNegative);
  EXPECT_LE(rep.min_re_field, 0.0);
  EXPECT_LT(rep.witness.real(), -0.5);
  EXPECT_NEAR(rep.min_re_field, 1.0 + 2.0 * rep.witness.real(), 1e-12);
}

TEST(FieldScan, EqualPartsGiveUnitField) {
  // g = h with a_1 = b_1 = 1: Re(Df/f) = 1 identically.
  const auto h = AnalyticMap::from_series(ComplexSeries{0, 1, cplx(0.3, 0.2), -0.1}, 3);
  const auto f = LogharmonicMap::from_parts(h, h, Variant::OriginFixed);
  const auto rep = field_scan(f);
  EXPECT_NEAR(rep.min_re_field, 1.0, 1e-12);
  EXPECT_NEAR(rep.coefficient_sum, 0.0, 1e-15);
}

TEST(FieldScan, CriterionLowerBoundsField) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = test::random_coeffs(rng, 5, 0.2);
    auto b = test::random_coeffs(rng, 5, 0.2);
    a[0] = b[0] = 0.0;
    a[1] = 1.0;
    b[1] = 1.0 + b[1] * 0.5;
    const auto f = LogharmonicMap::from_parts(AnalyticMap::from_series(ComplexSeries(a), 5),
                                              AnalyticMap::from_series(ComplexSeries(b), 5), Variant::OriginFixed);
    const auto rep = field_scan(f, GridSpec{48, 192, 0.999, 0});
    EXPECT_GE(rep.min_re_field, 1.0 - rep.coefficient_sum - 1e-9);
  }
}

TEST(Oracle, ArgumentDerivativeMatchesField) {
  constexpr int steps = 4096;
  const double bound = 5.0 * std::pow(2.0 * std::numbers::pi / steps, 2) + 1e-9;
  EXPECT_LE(argument_monotonicity_oracle(f_alpha(1.0), 0.7, steps), 1e-4);
  for (double a : {0.0, 0.5, 1.0})
    for (double r : {0.3, 0.7, 0.9}) EXPECT_LE(argument_monotonicity_oracle(f_alpha(a), r, steps), bound);
  const auto z = LogharmonicMap::from_parts(AnalyticMap::from_series(ComplexSeries(4), 0),
                                            AnalyticMap::from_series(ComplexSeries(4), 0), Variant::OriginFixed);
  EXPECT_LE(argument_monotonicity_oracle(z, 0.5, 256), 1e-12);
}

TEST(Oracle, CounterexampleArgumentTurnsBack) {
  // At r = 0.9 the argument decreases on the arc where Re(1 + 2z) < 0.
  // g has a log singularity at -1, so the series needs a high order at r = 0.9.
  const auto f = starlike_counterexample(400);
  const double r = 0.9;
  const double theta = std::numbers::pi;
  const double h = 1e-5;
  const double d =
      std::arg(evaluate_f(f, std::polar(r, theta + h)) / evaluate_f(f, std::polar(r, theta - h))) / (2 * h);
  EXPECT_LT(d, 0.0);
  EXPECT_NEAR(d, 1.0 - 2.0 * r, 1e-6);
  EXPECT_LE(argument_monotonicity_oracle(f, r, 4096), 5.0 * std::pow(2.0 * std::numbers::pi / 4096, 2) + 1e-9);
}

TEST(StarlikeReport, JsonLabels) {
  const auto j = to_json(field_scan(f_alpha(0.6)));
  EXPECT_EQ(j.at("verdict"), "PASS_CRITERION");
  EXPECT_EQ(to_json(field_scan(starlike_counterexample())).at("tail_bound"), "unbounded");
}

}  // namespace
}  // namespace loghm
