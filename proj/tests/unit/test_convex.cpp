#include <cmath>

#include <gtest/gtest.h>

#include "glslab/convex.hpp"

using namespace glslab;

namespace {

ConvexSamples sampled(double a, double b, double h, double (*fn)(double)) {
  ConvexSamples s;
  const auto n = static_cast<std::size_t>(std::llround((b - a) / h)) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = a + h * static_cast<double>(i);
    s.xs.push_back(x);
    s.ys.push_back(fn(x));
  }
  return s;
}

double half_square(double x) { return 0.5 * x * x; }
double expo(double x) { return std::exp(x); }

}  // namespace

TEST(Convex, Validation) {
  EXPECT_THROW(validate(ConvexSamples{{0.0}, {1.0}}), std::invalid_argument);
  EXPECT_THROW(validate(ConvexSamples{{0.0, 0.0}, {1.0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(validate(ConvexSamples{{0.0, 1.0}, {1.0}}), std::invalid_argument);
}

TEST(Convex, EnvelopeOfNonConvexSamples) {
  const ConvexSamples w{{-2.0, -1.0, 0.0, 1.0, 2.0}, {4.0, 0.0, 1.0, 0.0, 4.0}};
  EXPECT_FALSE(is_convex(w));
  const ConvexSamples env = lower_convex_envelope(w);
  EXPECT_TRUE(is_convex(env));
  EXPECT_NEAR(env.ys[2], 0.0, 1e-15);
  for (std::size_t i = 0; i < w.ys.size(); ++i) EXPECT_LE(env.ys[i], w.ys[i]);
}

TEST(Legendre, HalfSquareIsSelfConjugate) {
  const ConvexSamples f = sampled(-8.0, 8.0, 1e-2, half_square);
  std::vector<double> ys;
  for (double y = -4.0; y <= 4.0; y += 0.05) ys.push_back(y);
  const LegendreResult r = legendre(f, ys);
  EXPECT_FALSE(r.boundary_attained);
  for (std::size_t i = 0; i < ys.size(); ++i) EXPECT_NEAR(r.conjugate.ys[i], 0.5 * ys[i] * ys[i], 1e-3);
}

TEST(Legendre, ExponentialConjugate) {
  const ConvexSamples f = sampled(-10.0, 10.0, 1e-2, expo);
  std::vector<double> ys;
  for (double y = 0.5; y <= 20.0; y += 0.25) ys.push_back(y);
  const LegendreResult r = legendre(f, ys);
  EXPECT_FALSE(r.boundary_attained);
  for (std::size_t i = 0; i < ys.size(); ++i) {
    EXPECT_NEAR(r.conjugate.ys[i], ys[i] * std::log(ys[i]) - ys[i], 5e-3) << ys[i];
    EXPECT_NEAR(r.argmax[i], std::log(ys[i]), 1e-2);
  }
}

TEST(Legendre, BoundaryAttainmentFlag) {
  const ConvexSamples f = sampled(-1.0, 1.0, 1e-2, half_square);
  const std::vector<double> ys = {0.0, 3.0};
  const LegendreResult r = legendre(f, ys);
  EXPECT_FALSE(r.boundary[0]);
  EXPECT_TRUE(r.boundary[1]);
  EXPECT_TRUE(r.boundary_attained);
}

TEST(Legendre, DoubleConjugationRecoversConvexSamples) {
  const ConvexSamples f = sampled(-3.0, 3.0, 1e-2, expo);
  std::vector<double> slopes;
  for (double x : f.xs) slopes.push_back(std::exp(x));
  const ConvexSamples back = legendre(legendre(f, slopes).conjugate, f.xs).conjugate;
  const double tol = 2.0 * interpolation_tolerance(f);
  for (std::size_t i = 0; i < f.xs.size(); ++i) EXPECT_NEAR(back.ys[i], f.ys[i], tol);
}

TEST(Legendre, OrderReversing) {
  const ConvexSamples f = sampled(-4.0, 4.0, 1e-2, half_square);
  ConvexSamples g = f;
  for (auto& y : g.ys) y += 0.3 + 0.01 * y;
  std::vector<double> ys;
  for (double y = -3.0; y <= 3.0; y += 0.5) ys.push_back(y);
  const auto fs = legendre(f, ys).conjugate;
  const auto gs = legendre(g, ys).conjugate;
  for (std::size_t i = 0; i < ys.size(); ++i) EXPECT_GE(fs.ys[i], gs.ys[i]);
}

TEST(Conjugate, InteriorSlopeRange) {
  const Conjugate c(sampled(0.0, 2.0, 0.5, half_square));
  EXPECT_NEAR(c.interior_low(), 0.25, 1e-15);
  EXPECT_NEAR(c.interior_high(), 1.75, 1e-15);
  EXPECT_NEAR(interpolate(sampled(0.0, 2.0, 0.5, half_square), 0.75), 0.3125, 1e-15);
}
