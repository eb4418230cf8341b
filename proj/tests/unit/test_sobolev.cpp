#include <cmath>

#include <gtest/gtest.h>

#include "glslab/catalog.hpp"
#include "glslab/sobolev.hpp"

using namespace glslab;

TEST(SobolevNorm, CosineClosedForm) {
  const PeriodicFunction f = sample_catalog("cosk", {{"k", 2.0}}, PeriodicGrid(128));
  // |cos 2x|_2^2 + |4 cos 2x|_2^2 = 1/2 + 8.
  EXPECT_NEAR(sobolev_norm(f, 2, 2.0), std::sqrt(8.5), 1e-12);
  EXPECT_NEAR(sobolev_norm(f, 0, 3.0), lp_norm(f, 3.0), 1e-15);
  EXPECT_THROW(sobolev_norm(f, 9, 2.0), std::invalid_argument);
  EXPECT_THROW(sobolev_norm(f, 1, 0.5), std::invalid_argument);
}

TEST(GwNorm, OrderZeroIsGlsNorm) {
  const PeriodicFunction f = sample_catalog("smooth_holder", {{"alpha", 1.0}, {"degree", 16.0}}, PeriodicGrid(256));
  const PGrid grid = make_pgrid(kInf, 32, 128.0);
  EXPECT_NEAR(gw_norm(f, 0, psi_m(2.0), grid).value, gls_norm(f, psi_m(2.0), grid).value, 1e-15);
  EXPECT_GT(gw_norm(f, 1, psi_m(2.0), grid).value, gw_norm(f, 0, psi_m(2.0), grid).value);
}

TEST(ThetaNorm, GridAndValue) {
  const ThetaFamily fam{8, 4.0, kInf, 64.0};
  const auto q = make_qgrid(fam, 16);
  ASSERT_EQ(q.size(), 16u);
  EXPECT_GT(q.front(), 4.0);
  EXPECT_NEAR(q.back(), 64.0, 1e-12);
  const PeriodicFunction one = sample_catalog("constant", {{"c", 1.0}}, PeriodicGrid(64));
  // |1|_q n^{1/q} is largest at the smallest q.
  EXPECT_NEAR(theta_norm(one, fam, q), std::pow(8.0, 1.0 / q.front()), 1e-12);
}

TEST(Thm31Check, RestrictsSupportAndReportsConstant) {
  const PeriodicFunction f = sample_catalog("smooth_holder", {{"alpha", 1.0}, {"degree", 32.0}}, PeriodicGrid(512));
  const Thm31Report r = thm31_check(f, 1, psi_m(2.0), 8, ThetaFamily{8, 4.0, kInf, 64.0});
  EXPECT_EQ(r.b_eff, 4.0);
  EXPECT_FALSE(r.degenerate);
  EXPECT_GT(r.empirical_c3, 0.0);
  EXPECT_TRUE(std::isfinite(r.empirical_c3));
  EXPECT_THROW(thm31_check(f, 1, psi_m(2.0), 7, ThetaFamily{7, 4.0, kInf, 64.0}), std::invalid_argument);
  EXPECT_THROW(thm31_check(f, 1, psi_m(2.0), 8, ThetaFamily{8, 1.0, kInf, 64.0}), std::invalid_argument);
}

TEST(Inequality36, RatioFiniteForSmoothInput) {
  const PeriodicFunction f = sample_catalog("smooth_holder", {{"alpha", 1.0}, {"degree", 32.0}}, PeriodicGrid(512));
  const Ineq36Report r = inequality_36_check(f, 2, 16, 2.0, 8.0);
  EXPECT_GT(r.ratio, 0.0);
  EXPECT_TRUE(std::isfinite(r.ratio));
  EXPECT_THROW(inequality_36_check(f, 2, 16, 8.0, 2.0), std::invalid_argument);
}
