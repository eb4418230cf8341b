#include <cmath>

#include <gtest/gtest.h>

#include "glslab/catalog.hpp"
#include "glslab/estimates.hpp"

using namespace glslab;

TEST(SafeRatio, ZeroConventions) {
  EXPECT_EQ(safe_ratio(0.0, 0.0), 0.0);
  EXPECT_EQ(safe_ratio(1.0, 0.0), kInf);
  EXPECT_EQ(safe_ratio(1.0, 4.0), 0.25);
}

TEST(JacksonDirect, ConstantGivesZeroRows) {
  const PeriodicFunction f = sample_catalog("constant", {{"c", 3.0}}, PeriodicGrid(256));
  const RatioReport r = jackson_direct(f, 8, LpNormSpec{2.0}, "constant");
  EXPECT_NEAR(r.lhs, 0.0, 1e-14);
  EXPECT_NEAR(r.rhs, 0.0, 1e-14);
  EXPECT_EQ(r.ratio, 0.0);
  EXPECT_THROW(jackson_direct(f, 0, SupNormSpec{}), std::invalid_argument);
}

TEST(JacksonDirect, SupNormConstantForHolder) {
  const PeriodicFunction f = sample_catalog("holder", {{"alpha", 1.0}}, PeriodicGrid(1024));
  for (int n : {4, 16, 64}) EXPECT_LE(jackson_direct(f, n, SupNormSpec{}).ratio, 3.5) << n;
}

TEST(GlsDirect, FiniteRatioForHolder) {
  const PeriodicFunction f = sample_catalog("holder", {{"alpha", 0.5}}, PeriodicGrid(512));
  const RatioReport r = gls_direct(f, 8, psi_m(2.0), make_pgrid(kInf, 16, 64.0));
  EXPECT_GT(r.ratio, 0.0);
  EXPECT_LT(r.ratio, 10.0);
}

TEST(VpBound, BoundedByOnePlusKernelNorm) {
  const PeriodicFunction f = sample_catalog("holder", {{"alpha", 1.0}}, PeriodicGrid(512));
  const RatioReport r = vp_bound(f, 8, psi_m(2.0), make_pgrid(kInf, 16, 64.0));
  EXPECT_GT(r.ratio, 0.0);
  EXPECT_LE(r.ratio, 4.0);
  EXPECT_THROW(vp_bound(f, 7, psi_m(2.0), make_pgrid(kInf, 16, 64.0)), std::invalid_argument);
}

TEST(InverseEstimate, PolynomialInputSuppressesViolation) {
  const PeriodicFunction f = sample_catalog("cosk", {{"k", 2.0}}, PeriodicGrid(256));
  const InverseReport r = inverse_estimate(f, 4, psi_m(2.0), make_pgrid(kInf, 16, 64.0));
  EXPECT_TRUE(r.polynomial_input);
  EXPECT_FALSE(r.violation_flag);
  EXPECT_GT(r.lhs, 0.0);
  EXPECT_GT(r.rhs_lower, 0.0);  // E_1 > 0 for cos 2x
}

TEST(InverseEstimate, LowerBracketBelowUpper) {
  const PeriodicFunction f = sample_catalog("holder", {{"alpha", 1.0}}, PeriodicGrid(256));
  const std::vector<int> ns = {2, 4};
  for (const auto& r : inverse_estimate_sweep(f, ns, psi_m(2.0), make_pgrid(kInf, 16, 64.0))) {
    EXPECT_LE(r.rhs_lower, r.rhs_upper * (1 + 1e-9));
    EXPECT_GE(r.ratio_lower, r.ratio_upper * (1 - 1e-9));
  }
}

TEST(TaDiagnostic, BoundedFunctionIsApproximable) {
  const PeriodicFunction f = sample_catalog("holder", {{"alpha", 1.0}}, PeriodicGrid(256));
  const TaReport r = ta_diagnostic(f, psi_m(2.0), make_pgrid(kInf, 32, 256.0), 16);
  EXPECT_EQ(r.decay, DecaySignal::kDecaying);
  EXPECT_EQ(r.verdict, TaVerdict::kTA);
  EXPECT_EQ(r.degrees, (std::vector<int>{1, 2, 4, 8, 16}));
  EXPECT_THROW(ta_diagnostic(f, psi_m(2.0), make_pgrid(kInf, 32, 256.0), 128), std::invalid_argument);
}

TEST(TaDiagnostic, VerdictNames) {
  EXPECT_EQ(to_string(TaVerdict::kNotTA), "not-TA");
  EXPECT_EQ(to_string(DecaySignal::kPlateau), "plateau");
}
