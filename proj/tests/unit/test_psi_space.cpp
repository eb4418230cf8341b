#include <cmath>

#include <gtest/gtest.h>

#include "glslab/catalog.hpp"
#include "glslab/psi_space.hpp"

using namespace glslab;

namespace {

PeriodicFunction sample(const std::string& text, std::size_t n = 1024) {
  const CatalogSpec spec = parse_catalog_spec(text);
  return sample_catalog(spec, catalog_grid(spec.name, n));
}

}  // namespace

TEST(PsiFamilies, ValuesAndParameterChecks) {
  EXPECT_NEAR(psi_m(2.0)(9.0), 3.0, 1e-15);
  EXPECT_NEAR(psi_beta(1.0, 1.0)(2.0), std::exp(2.0), 1e-13);
  EXPECT_NEAR(make_psi("psi_m", {{"m", 4.0}})(16.0), 2.0, 1e-15);
  EXPECT_THROW(make_psi("psi_m", {{"m", -1.0}}), std::invalid_argument);
  EXPECT_THROW(make_psi("nope", {}), std::invalid_argument);
  EXPECT_FALSE(psi_m(2.0).finite_support());
}

TEST(PGrid, InfiniteSupportIsLogSpaced) {
  const PGrid g = make_pgrid(kInf, 64, 256.0);
  ASSERT_EQ(g.size(), 64u);
  EXPECT_EQ(g.points.front(), 1.0);
  EXPECT_EQ(g.points.back(), 256.0);
  EXPECT_NEAR(g.points[1] / g.points[0], g.points[63] / g.points[62], 1e-12);
  EXPECT_EQ(g.truncation(), 256.0);
}

TEST(PGrid, FiniteSupportApproachesEndpoint) {
  const PGrid g = make_pgrid(3.0, 64);
  EXPECT_EQ(g.points.front(), 1.0);
  EXPECT_NEAR(g.points.back(), 3.0 - 1e-4, 1e-12);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_GT(g.points[i], g.points[i - 1]);
  EXPECT_THROW(make_pgrid(1.0, 8), std::invalid_argument);
}

TEST(GlsNorm, ConstantAndCosine) {
  const PGrid grid = make_pgrid(kInf, 64, 256.0);
  // sup_p 1/sqrt(p) is attained at p = 1.
  EXPECT_NEAR(gls_norm(sample("constant"), psi_m(2.0), grid).value, 1.0, 1e-14);
  const GlsNormReport r = gls_norm(sample("cosk(k=1)"), psi_m(2.0), grid);
  EXPECT_NEAR(r.value, 2.0 / kPi, 1e-12);
  EXPECT_EQ(r.argmax_p, 1.0);
  EXPECT_FALSE(r.overflow);
  nlohmann::json j = r;
  EXPECT_NEAR(j.at("value").get<double>(), r.value, 0.0);
}

TEST(GlsNorm, EmbedsIntoL1) {
  const PGrid grid = make_pgrid(kInf, 64, 256.0);
  const PsiFunction psi = psi_m(2.0);
  for (const char* s : {"holder(alpha=0.5)", "logsing(s=0.5)", "step"}) {
    const PeriodicFunction f = sample(s);
    EXPECT_LE(lp_norm(f, 1.0), psi(1.0) * gls_norm(f, psi, grid).value * (1 + 1e-12)) << s;
  }
}

TEST(GlsNorm, OverflowBeyondSupportOfSingularFunction) {
  const PGrid grid = make_pgrid(kInf, 64, 256.0);
  EXPECT_TRUE(gls_norm(sample("singular(gamma=0.3)"), psi_m(2.0), grid).overflow);
}

TEST(NaturalPsi, SelfNormalizes) {
  const PGrid grid = make_pgrid(kInf, 64, 256.0);
  const std::vector<PeriodicFunction> family = {sample("logsing(s=0.5)")};
  const PsiFunction psi = natural_psi(family, grid);
  EXPECT_NEAR(gls_norm(family[0], psi, grid).value, 1.0, 1e-12);
  EXPECT_THROW(natural_psi(std::span<const PeriodicFunction>{}, grid), std::invalid_argument);
}

TEST(FundamentalFunction, ClosedFormAndArcIndicator) {
  const PGrid grid = make_pgrid(kInf, 64, 256.0);
  const PsiFunction psi = psi_m(2.0);
  const double s = 1.0 / 16.0;
  const PeriodicFunction arc = sample_catalog("step", {{"delta", kTwoPi * s}, {"start", 0.0}}, PeriodicGrid(1024));
  EXPECT_NEAR(fundamental_function(psi, kTwoPi * s, grid), gls_norm(arc, psi, grid).value, 1e-12);
  // Continuous maximizer p = 2 ln(1/s) gives exp(-1/2) (2 ln(1/s))^{-1/2}; the grid value sits just below.
  const double continuous = std::exp(-0.5) / std::sqrt(2.0 * std::log(16.0));
  EXPECT_LE(fundamental_function(psi, kTwoPi * s, grid), continuous + 1e-15);
  EXPECT_NEAR(fundamental_function(psi, kTwoPi * s, grid), continuous, 1e-3);
  EXPECT_THROW(fundamental_function(psi, 0.0, grid), std::invalid_argument);
  EXPECT_THROW(fundamental_function(psi, 7.0, grid), std::invalid_argument);
}

TEST(ComparePsi, SquareRootIsMuchLessThanLinear) {
  EXPECT_EQ(compare_psi(psi_m(1.0), psi_m(2.0)), PsiOrdering::kMuchLess);
  EXPECT_EQ(compare_psi(psi_m(2.0), psi_m(1.0)), PsiOrdering::kNotComparableOrEqual);
  EXPECT_EQ(compare_psi(psi_m(2.0), psi_m(2.0)), PsiOrdering::kNotComparableOrEqual);
  EXPECT_THROW(compare_psi(psi_m(2.0), make_custom_psi(4.0, [](double) { return 1.0; })), std::invalid_argument);
}

TEST(GoMembership, BoundedVersusMatchedGrowth) {
  const PGrid grid = make_pgrid(kInf, 64, 256.0);
  EXPECT_EQ(go_membership(sample("holder(alpha=1)"), psi_m(2.0), grid).verdict, GoVerdict::kInGo);
  EXPECT_EQ(go_membership(sample("logsing(s=0.5)"), psi_m(2.0), grid).verdict, GoVerdict::kNotInGo);
  EXPECT_EQ(go_membership(sample("logsing(s=0.5)"), psi_m(1.0 / 0.75), grid).verdict, GoVerdict::kInGo);
}

TEST(CheckPsi, AxiomProbes) {
  const PGrid grid = make_pgrid(kInf, 64, 256.0);
  const PsiDiagnostics d = check_psi(psi_m(2.0), grid);
  EXPECT_TRUE(d.positive);
  EXPECT_TRUE(d.continuous);
  EXPECT_TRUE(d.blows_up);
  EXPECT_NEAR(d.min_value, 1.0, 1e-15);
}
