#include <cmath>

#include <gtest/gtest.h>

#include "glslab/catalog.hpp"
#include "glslab/orlicz.hpp"
#include "glslab/quadrature.hpp"

using namespace glslab;

namespace {

PeriodicFunction sample(const std::string& text, std::size_t n = 1024) {
  const CatalogSpec spec = parse_catalog_spec(text);
  return sample_catalog(spec, catalog_grid(spec.name, n));
}

const PGrid& default_grid() {
  static const PGrid g = make_pgrid(kInf, 64, 256.0);
  return g;
}

// exp(u) - 1 - u in log form.
OrliczGenerator exp_minus_linear() {
  return OrliczGenerator("exp-1-u", [](double u) {
    return u > 30.0 ? u + std::log1p(-(1.0 + u) * std::exp(-u)) : std::log(std::expm1(u) - u);
  });
}

OrliczGenerator exp_square() {
  return OrliczGenerator("exp(u^2)-1", [](double u) { return log_expm1(u * u); });
}

}  // namespace

TEST(NuOfPsi, ClosedForms) {
  const ConvexSamples a = nu_of_psi(psi_m(1.0));
  EXPECT_NEAR(interpolate(a, std::exp(1.0)), std::exp(1.0), 1e-4);
  const ConvexSamples b = nu_of_psi(psi_beta(1.0, 1.0));
  EXPECT_NEAR(interpolate(b, 2.0), 4.0, 1e-2);
  const ConvexSamples c = nu_of_psi(make_custom_psi(kInf, [](double) { return std::exp(1.0); }, "e"));
  for (std::size_t i = 0; i < c.xs.size(); i += 512) EXPECT_NEAR(c.ys[i], c.xs[i], 1e-9 * c.xs[i]);
  EXPECT_THROW(nu_of_psi(make_custom_psi(4.0, [](double) { return 1.0; })), std::invalid_argument);
}

TEST(TailFunction, ArcIndicatorAndCosine) {
  const std::size_t n = 1024;
  const PeriodicFunction arc = sample_catalog("step", {{"delta", kTwoPi / 8.0}, {"start", 0.0}}, PeriodicGrid(n));
  const std::vector<double> levels = {0.0, 0.5, 0.999, 1.0, 2.0};
  const TailFunction t = tail_function(arc, levels);
  EXPECT_EQ(t.values, (std::vector<double>{0.125, 0.125, 0.125, 0.0, 0.0}));

  const PeriodicFunction c = sample("cosk(k=1)", n);
  std::vector<double> ys;
  for (double y = 0.0; y < 1.0; y += 0.01) ys.push_back(y);
  const TailFunction tc = tail_function(c, ys);
  for (std::size_t i = 0; i < ys.size(); ++i) {
    EXPECT_NEAR(tc.values[i], std::acos(ys[i]) / kPi, 2.0 / n) << ys[i];
    if (i > 0) EXPECT_LE(tc.values[i], tc.values[i - 1]);
  }
  const std::vector<double> bad = {1.0, 0.5};
  EXPECT_THROW(tail_function(c, bad), std::invalid_argument);
}

TEST(TailFunction, LayerCakeAtP2) {
  for (const char* s : {"holder(alpha=0.5)", "logsing(s=0.5)", "step"}) {
    const PeriodicFunction f = sample(s, 4096);
    double top = 0.0;
    for (double v : f.samples()) top = std::max(top, std::abs(v));
    std::vector<double> ys;
    const int m = 20000;
    for (int i = 0; i <= m; ++i) ys.push_back(top * i / m);
    const TailFunction t = tail_function(f, ys);
    // p integral y^{p-1} mu{|f| > y} dy with mu{|f| > y} = mu{f > y} + mu{f < -y} = T for one-signed f.
    double acc = 0.0;
    for (int i = 0; i < m; ++i) acc += 2.0 * 0.5 * (ys[i] * t.values[i] + ys[i + 1] * t.values[i + 1]) * (ys[i + 1] - ys[i]);
    double discrete = 0.0;
    for (double v : f.samples()) discrete += v * v;
    discrete /= static_cast<double>(f.size());
    EXPECT_NEAR(acc / discrete, 1.0, 0.01) << s;
  }
}

TEST(TailBound, BoundedFunctionHasEmptyTail) {
  const PeriodicFunction f = sample("cosk(k=1)");
  std::vector<double> levels;
  for (int i = 1; i <= 50; ++i) levels.push_back(0.2 * i);
  const TailBoundReport r = tail_bound_check(f, psi_m(2.0), levels, default_grid());
  ASSERT_FALSE(r.empty);
  for (std::size_t i = 0; i < r.levels.size(); ++i) {
    EXPECT_EQ(r.tail[i], 0.0);
    EXPECT_GE(r.margins[i], 0.0);
  }
  const std::vector<double> low = {0.1};
  EXPECT_TRUE(tail_bound_check(f, psi_m(2.0), low, default_grid()).empty);
}

TEST(TailBound, SelfNormalizedLogSingularity) {
  const PeriodicFunction f = sample("logsing(s=0.5)", 4096);
  const std::vector<PeriodicFunction> family = {f};
  const PsiFunction psi = natural_psi(family, default_grid());
  std::vector<double> levels;
  for (int i = 1; i <= 100; ++i) levels.push_back(std::exp(1.0) + 0.1 * i);
  const TailBoundReport r = tail_bound_check(f, psi, levels, default_grid());
  EXPECT_NEAR(r.norm, 1.0, 1e-12);
  EXPECT_GE(r.min_margin, -2.0 / 4096.0);
  EXPECT_GE(r.reconstruction_ratio, 1.0);
  EXPECT_LE(r.reconstruction_ratio, 20.0);
}

TEST(OrliczFromPsi, SquareRootGivesGaussianType) {
  const OrliczConstruction c = orlicz_construction(psi_m(2.0));
  EXPECT_LT(c.continuity_gap, 1e-9);
  EXPECT_TRUE(c.theta_convexified);
  const OrliczGenerator& m = c.generator;
  const double e2 = std::exp(2.0);
  const double e4 = std::exp(4.0);
  const double r2 = m.log_value(e2) / (e2 * e2);
  const double r4 = m.log_value(e4) / (e4 * e4);
  EXPECT_LT(std::abs(r4 / r2 - 1.0), 0.1);
  const GeneratorProbe probe = probe_generator(m);
  EXPECT_TRUE(probe.zero_at_origin);
  EXPECT_TRUE(probe.nondecreasing);
  EXPECT_TRUE(probe.convex);
  EXPECT_LE(probe.quadratic_high / probe.quadratic_low, 4.0);
}

TEST(OrliczFromPsi, ExponentialPsiGivesLogPowerType) {
  const OrliczGenerator m = orlicz_from_psi(psi_beta(1.0, 1.0));
  // ln M(u) ~ c (ln u)^{1 + 1/beta} = c (ln u)^2.
  const double a = m.log_value(std::exp(4.0)) / 16.0;
  const double b = m.log_value(std::exp(8.0)) / 64.0;
  EXPECT_LT(std::abs(b / a - 1.0), 0.1);
  EXPECT_THROW(orlicz_from_psi(make_custom_psi(3.0, [](double) { return 1.0; })), std::invalid_argument);
}

TEST(PsiFromOrlicz, RoundTripFromExponentialPsi) {
  const PsiFunction back = psi_from_orlicz(orlicz_from_psi(psi_beta(1.0, 1.0)));
  // nu(p) = p ln psi(p) should grow like p^2.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (double p = 4.0; p <= 64.0; p *= 1.2, ++n) {
    const double x = std::log(p);
    const double y = std::log(p * std::log(back(p)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  EXPECT_NEAR((n * sxy - sx * sy) / (n * sxx - sx * sx), 2.0, 0.1);
}

TEST(PsiFromOrlicz, RejectsDegenerateAndNonConvex) {
  EXPECT_THROW(psi_from_orlicz(power_generator(2.0)), std::domain_error);
  const OrliczGenerator kink = make_generator("kink", [](double u) { return u < 1.0 ? u * u * u : u; });
  EXPECT_THROW(psi_from_orlicz(kink), std::domain_error);
}

TEST(Luxemburg, PowerGeneratorIsLpNorm) {
  const PeriodicFunction f = sample("cosk(k=1)");
  EXPECT_NEAR(luxemburg_norm(f, power_generator(2.0)), std::sqrt(0.5), 1e-6);
  EXPECT_EQ(luxemburg_norm(PeriodicFunction::zero(PeriodicGrid(64)), power_generator(2.0)), 0.0);
}

TEST(Luxemburg, HomogeneousAndOnUnitSphere) {
  const PeriodicFunction f = sample("logsing(s=0.5)");
  const OrliczGenerator m = orlicz_from_psi(psi_m(2.0));
  const double base = luxemburg_norm(f, m);
  EXPECT_NEAR(luxemburg_norm(3.0 * f, m), 3.0 * base, 1e-8 * base);
  const QuadratureNodes q = quadrature_nodes(f);
  double integral = 0.0;
  for (std::size_t i = 0; i < q.v.size(); ++i) integral += q.w[i] * m(q.v[i] / base);
  EXPECT_LE(integral, 1.0 + 1e-12);
  EXPECT_GE(integral, 1.0 - 1e-6);
}

TEST(Equivalence, ScaleInvariantAndZeroConvention) {
  const PeriodicFunction f = sample("holder(alpha=1)");
  const OrliczGenerator m = orlicz_from_psi(psi_m(2.0));
  const double r = equivalence_ratio(f, psi_m(2.0), m, default_grid());
  EXPECT_NEAR(equivalence_ratio(5.0 * f, psi_m(2.0), m, default_grid()), r, 1e-8 * r);
  EXPECT_EQ(equivalence_ratio(PeriodicFunction::zero(PeriodicGrid(64)), psi_m(2.0), m, default_grid()), 1.0);
}

TEST(OrliczCompare, ExponentDominance) {
  EXPECT_EQ(orlicz_compare(exp_minus_linear(), exp_square()), OrliczOrdering::kMuchLess);
  EXPECT_EQ(orlicz_compare(exp_square(), exp_square()), OrliczOrdering::kNotMuchLess);
  EXPECT_EQ(orlicz_compare(exponential_generator(1.0), exponential_generator(2.0)), OrliczOrdering::kMuchLess);
  EXPECT_EQ(orlicz_compare(exponential_generator(2.0), exponential_generator(3.0)), OrliczOrdering::kMuchLess);
  EXPECT_EQ(orlicz_compare(exponential_generator(2.0), exponential_generator(1.0)), OrliczOrdering::kNotMuchLess);
}

TEST(Thm41, ApproximabilityInOrliczSpaces) {
  const OrliczGenerator m = orlicz_from_psi(psi_m(2.0));
  EXPECT_EQ(thm41_diagnostic(sample("holder(alpha=1)"), m).verdict, TaVerdict::kTA);
  const PeriodicFunction f = sample("logsing(s=0.5)");
  EXPECT_EQ(thm41_diagnostic(f, m).verdict, TaVerdict::kNotTA);

  // Smaller space L(K): K built from psi(p) = p, which is much less than M.
  const OrliczGenerator k = orlicz_from_psi(psi_m(1.0));
  EXPECT_EQ(orlicz_compare(k, m), OrliczOrdering::kMuchLess);
  const LuxemburgResult lux = luxemburg_norm_detail(f, k);
  EXPECT_TRUE(std::isfinite(lux.value));
  EXPECT_FALSE(lux.floor_limited);
  EXPECT_EQ(thm41_diagnostic(f, k).verdict, TaVerdict::kTA);
}
