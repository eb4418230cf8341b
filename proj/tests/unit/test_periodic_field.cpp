#include <cmath>

#include <gtest/gtest.h>

#include "glslab/catalog.hpp"
#include "glslab/periodic_field.hpp"
#include "glslab/quadrature.hpp"

using namespace glslab;

namespace {

PeriodicFunction sample(const std::string& text, std::size_t n = 1024) {
  const CatalogSpec spec = parse_catalog_spec(text);
  return sample_catalog(spec, catalog_grid(spec.name, n));
}

// (integral |sin(x/2)|^p dmu)^{1/p} = (Gamma((p+1)/2) / (sqrt(pi) Gamma(p/2+1)))^{1/p}
double holder1_norm(double p) {
  return std::pow(std::exp(std::lgamma(0.5 * (p + 1.0)) - std::lgamma(0.5 * p + 1.0)) / std::sqrt(kPi), 1.0 / p);
}

}  // namespace

TEST(PeriodicGrid, RejectsBadSizes) {
  EXPECT_THROW(PeriodicGrid(100), std::invalid_argument);
  EXPECT_THROW(PeriodicGrid(4), std::invalid_argument);
  EXPECT_THROW(PeriodicGrid(64, 1.0), std::invalid_argument);
  EXPECT_NO_THROW(PeriodicGrid::midpoint(64));
}

TEST(TrigPolynomial, RealParametersRoundTrip) {
  const std::vector<double> params = {0.5, 1.0, -2.0, 0.25, 3.0};
  const TrigPolynomial g = TrigPolynomial::from_real_params(params);
  EXPECT_EQ(g.degree(), 2);
  const auto back = g.real_params();
  for (std::size_t i = 0; i < params.size(); ++i) EXPECT_NEAR(back[i], params[i], 1e-15);
  const double x = 0.7;
  EXPECT_NEAR(g(x), 0.5 + std::cos(x) - 2.0 * std::cos(2 * x) + 0.25 * std::sin(x) + 3.0 * std::sin(2 * x), 1e-14);
}

TEST(PeriodicFunction, FromPolynomialMatchesPointwise) {
  const std::vector<double> params = {1.0, 0.0, 0.5, -1.0, 0.0};
  const TrigPolynomial g = TrigPolynomial::from_real_params(params);
  const PeriodicGrid grid(64);
  const PeriodicFunction f = PeriodicFunction::from_polynomial(grid, g);
  for (std::size_t j = 0; j < grid.size(); ++j) EXPECT_NEAR(f.samples()[j], g(grid.node(j)), 1e-13);
  EXPECT_EQ(band_limited_degree(f), 2);
}

TEST(LpNorm, CosineClosedForms) {
  const PeriodicFunction f = sample("cosk(k=1)");
  EXPECT_NEAR(lp_norm(f, 2.0), std::sqrt(0.5), 1e-13);
  EXPECT_NEAR(lp_norm(f, 1.0), 2.0 / kPi, 1e-12);
  EXPECT_NEAR(lp_norm(f, 4.0), std::pow(3.0 / 8.0, 0.25), 1e-12);
  EXPECT_NEAR(sup_norm(f), 1.0, 1e-15);
}

TEST(LpNorm, HolderMatchesGammaFormula) {
  const PeriodicFunction f = sample("holder(alpha=1)", 4096);
  for (double p : {1.0, 2.0, 8.0, 64.0}) EXPECT_NEAR(lp_norm(f, p) / holder1_norm(p), 1.0, 1e-6) << "p=" << p;
}

TEST(LpNorm, LogSingularityAgainstHighPrecisionQuadrature) {
  // Reference values from an arbitrary-precision adaptive quadrature of the exact integrand.
  const PeriodicFunction half = sample("logsing(s=0.5)");
  EXPECT_NEAR(lp_norm(half, 2.0), 0.568388904905304, 2e-4);
  EXPECT_NEAR(lp_norm(half, 16.0), 1.80623119405506, 2e-4);
  EXPECT_NEAR(lp_norm(half, 64.0), 3.51295200836257, 1e-9);
  const PeriodicFunction one = sample("logsing(s=1)");
  EXPECT_NEAR(lp_norm(one, 4.0), 1.66273112333295, 1e-3);
  EXPECT_NEAR(lp_norm(one, 64.0), 24.2366684712324, 1e-8);
}

TEST(LpNorm, PowerSingularityAgainstGammaRatio) {
  // |2 sin(x/2)|^{-g}: |f|_p^p = Gamma(1 - g p) / Gamma(1 - g p / 2)^2.
  const PeriodicFunction f = sample("singular(gamma=0.3)");
  EXPECT_NEAR(lp_norm(f, 1.0), 1.04883184216472, 5e-4);
  EXPECT_NEAR(lp_norm(f, 3.0), 1.53861651613078, 5e-4);
  EXPECT_TRUE(lp_norm_detail(f, 4.0).floor_limited);
}

TEST(LpNorm, RejectsInvalidExponent) {
  const PeriodicFunction f = sample("cosk(k=1)", 64);
  EXPECT_THROW(lp_norm(f, 0.5), std::invalid_argument);
  EXPECT_THROW(lp_norm(f, INFINITY), std::invalid_argument);
}

TEST(Translate, ExactForBandLimitedInput) {
  const PeriodicFunction f = sample("cosk(k=3)", 256);
  const PeriodicFunction g = translate(f, 0.3);
  for (std::size_t j = 0; j < f.size(); ++j) {
    EXPECT_NEAR(g.samples()[j], std::cos(3.0 * (f.grid().node(j) - 0.3)), 1e-13);
  }
}

TEST(Derivative, SpectralDerivativeOfCosine) {
  const PeriodicFunction f = sample("cosk(k=2)", 128);
  const PeriodicFunction d = derivative(f, 1);
  for (std::size_t j = 0; j < f.size(); ++j) EXPECT_NEAR(d.samples()[j], -2.0 * std::sin(2.0 * f.grid().node(j)), 1e-12);
  EXPECT_THROW(derivative(f, -1), std::invalid_argument);
}

TEST(Quadrature, RuleSelection) {
  EXPECT_EQ(quadrature_nodes(sample("logsing(s=0.5)", 256)).rule, QuadratureRule::kSingularZone);
  EXPECT_EQ(quadrature_nodes(sample("cosk(k=1)", 256)).rule, QuadratureRule::kRootSplit);
  EXPECT_EQ(quadrature_nodes(sample("holder(alpha=1)", 256)).rule, QuadratureRule::kGrid);
}

TEST(Quadrature, WeightsAreNormalized) {
  for (const char* s : {"logsing(s=0.5)", "cosk(k=1)", "holder(alpha=0.5)"}) {
    const QuadratureNodes q = quadrature_nodes(sample(s, 256));
    double total = 0.0;
    for (double w : q.w) total += w;
    EXPECT_NEAR(total, 1.0, 1e-12) << s;
  }
}

TEST(Catalog, ListingAndErrors) {
  const std::string listing = list_catalog();
  EXPECT_NE(listing.find("logsing(s): |f|_p"), std::string::npos);
  EXPECT_NE(listing.find("constant"), std::string::npos);
  EXPECT_THROW(sample_catalog("logsing", {}, PeriodicGrid(64)), std::invalid_argument);
  EXPECT_THROW(parse_catalog_spec("holder(alpha"), std::invalid_argument);
  EXPECT_THROW(catalog_parameters("nosuch", {}), std::invalid_argument);
  const CatalogSpec spec = parse_catalog_spec("step(delta=1.25, start=0.5)");
  EXPECT_EQ(parse_catalog_spec(spec.label()), spec);
}

TEST(Catalog, LogSingularGrowthSlope) {
  for (double s : {0.5, 1.0}) {
    const PeriodicFunction f = sample_catalog("logsing", {{"s", s}}, PeriodicGrid::midpoint(1024));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (double p = 4.0; p <= 128.0; p *= 2.0, ++m) {
      const double x = std::log(p);
      const double y = std::log(lp_norm(f, p));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    EXPECT_NEAR(slope, s, 0.1) << "s=" << s;
  }
}

TEST(Catalog, PowerSingularityDivergesAtSupportEndpoint) {
  const PeriodicFunction f = sample("singular(gamma=0.3)");
  EXPECT_FALSE(lp_norm_detail(f, 3.0).floor_limited);
  EXPECT_TRUE(lp_norm_detail(f, 3.5).floor_limited);
  EXPECT_NE(list_catalog().find("singular(gamma): support endpoint b = 1/gamma"), std::string::npos);
}
