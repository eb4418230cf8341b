#include <cmath>

#include <gtest/gtest.h>

#include "glslab/catalog.hpp"
#include "glslab/kernels.hpp"
#include "glslab/modulus.hpp"

using namespace glslab;

TEST(Kernels, FejerCoefficients) {
  const Kernel k = kernel_build(KernelKind::kFejer, 4);
  EXPECT_EQ(k.degree(), 4);
  for (int j = -4; j <= 4; ++j) EXPECT_NEAR(k.coefficients.coefficient(j).real(), 1.0 - std::abs(j) / 5.0, 1e-15);
}

TEST(Kernels, JacksonDegreeAndNormalization) {
  for (int n : {1, 2, 5, 8, 13}) {
    const Kernel k = kernel_build(KernelKind::kJackson, n);
    EXPECT_LE(k.degree(), n);
    EXPECT_NEAR(k.coefficients.coefficient(0).real(), 1.0, 1e-14);
    // Nonnegative kernel: its values on a fine grid stay >= 0.
    const PeriodicFunction v = sample_kernel(k, PeriodicGrid(256));
    for (double x : v.samples()) EXPECT_GE(x, -1e-12);
  }
  EXPECT_THROW(kernel_build(KernelKind::kJackson, 0), std::invalid_argument);
}

TEST(Kernels, ValleePoussinReproducesLowDegree) {
  const Kernel vp = kernel_build(KernelKind::kValleePoussin, 4);
  EXPECT_EQ(vp.degree(), 7);
  const std::vector<double> params = {0.3, 1.0, 0.0, -0.5, 2.0, 0.1, 0.0, 0.7, -1.0};
  const PeriodicGrid grid(64);
  const PeriodicFunction g = PeriodicFunction::from_polynomial(grid, TrigPolynomial::from_real_params(params));
  const PeriodicFunction h = convolve(g, vp);
  for (std::size_t j = 0; j < grid.size(); ++j) EXPECT_NEAR(h.samples()[j], g.samples()[j], 1e-13);
}

TEST(Kernels, DirichletIsPartialSum) {
  const PeriodicFunction f = sample_catalog("cosk", {{"k", 3.0}}, PeriodicGrid(64));
  const PeriodicFunction low = convolve(f, kernel_build(KernelKind::kDirichlet, 2));
  for (double x : low.samples()) EXPECT_NEAR(x, 0.0, 1e-14);
  EXPECT_EQ(parse_kernel_kind(to_string(KernelKind::kValleePoussin)), KernelKind::kValleePoussin);
  EXPECT_THROW(parse_kernel_kind("gauss"), std::invalid_argument);
}

TEST(Modulus, CosineInL2) {
  const PeriodicFunction f = sample_catalog("cosk", {{"k", 1.0}}, PeriodicGrid(256));
  for (double d : {0.1, 0.5, 1.0, kPi}) {
    EXPECT_NEAR(modulus(f, d, LpNormSpec{2.0}), std::sqrt(2.0) * std::sin(0.5 * d), 1e-12) << d;
  }
  EXPECT_NEAR(modulus(f, 0.0, LpNormSpec{2.0}), 0.0, 0.0);
  EXPECT_THROW(modulus(f, 7.0, SupNormSpec{}), std::invalid_argument);
}

TEST(Modulus, ConstantHasZeroModulus) {
  const PeriodicFunction f = sample_catalog("constant", {{"c", 2.0}}, PeriodicGrid(128));
  EXPECT_NEAR(modulus(f, 1.0, GlsNormSpec{psi_m(2.0), make_pgrid(kInf, 16, 64.0)}), 0.0, 1e-14);
}

TEST(Modulus, ProfileIsNondecreasing) {
  const PeriodicFunction f = sample_catalog("holder", {{"alpha", 0.5}}, PeriodicGrid(256));
  const std::vector<double> deltas = {0.05, 0.1, 0.4, 1.0, 2.0};
  const ModulusProfile prof = modulus_profile(f, deltas, LpNormSpec{4.0});
  for (std::size_t i = 1; i < prof.values.size(); ++i) EXPECT_GE(prof.values[i], prof.values[i - 1]);
  EXPECT_EQ(prof.norm, norm_tag(LpNormSpec{4.0}));
}

TEST(Modulus, StepInSupNormIsOneOnGridShifts) {
  const PeriodicFunction f = sample_catalog("step", {{"delta", kPi}, {"start", 0.0}}, PeriodicGrid(256));
  const double h = f.grid().spacing();
  EXPECT_EQ(sup_norm(translate(f, 3.0 * h) - f), 1.0);
  // Off-grid shifts ring on a jump; each side overshoots by at most the Gibbs constant.
  const double w = modulus(f, 0.1, SupNormSpec{});
  EXPECT_GE(w, 1.0);
  EXPECT_LE(w, 1.0 + 2.0 * 0.0895);
}
