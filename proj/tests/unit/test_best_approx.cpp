#include <cmath>

#include <gtest/gtest.h>

#include "glslab/best_approx.hpp"
#include "glslab/catalog.hpp"

using namespace glslab;

namespace {

PeriodicFunction holder(double alpha, std::size_t n = 1024) {
  return sample_catalog("holder", {{"alpha", alpha}}, PeriodicGrid(n));
}

}  // namespace

TEST(BestApproxLp, ParsevalTailOfHolder) {
  // Discrete coefficients of |sin(x/2)| on N points: (cot(pi(1-2k)/2N) + cot(pi(1+2k)/2N)) / 2N.
  const std::size_t n_grid = 256;
  auto coef = [&](int k) {
    const double two_n = 2.0 * n_grid;
    return (1.0 / std::tan(kPi * (1.0 - 2.0 * k) / two_n) + 1.0 / std::tan(kPi * (1.0 + 2.0 * k) / two_n)) / two_n;
  };
  const PeriodicFunction f = holder(1.0, n_grid);
  for (int n : {1, 6, 20}) {
    double tail = 0.0;
    for (int k = -static_cast<int>(n_grid) / 2 + 1; k <= static_cast<int>(n_grid) / 2; ++k) {
      if (std::abs(k) > n) tail += coef(k) * coef(k);
    }
    const ApproxError e = best_approx_lp(f, n, 2.0);
    EXPECT_NEAR(e.value, std::sqrt(tail), 1e-13) << n;
    EXPECT_EQ(e.solver.status, SolverStatus::kExact);
  }
}

TEST(BestApproxLp, MatchesConicSolverOnGrid) {
  // Reference: the same discrete problem solved by an interior-point conic solver.
  const PeriodicFunction f = holder(1.0);
  EXPECT_NEAR(best_approx_lp(f, 4, 1.0).value, 0.00793573433275566, 1e-9);
  EXPECT_NEAR(best_approx_lp(f, 4, 4.0).value, 0.019487234791986777, 1e-9);
}

TEST(BestApproxLp, PolynomialInputIsExact) {
  const PeriodicFunction f = sample_catalog("cosk", {{"k", 3.0}}, PeriodicGrid(128));
  for (double p : {1.0, 3.0}) {
    const ApproxError e = best_approx_lp(f, 3, p);
    EXPECT_EQ(e.value, 0.0);
    EXPECT_EQ(e.solver.status, SolverStatus::kExact);
  }
  EXPECT_GT(best_approx_lp(f, 2, 3.0).value, 0.5);
}

TEST(BestApproxLp, NondecreasingInPAndNonincreasingInN) {
  const PeriodicFunction f = holder(0.5, 512);
  const std::vector<double> ps = {1.0, 1.5, 2.0, 4.0, 8.0};
  const auto sweep = best_approx_lp_sweep(f, 4, ps);
  for (std::size_t i = 1; i < sweep.size(); ++i) EXPECT_GE(sweep[i].value, sweep[i - 1].value * (1 - 1e-9));
  EXPECT_LE(best_approx_lp(f, 8, 3.0).value, best_approx_lp(f, 4, 3.0).value);
}

TEST(BestApproxLp, Preconditions) {
  const PeriodicFunction f = holder(1.0, 64);
  EXPECT_THROW(best_approx_lp(f, 40, 2.0), std::invalid_argument);
  EXPECT_THROW(best_approx_lp(f, 2, 0.5), std::invalid_argument);
  EXPECT_THROW(best_approx_lp(f, 2, INFINITY), std::invalid_argument);
}

TEST(BestApproxGls, MatchesConicSolver) {
  // Epigraph formulation over the same 64-point p-grid solved by an interior-point conic solver.
  const PGrid grid = make_pgrid(kInf, 64, 256.0);
  const ApproxError e = best_approx_gls(holder(0.5), 4, psi_m(2.0), grid);
  EXPECT_NEAR(e.value, 0.0301266337, 2e-7);
  EXPECT_LE(e.bracket_low, e.value);
  EXPECT_EQ(e.solver.status, SolverStatus::kConverged);
}

TEST(BestApproxGls, WarmStartAgrees) {
  const PGrid grid = make_pgrid(kInf, 32, 64.0);
  const PeriodicFunction f = holder(1.0, 512);
  GlsSolveOptions opts;
  opts.compute_lower_bound = false;
  const ApproxError e4 = best_approx_gls(f, 4, psi_m(2.0), grid, opts);
  const ApproxError cold = best_approx_gls(f, 5, psi_m(2.0), grid, opts);
  const ApproxError warm = best_approx_gls(f, 5, psi_m(2.0), grid, opts, &e4.minimizer);
  EXPECT_NEAR(warm.value, cold.value, 1e-7 * cold.value);
  EXPECT_LE(cold.value, e4.value);
}

TEST(BestApproxGls, LowerBoundBelowValue) {
  const PGrid grid = make_pgrid(kInf, 32, 64.0);
  const PeriodicFunction f = sample_catalog("logsing", {{"s", 0.5}}, PeriodicGrid::midpoint(512));
  const ApproxError e = best_approx_gls(f, 4, psi_m(2.0), grid);
  EXPECT_GT(e.bracket_low, 0.0);
  EXPECT_LE(e.bracket_low, e.value * (1 + 1e-6));
  EXPECT_NEAR(gls_lower_bound(f, 4, psi_m(2.0), grid), e.bracket_low, 1e-9);
}

TEST(SolverStatus, Names) {
  EXPECT_EQ(to_string(SolverStatus::kExact), "exact");
  EXPECT_EQ(to_string(SolverStatus::kStalled), "stalled");
}
