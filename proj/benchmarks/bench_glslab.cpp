#include <benchmark/benchmark.h>

#include "glslab/best_approx.hpp"
#include "glslab/catalog.hpp"
#include "glslab/convex.hpp"
#include "glslab/modulus.hpp"
#include "glslab/orlicz.hpp"

using namespace glslab;

namespace {

PeriodicFunction sample(const std::string& text, std::size_t n) {
  const CatalogSpec spec = parse_catalog_spec(text);
  return sample_catalog(spec, catalog_grid(spec.name, n));
}

void BM_LpNormGrid(benchmark::State& state) {
  const PeriodicFunction f = sample("holder(alpha=0.5)", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lp_norm(f, 7.5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LpNormGrid)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_LpNormSingularZone(benchmark::State& state) {
  const PeriodicFunction f = sample("logsing(s=0.5)", 1024);
  for (auto _ : state) benchmark::DoNotOptimize(lp_norm(f, 64.0));
}
BENCHMARK(BM_LpNormSingularZone);

void BM_GlsNorm(benchmark::State& state) {
  const PeriodicFunction f = sample("logsing(s=0.5)", 1024);
  const PGrid grid = make_pgrid(kInf, static_cast<std::size_t>(state.range(0)), 256.0);
  for (auto _ : state) benchmark::DoNotOptimize(gls_norm(f, psi_m(2.0), grid).value);
}
BENCHMARK(BM_GlsNorm)->Arg(16)->Arg(64);

void BM_BestApproxLp(benchmark::State& state) {
  const PeriodicFunction f = sample("holder(alpha=1)", 1024);
  const double p = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(best_approx_lp(f, 8, p).value);
}
BENCHMARK(BM_BestApproxLp)->Arg(1)->Arg(4)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_BestApproxGls(benchmark::State& state) {
  const PeriodicFunction f = sample("holder(alpha=0.5)", 1024);
  const PGrid grid = make_pgrid(kInf, 64, 256.0);
  GlsSolveOptions opts;
  opts.compute_lower_bound = false;
  for (auto _ : state) benchmark::DoNotOptimize(best_approx_gls(f, static_cast<int>(state.range(0)), psi_m(2.0), grid, opts).value);
}
BENCHMARK(BM_BestApproxGls)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ModulusGls(benchmark::State& state) {
  const PeriodicFunction f = sample("holder(alpha=1)", 1024);
  const GlsNormSpec norm{psi_m(2.0), make_pgrid(kInf, 32, 256.0)};
  for (auto _ : state) benchmark::DoNotOptimize(modulus(f, kTwoPi / 64.0, norm));
}
BENCHMARK(BM_ModulusGls)->Unit(benchmark::kMillisecond);

void BM_Legendre(benchmark::State& state) {
  ConvexSamples f;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -8.0 + 16.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    f.xs.push_back(x);
    f.ys.push_back(0.5 * x * x);
  }
  for (auto _ : state) benchmark::DoNotOptimize(legendre(f, f.xs).conjugate.ys.back());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Legendre)->RangeMultiplier(4)->Range(1024, 65536)->Complexity(benchmark::oNLogN);

void BM_Luxemburg(benchmark::State& state) {
  const PeriodicFunction f = sample("logsing(s=0.5)", 1024);
  const OrliczGenerator m = orlicz_from_psi(psi_m(2.0));
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg_norm(f, m));
}
BENCHMARK(BM_Luxemburg)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
