#include "glslab/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "glslab/estimates.hpp"
#include "glslab/kernels.hpp"
#include "glslab/quadrature.hpp"

namespace glslab {
namespace {

void check_order(int r) {
  if (r < 0 || r > kMaxSobolevOrder) throw std::invalid_argument("sobolev: order r must lie in [0, 8]");
}

// (a^p + b^p)^{1/p} without overflow.
double lp_pair(double a, double b, double p) {
  const double hi = std::max(a, b);
  if (hi == 0.0) return 0.0;
  const double lo = std::min(a, b);
  return hi * std::pow(1.0 + std::pow(lo / hi, p), 1.0 / p);
}

PeriodicFunction jackson_residual(const PeriodicFunction& f, int n) {
  return f - convolve(f, kernel_build(KernelKind::kJackson, n));
}

}  // namespace

double sobolev_norm(const PeriodicFunction& f, int r, double p) {
  check_order(r);
  if (r == 0) return lp_norm(f, p);
  return lp_pair(lp_norm(f, p), lp_norm(derivative(f, r), p), p);
}

GlsNormReport gw_norm(const PeriodicFunction& f, int r, const PsiFunction& psi, const PGrid& grid) {
  check_order(r);
  if (r == 0) return gls_norm(f, psi, grid);
  const QuadratureNodes qf = quadrature_nodes(f);
  const QuadratureNodes qd = quadrature_nodes(derivative(f, r));
  std::vector<double> norms;
  norms.reserve(grid.size());
  for (double p : grid.points) {
    const PowerMean a = power_mean(qf, p);
    const PowerMean b = power_mean(qd, p);
    norms.push_back(a.floor_limited || b.floor_limited ? kInf : lp_pair(a.value, b.value, p));
  }
  return assemble_gls_report(grid, psi, norms);
}

std::vector<double> make_qgrid(const ThetaFamily& fam, std::size_t count) {
  if (!(fam.s1 > 1.0)) throw std::invalid_argument("make_qgrid: s1 must exceed 1");
  if (!(fam.s2 > fam.s1)) throw std::invalid_argument("make_qgrid: s2 must exceed s1");
  const double lo = fam.s1 * (1.0 + 1e-3);
  const double hi = std::min(fam.s2, fam.s_max);
  if (!(hi > lo)) throw std::invalid_argument("make_qgrid: empty q range");
  if (count < 2) return {lo};
  std::vector<double> q(count);
  const double step = std::log(hi / lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) q[i] = lo * std::exp(step * static_cast<double>(i));
  q.back() = hi;
  return q;
}

double theta_norm(const PeriodicFunction& g, const ThetaFamily& fam, std::span<const double> qgrid) {
  if (fam.n < 1) throw std::invalid_argument("theta_norm: n must be >= 1");
  const QuadratureNodes nodes = quadrature_nodes(g);
  double best = 0.0;
  for (double q : qgrid) {
    best = std::max(best, power_mean(nodes, q).value * std::pow(static_cast<double>(fam.n), 1.0 / q));
  }
  return best;
}

double theta_norm(const PeriodicFunction& g, const ThetaFamily& fam) { return theta_norm(g, fam, make_qgrid(fam)); }

Thm31Report thm31_check(const PeriodicFunction& f, int r, const PsiFunction& psi, int n, const ThetaFamily& fam,
                        const std::string& label, std::size_t pgrid_count) {
  check_order(r);
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("thm31_check: n must be even and >= 2");
  ThetaFamily theta = fam;
  theta.n = n;
  const std::vector<double> qgrid = make_qgrid(theta);

  Thm31Report out;
  out.function = label;
  out.r = r;
  out.n = n;
  out.s1 = fam.s1;
  out.s2 = std::min(fam.s2, fam.s_max);
  out.b_eff = std::min(psi.b(), fam.s1);
  const PsiFunction cut = make_custom_psi(out.b_eff, [psi](double p) { return psi(p); }, psi.tag());
  const PGrid pgrid = make_pgrid(out.b_eff, pgrid_count);

  out.lhs = theta_norm(jackson_residual(f, n), theta, qgrid);
  const double gw = gw_norm(f, r, cut, pgrid).value;
  const double phi = fundamental_function(cut, kTwoPi / n, pgrid);
  out.rhs_core = std::pow(static_cast<double>(n), -r) * gw / phi;
  out.degenerate = !(out.rhs_core > 0.0);
  out.empirical_c3 = safe_ratio(out.lhs, out.rhs_core);
  return out;
}

Ineq36Report inequality_36_check(const PeriodicFunction& f, int r, int n, double p, double q) {
  check_order(r);
  if (!(p >= 1.0 && q > p)) throw std::invalid_argument("inequality_36_check: need 1 <= p < q");
  if (n < 1) throw std::invalid_argument("inequality_36_check: n must be >= 1");
  Ineq36Report out;
  out.n = n;
  out.r = r;
  out.p = p;
  out.q = q;
  out.lhs = lp_norm(jackson_residual(f, n), q);
  const double nn = static_cast<double>(n);
  out.rhs = std::pow(nn, -r) * std::pow(nn, 1.0 / p - 1.0 / q) * sobolev_norm(f, r, p);
  out.ratio = safe_ratio(out.lhs, out.rhs);
  return out;
}

}  // namespace glslab
