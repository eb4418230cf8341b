#include "glslab/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "glslab/kernels.hpp"

namespace glslab {

double safe_ratio(double lhs, double rhs, double zero_tol) {
  if (rhs > zero_tol) return lhs / rhs;
  return lhs > zero_tol ? kInf : 0.0;
}

RatioReport jackson_direct(const PeriodicFunction& f, int n, const NormSpec& norm, const std::string& label) {
  if (n < 1) throw std::invalid_argument("jackson_direct: n must be >= 1");
  const Kernel jackson = kernel_build(KernelKind::kJackson, n);
  RatioReport out;
  out.function = label;
  out.n = n;
  out.norm_tag = norm_tag(norm);
  out.lhs = evaluate_norm(f - convolve(f, jackson), norm);
  out.rhs = modulus(f, kTwoPi / n, norm);
  out.ratio = safe_ratio(out.lhs, out.rhs);
  out.bracket_low = out.bracket_high = out.lhs;
  return out;
}

RatioReport gls_direct(const PeriodicFunction& f, int n, const PsiFunction& psi, const PGrid& grid,
                       const std::string& label) {
  return jackson_direct(f, n, GlsNormSpec{psi, grid}, label);
}

std::vector<InverseReport> inverse_estimate_sweep(const PeriodicFunction& f, std::span<const int> ns,
                                                  const PsiFunction& psi, const PGrid& grid,
                                                  const std::string& label, const GlsSolveOptions& options) {
  if (ns.empty()) return {};
  const int top = *std::max_element(ns.begin(), ns.end());
  if (*std::min_element(ns.begin(), ns.end()) < 1) throw std::invalid_argument("inverse_estimate: n must be >= 1");

  std::vector<double> lower(static_cast<std::size_t>(top) + 1, 0.0);
  std::vector<double> upper(static_cast<std::size_t>(top) + 1, 0.0);
  std::vector<SolverStatus> status(static_cast<std::size_t>(top) + 1, SolverStatus::kExact);
  GlsSolveOptions opts = options;
  opts.compute_lower_bound = true;
  TrigPolynomial previous;
  for (int k = 1; k <= top; ++k) {
    const ApproxError e = best_approx_gls(f, k, psi, grid, opts, k > 1 ? &previous : nullptr);
    lower[static_cast<std::size_t>(k)] = e.bracket_low;
    upper[static_cast<std::size_t>(k)] = e.value;
    status[static_cast<std::size_t>(k)] = e.solver.status;
    previous = e.minimizer;
  }

  const int degree = band_limited_degree(f);
  const GlsNormSpec norm{psi, grid};
  std::vector<InverseReport> out;
  for (int n : ns) {
    InverseReport r;
    r.function = label;
    r.n = n;
    r.lhs = modulus(f, kTwoPi / n, norm);
    double lo = 0.0;
    double hi = 0.0;
    SolverStatus worst = SolverStatus::kExact;
    for (int k = 1; k <= n; ++k) {
      lo += lower[static_cast<std::size_t>(k)];
      hi += upper[static_cast<std::size_t>(k)];
      worst = std::max(worst, status[static_cast<std::size_t>(k)]);
    }
    r.rhs_lower = lo / n;
    r.rhs_upper = hi / n;
    r.ratio_lower = safe_ratio(r.lhs, r.rhs_lower);
    r.ratio_upper = safe_ratio(r.lhs, r.rhs_upper);
    r.polynomial_input = degree >= 0 && degree <= n;
    r.violation_flag = !r.polynomial_input && r.rhs_lower <= 0.0 && r.lhs > 0.0;
    r.solver_status = to_string(worst);
    out.push_back(r);
  }
  return out;
}

InverseReport inverse_estimate(const PeriodicFunction& f, int n, const PsiFunction& psi, const PGrid& grid,
                               const std::string& label, const GlsSolveOptions& options) {
  const int ns[] = {n};
  return inverse_estimate_sweep(f, ns, psi, grid, label, options).front();
}

RatioReport vp_bound(const PeriodicFunction& f, int n, const PsiFunction& psi, const PGrid& grid,
                     const std::string& label, const GlsSolveOptions& options) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("vp_bound: n must be even and >= 2");
  const Kernel vp = kernel_build(KernelKind::kValleePoussin, n / 2);
  const ApproxError best = best_approx_gls(f, n / 2, psi, grid, options);
  RatioReport out;
  out.function = label;
  out.n = n;
  out.norm_tag = psi.tag();
  out.lhs = gls_norm(f - convolve(f, vp), psi, grid).value;
  out.rhs = best.value;
  out.ratio = safe_ratio(out.lhs, out.rhs);
  out.bracket_low = best.bracket_low;
  out.bracket_high = best.bracket_high;
  out.solver_status = to_string(best.solver.status);
  return out;
}

std::string to_string(TaVerdict v) {
  switch (v) {
    case TaVerdict::kTA: return "TA";
    case TaVerdict::kNotTA: return "not-TA";
    case TaVerdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string to_string(DecaySignal s) {
  switch (s) {
    case DecaySignal::kDecaying: return "decaying";
    case DecaySignal::kPlateau: return "plateau";
    case DecaySignal::kUndetermined: return "undetermined";
  }
  return "unknown";
}

TaReport ta_diagnostic(const PeriodicFunction& f, const PsiFunction& psi, const PGrid& grid, int n_max,
                       const TaThresholds& t, const GlsSolveOptions& options) {
  if (n_max < 1 || static_cast<std::size_t>(n_max) > f.size() / 4) {
    throw std::invalid_argument("ta_diagnostic: n_max must lie in [1, N/4]");
  }
  TaReport out;
  out.go = go_membership(f, psi, grid, t.go);
  GlsSolveOptions opts = options;
  opts.compute_lower_bound = false;
  TrigPolynomial previous;
  for (int n = 1; n <= n_max; n *= 2) {
    const ApproxError e = best_approx_gls(f, n, psi, grid, opts, n > 1 ? &previous : nullptr);
    out.degrees.push_back(n);
    out.errors.push_back(e.value);
    out.solver_status.push_back(to_string(e.solver.status));
    previous = e.minimizer;
  }
  const double first = out.errors.front();
  const double last = out.errors.back();
  if (first == 0.0 || last <= t.decay_fraction * first) {
    out.decay = DecaySignal::kDecaying;
  } else if (last >= t.plateau_fraction * first) {
    out.decay = DecaySignal::kPlateau;
  }
  if (out.decay == DecaySignal::kDecaying && out.go.verdict == GoVerdict::kInGo) {
    out.verdict = TaVerdict::kTA;
  } else if (out.decay == DecaySignal::kPlateau && out.go.verdict == GoVerdict::kNotInGo) {
    out.verdict = TaVerdict::kNotTA;
  }
  return out;
}

}  // namespace glslab
