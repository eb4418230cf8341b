#ifndef GLSLAB_BEST_APPROX_HPP_
#define GLSLAB_BEST_APPROX_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glslab/periodic_field.hpp"
#include "glslab/psi_space.hpp"

namespace glslab {

enum class SolverStatus {
  kExact,          // closed form (Fourier truncation) or zero residual
  kConverged,      // stopping rule met
  kMaxIterations,  // iteration budget exhausted
  kStalled,        // line search could not make progress
};
std::string to_string(SolverStatus s);

struct SolverInfo {
  SolverStatus status = SolverStatus::kExact;
  int iterations = 0;
  double last_change = 0.0;  // relative objective change (or model decrease) at exit
};

/// Best-approximation error E_n with the minimizing polynomial and a bracket.
/// For L_p the bracket is [value, value]; for G_psi it is [max_p E_n[f]_p/psi(p), value].
struct ApproxError {
  int n = 0;
  double value = 0.0;
  TrigPolynomial minimizer;
  SolverInfo solver;
  double bracket_low = 0.0;
  double bracket_high = 0.0;
};

struct LpSolveOptions {
  double rel_tol = 1e-9;
  int max_iterations = 200;
};

/// E_n[f]_p. p = 2 without a singular part uses the Fourier truncation and the Parseval tail;
/// otherwise damped Newton on the integral of |f - g|^p from the L_2 truncation (or `warm_start`).
/// Throws std::invalid_argument when 2n+1 > N or p < 1 or p infinite.
ApproxError best_approx_lp(const PeriodicFunction& f, int n, double p, const LpSolveOptions& options = {},
                           const TrigPolynomial* warm_start = nullptr);

/// E_n[f]_p for every p in `ps` (increasing), warm-starting each solve from the previous one.
std::vector<ApproxError> best_approx_lp_sweep(const PeriodicFunction& f, int n, std::span<const double> ps,
                                              const LpSolveOptions& options = {});

struct GlsSolveOptions {
  int max_iterations = 300;
  double rel_tol = 1e-11;      // predicted relative decrease below this -> converged
  int stall_window = 50;       // no relative improvement above stall_tol over this many steps -> stop
  double stall_tol = 1e-7;
  bool compute_lower_bound = true;
  LpSolveOptions lp{};
};

/// E_n[f]_{G psi} by a sequential quadratic programming method on the epigraph of
/// max_p |f - g|_p / psi(p), started at the L_2 truncation (or at `warm_start` when that is
/// better, e.g. the minimizer of degree n-1 in a sweep over n).
ApproxError best_approx_gls(const PeriodicFunction& f, int n, const PsiFunction& psi, const PGrid& grid,
                            const GlsSolveOptions& options = {}, const TrigPolynomial* warm_start = nullptr);

/// max_p E_n[f]_p / psi(p) over the grid (the sup-inf lower bound of E_n[f]_{G psi}).
double gls_lower_bound(const PeriodicFunction& f, int n, const PsiFunction& psi, const PGrid& grid,
                       const LpSolveOptions& options = {});

}  // namespace glslab

#endif  // GLSLAB_BEST_APPROX_HPP_
