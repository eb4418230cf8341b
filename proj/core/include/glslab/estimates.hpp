#ifndef GLSLAB_ESTIMATES_HPP_
#define GLSLAB_ESTIMATES_HPP_

#include <span>
#include <string>
#include <vector>

#include "glslab/best_approx.hpp"
#include "glslab/modulus.hpp"
#include "glslab/periodic_field.hpp"
#include "glslab/psi_space.hpp"

namespace glslab {

/// One row of a two-sided estimate: lhs <= C * rhs, ratio = lhs / rhs.
/// ratio is 0 when both sides vanish and +inf when only rhs does.
struct RatioReport {
  std::string function;
  int n = 0;
  std::string norm_tag;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double bracket_low = 0.0;
  double bracket_high = 0.0;
  std::string solver_status = "exact";
};

double safe_ratio(double lhs, double rhs, double zero_tol = 1e-14);

/// lhs = ||f - J_n * f||, rhs = omega[f](2 pi / n) in the same norm (L_p, sup or G psi).
RatioReport jackson_direct(const PeriodicFunction& f, int n, const NormSpec& norm, const std::string& label = "");

/// Jackson bound in G psi: lhs = ||f - J_n * f||_{G psi}, rhs = omega_{G psi}[f](2 pi / n).
RatioReport gls_direct(const PeriodicFunction& f, int n, const PsiFunction& psi, const PGrid& grid,
                       const std::string& label = "");

struct InverseReport {
  std::string function;
  int n = 0;
  double lhs = 0.0;             // omega_{G psi}[f](2 pi / n)
  double rhs_lower = 0.0;       // n^{-1} sum_k E_k, E_k from the sup-inf lower bound
  double rhs_upper = 0.0;       // same with the solver's upper values
  double ratio_lower = 0.0;     // lhs / rhs_lower (the meaningful check)
  double ratio_upper = 0.0;
  bool polynomial_input = false;  // f in T(n): rhs vanishes, violation flag suppressed
  bool violation_flag = false;    // rhs_lower = 0 while lhs > 0 for a non-polynomial f
  std::string solver_status = "exact";
};

/// Inverse estimate at each n in `ns`, sharing the E_k solves across the sweep.
std::vector<InverseReport> inverse_estimate_sweep(const PeriodicFunction& f, std::span<const int> ns,
                                                  const PsiFunction& psi, const PGrid& grid,
                                                  const std::string& label = "", const GlsSolveOptions& options = {});
InverseReport inverse_estimate(const PeriodicFunction& f, int n, const PsiFunction& psi, const PGrid& grid,
                               const std::string& label = "", const GlsSolveOptions& options = {});

/// lhs = ||f - V * f||_{G psi} for the de la Vallee Poussin mean of degree < n reproducing T(n/2),
/// rhs = E_{n/2}[f]_{G psi}. Throws std::invalid_argument for odd n or n < 2.
RatioReport vp_bound(const PeriodicFunction& f, int n, const PsiFunction& psi, const PGrid& grid,
                     const std::string& label = "", const GlsSolveOptions& options = {});

struct TaThresholds {
  double decay_fraction = 0.5;    // E_{n_max} <= this * E_1 -> decaying
  double plateau_fraction = 0.6;  // E_{n_max} >= this * E_1 -> plateau
  GoThresholds go{};
};

enum class TaVerdict { kTA, kNotTA, kInconclusive };
std::string to_string(TaVerdict v);

enum class DecaySignal { kDecaying, kPlateau, kUndetermined };
std::string to_string(DecaySignal s);

struct TaReport {
  TaVerdict verdict = TaVerdict::kInconclusive;
  DecaySignal decay = DecaySignal::kUndetermined;
  GoMembership go;
  std::vector<int> degrees;
  std::vector<double> errors;  // E_n[f]_{G psi} per degree
  std::vector<std::string> solver_status;
};

/// E_n[f]_{G psi} for n = 1, 2, 4, ..., n_max against the G-circle membership verdict.
TaReport ta_diagnostic(const PeriodicFunction& f, const PsiFunction& psi, const PGrid& grid, int n_max,
                       const TaThresholds& t = {}, const GlsSolveOptions& options = {});

}  // namespace glslab

#endif  // GLSLAB_ESTIMATES_HPP_
