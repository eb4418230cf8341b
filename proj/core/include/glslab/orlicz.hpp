#ifndef GLSLAB_ORLICZ_HPP_
#define GLSLAB_ORLICZ_HPP_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "glslab/convex.hpp"
#include "glslab/estimates.hpp"
#include "glslab/periodic_field.hpp"
#include "glslab/psi_space.hpp"

namespace glslab {

/// nu(p) = p ln psi(p) on `count` log-spaced points of [1, p_max], cut where psi overflows.
/// Throws for finite b.
ConvexSamples nu_of_psi(const PsiFunction& psi, std::size_t count = 4096, double p_max = 1e12);

/// ln(e^x - 1), -inf for x <= 0, without overflow for large x.
double log_expm1(double x);

/// Young-Orlicz function N, stored through ln N(u) so that fast-growing generators stay finite.
class OrliczGenerator {
 public:
  OrliczGenerator(std::string tag, std::function<double(double)> log_value);

  const std::string& tag() const { return tag_; }
  /// ln N(u) for u >= 0 (argument taken by absolute value); -inf at u = 0.
  double log_value(double u) const;
  double operator()(double u) const;

 private:
  std::string tag_;
  std::function<double(double)> log_value_;
};

/// N(u) = |u|^p.
OrliczGenerator power_generator(double p);
/// N(u) = exp(u^m ln(e + u)^{-m r}) - 1 for u >= 1, joined to c u^2 on [0, 1] continuously.
OrliczGenerator exponential_generator(double m, double r = 0.0);
/// N(u) = exp(ln(1 + u)^{1 + 1/beta}) - 1 for u >= 1, joined to c u^2 on [0, 1] continuously.
OrliczGenerator log_power_generator(double beta);
/// Generator from a plain evaluator u -> N(u).
OrliczGenerator make_generator(std::string tag, std::function<double(double)> value);

struct OrliczConstruction {
  OrliczGenerator generator;
  double quadratic_constant = 0.0;  // C in exp(C u^2) - 1 on [0, e]
  double continuity_gap = 0.0;      // relative jump of N at u = e before the envelope pass
  bool nu_convexified = false;
  bool theta_convexified = false;
  double reliable_log_u = 0.0;      // beyond this ln u the conjugate of nu is truncated by the p range
};

/// M(u) = exp(nu*(ln u)) for u > e, exp(C u^2) - 1 on [0, e], C fixed by continuity at e, followed
/// by a convex envelope of theta(z) = ln M(e^z). Throws for finite b.
OrliczConstruction orlicz_construction(const PsiFunction& psi);
OrliczGenerator orlicz_from_psi(const PsiFunction& psi);

struct GeneratorProbe {
  bool zero_at_origin = false;
  bool nondecreasing = false;
  bool convex = false;
  double quadratic_low = 0.0;   // min of N(u)/u^2 on [0.1, 1]
  double quadratic_high = 0.0;  // max of the same
};
/// Axiom probe on 64 points of [0, u_max].
GeneratorProbe probe_generator(const OrliczGenerator& n, double u_max = 4.0);

/// psi_M(p) = exp(theta*(p) / p), theta(z) = ln M(e^z) sampled on z in [-20, Z], Z doubling from 20
/// up to 640 until the conjugate is interior at p = 4..64. Throws std::domain_error when theta is
/// not convex or the conjugate stays on the boundary.
PsiFunction psi_from_orlicz(const OrliczGenerator& m);

struct LuxemburgResult {
  double value = 0.0;
  bool floor_limited = false;  // the integral at the optimum is dominated by the singular resolution floor
  int iterations = 0;
};
LuxemburgResult luxemburg_norm_detail(const PeriodicFunction& f, const OrliczGenerator& n);
double luxemburg_norm(const PeriodicFunction& f, const OrliczGenerator& n);

struct TailFunction {
  std::vector<double> ys;
  std::vector<double> values;
};

/// max(mu{f > y}, mu{f < -y}) from the grid samples, weight 1/N each. Throws unless levels are >= 0 and increasing.
TailFunction tail_function(const PeriodicFunction& f, std::span<const double> levels);

struct TailBoundReport {
  double norm = 0.0;       // ||f||_{G psi}
  double threshold = 0.0;  // e * norm
  std::vector<double> levels;
  std::vector<double> bound;
  std::vector<double> tail;
  std::vector<double> margins;
  double min_margin = kInf;
  bool empty = true;  // no level above the threshold
  double reconstructed_norm = 0.0;
  double reconstruction_ratio = 0.0;  // reconstructed / actual
};

/// Margins exp(-nu*(ln(y / K))) - T(y) at levels y > e K, K = ||f||_{G psi}, together with the
/// G psi norm of the extremal tail min(1, exp(-nu*(ln(y / K)))).
TailBoundReport tail_bound_check(const PeriodicFunction& f, const PsiFunction& psi, std::span<const double> levels,
                                 const PGrid& grid);

struct EquivalenceRow {
  std::string function;
  double gls = 0.0;
  double luxemburg = 0.0;
  double ratio = 1.0;
  bool floor_limited = false;
};
struct EquivalenceScan {
  std::vector<EquivalenceRow> rows;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double spread = 0.0;  // max / min
};

double equivalence_ratio(const PeriodicFunction& f, const PsiFunction& psi, const OrliczGenerator& m,
                         const PGrid& grid);
EquivalenceScan equivalence_scan(std::span<const PeriodicFunction> functions, std::span<const std::string> labels,
                                 const PsiFunction& psi, const PGrid& grid);

enum class OrliczOrdering { kMuchLess, kNotMuchLess };
std::string to_string(OrliczOrdering o);

struct CompareOptions {
  std::vector<double> lambdas{0.5, 1.0, 2.0, 8.0};
  double log_u_max = 8.0;
  std::size_t count = 256;
};

/// K << N when for every lambda the ratio K(lambda u)/N(u) decreases over the top decile of a
/// log-spaced grid on [1, e^8] and ends below 1e-3 of its first tail value.
OrliczOrdering orlicz_compare(const OrliczGenerator& k, const OrliczGenerator& n, const CompareOptions& options = {});

struct Thm41Report {
  TaVerdict verdict = TaVerdict::kInconclusive;
  GoMembership go;
};

/// TA in L(M) iff f lies in the G-circle subspace of G psi_M.
Thm41Report thm41_diagnostic(const PeriodicFunction& f, const OrliczGenerator& m);

}  // namespace glslab

#endif  // GLSLAB_ORLICZ_HPP_
