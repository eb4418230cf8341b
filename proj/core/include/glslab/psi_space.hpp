#ifndef GLSLAB_PSI_SPACE_HPP_
#define GLSLAB_PSI_SPACE_HPP_

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "glslab/catalog.hpp"
#include "glslab/periodic_field.hpp"

namespace glslab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Generating function psi: [1, b) -> (0, inf) of a Grand Lebesgue space.
class PsiFunction {
 public:
  PsiFunction(double b, std::function<double(double)> evaluator, std::string tag);

  double b() const { return b_; }
  bool finite_support() const { return b_ < kInf; }
  const std::string& tag() const { return tag_; }
  double operator()(double p) const { return evaluator_(p); }

 private:
  double b_;
  std::function<double(double)> evaluator_;
  std::string tag_;
};

/// psi_m(p) = p^{1/m}, b = inf.
PsiFunction psi_m(double m);
/// psi_beta(p) = exp(C3 p^beta), b = inf.
PsiFunction psi_beta(double beta, double c3);
/// Family by name: "psi_m" {m}, "psi_beta" {beta, C3}. Throws on invalid parameters.
PsiFunction make_psi(std::string_view family, const ParameterMap& params);
/// User-supplied psi on [1, b).
PsiFunction make_custom_psi(double b, std::function<double(double)> evaluator, std::string tag = "custom");

/// Discretization of the supremum over p in [1, b).
struct PGridPolicy {
  double b = kInf;
  std::size_t count = 64;
  double pmax = 256.0;  // truncation for b = inf
  bool operator==(const PGridPolicy&) const = default;
};

struct PGrid {
  std::vector<double> points;
  PGridPolicy policy;

  std::size_t size() const { return points.size(); }
  /// Effective upper end: pmax for b = inf, b otherwise.
  double truncation() const { return policy.b < kInf ? policy.b : policy.pmax; }
  /// Index of the first point in the top decile (at least two points).
  std::size_t tail_begin() const;
};

/// b = inf: log-spaced on [1, pmax]. Finite b: p = b - (b-1) r^k, geometric down to b - 1e-4.
PGrid make_pgrid(const PGridPolicy& policy = {});
PGrid make_pgrid(double b, std::size_t count = 64, double pmax = 256.0);
/// Default grid for psi's support.
PGrid default_pgrid(const PsiFunction& psi);

struct GlsNormReport {
  double value = 0.0;
  double argmax_p = 1.0;
  std::vector<std::pair<double, double>> ratio_profile;  // (p, |f|_p / psi(p))
  double go_limit_estimate = 0.0;
  double truncation_pmax = 256.0;
  bool overflow = false;  // some |f|_p diverges (or is resolution-floor dominated) on the grid
};

void to_json(nlohmann::json& j, const GlsNormReport& r);

/// Assembles a report from norm values n_i at the grid points; non-finite ratios set overflow.
GlsNormReport assemble_gls_report(const PGrid& grid, const PsiFunction& psi, std::span<const double> norms);

GlsNormReport gls_norm(const PeriodicFunction& f, const PsiFunction& psi, const PGrid& grid);

/// psi^A(p) = max over the family of |h|_p, log-log interpolated between grid points.
/// Throws std::invalid_argument for an empty family.
PsiFunction natural_psi(std::span<const PeriodicFunction> family, const PGrid& grid);

/// sup over the grid of s^{1/p} / psi(p), s = delta / (2 pi). Throws unless 0 < delta <= 2 pi.
double fundamental_function(const PsiFunction& psi, double delta, const PGrid& grid);
double fundamental_function(const PsiFunction& psi, double delta);

/// Least-squares slope of ln(value) against ln p (b = inf) or -ln(b - p) (finite b) over
/// the top decile of the grid. Zero or non-finite values give NaN.
double tail_log_slope(const PGrid& grid, std::span<const double> values);

enum class PsiOrdering { kMuchLess, kNotComparableOrEqual };
std::string to_string(PsiOrdering o);

/// kMuchLess when psi(p)/nu(p) -> 0 as p -> b: the ratio decreases over the top decile and
/// either drops below 1e-3 of its first tail value or has log-log tail slope <= -0.1.
/// Throws std::invalid_argument for different supports.
PsiOrdering compare_psi(const PsiFunction& nu, const PsiFunction& psi);
PsiOrdering compare_psi(const PsiFunction& nu, const PsiFunction& psi, const PGrid& grid);

/// Thresholds of the G° diagnostic.
struct GoThresholds {
  double in_fraction = 0.1;    // tail maximum below this share of the peak -> in
  double not_in_fraction = 0.5;  // tail maximum at least this share of the peak ...
  double decay_slope = -0.1;   // tail log-slope at or below this -> in
  double flat_slope = -0.05;   // ... and tail log-slope at least this -> not in
};

enum class GoVerdict { kInGo, kBoundary, kNotInGo };
std::string to_string(GoVerdict v);

struct GoMembership {
  GoVerdict verdict = GoVerdict::kBoundary;
  double value = 0.0;
  double go_limit_estimate = 0.0;
  double tail_slope = 0.0;
};

GoMembership go_membership(const GlsNormReport& report, const PGrid& grid, const GoThresholds& t = {});
GoMembership go_membership(const PeriodicFunction& f, const PsiFunction& psi, const PGrid& grid,
                           const GoThresholds& t = {});

/// Probes of the psi-function axioms on a grid.
struct PsiDiagnostics {
  double min_value = 0.0;
  bool positive = false;
  bool continuous = false;  // relative change below 1e-3 under a 1e-6 relative step in p
  bool blows_up = false;    // increasing toward b over the top decile
};
PsiDiagnostics check_psi(const PsiFunction& psi, const PGrid& grid);

}  // namespace glslab

#endif  // GLSLAB_PSI_SPACE_HPP_
