#ifndef GLSLAB_SOBOLEV_HPP_
#define GLSLAB_SOBOLEV_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "glslab/periodic_field.hpp"
#include "glslab/psi_space.hpp"

namespace glslab {

inline constexpr int kMaxSobolevOrder = 8;

/// (|f|_p^p + |f^(r)|_p^p)^{1/p}; r = 0 gives |f|_p. Throws for r outside [0, 8] or p < 1.
double sobolev_norm(const PeriodicFunction& f, int r, double p);

/// sup over the grid of sobolev_norm(f, r, p) / psi(p). r = 0 is gls_norm.
GlsNormReport gw_norm(const PeriodicFunction& f, int r, const PsiFunction& psi, const PGrid& grid);

/// theta_n(q) = n^{-1/q} on q in (s1, s2); s2 = inf is cut at s_max.
struct ThetaFamily {
  int n = 1;
  double s1 = 4.0;
  double s2 = kInf;
  double s_max = 64.0;
};

/// `count` log-spaced points on [s1 (1 + 1e-3), min(s2, s_max)].
std::vector<double> make_qgrid(const ThetaFamily& fam, std::size_t count = 32);

/// max over the q-grid of |g|_q n^{1/q}.
double theta_norm(const PeriodicFunction& g, const ThetaFamily& fam, std::span<const double> qgrid);
double theta_norm(const PeriodicFunction& g, const ThetaFamily& fam);

struct Thm31Report {
  std::string function;
  int r = 0;
  int n = 0;
  double s1 = 0.0;
  double s2 = 0.0;
  double lhs = 0.0;           // ||f - J_n * f||_{G theta_n}
  double rhs_core = 0.0;      // n^{-r} ||f||_{GW_r psi} / phi(G psi, 1/n)
  double empirical_c3 = 0.0;  // lhs / rhs_core
  double b_eff = 0.0;         // support of psi actually used: min(b, s1)
  bool degenerate = false;    // rhs_core = 0
};

/// The psi support is cut to [1, min(b, s1)) so that p < b_eff <= s1 < q holds on every grid point.
/// Throws std::invalid_argument for odd n, n < 2, s1 <= 1 or s2 <= s1.
Thm31Report thm31_check(const PeriodicFunction& f, int r, const PsiFunction& psi, int n, const ThetaFamily& fam,
                        const std::string& label = "", std::size_t pgrid_count = 64);

struct Ineq36Report {
  int n = 0;
  int r = 0;
  double p = 2.0;
  double q = 8.0;
  double lhs = 0.0;  // |f - J_n * f|_q
  double rhs = 0.0;  // n^{-r} n^{1/p - 1/q} ||f||_{W^r_p}
  double ratio = 0.0;
};

/// The intermediate L_p -> L_q bound for the Jackson residual. Requires 1 <= p < q.
Ineq36Report inequality_36_check(const PeriodicFunction& f, int r, int n, double p, double q);

}  // namespace glslab

#endif  // GLSLAB_SOBOLEV_HPP_
