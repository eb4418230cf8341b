#ifndef GLSLAB_QUADRATURE_HPP_
#define GLSLAB_QUADRATURE_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "glslab/periodic_field.hpp"

namespace glslab {

enum class QuadratureRule {
  kGrid,          // periodic trapezoid rule on the sampling grid
  kSingularZone,  // trapezoid away from x = 0, exact log-substitution panels near it
  kRootSplit,     // tanh-sinh panels between the local minima of |f| of a band-limited f
};

/// Nodes, normalized weights (summing to 1) and function values at the nodes.
struct QuadratureNodes {
  QuadratureRule rule = QuadratureRule::kGrid;
  std::vector<double> x;
  std::vector<double> w;
  std::vector<double> v;
  /// Nodes adjacent to the resolution floor |x| = e^{-700} of the singular rule.
  std::vector<std::size_t> floor_nodes;
};

/// Picks the rule for f (singular part -> kSingularZone, band-limited with a non-constant
/// interpolant -> kRootSplit, otherwise kGrid) and evaluates f at its nodes.
QuadratureNodes quadrature_nodes(const PeriodicFunction& f);

/// Grid nodes only, whatever f looks like.
QuadratureNodes grid_nodes(const PeriodicFunction& f);

/// Tanh-sinh panels between consecutive local minima of |r| (roots included).
/// `scan_size` is the minimal number of uniform points used to locate the minima.
QuadratureNodes root_split_nodes(const TrigPolynomial& r, std::size_t scan_size = 0);

/// Fixed tanh-sinh rule on [a, b] appended to `out` (weights scaled by `scale`).
void append_tanh_sinh(double a, double b, double scale, std::vector<double>& x, std::vector<double>& w);

struct PowerMean {
  double value = 0.0;
  bool floor_limited = false;
};

/// (sum_q w_q |v_q|^p)^{1/p}, computed with max-scaling.
PowerMean power_mean(const QuadratureNodes& q, double p);
PowerMean power_mean(std::span<const double> w, std::span<const double> v, double p,
                     std::span<const std::size_t> floor_nodes = {});

/// log sum_q w_q exp(log_phi(|v_q|)), computed with a log-sum-exp shift.
/// log_phi may return -inf (zero contribution).
double log_integral(const QuadratureNodes& q, const std::function<double(double)>& log_phi);

}  // namespace glslab

#endif  // GLSLAB_QUADRATURE_HPP_
