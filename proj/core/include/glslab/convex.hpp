#ifndef GLSLAB_CONVEX_HPP_
#define GLSLAB_CONVEX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace glslab {

/// A function sampled at increasing abscissae.
struct ConvexSamples {
  std::vector<double> xs;
  std::vector<double> ys;
};

/// Throws std::invalid_argument unless xs is strictly increasing, sizes match, and there are >= 2 samples.
void validate(const ConvexSamples& f);

/// Slope increments all >= -tol * (1 + |left slope| + |right slope|).
bool is_convex(const ConvexSamples& f, double tol = 1e-9);

/// Lower convex envelope evaluated back on f.xs.
ConvexSamples lower_convex_envelope(const ConvexSamples& f);

/// Piecewise-linear interpolation; linear extrapolation from the end segments.
double interpolate(const ConvexSamples& f, double x);

/// Bound on the piecewise-linear interpolation error, max |second difference| / 8.
double interpolation_tolerance(const ConvexSamples& f);

struct ConjugateValue {
  double value = 0.0;
  double argmax = 0.0;
  bool boundary = false;  // the sup is attained at the first or last sample
};

/// f*(y) = max_i (x_i y - f(x_i)) evaluated in O(log n) on the lower hull of the samples.
class Conjugate {
 public:
  explicit Conjugate(const ConvexSamples& f);
  ConjugateValue operator()(double y) const;
  /// Slope range [lo, hi] for which the maximizer is interior.
  double interior_low() const { return slopes_.empty() ? 0.0 : slopes_.front(); }
  double interior_high() const { return slopes_.empty() ? 0.0 : slopes_.back(); }

 private:
  std::vector<double> hx_;
  std::vector<double> hy_;
  std::vector<double> slopes_;  // slope of hull segment i -> i+1, increasing
};

struct LegendreResult {
  ConvexSamples conjugate;
  std::vector<double> argmax;
  std::vector<char> boundary;
  bool boundary_attained = false;
};

/// Discrete Legendre-Fenchel transform on `ygrid` (increasing), convexified.
LegendreResult legendre(const ConvexSamples& f, std::span<const double> ygrid);

}  // namespace glslab

#endif  // GLSLAB_CONVEX_HPP_
