#ifndef GLSLAB_PERIODIC_FIELD_HPP_
#define GLSLAB_PERIODIC_FIELD_HPP_

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace glslab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Uniform grid x_j = offset + 2*pi*j/N on the circle.
class PeriodicGrid {
 public:
  /// Throws std::invalid_argument unless N >= 8 is a power of two and 0 <= offset < 2*pi/N.
  explicit PeriodicGrid(std::size_t size, double offset = 0.0);

  /// Grid shifted by half a cell, so that no node sits on x = 0.
  static PeriodicGrid midpoint(std::size_t size);

  std::size_t size() const { return size_; }
  double offset() const { return offset_; }
  double spacing() const { return kTwoPi / static_cast<double>(size_); }
  double node(std::size_t j) const { return offset_ + spacing() * static_cast<double>(j); }
  std::vector<double> nodes() const;

  bool operator==(const PeriodicGrid&) const = default;

 private:
  std::size_t size_;
  double offset_;
};

/// Real trigonometric polynomial sum_{|k|<=n} c_k e^{ikx} with c_{-k} = conj(c_k).
class TrigPolynomial {
 public:
  TrigPolynomial() : coefficients_{0.0} {}

  /// Coefficients indexed k = -n..n (length 2n+1). Conjugate symmetry is checked to a relative
  /// tolerance of 1e-12 and then imposed exactly.
  explicit TrigPolynomial(std::vector<std::complex<double>> coefficients);

  /// Real parametrization g = a_0 + sum a_k cos(kx) + b_k sin(kx), laid out as
  /// [a_0, a_1..a_n, b_1..b_n] (length 2n+1).
  static TrigPolynomial from_real_params(std::span<const double> params);
  std::vector<double> real_params() const;

  int degree() const { return static_cast<int>(coefficients_.size() / 2); }
  std::complex<double> coefficient(int k) const;
  std::span<const std::complex<double>> coefficients() const { return coefficients_; }

  double operator()(double x) const;
  std::vector<double> evaluate(std::span<const double> xs) const;

  /// Pointwise product of coefficient vectors (degree = min of the two degrees).
  TrigPolynomial hadamard(const TrigPolynomial& other) const;

 private:
  std::vector<std::complex<double>> coefficients_;
};

/// Exact evaluator of the non-smooth component of a sampled function near x = 0,
/// defined for x in (-pi, pi]. Empty when the function has no such component.
using SingularPart = std::function<double(double)>;

/// Samples of a 2*pi-periodic real function, optionally with an exact singular part at x = 0
/// that the quadrature resolves below the grid scale.
class PeriodicFunction {
 public:
  PeriodicFunction(PeriodicGrid grid, std::vector<double> samples, SingularPart singular = {});

  static PeriodicFunction zero(const PeriodicGrid& grid);
  /// Throws std::invalid_argument when 2*degree+1 > N.
  static PeriodicFunction from_polynomial(const PeriodicGrid& grid, const TrigPolynomial& g);

  const PeriodicGrid& grid() const { return grid_; }
  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  bool has_singular_part() const { return static_cast<bool>(singular_); }
  const SingularPart& singular_part() const { return singular_; }

  /// Same samples without the singular annotation.
  PeriodicFunction regular_view() const { return PeriodicFunction(grid_, samples_); }

  PeriodicFunction operator-() const;
  friend PeriodicFunction operator+(const PeriodicFunction& a, const PeriodicFunction& b);
  friend PeriodicFunction operator-(const PeriodicFunction& a, const PeriodicFunction& b);
  friend PeriodicFunction operator*(double c, const PeriodicFunction& f);

  /// f - g for a trigonometric polynomial g; the singular part is kept.
  PeriodicFunction minus(const TrigPolynomial& g) const;

 private:
  PeriodicGrid grid_;
  std::vector<double> samples_;
  SingularPart singular_;
};

/// (integral |f|^p dmu)^{1/p}, dmu = dx/(2 pi). Throws std::invalid_argument for p < 1 or p = inf.
double lp_norm(const PeriodicFunction& f, double p);

/// lp_norm plus a flag raised when the integral is dominated by the near-singularity
/// resolution floor (|f|^p not integrable or barely so).
struct LpNormDetail {
  double value = 0.0;
  bool floor_limited = false;
};
LpNormDetail lp_norm_detail(const PeriodicFunction& f, double p);

double sup_norm(const PeriodicFunction& f);

/// U_t[f](x) = f(x - t). Exact for band-limited f; the singular part is dropped.
PeriodicFunction translate(const PeriodicFunction& f, double t);

/// Spectral derivative of order r; the singular part is dropped. Throws for r < 0.
PeriodicFunction derivative(const PeriodicFunction& f, int r);

/// Fourier coefficients c_k = integral f e^{-ikx} dmu for |k| <= n.
/// Throws std::invalid_argument when 2n+1 > N.
TrigPolynomial fourier_truncate(const PeriodicFunction& f, int n);

/// (k * f)(x) = integral f(x - t) k(t) dmu(t) for a kernel given by its coefficients.
PeriodicFunction convolve(const PeriodicFunction& f, const TrigPolynomial& kernel);

/// Degree of the trigonometric interpolant when it is band-limited to degree <= N/4
/// (coefficients above that degree below 1e-13 of the largest), otherwise -1.
int band_limited_degree(const PeriodicFunction& f);

}  // namespace glslab

#endif  // GLSLAB_PERIODIC_FIELD_HPP_
