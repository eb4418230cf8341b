#include "glslab/periodic_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "fft.hpp"
#include "glslab/quadrature.hpp"
#include "zone.hpp"

namespace glslab {
namespace {

using cplx = std::complex<double>;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void require_same_grid(const PeriodicFunction& a, const PeriodicFunction& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("PeriodicFunction: grids differ");
}

SingularPart add_parts(const SingularPart& a, const SingularPart& b, double sb) {
  if (!a && !b) return {};
  if (!b) return a;
  if (!a) return [b, sb](double x) { return sb * b(x); };
  return [a, b, sb](double x) { return a(x) + sb * b(x); };
}

// Half spectrum of the samples, phase-corrected for the grid offset: c_k for k = 0..N/2.
std::vector<cplx> grid_coefficients(const PeriodicFunction& f) {
  auto spec = detail::real_dft(f.samples());
  const double n = static_cast<double>(f.size());
  const double o = f.grid().offset();
  for (std::size_t k = 0; k < spec.size(); ++k) {
    spec[k] *= std::polar(1.0 / n, -static_cast<double>(k) * o);
  }
  return spec;
}

std::vector<double> samples_from_coefficients(const PeriodicGrid& grid, std::vector<cplx> half) {
  const std::size_t n = grid.size();
  half.resize(n / 2 + 1, cplx(0.0));
  const double o = grid.offset();
  for (std::size_t k = 0; k < half.size(); ++k) {
    half[k] *= std::polar(1.0, static_cast<double>(k) * o);
  }
  return detail::real_idft(half, n);
}

}  // namespace

// ---------------------------------------------------------------- PeriodicGrid

PeriodicGrid::PeriodicGrid(std::size_t size, double offset) : size_(size), offset_(offset) {
  if (size < 8 || !is_power_of_two(size)) {
    throw std::invalid_argument("PeriodicGrid: size must be a power of two >= 8, got " +
                                std::to_string(size));
  }
  if (!(offset >= 0.0) || !(offset < kTwoPi / static_cast<double>(size))) {
    throw std::invalid_argument("PeriodicGrid: offset must lie in [0, 2*pi/N)");
  }
}

PeriodicGrid PeriodicGrid::midpoint(std::size_t size) {
  if (size == 0) throw std::invalid_argument("PeriodicGrid: size must be positive");
  return PeriodicGrid(size, kPi / static_cast<double>(size));
}

std::vector<double> PeriodicGrid::nodes() const {
  std::vector<double> x(size_);
  for (std::size_t j = 0; j < size_; ++j) x[j] = node(j);
  return x;
}

// -------------------------------------------------------------- TrigPolynomial

TrigPolynomial::TrigPolynomial(std::vector<cplx> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty() || coefficients_.size() % 2 == 0) {
    throw std::invalid_argument("TrigPolynomial: coefficient vector must have odd length 2n+1");
  }
  const int n = degree();
  double scale = 0.0;
  for (const auto& c : coefficients_) scale = std::max(scale, std::abs(c));
  const double tol = 1e-12 * std::max(scale, 1e-300);
  for (int k = 0; k <= n; ++k) {
    const cplx& plus = coefficients_[static_cast<std::size_t>(n + k)];
    const cplx& minus = coefficients_[static_cast<std::size_t>(n - k)];
    if (std::abs(plus - std::conj(minus)) > tol) {
      throw std::invalid_argument("TrigPolynomial: coefficients are not conjugate-symmetric");
    }
    const cplx sym = 0.5 * (plus + std::conj(minus));
    coefficients_[static_cast<std::size_t>(n + k)] = sym;
    coefficients_[static_cast<std::size_t>(n - k)] = std::conj(sym);
  }
  coefficients_[static_cast<std::size_t>(n)] = coefficients_[static_cast<std::size_t>(n)].real();
}

TrigPolynomial TrigPolynomial::from_real_params(std::span<const double> params) {
  if (params.empty() || params.size() % 2 == 0) {
    throw std::invalid_argument("TrigPolynomial: real parameter vector must have length 2n+1");
  }
  const std::size_t n = params.size() / 2;
  std::vector<cplx> c(2 * n + 1);
  c[n] = params[0];
  for (std::size_t k = 1; k <= n; ++k) {
    const cplx ck(0.5 * params[k], -0.5 * params[n + k]);
    c[n + k] = ck;
    c[n - k] = std::conj(ck);
  }
  return TrigPolynomial(std::move(c));
}

std::vector<double> TrigPolynomial::real_params() const {
  const std::size_t n = static_cast<std::size_t>(degree());
  std::vector<double> params(2 * n + 1);
  params[0] = coefficients_[n].real();
  for (std::size_t k = 1; k <= n; ++k) {
    params[k] = 2.0 * coefficients_[n + k].real();
    params[n + k] = -2.0 * coefficients_[n + k].imag();
  }
  return params;
}

cplx TrigPolynomial::coefficient(int k) const {
  const int n = degree();
  if (k < -n || k > n) return 0.0;
  return coefficients_[static_cast<std::size_t>(n + k)];
}

double TrigPolynomial::operator()(double x) const {
  const int n = degree();
  const cplx z = std::polar(1.0, x);
  cplx acc = 0.0;
  for (int k = n; k >= 1; --k) acc = (acc + coefficients_[static_cast<std::size_t>(n + k)]) * z;
  return coefficients_[static_cast<std::size_t>(n)].real() + 2.0 * acc.real();
}

std::vector<double> TrigPolynomial::evaluate(std::span<const double> xs) const {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = (*this)(xs[i]);
  return out;
}

TrigPolynomial TrigPolynomial::hadamard(const TrigPolynomial& other) const {
  const int n = std::min(degree(), other.degree());
  std::vector<cplx> c(static_cast<std::size_t>(2 * n + 1));
  for (int k = -n; k <= n; ++k) c[static_cast<std::size_t>(n + k)] = coefficient(k) * other.coefficient(k);
  return TrigPolynomial(std::move(c));
}

// ------------------------------------------------------------ PeriodicFunction

PeriodicFunction::PeriodicFunction(PeriodicGrid grid, std::vector<double> samples, SingularPart singular)
    : grid_(grid), samples_(std::move(samples)), singular_(std::move(singular)) {
  if (samples_.size() != grid_.size()) {
    throw std::invalid_argument("PeriodicFunction: sample count does not match grid size");
  }
  for (double s : samples_) {
    if (!std::isfinite(s)) throw std::invalid_argument("PeriodicFunction: non-finite sample");
  }
  if (singular_ && grid_.offset() <= 0.0) {
    throw std::invalid_argument("PeriodicFunction: a singular part needs a grid with positive offset");
  }
}

PeriodicFunction PeriodicFunction::zero(const PeriodicGrid& grid) {
  return PeriodicFunction(grid, std::vector<double>(grid.size(), 0.0));
}

PeriodicFunction PeriodicFunction::from_polynomial(const PeriodicGrid& grid, const TrigPolynomial& g) {
  const std::size_t n = static_cast<std::size_t>(g.degree());
  if (2 * n + 1 > grid.size()) throw std::invalid_argument("from_polynomial: degree too large for grid");
  std::vector<cplx> half(n + 1);
  for (std::size_t k = 0; k <= n; ++k) half[k] = g.coefficient(static_cast<int>(k));
  return PeriodicFunction(grid, samples_from_coefficients(grid, std::move(half)));
}

PeriodicFunction PeriodicFunction::operator-() const { return -1.0 * *this; }

PeriodicFunction operator+(const PeriodicFunction& a, const PeriodicFunction& b) {
  require_same_grid(a, b);
  std::vector<double> s(a.size());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = a.samples_[j] + b.samples_[j];
  return PeriodicFunction(a.grid_, std::move(s), add_parts(a.singular_, b.singular_, 1.0));
}

PeriodicFunction operator-(const PeriodicFunction& a, const PeriodicFunction& b) {
  require_same_grid(a, b);
  std::vector<double> s(a.size());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = a.samples_[j] - b.samples_[j];
  return PeriodicFunction(a.grid_, std::move(s), add_parts(a.singular_, b.singular_, -1.0));
}

PeriodicFunction operator*(double c, const PeriodicFunction& f) {
  std::vector<double> s(f.samples_);
  for (double& v : s) v *= c;
  SingularPart part;
  if (f.singular_) part = [inner = f.singular_, c](double x) { return c * inner(x); };
  return PeriodicFunction(f.grid_, std::move(s), std::move(part));
}

PeriodicFunction PeriodicFunction::minus(const TrigPolynomial& g) const {
  const PeriodicFunction gs = from_polynomial(grid_, g);
  std::vector<double> s(samples_);
  for (std::size_t j = 0; j < s.size(); ++j) s[j] -= gs.samples_[j];
  return PeriodicFunction(grid_, std::move(s), singular_);
}

// ------------------------------------------------------------------ operations

LpNormDetail lp_norm_detail(const PeriodicFunction& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (!std::isfinite(p)) throw std::invalid_argument("lp_norm: p must be finite (use sup_norm)");
  const QuadratureNodes q = quadrature_nodes(f);
  const PowerMean m = power_mean(q, p);
  return {m.value, m.floor_limited};
}

double lp_norm(const PeriodicFunction& f, double p) { return lp_norm_detail(f, p).value; }

double sup_norm(const PeriodicFunction& f) {
  double m = 0.0;
  for (double s : f.samples()) m = std::max(m, std::abs(s));
  return m;
}

PeriodicFunction translate(const PeriodicFunction& f, double t) {
  if (t == 0.0) return f;
  const std::size_t n = f.size();
  const double h = f.grid().spacing();
  const double shift_cells = t / h;
  const double rounded = std::round(shift_cells);
  if (std::abs(shift_cells - rounded) < 1e-12 * std::max(1.0, std::abs(shift_cells))) {
    // Grid-aligned: an exact cyclic roll, g_j = f_{j - m}.
    const auto m = static_cast<long long>(rounded);
    const auto nn = static_cast<long long>(n);
    std::vector<double> s(n);
    for (long long j = 0; j < nn; ++j) s[static_cast<std::size_t>(j)] = f.samples()[static_cast<std::size_t>(((j - m) % nn + nn) % nn)];
    return PeriodicFunction(f.grid(), std::move(s));
  }
  auto spec = detail::real_dft(f.samples());
  for (std::size_t k = 0; k < spec.size(); ++k) spec[k] *= std::polar(1.0, -static_cast<double>(k) * t);
  auto s = detail::real_idft(spec, n);
  for (double& v : s) v /= static_cast<double>(n);
  return PeriodicFunction(f.grid(), std::move(s));
}

PeriodicFunction derivative(const PeriodicFunction& f, int r) {
  if (r < 0) throw std::invalid_argument("derivative: order must be >= 0");
  if (r == 0) return f;
  const std::size_t n = f.size();
  auto spec = detail::real_dft(f.samples());
  const std::size_t nyquist = n / 2;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    if (k == nyquist && r % 2 == 1) {
      spec[k] = 0.0;
      continue;
    }
    spec[k] *= std::pow(cplx(0.0, static_cast<double>(k)), r);
  }
  auto s = detail::real_idft(spec, n);
  for (double& v : s) v /= static_cast<double>(n);
  return PeriodicFunction(f.grid(), std::move(s));
}

TrigPolynomial fourier_truncate(const PeriodicFunction& f, int n) {
  if (n < 0) throw std::invalid_argument("fourier_truncate: degree must be >= 0");
  if (2 * static_cast<std::size_t>(n) + 1 > f.size()) {
    throw std::invalid_argument("fourier_truncate: degree too large for grid");
  }
  auto half = grid_coefficients(f);
  half.resize(static_cast<std::size_t>(n) + 1);
  if (f.has_singular_part()) {
    // Replace the trapezoid contribution of the cells around x = 0 by the exact zone rule.
    const detail::SingularZone zone = detail::singular_zone(f);
    const double inv_n = 1.0 / static_cast<double>(f.size());
    for (std::size_t j : zone.replaced) {
      const double x = f.grid().node(j);
      const double v = f.samples()[j] * inv_n;
      for (int k = 0; k <= n; ++k) half[static_cast<std::size_t>(k)] -= std::polar(v, -k * x);
    }
    for (std::size_t q = 0; q < zone.x.size(); ++q) {
      const cplx step = std::polar(1.0, -zone.x[q]);
      cplx z = zone.w[q] * zone.v[q];
      for (int k = 0; k <= n; ++k) {
        half[static_cast<std::size_t>(k)] += z;
        z *= step;
      }
    }
  }
  std::vector<cplx> c(2 * static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(n + k)] = half[static_cast<std::size_t>(k)];
    c[static_cast<std::size_t>(n - k)] = std::conj(half[static_cast<std::size_t>(k)]);
  }
  c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n)].real();
  return TrigPolynomial(std::move(c));
}

PeriodicFunction convolve(const PeriodicFunction& f, const TrigPolynomial& kernel) {
  const int m = kernel.degree();
  if (2 * static_cast<std::size_t>(m) + 1 > f.size()) {
    throw std::invalid_argument("convolve: kernel degree not representable on the grid");
  }
  return PeriodicFunction::from_polynomial(f.grid(), fourier_truncate(f, m).hadamard(kernel));
}

int band_limited_degree(const PeriodicFunction& f) {
  const auto half = grid_coefficients(f);
  double amax = 0.0;
  for (const auto& c : half) amax = std::max(amax, std::abs(c));
  if (amax == 0.0) return 0;
  int top = 0;
  for (std::size_t k = 0; k < half.size(); ++k) {
    if (std::abs(half[k]) > 1e-13 * amax) top = static_cast<int>(k);
  }
  return static_cast<std::size_t>(top) <= f.size() / 4 ? top : -1;
}

}  // namespace glslab
