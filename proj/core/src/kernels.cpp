#include "glslab/kernels.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace glslab {
namespace {

std::vector<double> fejer_weights(int n) {
  std::vector<double> w(static_cast<std::size_t>(2 * n + 1));
  for (int k = -n; k <= n; ++k) w[static_cast<std::size_t>(k + n)] = 1.0 - std::abs(k) / (n + 1.0);
  return w;
}

TrigPolynomial from_weights(const std::vector<double>& w) {
  return TrigPolynomial(std::vector<std::complex<double>>(w.begin(), w.end()));
}

}  // namespace

std::string to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::kFejer: return "fejer";
    case KernelKind::kDirichlet: return "dirichlet";
    case KernelKind::kJackson: return "jackson";
    case KernelKind::kValleePoussin: return "vallee_poussin";
    case KernelKind::kFourier: return "fourier";
  }
  return "unknown";
}

KernelKind parse_kernel_kind(std::string_view name) {
  for (KernelKind k : {KernelKind::kFejer, KernelKind::kDirichlet, KernelKind::kJackson,
                       KernelKind::kValleePoussin, KernelKind::kFourier}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown kernel kind: " + std::string(name));
}

Kernel kernel_build(KernelKind kind, int n) {
  if (n < 0) throw std::invalid_argument("kernel_build: n must be >= 0");
  Kernel k;
  k.kind = kind;
  k.n = n;
  switch (kind) {
    case KernelKind::kFejer:
      k.coefficients = from_weights(fejer_weights(n));
      break;
    case KernelKind::kDirichlet:
    case KernelKind::kFourier:
      k.coefficients = from_weights(std::vector<double>(static_cast<std::size_t>(2 * n + 1), 1.0));
      break;
    case KernelKind::kJackson: {
      if (n < 1) throw std::invalid_argument("kernel_build: jackson needs n >= 1");
      const int m = n / 2;
      const auto a = fejer_weights(m);
      std::vector<double> sq(static_cast<std::size_t>(4 * m + 1), 0.0);
      for (int i = -m; i <= m; ++i) {
        for (int j = -m; j <= m; ++j) {
          sq[static_cast<std::size_t>(i + j + 2 * m)] += a[static_cast<std::size_t>(i + m)] * a[static_cast<std::size_t>(j + m)];
        }
      }
      const double c0 = sq[static_cast<std::size_t>(2 * m)];
      for (double& v : sq) v /= c0;
      k.coefficients = from_weights(sq);
      break;
    }
    case KernelKind::kValleePoussin: {
      if (n < 1) throw std::invalid_argument("kernel_build: vallee_poussin needs n >= 1");
      const int deg = 2 * n - 1;
      std::vector<double> w(static_cast<std::size_t>(2 * deg + 1));
      for (int j = -deg; j <= deg; ++j) {
        const double f2 = 1.0 - std::abs(j) / (2.0 * n);
        const double f1 = std::abs(j) <= n - 1 ? 1.0 - std::abs(j) / static_cast<double>(n) : 0.0;
        w[static_cast<std::size_t>(j + deg)] = 2.0 * f2 - f1;
      }
      k.coefficients = from_weights(w);
      break;
    }
  }
  return k;
}

PeriodicFunction convolve(const PeriodicFunction& f, const Kernel& k) { return convolve(f, k.coefficients); }

PeriodicFunction sample_kernel(const Kernel& k, const PeriodicGrid& grid) {
  return PeriodicFunction::from_polynomial(grid, k.coefficients);
}

}  // namespace glslab
