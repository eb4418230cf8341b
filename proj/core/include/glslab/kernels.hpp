#ifndef GLSLAB_KERNELS_HPP_
#define GLSLAB_KERNELS_HPP_

#include <string>
#include <string_view>

#include "glslab/periodic_field.hpp"

namespace glslab {

enum class KernelKind { kFejer, kDirichlet, kJackson, kValleePoussin, kFourier };

std::string to_string(KernelKind kind);
KernelKind parse_kernel_kind(std::string_view name);

/// Summation kernel given by its Fourier coefficients.
struct Kernel {
  KernelKind kind = KernelKind::kFejer;
  int n = 0;  // index of the kernel in its family (not always its degree)
  TrigPolynomial coefficients;

  int degree() const { return coefficients.degree(); }
};

/// Fejer F_n: 1 - |k|/(n+1). Dirichlet D_n and Fourier S_n: 1 on |k| <= n.
/// Jackson J_n (n >= 1): normalized square of F_m, m = floor(n/2), degree 2m <= n.
/// Vallee Poussin V_n (n >= 1): 2 F_{2n-1} - F_{n-1}, degree 2n-1, equal to 1 on |k| <= n.
/// Throws std::invalid_argument for invalid indices.
Kernel kernel_build(KernelKind kind, int n);

PeriodicFunction convolve(const PeriodicFunction& f, const Kernel& k);

/// Kernel values on a grid.
PeriodicFunction sample_kernel(const Kernel& k, const PeriodicGrid& grid);

}  // namespace glslab

#endif  // GLSLAB_KERNELS_HPP_
