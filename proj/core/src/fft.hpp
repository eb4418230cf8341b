#ifndef GLSLAB_SRC_FFT_HPP_
#define GLSLAB_SRC_FFT_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace glslab::detail {

// X_k = sum_j x_j exp(-2 pi i j k / N) for k = 0..N/2.
std::vector<std::complex<double>> real_dft(std::span<const double> x);

// Inverse of real_dft without the 1/N factor: x_j = sum_{k=0}^{N-1} X_k exp(2 pi i j k / N),
// the upper half taken from Hermitian symmetry. The imaginary parts of X_0 and X_{N/2} are ignored.
std::vector<double> real_idft(std::span<const std::complex<double>> half_spectrum, std::size_t n);

}  // namespace glslab::detail

#endif  // GLSLAB_SRC_FFT_HPP_
