#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace glslab::detail {
namespace {

// The FFTW planner is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t bytes) : data(fftw_malloc(bytes)) {
    if (data == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  void* data;
};

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {
    if (plan_ == nullptr) throw std::runtime_error("FFTW plan creation failed");
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

}  // namespace

std::vector<std::complex<double>> real_dft(std::span<const double> x) {
  const std::size_t n = x.size();
  const std::size_t m = n / 2 + 1;
  FftwBuffer in(sizeof(double) * n);
  FftwBuffer out(sizeof(fftw_complex) * m);
  auto* pin = static_cast<double*>(in.data);
  auto* pout = static_cast<fftw_complex*>(out.data);
  fftw_plan raw;
  {
    std::lock_guard lock(planner_mutex());
    raw = fftw_plan_dft_r2c_1d(static_cast<int>(n), pin, pout, FFTW_ESTIMATE);
  }
  Plan plan(raw);
  std::copy(x.begin(), x.end(), pin);
  plan.execute();
  std::vector<std::complex<double>> result(m);
  for (std::size_t k = 0; k < m; ++k) result[k] = {pout[k][0], pout[k][1]};
  return result;
}

std::vector<double> real_idft(std::span<const std::complex<double>> half_spectrum, std::size_t n) {
  const std::size_t m = n / 2 + 1;
  if (half_spectrum.size() != m) throw std::invalid_argument("real_idft: spectrum length mismatch");
  FftwBuffer in(sizeof(fftw_complex) * m);
  FftwBuffer out(sizeof(double) * n);
  auto* pin = static_cast<fftw_complex*>(in.data);
  auto* pout = static_cast<double*>(out.data);
  fftw_plan raw;
  {
    std::lock_guard lock(planner_mutex());
    raw = fftw_plan_dft_c2r_1d(static_cast<int>(n), pin, pout, FFTW_ESTIMATE);
  }
  Plan plan(raw);
  for (std::size_t k = 0; k < m; ++k) {
    pin[k][0] = half_spectrum[k].real();
    pin[k][1] = half_spectrum[k].imag();
  }
  pin[0][1] = 0.0;
  if (n % 2 == 0) pin[m - 1][1] = 0.0;
  plan.execute();
  return std::vector<double>(pout, pout + n);
}

}  // namespace glslab::detail
