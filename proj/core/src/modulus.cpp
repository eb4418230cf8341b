#include "glslab/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace glslab {
namespace {

constexpr int kShiftCount = 128;

// Nonnegative half of the symmetric shift set; ||U_{-h} f - f|| = ||U_h f - f|| by
// translation invariance, so the negative half adds nothing.
std::vector<double> probe_shifts(double delta, double spacing) {
  std::vector<double> h;
  for (int i = kShiftCount / 2; i < kShiftCount; ++i) {
    h.push_back(delta * (2.0 * i - (kShiftCount - 1)) / (kShiftCount - 1));
  }
  for (int m = 1; m * spacing <= delta * (1.0 + 1e-12); ++m) h.push_back(m * spacing);
  std::sort(h.begin(), h.end());
  return h;
}

}  // namespace

double evaluate_norm(const PeriodicFunction& f, const NormSpec& norm) {
  return std::visit(
      [&f](const auto& spec) -> double {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, LpNormSpec>) {
          return std::isfinite(spec.p) ? lp_norm(f, spec.p) : sup_norm(f);
        } else if constexpr (std::is_same_v<T, SupNormSpec>) {
          return sup_norm(f);
        } else {
          return gls_norm(f, spec.psi, spec.grid).value;
        }
      },
      norm);
}

std::string norm_tag(const NormSpec& norm) {
  return std::visit(
      [](const auto& spec) -> std::string {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, LpNormSpec>) {
          if (!std::isfinite(spec.p)) return "p=inf";
          char buf[48];
          std::snprintf(buf, sizeof(buf), "p=%.12g", spec.p);
          return buf;
        } else if constexpr (std::is_same_v<T, SupNormSpec>) {
          return "p=inf";
        } else {
          return spec.psi.tag();
        }
      },
      norm);
}

ModulusValue modulus_detail(const PeriodicFunction& f, double delta, const NormSpec& norm) {
  if (!(delta >= 0.0) || delta > kTwoPi) throw std::invalid_argument("modulus: delta must lie in [0, 2 pi]");
  ModulusValue out;
  if (delta == 0.0) return out;
  const PeriodicFunction base = f.regular_view();
  const auto shifts = probe_shifts(delta, f.grid().spacing());
  double prev = 0.0;
  for (double h : shifts) {
    const double v = evaluate_norm(translate(base, h) - base, norm);
    out.band = std::max(out.band, std::abs(v - prev));
    prev = v;
    if (v > out.value) {
      out.value = v;
      out.argmax_shift = h;
    }
  }
  return out;
}

double modulus(const PeriodicFunction& f, double delta, const NormSpec& norm) {
  return modulus_detail(f, delta, norm).value;
}

ModulusProfile modulus_profile(const PeriodicFunction& f, std::span<const double> deltas, const NormSpec& norm) {
  ModulusProfile prof;
  prof.norm = norm_tag(norm);
  std::vector<std::size_t> order(deltas.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deltas[a] < deltas[b]; });
  prof.deltas.assign(deltas.begin(), deltas.end());
  prof.values.assign(deltas.size(), 0.0);
  prof.bands.assign(deltas.size(), 0.0);
  double running = 0.0;
  for (std::size_t i : order) {
    const ModulusValue m = modulus_detail(f, deltas[i], norm);
    running = std::max(running, m.value);
    prof.values[i] = running;
    prof.bands[i] = m.band;
  }
  return prof;
}

}  // namespace glslab
