#include "glslab/convex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace glslab {
namespace {

// Indices of the lower convex hull (monotone chain).
std::vector<std::size_t> lower_hull(const ConvexSamples& f) {
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i < f.xs.size(); ++i) {
    while (h.size() >= 2) {
      const std::size_t a = h[h.size() - 2];
      const std::size_t b = h.back();
      const double cross = (f.xs[b] - f.xs[a]) * (f.ys[i] - f.ys[a]) - (f.ys[b] - f.ys[a]) * (f.xs[i] - f.xs[a]);
      if (cross <= 0.0) {
        h.pop_back();
      } else {
        break;
      }
    }
    h.push_back(i);
  }
  return h;
}

}  // namespace

void validate(const ConvexSamples& f) {
  if (f.xs.size() != f.ys.size()) throw std::invalid_argument("ConvexSamples: xs and ys differ in length");
  if (f.xs.size() < 2) throw std::invalid_argument("ConvexSamples: need at least two samples");
  for (std::size_t i = 0; i < f.xs.size(); ++i) {
    if (!std::isfinite(f.xs[i]) || !std::isfinite(f.ys[i])) throw std::invalid_argument("ConvexSamples: non-finite sample");
    if (i > 0 && !(f.xs[i] > f.xs[i - 1])) throw std::invalid_argument("ConvexSamples: xs must increase strictly");
  }
}

bool is_convex(const ConvexSamples& f, double tol) {
  validate(f);
  for (std::size_t i = 1; i + 1 < f.xs.size(); ++i) {
    const double left = (f.ys[i] - f.ys[i - 1]) / (f.xs[i] - f.xs[i - 1]);
    const double right = (f.ys[i + 1] - f.ys[i]) / (f.xs[i + 1] - f.xs[i]);
    if (right - left < -tol * (1.0 + std::abs(left) + std::abs(right))) return false;
  }
  return true;
}

ConvexSamples lower_convex_envelope(const ConvexSamples& f) {
  validate(f);
  const auto h = lower_hull(f);
  ConvexSamples out{f.xs, std::vector<double>(f.xs.size())};
  std::size_t seg = 0;
  for (std::size_t i = 0; i < f.xs.size(); ++i) {
    while (seg + 2 < h.size() && f.xs[h[seg + 1]] < f.xs[i]) ++seg;
    const std::size_t a = h[seg];
    const std::size_t b = h[std::min(seg + 1, h.size() - 1)];
    if (a == b || i == a) {
      out.ys[i] = f.ys[a];
    } else {
      const double t = (f.xs[i] - f.xs[a]) / (f.xs[b] - f.xs[a]);
      out.ys[i] = std::min(f.ys[i], f.ys[a] + t * (f.ys[b] - f.ys[a]));
    }
  }
  return out;
}

double interpolate(const ConvexSamples& f, double x) {
  validate(f);
  auto it = std::upper_bound(f.xs.begin(), f.xs.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - f.xs.begin());
  hi = std::clamp<std::size_t>(hi, 1, f.xs.size() - 1);
  const std::size_t lo = hi - 1;
  const double t = (x - f.xs[lo]) / (f.xs[hi] - f.xs[lo]);
  return f.ys[lo] + t * (f.ys[hi] - f.ys[lo]);
}

double interpolation_tolerance(const ConvexSamples& f) {
  validate(f);
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < f.xs.size(); ++i) {
    const double h1 = f.xs[i] - f.xs[i - 1];
    const double h2 = f.xs[i + 1] - f.xs[i];
    // Second divided difference times the local squared step.
    const double d2 = 2.0 * ((f.ys[i + 1] - f.ys[i]) / h2 - (f.ys[i] - f.ys[i - 1]) / h1) / (h1 + h2);
    worst = std::max(worst, std::abs(d2) * std::max(h1, h2) * std::max(h1, h2));
  }
  return worst / 8.0;
}

Conjugate::Conjugate(const ConvexSamples& f) {
  validate(f);
  const auto h = lower_hull(f);
  for (std::size_t i : h) {
    hx_.push_back(f.xs[i]);
    hy_.push_back(f.ys[i]);
  }
  for (std::size_t i = 0; i + 1 < hx_.size(); ++i) slopes_.push_back((hy_[i + 1] - hy_[i]) / (hx_[i + 1] - hx_[i]));
}

ConjugateValue Conjugate::operator()(double y) const {
  // Maximizer: the first hull vertex whose right-hand slope is >= y.
  const std::size_t j = static_cast<std::size_t>(std::lower_bound(slopes_.begin(), slopes_.end(), y) - slopes_.begin());
  ConjugateValue out;
  out.argmax = hx_[j];
  out.value = hx_[j] * y - hy_[j];
  out.boundary = (j == 0 && (slopes_.empty() || y < slopes_.front())) || j + 1 == hx_.size();
  return out;
}

LegendreResult legendre(const ConvexSamples& f, std::span<const double> ygrid) {
  const Conjugate conj(f);
  LegendreResult out;
  out.conjugate.xs.assign(ygrid.begin(), ygrid.end());
  for (double y : ygrid) {
    const ConjugateValue v = conj(y);
    out.conjugate.ys.push_back(v.value);
    out.argmax.push_back(v.argmax);
    out.boundary.push_back(v.boundary ? 1 : 0);
    out.boundary_attained = out.boundary_attained || v.boundary;
  }
  if (out.conjugate.xs.size() >= 2) out.conjugate = lower_convex_envelope(out.conjugate);
  return out;
}

}  // namespace glslab
