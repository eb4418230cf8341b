#include "glslab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "zone.hpp"

namespace glslab {
namespace {

constexpr int kZoneCells = 2;         // cells replaced on each side of x = 0
constexpr int kStencil = 8;           // Lagrange stencil for the smooth remainder
constexpr double kFloorExponent = 700.0;  // zone integrals stop at |x| = e^{-700}
constexpr double kPanelWidth = 4.0;   // width of the Gauss-Legendre panels in t = -ln(x/L)

constexpr double kTanhSinhStep = 0.125;
constexpr int kTanhSinhHalf = 29;  // t in [-3.625, 3.625]

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Gauss-Legendre rule on [-1, 1] with 8 nodes.
void gauss8(std::vector<double>& nodes, std::vector<double>& weights) {
  using rule = boost::math::quadrature::gauss<double, 8>;
  const auto& a = rule::abscissa();
  const auto& w = rule::weights();
  nodes.clear();
  weights.clear();
  for (std::size_t i = 0; i < a.size(); ++i) {
    nodes.push_back(a[i]);
    weights.push_back(w[i]);
    if (a[i] != 0.0) {
      nodes.push_back(-a[i]);
      weights.push_back(w[i]);
    }
  }
}

}  // namespace

namespace detail {

SingularZone singular_zone(const PeriodicFunction& f) {
  if (!f.has_singular_part()) throw std::logic_error("singular_zone: function has no singular part");
  const PeriodicGrid& g = f.grid();
  const std::size_t n = g.size();
  const double h = g.spacing();
  const double o = g.offset();
  const SingularPart& sigma = f.singular_part();

  // Stencil indices N-4..N-1, 0..3 at unwrapped coordinates o-4h .. o+3h.
  std::array<std::size_t, kStencil> idx{};
  std::array<double, kStencil> xs{};
  std::array<double, kStencil> rho{};
  for (int s = 0; s < kStencil; ++s) {
    const int off = s - kStencil / 2;
    idx[static_cast<std::size_t>(s)] = static_cast<std::size_t>((off + static_cast<int>(n)) % static_cast<int>(n));
    xs[static_cast<std::size_t>(s)] = o + off * h;
    rho[static_cast<std::size_t>(s)] =
        f.samples()[idx[static_cast<std::size_t>(s)]] - sigma(xs[static_cast<std::size_t>(s)]);
  }
  auto remainder = [&](double x) {
    double acc = 0.0;
    for (int s = 0; s < kStencil; ++s) {
      double l = 1.0;
      for (int m = 0; m < kStencil; ++m) {
        if (m != s) l *= (x - xs[static_cast<std::size_t>(m)]) / (xs[static_cast<std::size_t>(s)] - xs[static_cast<std::size_t>(m)]);
      }
      acc += l * rho[static_cast<std::size_t>(s)];
    }
    return acc;
  };

  SingularZone zone;
  for (int j = 0; j < kZoneCells; ++j) {
    zone.replaced.push_back(static_cast<std::size_t>(j));
    zone.replaced.push_back(n - 1 - static_cast<std::size_t>(j));
  }

  std::vector<double> gl_x, gl_w;
  gauss8(gl_x, gl_w);
  const double right = o + (kZoneCells - 0.5) * h;
  const double left = (h - o) + (kZoneCells - 0.5) * h;
  for (int side = 0; side < 2; ++side) {
    const double len = side == 0 ? right : left;
    const double sign = side == 0 ? 1.0 : -1.0;
    const double t_end = kFloorExponent + std::log(len);
    const int panels = static_cast<int>(std::ceil(t_end / kPanelWidth));
    for (int p = 0; p < panels; ++p) {
      const double t0 = p * kPanelWidth;
      const double t1 = std::min(t_end, t0 + kPanelWidth);
      const double mid = 0.5 * (t0 + t1);
      const double half = 0.5 * (t1 - t0);
      for (std::size_t i = 0; i < gl_x.size(); ++i) {
        const double t = mid + half * gl_x[i];
        const double mag = len * std::exp(-t);
        const double x = sign * mag;
        if (p == panels - 1) zone.floor_nodes.push_back(zone.x.size());
        zone.x.push_back(x);
        zone.w.push_back(mag * half * gl_w[i] / kTwoPi);
        zone.v.push_back(sigma(x) + remainder(x));
      }
    }
  }
  return zone;
}

}  // namespace detail

QuadratureNodes grid_nodes(const PeriodicFunction& f) {
  QuadratureNodes q;
  q.rule = QuadratureRule::kGrid;
  q.x = f.grid().nodes();
  q.w.assign(f.size(), 1.0 / static_cast<double>(f.size()));
  q.v.assign(f.samples().begin(), f.samples().end());
  return q;
}

void append_tanh_sinh(double a, double b, double scale, std::vector<double>& x, std::vector<double>& w) {
  const double len = b - a;
  for (int k = -kTanhSinhHalf; k <= kTanhSinhHalf; ++k) {
    const double t = k * kTanhSinhStep;
    const double u = 0.5 * kPi * std::sinh(t);
    const double e = std::exp(-2.0 * std::abs(u));
    // Distance to the nearer endpoint, computed without cancellation.
    const double d = len * e / (1.0 + e);
    const double weight = kTanhSinhStep * 0.5 * kPi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e)) * 0.5 * len;
    if (weight <= 0.0) continue;
    x.push_back(u >= 0.0 ? b - d : a + d);
    w.push_back(weight * scale);
  }
}

QuadratureNodes root_split_nodes(const TrigPolynomial& r, std::size_t scan_size) {
  QuadratureNodes q;
  const int deg = r.degree();
  if (deg == 0) {
    q.rule = QuadratureRule::kGrid;
    q.x = {0.0};
    q.w = {1.0};
    q.v = {r.coefficient(0).real()};
    return q;
  }
  const std::size_t s = next_pow2(std::max({scan_size, static_cast<std::size_t>(16 * deg), std::size_t{64}}));
  const PeriodicGrid scan(s);
  const PeriodicFunction sampled = PeriodicFunction::from_polynomial(scan, r);
  const auto vals = sampled.samples();
  const double h = scan.spacing();

  std::vector<double> breaks;
  auto at = [&](long long j) { return vals[static_cast<std::size_t>((j % static_cast<long long>(s) + static_cast<long long>(s)) % static_cast<long long>(s))]; };
  const auto ss = static_cast<long long>(s);
  std::vector<char> near_root(s, 0);
  for (long long j = 0; j < ss; ++j) {
    const double a = at(j);
    const double b = at(j + 1);
    const double x0 = static_cast<double>(j) * h;
    if (a == 0.0) {
      breaks.push_back(x0);
      near_root[static_cast<std::size_t>(j)] = 1;
    } else if (a * b < 0.0) {
      boost::uintmax_t iters = 100;
      auto fn = [&r](double x) { return r(x); };
      const auto bracket = boost::math::tools::toms748_solve(
          fn, x0, x0 + h, a, b, boost::math::tools::eps_tolerance<double>(52), iters);
      breaks.push_back(0.5 * (bracket.first + bracket.second));
      near_root[static_cast<std::size_t>(j)] = 1;
      near_root[static_cast<std::size_t>((j + 1) % ss)] = 1;
    }
  }
  // Local extrema of |r| away from roots split the arcs into monotone pieces, so that the
  // peaks of |r|^p at large p sit at interval ends where the tanh-sinh nodes cluster.
  for (long long j = 0; j < ss; ++j) {
    if (near_root[static_cast<std::size_t>(j)]) continue;
    if (at(j - 1) * at(j) <= 0.0 || at(j) * at(j + 1) <= 0.0) continue;
    const double a = std::abs(at(j));
    const double left = std::abs(at(j - 1));
    const double right = std::abs(at(j + 1));
    const bool is_min = a < left && a <= right;
    const bool is_max = a > left && a >= right;
    if (!is_min && !is_max) continue;
    const double x0 = static_cast<double>(j) * h;
    const double sign = is_min ? 1.0 : -1.0;
    auto fn = [&r, sign](double x) { return sign * std::abs(r(x)); };
    const auto res = boost::math::tools::brent_find_minima(fn, x0 - h, x0 + h, 52);
    breaks.push_back(res.first);
  }
  for (double& b : breaks) {
    b = std::fmod(b, kTwoPi);
    if (b < 0.0) b += kTwoPi;
  }
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> uniq;
  for (double b : breaks) {
    if (uniq.empty() || b - uniq.back() > 1e-10) uniq.push_back(b);
  }
  if (uniq.size() > 1 && uniq.front() + kTwoPi - uniq.back() <= 1e-10) uniq.pop_back();

  q.rule = QuadratureRule::kRootSplit;
  if (uniq.empty()) {
    q.rule = QuadratureRule::kGrid;
    q.x = scan.nodes();
    q.w.assign(s, 1.0 / static_cast<double>(s));
    q.v.assign(vals.begin(), vals.end());
    return q;
  }
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    const double a = uniq[i];
    const double b = i + 1 < uniq.size() ? uniq[i + 1] : uniq[0] + kTwoPi;
    append_tanh_sinh(a, b, 1.0 / kTwoPi, q.x, q.w);
  }
  q.v = r.evaluate(q.x);
  return q;
}

QuadratureNodes quadrature_nodes(const PeriodicFunction& f) {
  if (f.has_singular_part()) {
    const detail::SingularZone zone = detail::singular_zone(f);
    QuadratureNodes q;
    q.rule = QuadratureRule::kSingularZone;
    std::vector<char> skip(f.size(), 0);
    for (std::size_t j : zone.replaced) skip[j] = 1;
    const double w = 1.0 / static_cast<double>(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (skip[j]) continue;
      q.x.push_back(f.grid().node(j));
      q.w.push_back(w);
      q.v.push_back(f.samples()[j]);
    }
    const std::size_t base = q.x.size();
    q.x.insert(q.x.end(), zone.x.begin(), zone.x.end());
    q.w.insert(q.w.end(), zone.w.begin(), zone.w.end());
    q.v.insert(q.v.end(), zone.v.begin(), zone.v.end());
    for (std::size_t i : zone.floor_nodes) q.floor_nodes.push_back(base + i);
    return q;
  }
  const int deg = band_limited_degree(f);
  if (deg >= 1) return root_split_nodes(fourier_truncate(f, deg), f.size());
  return grid_nodes(f);
}

PowerMean power_mean(std::span<const double> w, std::span<const double> v, double p,
                     std::span<const std::size_t> floor_nodes) {
  double m = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (w[i] > 0.0) m = std::max(m, std::abs(v[i]));
  }
  if (m == 0.0) return {0.0, false};
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) total += w[i] * std::pow(std::abs(v[i]) / m, p);
  bool floor_limited = false;
  if (!floor_nodes.empty()) {
    double tail = 0.0;
    for (std::size_t i : floor_nodes) tail += w[i] * std::pow(std::abs(v[i]) / m, p);
    floor_limited = tail > 1e-8 * total;
  }
  return {m * std::pow(total, 1.0 / p), floor_limited};
}

PowerMean power_mean(const QuadratureNodes& q, double p) { return power_mean(q.w, q.v, p, q.floor_nodes); }

double log_integral(const QuadratureNodes& q, const std::function<double(double)>& log_phi) {
  std::vector<double> terms(q.v.size());
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < q.v.size(); ++i) {
    terms[i] = q.w[i] > 0.0 ? std::log(q.w[i]) + log_phi(std::abs(q.v[i]))
                            : -std::numeric_limits<double>::infinity();
    top = std::max(top, terms[i]);
  }
  if (!std::isfinite(top)) return top;
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - top);
  return top + std::log(acc);
}

}  // namespace glslab
