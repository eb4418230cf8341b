#include "glslab/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "glslab/quadrature.hpp"

namespace glslab {
namespace {

constexpr double kE = 2.718281828459045;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

double log1p_exp(double a) { return a > 30.0 ? a + std::log1p(std::exp(-a)) : std::log1p(std::exp(a)); }

double log_sum_exp(std::span<const double> t) {
  double top = kNegInf;
  for (double x : t) top = std::max(top, x);
  if (!std::isfinite(top)) return top;
  double acc = 0.0;
  for (double x : t) acc += std::exp(x - top);
  return top + std::log(acc);
}

void require_infinite_support(const PsiFunction& psi, const char* who) {
  if (psi.finite_support()) throw std::invalid_argument(std::string(who) + ": psi must have b = inf");
}

// ln of the exponential-type generator exp(g(u)) - 1 on u >= 1, c u^2 below.
OrliczGenerator joined_generator(std::string tag, std::function<double(double)> g) {
  const double log_c = log_expm1(g(1.0));
  return OrliczGenerator(std::move(tag), [g = std::move(g), log_c](double u) {
    if (u <= 0.0) return kNegInf;
    if (u < 1.0) return log_c + 2.0 * std::log(u);
    return log_expm1(g(u));
  });
}

}  // namespace

ConvexSamples nu_of_psi(const PsiFunction& psi, std::size_t count, double p_max) {
  require_infinite_support(psi, "nu_of_psi");
  if (count < 2 || !(p_max > 1.0)) throw std::invalid_argument("nu_of_psi: need count >= 2 and p_max > 1");
  ConvexSamples out;
  for (double t : linspace(0.0, std::log(p_max), count)) {
    const double p = std::exp(t);
    const double v = p * std::log(psi(p));
    if (!std::isfinite(v)) break;
    out.xs.push_back(p);
    out.ys.push_back(v);
  }
  if (out.xs.size() < 2) throw std::domain_error("nu_of_psi: psi is not finite near p = 1");
  out.xs.front() = 1.0;
  return out;
}

double log_expm1(double x) {
  if (!(x > 0.0)) return kNegInf;
  if (x > 30.0) return x + std::log1p(-std::exp(-x));
  return std::log(std::expm1(x));
}

OrliczGenerator::OrliczGenerator(std::string tag, std::function<double(double)> log_value)
    : tag_(std::move(tag)), log_value_(std::move(log_value)) {}

double OrliczGenerator::log_value(double u) const {
  const double a = std::abs(u);
  return a == 0.0 ? kNegInf : log_value_(a);
}

double OrliczGenerator::operator()(double u) const { return std::exp(log_value(u)); }

OrliczGenerator power_generator(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("power_generator: p must be finite and >= 1");
  return OrliczGenerator("power(" + std::to_string(p) + ")", [p](double u) { return p * std::log(u); });
}

OrliczGenerator exponential_generator(double m, double r) {
  if (!(m > 0.0)) throw std::invalid_argument("exponential_generator: m must be positive");
  return joined_generator("N_m_r(" + std::to_string(m) + "," + std::to_string(r) + ")", [m, r](double u) {
    return std::pow(u, m) * std::pow(std::log(kE + u), -m * r);
  });
}

OrliczGenerator log_power_generator(double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("log_power_generator: beta must be positive");
  return joined_generator("N_beta(" + std::to_string(beta) + ")",
                          [beta](double u) { return std::pow(std::log1p(u), 1.0 + 1.0 / beta); });
}

OrliczGenerator make_generator(std::string tag, std::function<double(double)> value) {
  return OrliczGenerator(std::move(tag), [value = std::move(value)](double u) { return std::log(value(u)); });
}

OrliczConstruction orlicz_construction(const PsiFunction& psi) {
  require_infinite_support(psi, "orlicz_from_psi");
  ConvexSamples nu = nu_of_psi(psi);
  OrliczConstruction out{OrliczGenerator("", {})};
  out.nu_convexified = !is_convex(nu);
  if (out.nu_convexified) nu = lower_convex_envelope(nu);
  auto conj = std::make_shared<const Conjugate>(nu);
  out.reliable_log_u = conj->interior_high();

  const double right_at_e = (*conj)(1.0).value;
  const double c = log1p_exp(right_at_e) / (kE * kE);
  out.quadratic_constant = c;
  const double left_at_e = log_expm1(c * kE * kE);
  out.continuity_gap = std::abs(std::expm1(left_at_e - right_at_e));

  auto raw = [conj, c](double z) { return z > 1.0 ? (*conj)(z).value : log_expm1(c * std::exp(2.0 * z)); };
  ConvexSamples theta;
  theta.xs = linspace(-12.0, 12.0, 4097);
  for (double z : theta.xs) theta.ys.push_back(raw(z));
  out.theta_convexified = !is_convex(theta);
  auto envelope = std::make_shared<const ConvexSamples>(lower_convex_envelope(theta));

  out.generator = OrliczGenerator("from_psi(" + psi.tag() + ")", [raw, envelope](double u) {
    const double z = std::log(u);
    if (z > envelope->xs.back()) return raw(z);
    return interpolate(*envelope, z);
  });
  return out;
}

OrliczGenerator orlicz_from_psi(const PsiFunction& psi) { return orlicz_construction(psi).generator; }

GeneratorProbe probe_generator(const OrliczGenerator& n, double u_max) {
  GeneratorProbe out;
  out.zero_at_origin = n(0.0) == 0.0;
  ConvexSamples s;
  s.xs = linspace(0.0, u_max, 64);
  for (double u : s.xs) s.ys.push_back(n(u));
  out.nondecreasing = std::is_sorted(s.ys.begin(), s.ys.end());
  out.convex = std::all_of(s.ys.begin(), s.ys.end(), [](double y) { return std::isfinite(y); }) && is_convex(s);
  out.quadratic_low = kInf;
  out.quadratic_high = 0.0;
  for (double u : linspace(0.1, 1.0, 64)) {
    const double q = std::exp(n.log_value(u) - 2.0 * std::log(u));
    out.quadratic_low = std::min(out.quadratic_low, q);
    out.quadratic_high = std::max(out.quadratic_high, q);
  }
  return out;
}

PsiFunction psi_from_orlicz(const OrliczGenerator& m) {
  constexpr double kLow = -20.0;
  constexpr double kStep = 40.0 / 8192.0;
  std::shared_ptr<const Conjugate> conj;
  for (double high = 20.0;; high *= 2.0) {
    ConvexSamples theta;
    theta.xs = linspace(kLow, high, static_cast<std::size_t>(std::lround((high - kLow) / kStep)) + 1);
    for (double z : theta.xs) {
      const double v = m.log_value(std::exp(z));
      if (!std::isfinite(v)) throw std::domain_error("psi_from_orlicz: ln M(e^z) is not finite at z = " + std::to_string(z));
      theta.ys.push_back(v);
    }
    if (!is_convex(theta, 1e-6)) {
      throw std::domain_error("psi_from_orlicz: theta(z) = ln M(e^z) is not convex, " + m.tag() + " is not of exponential type");
    }
    conj = std::make_shared<const Conjugate>(theta);
    double stuck = 0.0;
    for (double p : {4.0, 8.0, 16.0, 32.0, 64.0}) {
      if ((*conj)(p).boundary) {
        stuck = p;
        break;
      }
    }
    if (stuck == 0.0) break;
    if (high >= 640.0) {
      throw std::domain_error("psi_from_orlicz: conjugate of theta attained at the boundary for p = " +
                              std::to_string(stuck) + " (" + m.tag() + " is degenerate)");
    }
  }
  return make_custom_psi(kInf, [conj](double p) { return std::exp((*conj)(p).value / p); }, "psi_M(" + m.tag() + ")");
}

LuxemburgResult luxemburg_norm_detail(const PeriodicFunction& f, const OrliczGenerator& n) {
  const QuadratureNodes q = quadrature_nodes(f);
  LuxemburgResult out;
  double top = 0.0;
  for (double v : q.v) top = std::max(top, std::abs(v));
  if (top == 0.0) return out;

  std::vector<double> terms(q.v.size());
  // ln of the integral of N(|f| / exp(t)).
  auto log_integral_at = [&](double t) {
    for (std::size_t i = 0; i < q.v.size(); ++i) {
      terms[i] = q.w[i] > 0.0 ? std::log(q.w[i]) + n.log_value(std::abs(q.v[i]) * std::exp(-t)) : kNegInf;
    }
    return log_sum_exp(terms);
  };

  double lo = std::log(top);
  double hi = lo;
  if (log_integral_at(lo) <= 0.0) {
    while (log_integral_at(lo) <= 0.0) {
      hi = lo;
      lo -= 1.0;
      if (++out.iterations > 200) return out;
    }
  } else {
    while (log_integral_at(hi) > 0.0) {
      lo = hi;
      hi += 1.0;
      if (++out.iterations > 200) {
        out.value = kInf;
        out.floor_limited = true;
        return out;
      }
    }
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (log_integral_at(mid) <= 0.0 ? hi : lo) = mid;
    ++out.iterations;
  }
  out.value = std::exp(hi);

  if (!q.floor_nodes.empty()) {
    const double total = log_integral_at(hi);
    std::vector<double> floor_terms;
    for (std::size_t i : q.floor_nodes) floor_terms.push_back(terms[i]);
    out.floor_limited = std::exp(log_sum_exp(floor_terms) - total) > 1e-6;
  }
  return out;
}

double luxemburg_norm(const PeriodicFunction& f, const OrliczGenerator& n) { return luxemburg_norm_detail(f, n).value; }

TailFunction tail_function(const PeriodicFunction& f, std::span<const double> levels) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] >= 0.0) || (i > 0 && !(levels[i] > levels[i - 1]))) {
      throw std::invalid_argument("tail_function: levels must be >= 0 and increasing");
    }
  }
  std::vector<double> above;
  std::vector<double> below;
  for (double s : f.samples()) (s >= 0.0 ? above : below).push_back(std::abs(s));
  std::sort(above.begin(), above.end());
  std::sort(below.begin(), below.end());
  const double inv_n = 1.0 / static_cast<double>(f.size());
  auto count_over = [](const std::vector<double>& sorted, double y) {
    return static_cast<double>(sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), y));
  };
  TailFunction out;
  out.ys.assign(levels.begin(), levels.end());
  for (double y : levels) out.values.push_back(std::max(count_over(above, y), count_over(below, y)) * inv_n);
  return out;
}

TailBoundReport tail_bound_check(const PeriodicFunction& f, const PsiFunction& psi, std::span<const double> levels,
                                 const PGrid& grid) {
  require_infinite_support(psi, "tail_bound_check");
  const Conjugate conj(nu_of_psi(psi));
  TailBoundReport out;
  out.norm = gls_norm(f, psi, grid).value;
  out.threshold = kE * out.norm;
  if (out.norm == 0.0) return out;

  std::vector<double> kept;
  for (double y : levels) {
    if (y > out.threshold) kept.push_back(y);
  }
  const TailFunction tail = tail_function(f, kept);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const double b = std::exp(-conj(std::log(kept[i] / out.norm)).value);
    out.levels.push_back(kept[i]);
    out.bound.push_back(b);
    out.tail.push_back(tail.values[i]);
    out.margins.push_back(b - tail.values[i]);
    out.min_margin = std::min(out.min_margin, b - tail.values[i]);
  }
  out.empty = out.levels.empty();

  // Layer cake for the extremal tail min(1, exp(-nu*(v))), y = K e^v.
  const std::vector<double> vs = linspace(1.0, 40.0, 8001);
  const double dv = vs[1] - vs[0];
  std::vector<double> log_tail(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) log_tail[i] = -std::max(0.0, conj(vs[i]).value);
  std::vector<double> terms(vs.size());
  double best = 0.0;
  for (double p : grid.points) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const double end_weight = (i == 0 || i + 1 == vs.size()) ? 0.5 : 1.0;
      terms[i] = p * vs[i] + log_tail[i] + std::log(end_weight * dv);
    }
    const double head = p;
    const double rest = std::log(p) + log_sum_exp(terms);
    const double log_pp = std::max(head, rest) + std::log1p(std::exp(std::min(head, rest) - std::max(head, rest)));
    best = std::max(best, std::exp(log_pp / p) / psi(p));
  }
  out.reconstructed_norm = out.norm * best;
  out.reconstruction_ratio = best;
  return out;
}

double equivalence_ratio(const PeriodicFunction& f, const PsiFunction& psi, const OrliczGenerator& m,
                         const PGrid& grid) {
  const double g = gls_norm(f, psi, grid).value;
  const double l = luxemburg_norm(f, m);
  if (g == 0.0 && l == 0.0) return 1.0;
  return safe_ratio(g, l);
}

EquivalenceScan equivalence_scan(std::span<const PeriodicFunction> functions, std::span<const std::string> labels,
                                 const PsiFunction& psi, const PGrid& grid) {
  if (functions.size() != labels.size()) throw std::invalid_argument("equivalence_scan: one label per function");
  const OrliczGenerator m = orlicz_from_psi(psi);
  EquivalenceScan out;
  out.min_ratio = kInf;
  for (std::size_t i = 0; i < functions.size(); ++i) {
    EquivalenceRow row;
    row.function = labels[i];
    row.gls = gls_norm(functions[i], psi, grid).value;
    const LuxemburgResult lux = luxemburg_norm_detail(functions[i], m);
    row.luxemburg = lux.value;
    row.floor_limited = lux.floor_limited;
    row.ratio = (row.gls == 0.0 && row.luxemburg == 0.0) ? 1.0 : safe_ratio(row.gls, row.luxemburg);
    out.min_ratio = std::min(out.min_ratio, row.ratio);
    out.max_ratio = std::max(out.max_ratio, row.ratio);
    out.rows.push_back(row);
  }
  out.spread = out.rows.empty() ? 1.0 : safe_ratio(out.max_ratio, out.min_ratio);
  return out;
}

std::string to_string(OrliczOrdering o) { return o == OrliczOrdering::kMuchLess ? "much-less" : "not-much-less"; }

OrliczOrdering orlicz_compare(const OrliczGenerator& k, const OrliczGenerator& n, const CompareOptions& options) {
  if (options.count < 20 || options.lambdas.empty()) throw std::invalid_argument("orlicz_compare: need >= 20 points and a lambda");
  const std::vector<double> zs = linspace(0.0, options.log_u_max, options.count);
  const std::size_t tail = options.count - std::max<std::size_t>(2, options.count / 10);
  for (double lambda : options.lambdas) {
    std::vector<double> log_ratio;
    for (std::size_t i = tail; i < zs.size(); ++i) {
      const double u = std::exp(zs[i]);
      log_ratio.push_back(k.log_value(lambda * u) - n.log_value(u));
    }
    for (std::size_t i = 1; i < log_ratio.size(); ++i) {
      if (log_ratio[i] > log_ratio[i - 1] + 1e-12 * std::abs(log_ratio[i - 1])) return OrliczOrdering::kNotMuchLess;
    }
    if (!(log_ratio.back() - log_ratio.front() < std::log(1e-3))) return OrliczOrdering::kNotMuchLess;
  }
  return OrliczOrdering::kMuchLess;
}

Thm41Report thm41_diagnostic(const PeriodicFunction& f, const OrliczGenerator& m) {
  const PsiFunction psi = psi_from_orlicz(m);
  Thm41Report out;
  out.go = go_membership(f, psi, default_pgrid(psi));
  if (out.go.verdict == GoVerdict::kInGo) out.verdict = TaVerdict::kTA;
  if (out.go.verdict == GoVerdict::kNotInGo) out.verdict = TaVerdict::kNotTA;
  return out;
}

}  // namespace glslab
