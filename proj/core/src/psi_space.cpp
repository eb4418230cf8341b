#include "glslab/psi_space.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "glslab/quadrature.hpp"

namespace glslab {
namespace {

double tail_coordinate(const PGrid& grid, double p) {
  return grid.policy.b < kInf ? -std::log(grid.policy.b - p) : std::log(p);
}

}  // namespace

PsiFunction::PsiFunction(double b, std::function<double(double)> evaluator, std::string tag)
    : b_(b), evaluator_(std::move(evaluator)), tag_(std::move(tag)) {
  if (!(b_ > 1.0)) throw std::invalid_argument("PsiFunction: support endpoint b must exceed 1");
  if (!evaluator_) throw std::invalid_argument("PsiFunction: empty evaluator");
}

PsiFunction psi_m(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw std::invalid_argument("psi_m: m must be positive");
  const double e = 1.0 / m;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "psi_m(m=%.12g)", m);
  return PsiFunction(kInf, [e](double p) { return std::pow(p, e); }, buf);
}

PsiFunction psi_beta(double beta, double c3) {
  if (!(beta > 0.0) || !(c3 > 0.0) || !std::isfinite(beta) || !std::isfinite(c3)) {
    throw std::invalid_argument("psi_beta: beta and C3 must be positive");
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "psi_beta(beta=%.12g,C3=%.12g)", beta, c3);
  return PsiFunction(kInf, [beta, c3](double p) { return std::exp(c3 * std::pow(p, beta)); }, buf);
}

PsiFunction make_psi(std::string_view family, const ParameterMap& params) {
  auto get = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument(std::string("make_psi: missing parameter ") + key);
    return it->second;
  };
  if (family == "psi_m") return psi_m(get("m"));
  if (family == "psi_beta") return psi_beta(get("beta"), get("C3"));
  throw std::invalid_argument("make_psi: unknown family " + std::string(family));
}

PsiFunction make_custom_psi(double b, std::function<double(double)> evaluator, std::string tag) {
  return PsiFunction(b, std::move(evaluator), std::move(tag));
}

std::size_t PGrid::tail_begin() const {
  const std::size_t n = points.size();
  const std::size_t k = std::max<std::size_t>(2, (n + 9) / 10);
  return n > k ? n - k : 0;
}

PGrid make_pgrid(const PGridPolicy& policy) {
  if (policy.count < 2) throw std::invalid_argument("make_pgrid: need at least two points");
  if (!(policy.b > 1.0)) throw std::invalid_argument("make_pgrid: b must exceed 1");
  PGrid grid;
  grid.policy = policy;
  const std::size_t n = policy.count;
  grid.points.resize(n);
  if (policy.b == kInf) {
    if (!(policy.pmax > 1.0) || !std::isfinite(policy.pmax)) {
      throw std::invalid_argument("make_pgrid: pmax must be finite and exceed 1");
    }
    const double lmax = std::log(policy.pmax);
    for (std::size_t k = 0; k < n; ++k) {
      grid.points[k] = std::exp(lmax * static_cast<double>(k) / static_cast<double>(n - 1));
    }
    grid.points.front() = 1.0;
    grid.points.back() = policy.pmax;
  } else {
    const double gap0 = policy.b - 1.0;
    const double gap1 = std::min(1e-4, 0.5 * gap0);
    const double ratio = std::pow(gap1 / gap0, 1.0 / static_cast<double>(n - 1));
    for (std::size_t k = 0; k < n; ++k) {
      grid.points[k] = policy.b - gap0 * std::pow(ratio, static_cast<double>(k));
    }
    grid.points.front() = 1.0;
  }
  return grid;
}

PGrid make_pgrid(double b, std::size_t count, double pmax) { return make_pgrid(PGridPolicy{b, count, pmax}); }

PGrid default_pgrid(const PsiFunction& psi) { return make_pgrid(psi.b()); }

void to_json(nlohmann::json& j, const GlsNormReport& r) {
  nlohmann::json profile = nlohmann::json::array();
  for (const auto& [p, v] : r.ratio_profile) profile.push_back({p, v});
  j = nlohmann::json{{"value", r.value},
                     {"argmax_p", r.argmax_p},
                     {"ratio_profile", profile},
                     {"go_limit_estimate", r.go_limit_estimate},
                     {"truncation_pmax", r.truncation_pmax},
                     {"overflow", r.overflow}};
}

GlsNormReport assemble_gls_report(const PGrid& grid, const PsiFunction& psi, std::span<const double> norms) {
  if (norms.size() != grid.size()) throw std::invalid_argument("assemble_gls_report: size mismatch");
  GlsNormReport report;
  report.truncation_pmax = grid.truncation();
  report.value = 0.0;
  report.argmax_p = grid.points.front();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double p = grid.points[i];
    double ratio = norms[i] / psi(p);
    if (!std::isfinite(ratio)) {
      ratio = kInf;
      report.overflow = true;
    }
    report.ratio_profile.emplace_back(p, ratio);
    if (ratio > report.value) {
      report.value = ratio;
      report.argmax_p = p;
    }
  }
  for (std::size_t i = grid.tail_begin(); i < grid.size(); ++i) {
    report.go_limit_estimate = std::max(report.go_limit_estimate, report.ratio_profile[i].second);
  }
  return report;
}

GlsNormReport gls_norm(const PeriodicFunction& f, const PsiFunction& psi, const PGrid& grid) {
  const QuadratureNodes q = quadrature_nodes(f);
  std::vector<double> norms(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const PowerMean m = power_mean(q, grid.points[i]);
    norms[i] = m.floor_limited ? kInf : m.value;
  }
  return assemble_gls_report(grid, psi, norms);
}

PsiFunction natural_psi(std::span<const PeriodicFunction> family, const PGrid& grid) {
  if (family.empty()) throw std::invalid_argument("natural_psi: empty family");
  auto lp = std::make_shared<std::vector<double>>(grid.size(), 0.0);
  auto lv = std::make_shared<std::vector<double>>(grid.size(), 0.0);
  std::vector<double> best(grid.size(), 0.0);
  for (const auto& h : family) {
    const QuadratureNodes q = quadrature_nodes(h);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const PowerMean m = power_mean(q, grid.points[i]);
      if (m.floor_limited || !std::isfinite(m.value)) {
        throw std::invalid_argument("natural_psi: a family member has a divergent L_p norm on the grid");
      }
      best[i] = std::max(best[i], m.value);
    }
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(best[i] > 0.0)) throw std::invalid_argument("natural_psi: family vanishes identically");
    (*lp)[i] = std::log(grid.points[i]);
    (*lv)[i] = std::log(best[i]);
  }
  auto eval = [lp, lv](double p) {
    const auto& xs = *lp;
    const auto& ys = *lv;
    const double x = std::log(p);
    if (xs.size() == 1) return std::exp(ys[0]);
    if (x <= xs.front()) return std::exp(ys.front());
    std::size_t hi = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
    if (hi >= xs.size()) hi = xs.size() - 1;
    const std::size_t lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return std::exp(ys[lo] + t * (ys[hi] - ys[lo]));
  };
  return PsiFunction(grid.policy.b, eval, "natural");
}

double fundamental_function(const PsiFunction& psi, double delta, const PGrid& grid) {
  if (!(delta > 0.0) || delta > kTwoPi * (1.0 + 1e-15)) {
    throw std::invalid_argument("fundamental_function: delta must lie in (0, 2 pi]");
  }
  const double ls = std::log(std::min(1.0, delta / kTwoPi));
  double best = 0.0;
  for (double p : grid.points) best = std::max(best, std::exp(ls / p) / psi(p));
  return best;
}

double fundamental_function(const PsiFunction& psi, double delta) {
  return fundamental_function(psi, delta, default_pgrid(psi));
}

double tail_log_slope(const PGrid& grid, std::span<const double> values) {
  const std::size_t begin = grid.tail_begin();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double m = 0;
  for (std::size_t i = begin; i < grid.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) return std::nan("");
    const double x = tail_coordinate(grid, grid.points[i]);
    const double y = std::log(values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    m += 1.0;
  }
  const double den = m * sxx - sx * sx;
  return den > 0.0 ? (m * sxy - sx * sy) / den : std::nan("");
}

std::string to_string(PsiOrdering o) {
  return o == PsiOrdering::kMuchLess ? "much-less" : "not-comparable-or-equal";
}

PsiOrdering compare_psi(const PsiFunction& nu, const PsiFunction& psi, const PGrid& grid) {
  if (nu.b() != psi.b()) throw std::invalid_argument("compare_psi: supports differ");
  std::vector<double> ratio(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) ratio[i] = psi(grid.points[i]) / nu(grid.points[i]);
  const std::size_t begin = grid.tail_begin();
  for (std::size_t i = begin + 1; i < grid.size(); ++i) {
    if (!(ratio[i] < ratio[i - 1])) return PsiOrdering::kNotComparableOrEqual;
  }
  if (ratio.back() < 1e-3 * ratio[begin]) return PsiOrdering::kMuchLess;
  const double slope = tail_log_slope(grid, ratio);
  if (ratio.back() == 0.0 || (std::isfinite(slope) && slope <= -0.1)) return PsiOrdering::kMuchLess;
  return PsiOrdering::kNotComparableOrEqual;
}

PsiOrdering compare_psi(const PsiFunction& nu, const PsiFunction& psi) {
  return compare_psi(nu, psi, default_pgrid(psi));
}

std::string to_string(GoVerdict v) {
  switch (v) {
    case GoVerdict::kInGo: return "in-Go";
    case GoVerdict::kBoundary: return "boundary";
    case GoVerdict::kNotInGo: return "not-in-Go";
  }
  return "unknown";
}

GoMembership go_membership(const GlsNormReport& report, const PGrid& grid, const GoThresholds& t) {
  GoMembership out;
  out.value = report.value;
  out.go_limit_estimate = report.go_limit_estimate;
  if (report.value == 0.0) {
    out.verdict = GoVerdict::kInGo;
    return out;
  }
  std::vector<double> ratios;
  ratios.reserve(report.ratio_profile.size());
  for (const auto& pr : report.ratio_profile) ratios.push_back(pr.second);
  out.tail_slope = tail_log_slope(grid, ratios);
  const bool slope_known = std::isfinite(out.tail_slope);
  const double share = report.go_limit_estimate / report.value;
  if (share < t.in_fraction || (slope_known && out.tail_slope <= t.decay_slope)) {
    out.verdict = GoVerdict::kInGo;
  } else if (share >= t.not_in_fraction && (!slope_known || out.tail_slope >= t.flat_slope)) {
    out.verdict = GoVerdict::kNotInGo;
  } else {
    out.verdict = GoVerdict::kBoundary;
  }
  return out;
}

GoMembership go_membership(const PeriodicFunction& f, const PsiFunction& psi, const PGrid& grid,
                           const GoThresholds& t) {
  return go_membership(gls_norm(f, psi, grid), grid, t);
}

PsiDiagnostics check_psi(const PsiFunction& psi, const PGrid& grid) {
  PsiDiagnostics d;
  d.min_value = kInf;
  d.continuous = true;
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double p = grid.points[i];
    const double v = psi(p);
    vals[i] = v;
    d.min_value = std::min(d.min_value, v);
    const double step = 1e-6 * std::min(p, psi.b() < kInf ? psi.b() - p : p);
    const double v2 = psi(p + step);
    if (!(std::abs(v2 - v) <= 1e-3 * std::abs(v))) d.continuous = false;
  }
  d.positive = d.min_value > 0.0 && std::isfinite(d.min_value);
  const double slope = tail_log_slope(grid, vals);
  d.blows_up = std::isfinite(slope) && slope > 0.0;
  return d;
}

}  // namespace glslab
