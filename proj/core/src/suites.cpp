#include "glslab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

#include "glslab/best_approx.hpp"
#include "glslab/convex.hpp"
#include "glslab/estimates.hpp"
#include "glslab/kernels.hpp"
#include "glslab/modulus.hpp"
#include "glslab/orlicz.hpp"
#include "glslab/sobolev.hpp"

namespace glslab {
namespace {

constexpr double kPi = std::numbers::pi;

PeriodicFunction sample(const std::string& text, std::size_t n) {
  const CatalogSpec spec = parse_catalog_spec(text);
  return sample_catalog(spec, catalog_grid(spec.name, n));
}

PeriodicFunction sample(const CatalogSpec& spec, std::size_t n) { return sample_catalog(spec, catalog_grid(spec.name, n)); }

PGrid config_pgrid(const ExperimentConfig& c) { return make_pgrid(c.pgrid); }

PGrid reliable_pgrid(const ExperimentConfig& c, const CatalogSpec& spec) {
  PGridPolicy policy = c.pgrid;
  policy.pmax = std::min(policy.pmax, reliable_p_max(spec));
  return make_pgrid(policy);
}

struct Spread {
  double lo = kInf;
  double hi = 0.0;
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  double ratio() const { return hi / lo; }
};

std::string cell(double v) { return format_cell(v); }
std::string cell(int v) { return std::to_string(v); }

// Fourier coefficients of the N-point interpolant of |sin(x/2)| (aliased closed form).
double holder1_grid_coefficient(int k, std::size_t n) {
  const double two_n = 2.0 * static_cast<double>(n);
  auto cot = [](double x) { return std::cos(x) / std::sin(x); };
  return (cot(kPi * (1.0 - 2.0 * k) / two_n) + cot(kPi * (1.0 + 2.0 * k) / two_n)) / two_n;
}

// sqrt(sum over DFT indices |k| > n of |c_k|^2), k in (-N/2, N/2].
double parseval_oracle(const std::function<double(int)>& coefficient, int n, std::size_t size) {
  const int half = static_cast<int>(size / 2);
  double acc = 0.0;
  for (int k = -half + 1; k <= half; ++k) {
    if (std::abs(k) > n) acc += coefficient(k) * coefficient(k);
  }
  return std::sqrt(acc);
}

// 1. Parseval oracle for the p = 2 best approximation.
CriterionRun parseval(const ExperimentConfig&) {
  constexpr std::size_t kN = 1024;
  CriterionRun out;
  CsvTable t{"criterion_01_parseval", {"function", "n", "solver", "oracle", "abs_error"}, {}};
  const int smooth_degree = 32;
  const std::map<std::string, std::function<double(int)>> oracles = {
      {"cosk(k=1)", [](int k) { return std::abs(k) == 1 ? 0.5 : 0.0; }},
      {"holder(alpha=1)", [](int k) { return holder1_grid_coefficient(k, kN); }},
      {"smooth_holder(alpha=1,degree=32)",
       [](int k) {
         return std::abs(k) > smooth_degree ? 0.0 : holder1_grid_coefficient(k, kN) * (1.0 - std::abs(k) / (smooth_degree + 1.0));
       }},
  };
  double worst = 0.0;
  for (const auto& [label, coefficient] : oracles) {
    const PeriodicFunction f = sample(label, kN);
    for (int n : {2, 4, 8, 16, 32}) {
      const double got = best_approx_lp(f, n, 2.0).value;
      const double want = parseval_oracle(coefficient, n, kN);
      worst = std::max(worst, std::abs(got - want));
      t.rows.push_back({label, cell(n), cell(got), cell(want), cell(std::abs(got - want))});
    }
  }
  out.result.passed = worst <= 1e-10;
  out.result.detail = "max |E_n - oracle| = " + cell(worst) + " (tolerance 1e-10)";
  out.result.metrics = {{"max_abs_error", worst}};
  out.tables.push_back(std::move(t));
  return out;
}

// 2. Jackson direct estimate in L_p and in the sup norm.
CriterionRun jackson(const ExperimentConfig& c) {
  CriterionRun out;
  CsvTable t{"criterion_02_jackson", {"n", "norm", "lhs", "rhs", "ratio"}, {}};
  const PeriodicFunction f = sample("holder(alpha=1)", c.grid_n);
  Spread lp;
  double sup_worst = 0.0;
  for (int n : {4, 8, 16, 32, 64}) {
    for (double p : {1.0, 2.0, 4.0, 8.0, 16.0}) {
      const RatioReport r = jackson_direct(f, n, LpNormSpec{p});
      lp.add(r.ratio);
      t.rows.push_back({cell(n), r.norm_tag, cell(r.lhs), cell(r.rhs), cell(r.ratio)});
    }
    const RatioReport r = jackson_direct(f, n, SupNormSpec{});
    sup_worst = std::max(sup_worst, r.ratio);
    t.rows.push_back({cell(n), r.norm_tag, cell(r.lhs), cell(r.rhs), cell(r.ratio)});
  }
  out.result.passed = lp.ratio() < 10.0 && sup_worst <= 3.5;
  out.result.detail = "L_p ratio in [" + cell(lp.lo) + ", " + cell(lp.hi) + "], max/min = " + cell(lp.ratio()) +
                      " (< 10); sup-norm max ratio = " + cell(sup_worst) + " (<= 3.5)";
  out.result.metrics = {{"lp_min", lp.lo}, {"lp_max", lp.hi}, {"lp_spread", lp.ratio()}, {"sup_max", sup_worst}};
  out.tables.push_back(std::move(t));
  return out;
}

// 3. Decay of E_n against G-circle membership.
CriterionRun ta_coherence(const ExperimentConfig& c) {
  CriterionRun out;
  CsvTable t{"criterion_03_ta_coherence", {"function", "psi", "n", "error", "decay", "go", "verdict", "expected"}, {}};
  struct Case {
    std::string function;
    PsiFunction psi;
    TaVerdict expected;
  };
  const std::vector<Case> cases = {
      {"holder(alpha=1)", psi_m(2.0), TaVerdict::kTA},
      {"logsing(s=0.5)", psi_m(2.0), TaVerdict::kNotTA},
      {"logsing(s=0.5)", psi_m(1.0 / 0.75), TaVerdict::kTA},
  };
  const PGrid grid = config_pgrid(c);
  bool all = true;
  std::string detail;
  for (const auto& cs : cases) {
    const TaReport r = ta_diagnostic(sample(cs.function, c.grid_n), cs.psi, grid, 16);
    const bool ok = r.verdict == cs.expected;
    all = all && ok;
    for (std::size_t i = 0; i < r.degrees.size(); ++i) {
      t.rows.push_back({cs.function, cs.psi.tag(), cell(r.degrees[i]), cell(r.errors[i]), to_string(r.decay),
                        to_string(r.go.verdict), to_string(r.verdict), to_string(cs.expected)});
    }
    detail += cs.function + "/" + cs.psi.tag() + ": " + to_string(r.decay) + " + " + to_string(r.go.verdict) + " -> " +
              to_string(r.verdict) + (ok ? "" : " (expected " + to_string(cs.expected) + ")") + "; ";
  }
  out.result.passed = all;
  out.result.detail = detail;
  out.tables.push_back(std::move(t));
  return out;
}

// 4. Inverse estimate with the certified lower bracket of E_k.
CriterionRun inverse(const ExperimentConfig& c) {
  CriterionRun out;
  CsvTable t{"criterion_04_inverse",
             {"n", "omega", "rhs_lower", "rhs_upper", "ratio_lower", "ratio_upper", "solver"},
             {}};
  const std::vector<int> ns = {4, 8, 16, 32};
  const auto rows = inverse_estimate_sweep(sample("holder(alpha=1)", c.grid_n), ns, psi_m(2.0), config_pgrid(c),
                                           "holder(alpha=1)");
  Spread s;
  bool finite = true;
  for (const auto& r : rows) {
    finite = finite && std::isfinite(r.ratio_lower) && r.ratio_lower > 0.0 && !r.violation_flag;
    s.add(r.ratio_lower);
    t.rows.push_back({cell(r.n), cell(r.lhs), cell(r.rhs_lower), cell(r.rhs_upper), cell(r.ratio_lower),
                      cell(r.ratio_upper), r.solver_status});
  }
  out.result.passed = finite && s.ratio() <= 10.0;
  out.result.detail = "ratio in [" + cell(s.lo) + ", " + cell(s.hi) + "], max/min = " + cell(s.ratio()) + " (<= 10)";
  out.result.metrics = {{"min", s.lo}, {"max", s.hi}, {"spread", s.ratio()}};
  out.tables.push_back(std::move(t));
  return out;
}

// 5. Fundamental function: closed form against arc indicators, and the small-s asymptote.
CriterionRun fundamental(const ExperimentConfig& c) {
  constexpr std::size_t kN = 8192;
  CriterionRun out;
  CsvTable t{"criterion_05_fundamental", {"s", "closed_form", "reference", "rel_error", "kind"}, {}};
  const PsiFunction psi = psi_m(2.0);
  const PGrid grid = config_pgrid(c);
  double worst_literal = 0.0;
  for (double s : {1.0 / 8.0, 1.0 / 64.0, 1.0 / 512.0}) {
    const PeriodicFunction arc = sample_catalog("step", {{"delta", 2.0 * kPi * s}, {"start", 0.0}}, PeriodicGrid(kN));
    const double literal = gls_norm(arc, psi, grid).value;
    const double closed = fundamental_function(psi, 2.0 * kPi * s, grid);
    const double err = std::abs(closed - literal) / literal;
    worst_literal = std::max(worst_literal, err);
    t.rows.push_back({cell(s), cell(closed), cell(literal), cell(err), "arc_indicator"});
  }
  const double s = 1e-6;
  const double closed = fundamental_function(psi, 2.0 * kPi * s);
  const double asymptote = std::exp(-0.5) / std::sqrt(2.0 * std::log(1.0 / s));
  const double asym_err = std::abs(closed - asymptote) / asymptote;
  t.rows.push_back({cell(s), cell(closed), cell(asymptote), cell(asym_err), "asymptote"});
  out.result.passed = worst_literal <= 1e-3 && asym_err <= 0.05;
  out.result.detail = "arc-indicator rel error " + cell(worst_literal) + " (<= 1e-3); asymptote rel error " +
                      cell(asym_err) + " (<= 5%)";
  out.result.metrics = {{"literal_rel_error", worst_literal}, {"asymptote_rel_error", asym_err}};
  out.tables.push_back(std::move(t));
  return out;
}

// 6. Sobolev-GLS approximation bound and the intermediate L_2 -> L_8 bound.
CriterionRun sobolev(const ExperimentConfig& c) {
  CriterionRun out;
  CsvTable t{"criterion_06_sobolev", {"r", "n", "lhs", "rhs_core", "empirical_c3", "ineq_lhs", "ineq_rhs", "ineq_ratio"},
             {}};
  const PeriodicFunction f = sample("smooth_holder", c.grid_n);
  const PsiFunction psi = psi_m(2.0);
  bool all = true;
  std::string detail;
  nlohmann::json metrics = nlohmann::json::object();
  for (int r : {0, 1, 2}) {
    Spread c3;
    Spread ineq;
    for (int n : {4, 8, 16, 32, 64}) {
      const Thm31Report rep = thm31_check(f, r, psi, n, ThetaFamily{n, 4.0, kInf, 64.0}, "smooth_holder");
      const Ineq36Report iq = inequality_36_check(f, r, n, 2.0, 8.0);
      c3.add(rep.empirical_c3);
      ineq.add(iq.ratio);
      t.rows.push_back({cell(r), cell(n), cell(rep.lhs), cell(rep.rhs_core), cell(rep.empirical_c3), cell(iq.lhs),
                        cell(iq.rhs), cell(iq.ratio)});
    }
    const bool ok = c3.ratio() < 10.0 && ineq.ratio() < 10.0;
    all = all && ok;
    detail += "r=" + std::to_string(r) + ": C3 max/min " + cell(c3.ratio()) + ", (3.6) max/min " + cell(ineq.ratio()) + "; ";
    metrics["r" + std::to_string(r)] = {{"c3_spread", c3.ratio()}, {"ineq_spread", ineq.ratio()}};
  }
  out.result.passed = all;
  out.result.detail = detail + "(each < 10)";
  out.result.metrics = metrics;
  out.tables.push_back(std::move(t));
  return out;
}

// 7. Fenchel-Moreau on sampled convex functions.
CriterionRun fenchel(const ExperimentConfig&) {
  CriterionRun out;
  CsvTable t{"criterion_07_fenchel", {"function", "check", "error", "tolerance"}, {}};
  auto samples = [](double a, double b, double h, const std::function<double(double)>& fn) {
    ConvexSamples s;
    const auto count = static_cast<std::size_t>(std::llround((b - a) / h)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      const double x = a + h * static_cast<double>(i);
      s.xs.push_back(x);
      s.ys.push_back(fn(x));
    }
    return s;
  };
  auto max_error = [](const ConvexSamples& got, const ConvexSamples& want) {
    double e = 0.0;
    for (std::size_t i = 0; i < got.ys.size(); ++i) e = std::max(e, std::abs(got.ys[i] - want.ys[i]));
    return e;
  };

  const ConvexSamples quad = samples(-8.0, 8.0, 1e-2, [](double x) { return 0.5 * x * x; });
  const ConvexSamples quad_y = samples(-4.0, 4.0, 1e-2, [](double y) { return 0.5 * y * y; });
  const double conj_err = max_error(legendre(quad, quad_y.xs).conjugate, quad_y);
  const double quad_tol = 2.0 * interpolation_tolerance(quad);
  const double quad_err = max_error(legendre(legendre(quad, quad.xs).conjugate, quad.xs).conjugate, quad);

  const ConvexSamples ex = samples(-10.0, 10.0, 5e-3, [](double x) { return std::exp(x); });
  std::vector<double> slopes;
  for (double x : ex.xs) slopes.push_back(std::exp(x));
  const double ex_tol = 2.0 * interpolation_tolerance(ex);
  const double ex_err = max_error(legendre(legendre(ex, slopes).conjugate, ex.xs).conjugate, ex);

  t.rows.push_back({"x^2/2", "conjugate = y^2/2", cell(conj_err), cell(1e-3)});
  t.rows.push_back({"x^2/2", "double conjugate", cell(quad_err), cell(quad_tol)});
  t.rows.push_back({"exp(x)", "double conjugate", cell(ex_err), cell(ex_tol)});
  out.result.passed = conj_err <= 1e-3 && quad_err <= quad_tol && ex_err <= ex_tol;
  out.result.detail = "conjugate error " + cell(conj_err) + "; double conjugate errors " + cell(quad_err) + " (tol " +
                      cell(quad_tol) + "), " + cell(ex_err) + " (tol " + cell(ex_tol) + ")";
  out.tables.push_back(std::move(t));
  return out;
}

// 8. Two-sided equivalence of the G psi and Luxemburg norms.
CriterionRun equivalence(const ExperimentConfig& c) {
  CriterionRun out;
  CsvTable t{"criterion_08_equivalence", {"function", "gls", "luxemburg", "ratio", "floor_limited"}, {}};
  const std::vector<std::string> labels = {"cosk(k=1)", "holder(alpha=1)", "logsing(s=0.5)", "logsing(s=1)"};
  std::vector<PeriodicFunction> fs;
  for (const auto& l : labels) fs.push_back(sample(l, c.grid_n));
  const EquivalenceScan scan = equivalence_scan(fs, labels, psi_m(2.0), config_pgrid(c));
  for (const auto& r : scan.rows) {
    t.rows.push_back({r.function, cell(r.gls), cell(r.luxemburg), cell(r.ratio), r.floor_limited ? "1" : "0"});
  }
  out.result.passed = scan.min_ratio >= 1e-2 && scan.max_ratio <= 1e2 && scan.spread <= 50.0;
  out.result.detail = "ratio in [" + cell(scan.min_ratio) + ", " + cell(scan.max_ratio) + "], max/min = " +
                      cell(scan.spread) + " (<= 50)";
  out.result.metrics = {{"min", scan.min_ratio}, {"max", scan.max_ratio}, {"spread", scan.spread}};
  out.tables.push_back(std::move(t));
  return out;
}

// 9. Tail bound for a self-normalized logarithmic singularity.
CriterionRun tail_bound(const ExperimentConfig& c) {
  CriterionRun out;
  CsvTable t{"criterion_09_tail_bound", {"level", "bound", "tail", "margin"}, {}};
  const PeriodicFunction f = sample("logsing(s=0.5)", c.grid_n);
  const PGrid grid = config_pgrid(c);
  const std::vector<PeriodicFunction> family = {f};
  const PsiFunction psi = natural_psi(family, grid);
  const double k = gls_norm(f, psi, grid).value;
  std::vector<double> levels;
  for (int i = 1; i <= 400; ++i) levels.push_back(k * (std::numbers::e + (10.0 - std::numbers::e) * i / 400.0));
  const TailBoundReport rep = tail_bound_check(f, psi, levels, grid);
  for (std::size_t i = 0; i < rep.levels.size(); ++i) {
    t.rows.push_back({cell(rep.levels[i]), cell(rep.bound[i]), cell(rep.tail[i]), cell(rep.margins[i])});
  }
  const double tol = -2.0 / static_cast<double>(f.size());
  out.result.passed = !rep.empty && rep.min_margin >= tol;
  out.result.detail = "||f|| = " + cell(k) + ", min margin " + cell(rep.min_margin) + " over " +
                      std::to_string(rep.levels.size()) + " levels (>= " + cell(tol) + "); reconstruction ratio " +
                      cell(rep.reconstruction_ratio);
  out.result.metrics = {{"norm", k}, {"min_margin", rep.min_margin}, {"reconstruction_ratio", rep.reconstruction_ratio}};
  out.tables.push_back(std::move(t));
  return out;
}

// 10. psi -> Orlicz generator -> psi.
CriterionRun roundtrip(const ExperimentConfig&) {
  CriterionRun out;
  CsvTable t{"criterion_10_roundtrip", {"p", "psi", "psi_roundtrip", "abs_log_diff"}, {}};
  const PsiFunction psi = psi_m(2.0);
  const PsiFunction back = psi_from_orlicz(orlicz_from_psi(psi));
  double worst = 0.0;
  double at = 2.0;
  for (int i = 0; i <= 200; ++i) {
    const double p = 2.0 * std::pow(32.0, i / 200.0);
    const double d = std::abs(std::log(back(p)) - std::log(psi(p)));
    if (d > worst) {
      worst = d;
      at = p;
    }
    if (i % 10 == 0) t.rows.push_back({cell(p), cell(psi(p)), cell(back(p)), cell(d)});
  }
  out.result.passed = worst <= 0.2;
  out.result.detail = "sup |d ln psi| = " + cell(worst) + " at p = " + cell(at) + " (<= 0.2)";
  out.result.metrics = {{"max_abs_log_diff", worst}, {"argmax_p", at}};
  out.tables.push_back(std::move(t));
  return out;
}

// 11. Translation isometry and vanishing modulus for members of the G-circle subspace.
CriterionRun isometry(const ExperimentConfig& c) {
  CriterionRun out;
  CsvTable t{"criterion_11_isometry", {"function", "check", "value", "reference", "ok"}, {}};
  const PsiFunction psi = psi_m(2.0);
  const PGrid grid = config_pgrid(c);
  bool all = true;
  double worst_shift = 0.0;
  std::string detail;
  for (const auto& spec : c.catalog) {
    const PeriodicFunction f = sample(spec, c.grid_n);
    if (band_limited_degree(f) >= 0) {
      const double base = gls_norm(f, psi, grid).value;
      double dev = 0.0;
      for (int j = 0; j < 100; ++j) {
        const double shift = 2.0 * kPi * j / 100.0 + 0.0123;
        dev = std::max(dev, std::abs(gls_norm(translate(f, shift), psi, grid).value - base));
      }
      const bool ok = dev <= 1e-10 * std::max(1.0, base);
      all = all && ok;
      worst_shift = std::max(worst_shift, dev);
      t.rows.push_back({spec.label(), "translation", cell(dev), cell(base), ok ? "1" : "0"});
    }
    if (go_membership(f, psi, grid).verdict == GoVerdict::kInGo) {
      const GlsNormSpec norm{psi, grid};
      const double whole = modulus(f, kPi, norm);
      const double small = modulus(f, 2.0 * kPi / 128.0, norm);
      const bool ok = small <= 0.1 * whole;
      all = all && ok;
      t.rows.push_back({spec.label(), "modulus(2pi/128)", cell(small), cell(whole), ok ? "1" : "0"});
      if (!ok) detail += spec.label() + ": omega(2pi/128)/omega(pi) = " + cell(small / whole) + "; ";
    }
  }
  out.result.passed = all;
  out.result.detail = "max translation deviation " + cell(worst_shift) + "; " + (detail.empty() ? "all moduli below 0.1 omega(pi)" : detail);
  out.result.metrics = {{"max_translation_deviation", worst_shift}};
  out.tables.push_back(std::move(t));
  return out;
}

// 12. max_p E_n[f]_p / psi(p) <= E_n[f]_{G psi} <= ||f - V f||_{G psi}.
CriterionRun sandwich(const ExperimentConfig& c) {
  CriterionRun out;
  CsvTable t{"criterion_12_sandwich", {"function", "n", "pmax", "lower", "value", "upper", "solver", "ok"}, {}};
  const PsiFunction psi = psi_m(2.0);
  constexpr double kTol = 1e-6;
  auto below = [](double a, double b) { return a <= b * (1.0 + kTol) + 1e-12; };
  bool all = true;
  std::string detail;
  for (const auto& spec : c.catalog) {
    const PeriodicFunction f = sample(spec, c.grid_n);
    const PGrid grid = reliable_pgrid(c, spec);
    for (int n : {4, 8, 16}) {
      const ApproxError e = best_approx_gls(f, n, psi, grid);
      const Kernel vp = kernel_build(KernelKind::kValleePoussin, (n + 1) / 2);
      const double upper = gls_norm(f - convolve(f, vp), psi, grid).value;
      const bool ok = below(e.bracket_low, e.value) && below(e.value, upper);
      all = all && ok;
      if (!ok) detail += spec.label() + " n=" + std::to_string(n) + "; ";
      t.rows.push_back({spec.label(), cell(n), cell(grid.truncation()), cell(e.bracket_low), cell(e.value), cell(upper),
                        to_string(e.solver.status), ok ? "1" : "0"});
    }
  }
  out.result.passed = all;
  out.result.detail = detail.empty() ? "all " + std::to_string(t.rows.size()) + " brackets ordered within 1e-6"
                                     : "violations: " + detail;
  out.tables.push_back(std::move(t));
  return out;
}

using CriterionFn = CriterionRun (*)(const ExperimentConfig&);

struct CriterionEntry {
  const char* name;
  CriterionFn fn;
};

const CriterionEntry kCriteria[kCriterionCount] = {
    {"parseval_oracle", parseval},
    {"jackson_direct", jackson},
    {"ta_coherence", ta_coherence},
    {"inverse_estimate", inverse},
    {"fundamental_function", fundamental},
    {"sobolev_gls_bound", sobolev},
    {"fenchel_moreau", fenchel},
    {"gls_orlicz_equivalence", equivalence},
    {"tail_bound", tail_bound},
    {"orlicz_roundtrip", roundtrip},
    {"isometry_modulus", isometry},
    {"minimax_sandwich", sandwich},
};

CsvTable norms_table(const ExperimentConfig& c) {
  CsvTable t{"norms", {"function", "p", "lp_norm", "floor_limited"}, {}};
  for (const auto& spec : c.catalog) {
    const PeriodicFunction f = sample(spec, c.grid_n);
    for (double p : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0}) {
      const LpNormDetail d = lp_norm_detail(f, p);
      t.rows.push_back({spec.label(), cell(p), cell(d.value), d.floor_limited ? "1" : "0"});
    }
  }
  return t;
}

CsvTable gls_table(const ExperimentConfig& c) {
  CsvTable t{"gls_norms", {"function", "psi", "pmax", "value", "argmax_p", "go_limit", "go_verdict", "overflow"}, {}};
  for (const auto& spec : c.catalog) {
    const PeriodicFunction f = sample(spec, c.grid_n);
    for (const PsiFunction& psi : {psi_m(2.0), psi_m(1.0)}) {
      const PGrid grid = reliable_pgrid(c, spec);
      const GlsNormReport r = gls_norm(f, psi, grid);
      t.rows.push_back({spec.label(), psi.tag(), cell(grid.truncation()), cell(r.value), cell(r.argmax_p),
                        cell(r.go_limit_estimate), to_string(go_membership(r, grid).verdict), r.overflow ? "1" : "0"});
    }
  }
  return t;
}

CsvTable modulus_table(const ExperimentConfig& c) {
  CsvTable t{"modulus", {"function", "delta", "modulus", "band"}, {}};
  const PsiFunction psi = psi_m(2.0);
  for (const auto& spec : c.catalog) {
    const PeriodicFunction f = sample(spec, c.grid_n);
    const ModulusProfile prof = modulus_profile(f, c.deltas, GlsNormSpec{psi, reliable_pgrid(c, spec)});
    for (std::size_t i = 0; i < prof.deltas.size(); ++i) {
      t.rows.push_back({spec.label(), cell(prof.deltas[i]), cell(prof.values[i]), cell(prof.bands[i])});
    }
  }
  return t;
}

CsvTable gw_table(const ExperimentConfig& c) {
  CsvTable t{"sobolev_gls_norms", {"function", "r", "value", "argmax_p"}, {}};
  const PsiFunction psi = psi_m(2.0);
  for (const auto& spec : c.catalog) {
    const PeriodicFunction f = sample(spec, c.grid_n);
    if (band_limited_degree(f) < 0) continue;
    for (int r : c.rs) {
      const GlsNormReport rep = gw_norm(f, r, psi, config_pgrid(c));
      t.rows.push_back({spec.label(), cell(r), cell(rep.value), cell(rep.argmax_p)});
    }
  }
  return t;
}

CsvTable generator_table() {
  CsvTable t{"orlicz_generator_psi_m2", {"u", "N"}, {}};
  const OrliczGenerator m = orlicz_from_psi(psi_m(2.0));
  for (int i = 0; i <= 64; ++i) {
    const double u = 8.0 * i / 64.0;
    t.rows.push_back({cell(u), cell(m(u))});
  }
  return t;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "norms") return Suite::kNorms;
  if (name == "modulus") return Suite::kModulus;
  if (name == "theorem21") return Suite::kTheorem21;
  if (name == "theorem31") return Suite::kTheorem31;
  if (name == "orlicz") return Suite::kOrlicz;
  if (name == "all") return Suite::kAll;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "' (norms, modulus, theorem21, theorem31, orlicz, all)");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::kNorms: return "norms";
    case Suite::kModulus: return "modulus";
    case Suite::kTheorem21: return "theorem21";
    case Suite::kTheorem31: return "theorem31";
    case Suite::kOrlicz: return "orlicz";
    case Suite::kAll: return "all";
  }
  return "unknown";
}

std::string criterion_name(int id) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion id out of range");
  return kCriteria[id - 1].name;
}

std::vector<int> suite_criteria(Suite s) {
  switch (s) {
    case Suite::kNorms: return {1, 5};
    case Suite::kModulus: return {11};
    case Suite::kTheorem21: return {2, 3, 4, 12};
    case Suite::kTheorem31: return {6};
    case Suite::kOrlicz: return {7, 8, 9, 10};
    case Suite::kAll: return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  }
  return {};
}

CriterionRun run_criterion(int id, const ExperimentConfig& config) {
  const std::string name = criterion_name(id);
  const auto start = std::chrono::steady_clock::now();
  CriterionRun run;
  try {
    run = kCriteria[id - 1].fn(config);
  } catch (const std::exception& e) {
    run = CriterionRun{};
    run.result.passed = false;
    run.result.detail = std::string("error: ") + e.what();
  }
  run.result.id = id;
  run.result.name = name;
  run.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

ReportBundle run_suite(const ExperimentConfig& config, Suite suite) {
  validate(config);
  ReportBundle bundle;
  bundle.suite = to_string(suite);
  bundle.config_hash = config_hash(config);
  const bool all = suite == Suite::kAll;
  if (all || suite == Suite::kNorms) {
    bundle.tables.push_back(norms_table(config));
    bundle.tables.push_back(gls_table(config));
  }
  if (all || suite == Suite::kModulus) bundle.tables.push_back(modulus_table(config));
  if (all || suite == Suite::kTheorem31) bundle.tables.push_back(gw_table(config));
  if (all || suite == Suite::kOrlicz) bundle.tables.push_back(generator_table());
  for (int id : suite_criteria(suite)) {
    CriterionRun run = run_criterion(id, config);
    bundle.criteria.push_back(run.result);
    for (auto& t : run.tables) bundle.tables.push_back(std::move(t));
  }
  return bundle;
}

}  // namespace glslab
