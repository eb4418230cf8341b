#include "glslab/best_approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>

#include <Eigen/Dense>

#include "fft.hpp"
#include "glslab/quadrature.hpp"

namespace glslab {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Columns [1, cos(kx) for k = 1..n, sin(kx) for k = 1..n] at the nodes.
MatrixXd basis_matrix(const std::vector<double>& x, int n) {
  const auto q = static_cast<Eigen::Index>(x.size());
  MatrixXd b(q, 2 * n + 1);
  for (Eigen::Index i = 0; i < q; ++i) {
    b(i, 0) = 1.0;
    const std::complex<double> step = std::polar(1.0, x[static_cast<std::size_t>(i)]);
    std::complex<double> z = step;
    for (int k = 1; k <= n; ++k) {
      b(i, k) = z.real();
      b(i, n + k) = z.imag();
      z *= step;
      if (k % 32 == 0) z = std::polar(1.0, (k + 1) * x[static_cast<std::size_t>(i)]);
    }
  }
  return b;
}

struct NodeData {
  std::vector<double> x;
  std::vector<double> w;
  std::vector<std::size_t> floor_nodes;
  MatrixXd basis;
};

struct Residual {
  std::shared_ptr<const NodeData> nodes;
  VectorXd r;
};

// Residual f - g(c) on a quadrature rule suited to f. Rules with fixed nodes (grid, singular
// zone) are built once; for band-limited f the root-split rule follows the residual's minima.
class ResidualModel {
 public:
  ResidualModel(const PeriodicFunction& f, int n) : n_(n), scan_(f.size()) {
    if (!f.has_singular_part()) {
      const int deg = band_limited_degree(f);
      if (deg >= 1) {
        root_split_ = true;
        fpoly_ = fourier_truncate(f, deg);
        return;
      }
    }
    QuadratureNodes q = f.has_singular_part() ? quadrature_nodes(f) : grid_nodes(f);
    auto data = std::make_shared<NodeData>();
    data->x = std::move(q.x);
    data->w = std::move(q.w);
    data->floor_nodes = std::move(q.floor_nodes);
    data->basis = basis_matrix(data->x, n);
    values_ = Eigen::Map<const VectorXd>(q.v.data(), static_cast<Eigen::Index>(q.v.size()));
    fixed_ = std::move(data);
  }

  int degree() const { return n_; }
  int dimension() const { return 2 * n_ + 1; }

  Residual evaluate(const VectorXd& c) const {
    if (!root_split_) return {fixed_, values_ - fixed_->basis * c};
    const std::vector<double> params(c.data(), c.data() + c.size());
    const TrigPolynomial g = TrigPolynomial::from_real_params(params);
    const int deg = std::max(fpoly_.degree(), n_);
    std::vector<std::complex<double>> coef(static_cast<std::size_t>(2 * deg + 1));
    for (int k = -deg; k <= deg; ++k) coef[static_cast<std::size_t>(k + deg)] = fpoly_.coefficient(k) - g.coefficient(k);
    const TrigPolynomial r(std::move(coef));
    QuadratureNodes q = root_split_nodes(r, scan_);
    auto data = std::make_shared<NodeData>();
    data->x = std::move(q.x);
    data->w = std::move(q.w);
    data->basis = basis_matrix(data->x, n_);
    return {std::move(data), Eigen::Map<const VectorXd>(q.v.data(), static_cast<Eigen::Index>(q.v.size()))};
  }

 private:
  int n_;
  std::size_t scan_;
  bool root_split_ = false;
  TrigPolynomial fpoly_;
  std::shared_ptr<const NodeData> fixed_;
  VectorXd values_;
};

PowerMean residual_norm(const Residual& res, double p) {
  return power_mean(res.nodes->w, std::span<const double>(res.r.data(), static_cast<std::size_t>(res.r.size())), p,
                    res.nodes->floor_nodes);
}

double max_abs(const VectorXd& r) { return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff(); }

VectorXd to_vector(const TrigPolynomial& g) {
  const auto params = g.real_params();
  return Eigen::Map<const VectorXd>(params.data(), static_cast<Eigen::Index>(params.size()));
}

TrigPolynomial to_polynomial(const VectorXd& c) {
  return TrigPolynomial::from_real_params(std::vector<double>(c.data(), c.data() + c.size()));
}

// f itself is a polynomial of degree <= n: the truncation is exact.
std::optional<ApproxError> exact_case(const PeriodicFunction& f, int n) {
  if (f.has_singular_part()) return std::nullopt;
  const int deg = band_limited_degree(f);
  if (deg < 0 || deg > n) return std::nullopt;
  ApproxError out;
  out.n = n;
  out.minimizer = fourier_truncate(f, n);
  out.solver = {SolverStatus::kExact, 0, 0.0};
  return out;
}

void check_degree(const PeriodicFunction& f, int n) {
  if (n < 0) throw std::invalid_argument("best approximation: degree must be >= 0");
  if (2 * static_cast<std::size_t>(n) + 1 > f.size()) {
    throw std::invalid_argument("best approximation: 2n+1 exceeds the grid size");
  }
}

// Discrete Parseval tail of the samples beyond degree n.
double parseval_tail(const PeriodicFunction& f, int n) {
  const auto spec = detail::real_dft(f.samples());
  const double size = static_cast<double>(f.size());
  const std::size_t nyq = f.size() / 2;
  double tail = 0.0;
  for (std::size_t k = static_cast<std::size_t>(n) + 1; k <= nyq; ++k) {
    const double a = std::norm(spec[k]) / (size * size);
    tail += k == nyq ? a : 2.0 * a;
  }
  return std::sqrt(tail);
}

// Damped Newton for min_c integral v^p, v = sqrt(r^2 + eps^2). For p < 2 the smoothing
// parameter eps is driven to ~1e-10 max|r| by continuation; for p >= 2 it is zero.
ApproxError newton_lp(const ResidualModel& model, double p, VectorXd c, const LpSolveOptions& opt) {
  ApproxError out;
  out.n = model.degree();
  Residual res = model.evaluate(c);
  double value = residual_norm(res, p).value;
  const double top0 = max_abs(res.r);
  const double eps_min = p < 2.0 ? 1e-10 * top0 : 0.0;
  double eps = p < 2.0 ? 1e-3 * top0 : 0.0;
  int it = 0;
  double change = 0.0;
  SolverStatus status = value == 0.0 ? SolverStatus::kExact : SolverStatus::kMaxIterations;

  while (status == SolverStatus::kMaxIterations && it < opt.max_iterations) {
    ++it;
    const double top = max_abs(res.r);
    const double s = std::sqrt(top * top + eps * eps);
    const auto& w = res.nodes->w;
    const auto& basis = res.nodes->basis;
    const Eigen::Index q = res.r.size();
    auto phi_of = [&](const Residual& at) {
      double acc = 0.0;
      for (Eigen::Index i = 0; i < at.r.size(); ++i) {
        acc += at.nodes->w[static_cast<std::size_t>(i)] * std::pow(std::sqrt(at.r(i) * at.r(i) + eps * eps) / s, p);
      }
      return acc;
    };
    VectorXd a(q), b(q);
    for (Eigen::Index i = 0; i < q; ++i) {
      const double vi = std::sqrt(res.r(i) * res.r(i) + eps * eps);
      const double v = vi / s;
      const double t = vi > 0.0 ? res.r(i) / vi : 0.0;
      const double wi = w[static_cast<std::size_t>(i)];
      a(i) = wi * std::pow(v, p - 1.0) * t;
      b(i) = v > 0.0 ? wi * std::pow(v, p - 2.0) * ((p - 1.0) * t * t + 1.0 - t * t) : 0.0;
    }
    const VectorXd ba = basis.transpose() * a;
    MatrixXd h = basis.transpose() * b.asDiagonal() * basis;
    h.diagonal().array() += 1e-13 * std::max(h.diagonal().maxCoeff(), 1e-300);
    const VectorXd d = s * h.ldlt().solve(ba);
    const double phi0 = phi_of(res);
    const double slope = -p / s * ba.dot(d);
    const double decrement = -slope / (p * phi0);
    const bool final_stage = eps <= eps_min;
    const double stage_tol = final_stage ? 1e-3 * opt.rel_tol : std::max(1e-3 * opt.rel_tol, 1e-2 * eps / s);
    if (!(slope < 0.0) || decrement < stage_tol) {
      if (!final_stage) {
        eps = std::max(eps_min, 0.1 * eps);
        continue;
      }
      status = SolverStatus::kConverged;
      break;
    }
    double alpha = 1.0;
    bool accepted = false;
    Residual trial;
    for (int ls = 0; ls < 60; ++ls) {
      trial = model.evaluate(c + alpha * d);
      if (phi_of(trial) <= phi0 + 1e-4 * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      if (!final_stage) {
        eps = std::max(eps_min, 0.1 * eps);
        continue;
      }
      status = decrement < 1e-6 ? SolverStatus::kConverged : SolverStatus::kStalled;
      break;
    }
    c += alpha * d;
    res = std::move(trial);
    const double next = residual_norm(res, p).value;
    change = value > 0.0 ? std::abs(value - next) / value : 0.0;
    value = next;
    if (value == 0.0) {
      status = SolverStatus::kExact;
    } else if (final_stage && alpha == 1.0 && change < opt.rel_tol) {
      status = SolverStatus::kConverged;
    }
  }
  out.value = value;
  out.minimizer = to_polynomial(c);
  out.solver = {status, it, change};
  out.bracket_low = out.bracket_high = value;
  return out;
}

// min 1/2 l'Gl - phi'l over the unit simplex, primal active-set method.
VectorXd simplex_qp(const MatrixXd& g, const VectorXd& phi, const VectorXd& start) {
  const Eigen::Index m = phi.size();
  VectorXd lambda = VectorXd::Zero(m);
  std::vector<Eigen::Index> free_set;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (start(i) > 1e-14) free_set.push_back(i);
  }
  if (free_set.empty()) {
    Eigen::Index imax = 0;
    phi.maxCoeff(&imax);
    free_set.push_back(imax);
  }
  for (Eigen::Index i : free_set) lambda(i) = start(i);
  if (lambda.sum() <= 0.0) {
    lambda.setZero();
    lambda(free_set.front()) = 1.0;
    free_set.assign(1, free_set.front());
  } else {
    lambda /= lambda.sum();
  }
  const double scale = std::max(g.diagonal().cwiseAbs().maxCoeff(), 1e-300);
  const double reg = 1e-12 * scale;
  const double tol = 1e-13 * (scale + phi.cwiseAbs().maxCoeff());

  for (int iter = 0; iter < 20 * static_cast<int>(m) + 100; ++iter) {
    const auto k = static_cast<Eigen::Index>(free_set.size());
    MatrixXd kkt = MatrixXd::Zero(k + 1, k + 1);
    VectorXd rhs(k + 1);
    for (Eigen::Index a = 0; a < k; ++a) {
      for (Eigen::Index b = 0; b < k; ++b) kkt(a, b) = g(free_set[static_cast<std::size_t>(a)], free_set[static_cast<std::size_t>(b)]);
      kkt(a, a) += reg;
      kkt(a, k) = -1.0;
      kkt(k, a) = 1.0;
      rhs(a) = phi(free_set[static_cast<std::size_t>(a)]);
    }
    rhs(k) = 1.0;
    const VectorXd sol = kkt.fullPivLu().solve(rhs);
    const double nu = sol(k);
    bool feasible = true;
    for (Eigen::Index a = 0; a < k; ++a) feasible = feasible && sol(a) >= 0.0;
    if (feasible) {
      lambda.setZero();
      for (Eigen::Index a = 0; a < k; ++a) lambda(free_set[static_cast<std::size_t>(a)]) = sol(a);
      const VectorXd grad = g * lambda - phi;
      Eigen::Index add = -1;
      double worst = -tol;
      for (Eigen::Index i = 0; i < m; ++i) {
        if (std::find(free_set.begin(), free_set.end(), i) != free_set.end()) continue;
        const double mult = grad(i) - nu;
        if (mult < worst) {
          worst = mult;
          add = i;
        }
      }
      if (add < 0) return lambda;
      free_set.push_back(add);
      continue;
    }
    // Move toward the equality-constrained optimum until a component hits zero.
    double alpha = 1.0;
    Eigen::Index block = -1;
    for (Eigen::Index a = 0; a < k; ++a) {
      const Eigen::Index i = free_set[static_cast<std::size_t>(a)];
      if (sol(a) < 0.0) {
        const double t = lambda(i) / (lambda(i) - sol(a));
        if (t < alpha) {
          alpha = t;
          block = i;
        }
      }
    }
    for (Eigen::Index a = 0; a < k; ++a) {
      const Eigen::Index i = free_set[static_cast<std::size_t>(a)];
      lambda(i) += alpha * (sol(a) - lambda(i));
    }
    std::vector<Eigen::Index> kept;
    for (Eigen::Index i : free_set) {
      if (i != block && lambda(i) > 1e-15) {
        kept.push_back(i);
      } else {
        lambda(i) = 0.0;
      }
    }
    if (kept.empty()) {
      Eigen::Index imax = 0;
      phi.maxCoeff(&imax);
      kept.push_back(imax);
      lambda.setZero();
      lambda(imax) = 1.0;
    }
    lambda /= lambda.sum();
    free_set = std::move(kept);
  }
  return lambda;
}

// Values and gradients of phi_i(c) = |v|_{p_i} / psi_i with the smoothed magnitude
// v = sqrt(r^2 + eps^2), which makes every phi_i twice differentiable (p = 1 included).
struct GlsLinearization {
  VectorXd phi;   // M
  MatrixXd grad;  // M x d
  VectorXd s;     // sum w (v / scale)^p per p
  VectorXd v;     // v / scale
  VectorXd t;     // r / v
  double scale = 0.0;
};

GlsLinearization linearize(const Residual& res, std::span<const double> ps, std::span<const double> psis, double eps) {
  GlsLinearization lin;
  const auto m = static_cast<Eigen::Index>(ps.size());
  const auto q = res.r.size();
  const auto& w = res.nodes->w;
  lin.phi.resize(m);
  lin.s.resize(m);
  lin.v.resize(q);
  lin.t.resize(q);
  const double top = max_abs(res.r);
  lin.scale = std::sqrt(top * top + eps * eps);
  lin.grad = MatrixXd::Zero(m, res.nodes->basis.cols());
  if (lin.scale == 0.0) {
    lin.phi.setZero();
    lin.s.setZero();
    return lin;
  }
  for (Eigen::Index i = 0; i < q; ++i) {
    const double vi = std::sqrt(res.r(i) * res.r(i) + eps * eps);
    lin.v(i) = vi / lin.scale;
    lin.t(i) = vi > 0.0 ? res.r(i) / vi : 0.0;
  }
  MatrixXd a(q, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double p = ps[static_cast<std::size_t>(j)];
    double total = 0.0;
    for (Eigen::Index i = 0; i < q; ++i) {
      const double wi = w[static_cast<std::size_t>(i)];
      const double vp1 = std::pow(lin.v(i), p - 1.0);
      total += wi * vp1 * lin.v(i);
      a(i, j) = wi * vp1 * lin.t(i);
    }
    lin.s(j) = total;
    const double psi = psis[static_cast<std::size_t>(j)];
    lin.phi(j) = lin.scale * std::pow(total, 1.0 / p) / psi;
    a.col(j) *= -std::pow(total, 1.0 / p - 1.0) / psi;
  }
  lin.grad = (res.nodes->basis.transpose() * a).transpose();
  return lin;
}

MatrixXd lagrangian_hessian(const Residual& res, const GlsLinearization& lin, const VectorXd& lambda,
                            std::span<const double> ps, std::span<const double> psis) {
  const auto q = res.r.size();
  const auto& w = res.nodes->w;
  const auto& basis = res.nodes->basis;
  const Eigen::Index d = basis.cols();
  VectorXd weights = VectorXd::Zero(q);
  MatrixXd h = MatrixXd::Zero(d, d);
  if (lin.scale == 0.0) return h;
  for (Eigen::Index j = 0; j < lambda.size(); ++j) {
    const double lj = lambda(j);
    if (lj <= 0.0) continue;
    const double p = ps[static_cast<std::size_t>(j)];
    const double coef = lj / psis[static_cast<std::size_t>(j)] / lin.scale * std::pow(lin.s(j), 1.0 / p - 1.0);
    for (Eigen::Index i = 0; i < q; ++i) {
      const double t2 = lin.t(i) * lin.t(i);
      weights(i) += coef * w[static_cast<std::size_t>(i)] * std::pow(lin.v(i), p - 2.0) * ((p - 1.0) * t2 + 1.0 - t2);
    }
    if (lin.phi(j) > 0.0 && p > 1.0) {
      const VectorXd gj = lin.grad.row(j).transpose();
      h.noalias() -= lj * (p - 1.0) / lin.phi(j) * gj * gj.transpose();
    }
  }
  h.noalias() += basis.transpose() * weights.asDiagonal() * basis;
  return h;
}

// max_i |r|_{p_i} / psi_i with the unsmoothed norms; `overflow` when a resolution floor dominates.
struct GlsObjective {
  double value = 0.0;
  bool overflow = false;
};

GlsObjective gls_objective(const Residual& res, std::span<const double> ps, std::span<const double> psis) {
  GlsObjective out;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    const PowerMean pm = residual_norm(res, ps[j]);
    out.overflow = out.overflow || pm.floor_limited;
    out.value = std::max(out.value, pm.value / psis[j]);
  }
  return out;
}

}  // namespace

std::string to_string(SolverStatus s) {
  switch (s) {
    case SolverStatus::kExact: return "exact";
    case SolverStatus::kConverged: return "converged";
    case SolverStatus::kMaxIterations: return "max-iterations";
    case SolverStatus::kStalled: return "stalled";
  }
  return "unknown";
}

ApproxError best_approx_lp(const PeriodicFunction& f, int n, double p, const LpSolveOptions& options,
                           const TrigPolynomial* warm_start) {
  check_degree(f, n);
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("best_approx_lp: p must lie in [1, inf)");
  if (auto exact = exact_case(f, n)) return *exact;
  const TrigPolynomial truncation = fourier_truncate(f, n);
  if (p == 2.0 && !f.has_singular_part()) {
    ApproxError out;
    out.n = n;
    out.value = parseval_tail(f, n);
    out.minimizer = truncation;
    out.solver = {SolverStatus::kExact, 0, 0.0};
    out.bracket_low = out.bracket_high = out.value;
    return out;
  }
  const ResidualModel model(f, n);
  VectorXd c = to_vector(truncation);
  if (warm_start != nullptr && warm_start->degree() == n) {
    const VectorXd cw = to_vector(*warm_start);
    if (residual_norm(model.evaluate(cw), p).value < residual_norm(model.evaluate(c), p).value) c = cw;
  }
  return newton_lp(model, p, c, options);
}

std::vector<ApproxError> best_approx_lp_sweep(const PeriodicFunction& f, int n, std::span<const double> ps,
                                              const LpSolveOptions& options) {
  check_degree(f, n);
  std::vector<ApproxError> out;
  out.reserve(ps.size());
  const TrigPolynomial* warm = nullptr;
  for (double p : ps) {
    out.push_back(best_approx_lp(f, n, p, options, warm));
    warm = &out.back().minimizer;
  }
  return out;
}

double gls_lower_bound(const PeriodicFunction& f, int n, const PsiFunction& psi, const PGrid& grid,
                       const LpSolveOptions& options) {
  const auto sweep = best_approx_lp_sweep(f, n, grid.points, options);
  double best = 0.0;
  for (std::size_t i = 0; i < sweep.size(); ++i) best = std::max(best, sweep[i].value / psi(grid.points[i]));
  return best;
}

ApproxError best_approx_gls(const PeriodicFunction& f, int n, const PsiFunction& psi, const PGrid& grid,
                            const GlsSolveOptions& options, const TrigPolynomial* warm_start) {
  check_degree(f, n);
  const std::vector<double>& ps = grid.points;
  std::vector<double> psis(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) psis[i] = psi(ps[i]);
  if (auto exact = exact_case(f, n)) return *exact;

  const ResidualModel model(f, n);
  VectorXd c = to_vector(fourier_truncate(f, n));
  Residual res = model.evaluate(c);
  GlsObjective objective = gls_objective(res, ps, psis);
  if (warm_start != nullptr && warm_start->degree() <= n) {
    std::vector<double> params(static_cast<std::size_t>(2 * n + 1), 0.0);
    const auto given = warm_start->real_params();
    const auto m = static_cast<std::size_t>(warm_start->degree());
    params[0] = given[0];
    for (std::size_t k = 1; k <= m; ++k) {
      params[k] = given[k];
      params[static_cast<std::size_t>(n) + k] = given[m + k];
    }
    const VectorXd cw = Eigen::Map<const VectorXd>(params.data(), static_cast<Eigen::Index>(params.size()));
    Residual rw = model.evaluate(cw);
    const GlsObjective ow = gls_objective(rw, ps, psis);
    if (!ow.overflow && ow.value < objective.value) {
      c = cw;
      res = std::move(rw);
      objective = ow;
    }
  }

  ApproxError out;
  out.n = n;
  SolverStatus status = SolverStatus::kMaxIterations;
  if (objective.value == 0.0) status = SolverStatus::kExact;
  if (objective.overflow || !std::isfinite(objective.value)) status = SolverStatus::kStalled;

  // Smoothing continuation: eps shrinks by 10x each time the smoothed problem is solved.
  const double eps_min = 1e-10 * max_abs(res.r);
  double eps = 1e-3 * max_abs(res.r);
  GlsLinearization lin = linearize(res, ps, psis, eps);
  double value = lin.phi.maxCoeff();

  VectorXd lambda = VectorXd::Zero(lin.phi.size());
  if (lambda.size() > 0) {
    Eigen::Index imax = 0;
    lin.phi.maxCoeff(&imax);
    lambda(imax) = 1.0;
  }
  double mu = 0.0;
  std::vector<double> history{objective.value};
  int it = 0;
  double change = 0.0;

  while (status == SolverStatus::kMaxIterations && it < options.max_iterations) {
    ++it;
    MatrixXd h = lagrangian_hessian(res, lin, lambda, ps, psis);
    const double tr = std::max(h.trace() / static_cast<double>(h.rows()), 1e-300);
    h.diagonal().array() += std::max(mu, 1e-12) * tr;
    const MatrixXd y = h.ldlt().solve(lin.grad.transpose());  // d x M
    const MatrixXd g = lin.grad * y;
    lambda = simplex_qp(0.5 * (g + g.transpose()), lin.phi, lambda);
    const VectorXd dc = -y * lambda;
    const double pred = value - (lin.phi + lin.grad * dc).maxCoeff();
    const bool final_stage = eps <= eps_min;
    const double stage_tol = final_stage ? options.rel_tol * value : std::max(options.rel_tol * value, 1e-2 * eps);
    if (!(pred > stage_tol)) {
      if (final_stage) {
        status = SolverStatus::kConverged;
        change = pred / value;
        break;
      }
      eps = std::max(eps_min, 0.1 * eps);
      lin = linearize(res, ps, psis, eps);
      value = lin.phi.maxCoeff();
      continue;
    }
    double alpha = 1.0;
    bool accepted = false;
    Residual trial_res;
    GlsLinearization trial_lin;
    for (int ls = 0; ls < 40; ++ls) {
      trial_res = model.evaluate(c + alpha * dc);
      trial_lin = linearize(trial_res, ps, psis, eps);
      if (trial_lin.phi.maxCoeff() <= value - 0.1 * alpha * pred) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      mu = std::max(10.0 * mu, 1e-6);
      if (mu > 1e8) {
        status = SolverStatus::kStalled;
        change = pred / value;
      }
      continue;
    }
    mu = alpha == 1.0 ? 0.1 * mu : mu;
    if (mu < 1e-10) mu = 0.0;
    const GlsObjective trial_objective = gls_objective(trial_res, ps, psis);
    if (trial_objective.overflow) {
      status = SolverStatus::kStalled;
      break;
    }
    c += alpha * dc;
    res = std::move(trial_res);
    lin = std::move(trial_lin);
    value = lin.phi.maxCoeff();
    change = (objective.value - trial_objective.value) / objective.value;
    objective = trial_objective;
    history.push_back(objective.value);
    if (objective.value == 0.0) {
      status = SolverStatus::kExact;
      break;
    }
    const auto hs = history.size();
    const auto window = static_cast<std::size_t>(options.stall_window);
    if (hs > window && history[hs - 1 - window] - objective.value < options.stall_tol * objective.value) {
      status = SolverStatus::kConverged;
    }
  }

  out.value = objective.value;
  out.minimizer = to_polynomial(c);
  out.solver = {status, it, change};
  out.bracket_high = objective.value;
  out.bracket_low = options.compute_lower_bound ? gls_lower_bound(f, n, psi, grid, options.lp) : 0.0;
  return out;
}

}  // namespace glslab
