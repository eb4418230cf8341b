#include "glslab/catalog.hpp"

#include <cctype>
#include <charconv>
#include <complex>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace glslab {
namespace {

struct Family {
  std::string name;
  ParameterMap defaults;
  std::string growth;      // first listing line: "name(params): growth"
  std::string definition;  // second listing line
};

const std::vector<Family>& families() {
  static const std::vector<Family> list = {
      {"constant", {{"c", 1.0}}, "constant(c): |f|_p = |c| for every p", "f = c"},
      {"cosk", {{"k", 1.0}}, "cosk(k): bounded, |f|_2 = 1/sqrt(2)", "f = cos(k x), k >= 1 integer"},
      {"holder", {{"alpha", 1.0}}, "holder(alpha): bounded, Hoelder of order alpha",
       "f = |sin(x/2)|^alpha, 0 < alpha <= 1"},
      {"singular", {{"gamma", 0.5}}, "singular(gamma): support endpoint b = 1/gamma",
       "f = |2 sin(x/2)|^(-gamma), 0 < gamma < 1; quadrature trusted for p <= 0.9/gamma"},
      {"logsing", {{"s", 0.5}}, "logsing(s): |f|_p ≍ c·p^s", "f = (-ln|2 sin(x/2)|)_+^s, s > 0"},
      {"step", {{"delta", kPi / 2.0}, {"start", 0.0}}, "step(delta, start): |f|_p = (delta/(2 pi))^(1/p)",
       "indicator of the arc [start, start + delta), 0 < delta <= 2 pi"},
      {"smooth_holder", {{"alpha", 1.0}, {"degree", 32.0}}, "smooth_holder(alpha, degree): band-limited, bounded",
       "Fejer mean of order `degree` of holder(alpha)"},
  };
  return list;
}

const Family& find_family(std::string_view name) {
  for (const auto& f : families()) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown catalog function: " + std::string(name));
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text) {
  text = trim(text);
  if (text == "pi") return kPi;
  if (text == "2pi") return kTwoPi;
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("catalog parameter out of range: " + what);
}

double log_singular_value(double x, double s) {
  const double v = -std::log(std::abs(2.0 * std::sin(0.5 * x)));
  return v > 0.0 ? std::pow(v, s) : 0.0;
}

}  // namespace

std::string CatalogSpec::label() const {
  if (params.empty()) return name;
  std::string out = name + "(";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out += ",";
    out += k + "=" + format_number(v);
    first = false;
  }
  return out + ")";
}

CatalogSpec parse_catalog_spec(std::string_view text) {
  text = trim(text);
  CatalogSpec spec;
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    spec.name = std::string(text);
  } else {
    if (text.back() != ')') throw std::invalid_argument("catalog spec missing ')': " + std::string(text));
    spec.name = std::string(trim(text.substr(0, open)));
    std::string_view body = text.substr(open + 1, text.size() - open - 2);
    while (!trim(body).empty()) {
      const auto comma = body.find(',');
      std::string_view item = trim(body.substr(0, comma));
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw std::invalid_argument("catalog parameter must be key=value: " + std::string(item));
      }
      spec.params[std::string(trim(item.substr(0, eq)))] = parse_number(item.substr(eq + 1));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
  }
  if (spec.name.empty()) throw std::invalid_argument("empty catalog name");
  find_family(spec.name);
  return spec;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& f : families()) out.push_back(f.name);
    return out;
  }();
  return names;
}

ParameterMap catalog_parameters(std::string_view name, const ParameterMap& params) {
  const Family& fam = find_family(name);
  ParameterMap out = fam.defaults;
  for (const auto& [k, v] : params) {
    if (!fam.defaults.contains(k)) {
      throw std::invalid_argument("unknown parameter '" + k + "' for " + fam.name);
    }
    out[k] = v;
  }
  return out;
}

bool catalog_is_singular(std::string_view name) { return name == "singular" || name == "logsing"; }

PeriodicGrid catalog_grid(std::string_view name, std::size_t n) {
  return catalog_is_singular(name) ? PeriodicGrid::midpoint(n) : PeriodicGrid(n);
}

PeriodicFunction sample_catalog(std::string_view name, const ParameterMap& params, const PeriodicGrid& grid) {
  const ParameterMap p = catalog_parameters(name, params);
  const std::size_t n = grid.size();
  std::vector<double> s(n);
  const auto x = grid.nodes();

  if (name == "constant") {
    require(std::isfinite(p.at("c")), "c must be finite");
    s.assign(n, p.at("c"));
    return PeriodicFunction(grid, std::move(s));
  }
  if (name == "cosk") {
    const double k = p.at("k");
    require(k >= 1.0 && k == std::floor(k) && 2.0 * k + 1.0 <= static_cast<double>(n),
            "k must be an integer in [1, (N-1)/2]");
    for (std::size_t j = 0; j < n; ++j) s[j] = std::cos(k * x[j]);
    return PeriodicFunction(grid, std::move(s));
  }
  if (name == "holder" || name == "smooth_holder") {
    const double alpha = p.at("alpha");
    require(alpha > 0.0 && alpha <= 1.0, "alpha must lie in (0, 1]");
    for (std::size_t j = 0; j < n; ++j) s[j] = std::pow(std::abs(std::sin(0.5 * x[j])), alpha);
    PeriodicFunction raw(grid, std::move(s));
    if (name == "holder") return raw;
    const double deg = p.at("degree");
    require(deg >= 0.0 && deg == std::floor(deg) && 2.0 * deg + 1.0 <= static_cast<double>(n),
            "degree must be an integer with 2*degree+1 <= N");
    const int m = static_cast<int>(deg);
    std::vector<std::complex<double>> fejer(static_cast<std::size_t>(2 * m + 1));
    for (int k = -m; k <= m; ++k) {
      fejer[static_cast<std::size_t>(k + m)] = 1.0 - std::abs(k) / (m + 1.0);
    }
    return convolve(raw, TrigPolynomial(std::move(fejer)));
  }
  if (name == "singular") {
    const double gamma = p.at("gamma");
    require(gamma > 0.0 && gamma < 1.0, "gamma must lie in (0, 1)");
    if (grid.offset() <= 0.0) {
      throw std::invalid_argument("singular(gamma) needs a grid with positive offset (use catalog_grid)");
    }
    auto part = [gamma](double t) { return std::pow(std::abs(2.0 * std::sin(0.5 * t)), -gamma); };
    for (std::size_t j = 0; j < n; ++j) s[j] = part(x[j]);
    return PeriodicFunction(grid, std::move(s), part);
  }
  if (name == "logsing") {
    const double sp = p.at("s");
    require(sp > 0.0 && std::isfinite(sp), "s must be positive");
    if (grid.offset() <= 0.0) {
      throw std::invalid_argument("logsing(s) needs a grid with positive offset (use catalog_grid)");
    }
    auto part = [sp](double t) { return log_singular_value(t, sp); };
    for (std::size_t j = 0; j < n; ++j) s[j] = part(x[j]);
    return PeriodicFunction(grid, std::move(s), part);
  }
  if (name == "step") {
    const double delta = p.at("delta");
    const double start = p.at("start");
    require(delta > 0.0 && delta <= kTwoPi, "delta must lie in (0, 2 pi]");
    require(std::isfinite(start), "start must be finite");
    for (std::size_t j = 0; j < n; ++j) {
      double rel = std::fmod(x[j] - start, kTwoPi);
      if (rel < 0.0) rel += kTwoPi;
      if (rel > kTwoPi - 1e-12) rel = 0.0;
      s[j] = rel < delta - 1e-12 ? 1.0 : 0.0;
    }
    return PeriodicFunction(grid, std::move(s));
  }
  throw std::invalid_argument("unknown catalog function: " + std::string(name));
}

PeriodicFunction sample_catalog(const CatalogSpec& spec, const PeriodicGrid& grid) {
  return sample_catalog(spec.name, spec.params, grid);
}

double reliable_p_max(const CatalogSpec& spec) {
  if (spec.name == "singular") return 0.9 / catalog_parameters(spec.name, spec.params).at("gamma");
  return std::numeric_limits<double>::infinity();
}

std::string list_catalog() {
  std::ostringstream out;
  for (const auto& f : families()) {
    out << f.growth << "\n    " << f.definition << "\n";
    out << "    defaults:";
    for (const auto& [k, v] : f.defaults) out << " " << k << "=" << format_number(v);
    out << "\n";
  }
  return out.str();
}

}  // namespace glslab
