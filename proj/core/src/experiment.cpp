#include "glslab/experiment.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#ifndef GLSLAB_VERSION
#define GLSLAB_VERSION "unknown"
#endif

namespace glslab {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, const std::string& where) {
  text = trim(text);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("config: " + where + ": not a number: '" + std::string(text) + "'");
  }
  return v;
}

int parse_int(std::string_view text, const std::string& where) {
  const double v = parse_number(text, where);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw std::invalid_argument("config: " + where + ": not an integer");
  return static_cast<int>(v);
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    if constexpr (std::is_same_v<T, int>) {
      out += std::to_string(values[i]);
    } else {
      out += shortest(values[i]);
    }
  }
  return out;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string version() { return GLSLAB_VERSION; }

std::vector<CatalogSpec> default_catalog() {
  std::vector<CatalogSpec> out;
  for (const char* s : {"constant", "cosk(k=1)", "holder(alpha=1)", "holder(alpha=0.5)", "singular(gamma=0.3)",
                        "logsing(s=0.5)", "logsing(s=1)", "step", "smooth_holder"}) {
    CatalogSpec spec = parse_catalog_spec(s);
    spec.params = catalog_parameters(spec.name, spec.params);
    out.push_back(spec);
  }
  return out;
}

ExperimentConfig default_config() {
  ExperimentConfig c;
  c.catalog = default_catalog();
  for (int k = 6; k >= 0; --k) c.deltas.push_back(std::numbers::pi / std::pow(2.0, k));
  return c;
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig c = default_config();
  bool catalog_seen = false;
  std::string section;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    const auto hash = line.find_first_of("#;");
    line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']') throw std::invalid_argument("config: " + where + ": unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("config: " + where + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    const std::string id = section + "." + key;

    if (id == "grid.n") {
      const int n = parse_int(value, where);
      if (n < 1) throw std::invalid_argument("config: " + where + ": grid size must be positive");
      c.grid_n = static_cast<std::size_t>(n);
    } else if (id == "pgrid.b") {
      c.pgrid.b = parse_number(value, where);
    } else if (id == "pgrid.count") {
      const int n = parse_int(value, where);
      if (n < 2) throw std::invalid_argument("config: " + where + ": p-grid count must be >= 2");
      c.pgrid.count = static_cast<std::size_t>(n);
    } else if (id == "pgrid.pmax") {
      c.pgrid.pmax = parse_number(value, where);
    } else if (id == "catalog.f") {
      if (!catalog_seen) c.catalog.clear();
      catalog_seen = true;
      CatalogSpec spec = parse_catalog_spec(value);
      spec.params = catalog_parameters(spec.name, spec.params);
      c.catalog.push_back(spec);
    } else if (id == "sweep.n" || id == "sweep.r") {
      std::vector<int>& dst = key == "n" ? c.ns : c.rs;
      dst.clear();
      for (auto item : split_list(value)) dst.push_back(parse_int(item, where));
    } else if (id == "sweep.delta") {
      c.deltas.clear();
      for (auto item : split_list(value)) c.deltas.push_back(parse_number(item, where));
    } else if (id == "output.dir") {
      c.out_dir = std::string(value);
    } else if (section == "tolerance") {
      c.tolerances[key] = parse_number(value, where);
    } else {
      throw std::invalid_argument("config: " + where + ": unknown key '" + id + "'");
    }
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_text(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "[grid]\nn = " << c.grid_n << "\n\n";
  out << "[pgrid]\nb = " << shortest(c.pgrid.b) << "\ncount = " << c.pgrid.count << "\npmax = " << shortest(c.pgrid.pmax)
      << "\n\n";
  out << "[catalog]\n";
  for (const auto& spec : c.catalog) out << "f = " << spec.label() << "\n";
  out << "\n[sweep]\nn = " << join(c.ns) << "\nr = " << join(c.rs) << "\ndelta = " << join(c.deltas) << "\n\n";
  out << "[output]\ndir = " << c.out_dir << "\n";
  if (!c.tolerances.empty()) {
    out << "\n[tolerance]\n";
    for (const auto& [k, v] : c.tolerances) out << k << " = " << shortest(v) << "\n";
  }
  return out.str();
}

void validate(const ExperimentConfig& c) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("config: " + msg); };
  if (c.grid_n < 64 || (c.grid_n & (c.grid_n - 1)) != 0) fail("grid size must be a power of two >= 64");
  if (!(c.pgrid.b > 1.0)) fail("p-grid support b must exceed 1");
  if (c.pgrid.count < 2) fail("p-grid count must be >= 2");
  if (!(c.pgrid.pmax > 1.0) || !std::isfinite(c.pgrid.pmax)) fail("p-grid pmax must be finite and > 1");
  if (c.catalog.empty()) fail("catalog is empty");
  for (const auto& spec : c.catalog) catalog_parameters(spec.name, spec.params);
  for (int n : c.ns) {
    if (n < 1 || static_cast<std::size_t>(2 * n + 1) > c.grid_n / 2) fail("sweep degree " + std::to_string(n) + " out of range");
  }
  for (int r : c.rs) {
    if (r < 0 || r > 8) fail("sweep order r must lie in [0, 8]");
  }
  for (double d : c.deltas) {
    if (!(d > 0.0) || d > 2.0 * std::numbers::pi) fail("sweep delta must lie in (0, 2 pi]");
  }
  if (c.out_dir.empty()) fail("output dir is empty");
  for (const auto& [k, v] : c.tolerances) {
    if (!(v > 0.0) || !std::isfinite(v)) fail("tolerance '" + k + "' must be positive and finite");
  }
}

double tolerance(const ExperimentConfig& config, const std::string& key, double fallback) {
  const auto it = config.tolerances.find(key);
  return it == config.tolerances.end() ? fallback : it->second;
}

std::string config_hash(const ExperimentConfig& config) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : to_text(config)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_cell(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string to_csv(const CsvTable& table, const std::string& hash) {
  std::string out;
  for (const auto& h : table.header) out += csv_escape(h) + ",";
  out += "config_hash\n";
  for (const auto& row : table.rows) {
    for (const auto& cell : row) out += csv_escape(cell) + ",";
    out += hash + "\n";
  }
  return out;
}

bool ReportBundle::passed() const {
  for (const auto& c : criteria) {
    if (c.required && !c.passed) return false;
  }
  return true;
}

nlohmann::json summary_json(const ReportBundle& b) {
  nlohmann::json j;
  j["suite"] = b.suite;
  j["provenance"] = {{"config_hash", b.config_hash}, {"version", version()}};
  j["tables"] = nlohmann::json::array();
  for (const auto& t : b.tables) j["tables"].push_back(t.name + ".csv");
  j["criteria"] = nlohmann::json::array();
  for (const auto& c : b.criteria) {
    j["criteria"].push_back({{"id", c.id},
                             {"name", c.name},
                             {"status", c.passed ? "PASS" : "FAIL"},
                             {"required", c.required},
                             {"detail", c.detail},
                             {"seconds", c.seconds},
                             {"metrics", c.metrics}});
  }
  j["passed"] = b.passed();
  return j;
}

void write_bundle(const ReportBundle& bundle, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& t : bundle.tables) {
    std::ofstream out(dir / (t.name + ".csv"));
    if (!out) throw std::runtime_error("cannot write " + (dir / (t.name + ".csv")).string());
    out << to_csv(t, bundle.config_hash);
  }
  std::ofstream out(dir / "summary.json");
  if (!out) throw std::runtime_error("cannot write " + (dir / "summary.json").string());
  out << summary_json(bundle).dump(2) << "\n";
}

}  // namespace glslab
