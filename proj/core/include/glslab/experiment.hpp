#ifndef GLSLAB_EXPERIMENT_HPP_
#define GLSLAB_EXPERIMENT_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "glslab/catalog.hpp"
#include "glslab/psi_space.hpp"

namespace glslab {

std::string version();

/// Settings of a gls_lab run. Text form:
///
///   [grid]      n = 1024
///   [pgrid]     b = inf / count = 64 / pmax = 256
///   [catalog]   f = holder(alpha=1)        (one line per function)
///   [sweep]     n = 4, 8, 16 / r = 0, 1, 2 / delta = 0.1, 0.2
///   [output]    dir = gls_lab_out
///   [tolerance] bracket = 1e-06            (any key = number)
struct ExperimentConfig {
  std::size_t grid_n = 1024;
  PGridPolicy pgrid{};
  std::vector<CatalogSpec> catalog;
  std::vector<int> ns{4, 8, 16};
  std::vector<int> rs{0, 1, 2};
  std::vector<double> deltas;
  std::string out_dir = "gls_lab_out";
  ParameterMap tolerances;

  bool operator==(const ExperimentConfig&) const = default;
};

std::vector<CatalogSpec> default_catalog();
ExperimentConfig default_config();

/// Unknown sections or keys, malformed numbers and precondition violations throw std::invalid_argument.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string to_text(const ExperimentConfig& config);
void validate(const ExperimentConfig& config);

/// Tolerance by key, `fallback` when the config does not override it.
double tolerance(const ExperimentConfig& config, const std::string& key, double fallback);

/// 64-bit FNV-1a of to_text(config), 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

/// 12 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format_cell(double v);

struct CsvTable {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Header plus rows, each row followed by the config hash column.
std::string to_csv(const CsvTable& table, const std::string& hash);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool required = true;
  std::string detail;
  double seconds = 0.0;
  nlohmann::json metrics = nlohmann::json::object();
};

struct ReportBundle {
  std::string suite;
  std::string config_hash;
  std::vector<CsvTable> tables;
  std::vector<CriterionResult> criteria;

  /// True when no required criterion failed.
  bool passed() const;
};

nlohmann::json summary_json(const ReportBundle& bundle);

/// Writes <name>.csv for every table and summary.json into `dir` (created if missing).
void write_bundle(const ReportBundle& bundle, const std::filesystem::path& dir);

}  // namespace glslab

#endif  // GLSLAB_EXPERIMENT_HPP_
