#ifndef GLSLAB_SUITES_HPP_
#define GLSLAB_SUITES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "glslab/experiment.hpp"

namespace glslab {

enum class Suite { kNorms, kModulus, kTheorem21, kTheorem31, kOrlicz, kAll };

/// "norms", "modulus", "theorem21", "theorem31", "orlicz", "all". Throws std::invalid_argument otherwise.
Suite parse_suite(std::string_view name);
std::string to_string(Suite s);

inline constexpr int kCriterionCount = 12;
std::string criterion_name(int id);
/// Criterion ids run by a suite.
std::vector<int> suite_criteria(Suite s);

struct CriterionRun {
  CriterionResult result;
  std::vector<CsvTable> tables;
};

/// Runs one acceptance criterion (1..12). Exceptions are caught and reported as a failure.
CriterionRun run_criterion(int id, const ExperimentConfig& config);

/// Descriptive tables plus the suite's criteria, deterministic for a given config.
ReportBundle run_suite(const ExperimentConfig& config, Suite suite);

}  // namespace glslab

#endif  // GLSLAB_SUITES_HPP_
