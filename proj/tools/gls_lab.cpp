// gls_lab: runs the verification suites and writes CSV tables plus summary.json.
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "glslab/catalog.hpp"
#include "glslab/experiment.hpp"
#include "glslab/suites.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::optional<double> pmax;
  std::optional<std::size_t> grid_n;
};

glslab::ExperimentConfig resolve(const Overrides& o) {
  glslab::ExperimentConfig c = o.config_path.empty() ? glslab::default_config() : glslab::load_config(o.config_path);
  if (o.pmax) c.pgrid.pmax = *o.pmax;
  if (o.grid_n) c.grid_n = *o.grid_n;
  glslab::validate(c);
  return c;
}

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "Experiment config file")->check(CLI::ExistingFile);
  cmd->add_option("--pmax", o.pmax, "Truncation of the p-grid for b = inf");
  cmd->add_option("--grid-n", o.grid_n, "Number of grid points N");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grand Lebesgue space laboratory"};
  app.set_version_flag("--version", glslab::version());
  app.require_subcommand(1);

  Overrides run_opts;
  std::string suite = "all";
  std::string out_dir;
  CLI::App* run = app.add_subcommand("run", "Run a suite and write its report bundle");
  add_overrides(run, run_opts);
  run->add_option("--suite", suite, "norms, modulus, theorem21, theorem31, orlicz or all");
  run->add_option("--out", out_dir, "Output directory (overrides the config)");

  app.add_subcommand("catalog", "List the function catalog");

  Overrides check_opts;
  CLI::App* check = app.add_subcommand("config-check", "Validate a config and print its canonical form and hash");
  add_overrides(check, check_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("catalog")) {
      std::cout << glslab::list_catalog();
      return 0;
    }
    if (app.got_subcommand("config-check")) {
      const glslab::ExperimentConfig c = resolve(check_opts);
      std::cout << glslab::to_text(c) << "\n# hash " << glslab::config_hash(c) << "\n";
      return 0;
    }
    glslab::ExperimentConfig c = resolve(run_opts);
    if (!out_dir.empty()) c.out_dir = out_dir;
    const glslab::Suite s = glslab::parse_suite(suite);
    const glslab::ReportBundle bundle = glslab::run_suite(c, s);
    glslab::write_bundle(bundle, c.out_dir);
    for (const auto& r : bundle.criteria) {
      std::printf("%s  %2d %-24s %7.1fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                  r.detail.c_str());
    }
    std::printf("wrote %zu tables and summary.json to %s\n", bundle.tables.size(), c.out_dir.c_str());
    return bundle.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "gls_lab: " << e.what() << "\n";
    return 2;
  }
}
