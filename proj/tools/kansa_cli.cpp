#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kansa/experiment.hpp"
#include "kansa/fd_check.hpp"

namespace {

// The sweep options are shared by `run` and `census`, so they live on the
// top-level app; the subcommands enable fallthrough so the flags may be
// written before or after the subcommand name. The config file must also be
// handled by the top-level app: CLI11 only processes set_config there, a
// subcommand-level one is silently ignored.
void add_experiment_options(CLI::App& app, kansa::ExperimentConfig& config,
                            std::string& family, bool& no_timestamp) {
  app.add_option("--problem", config.problem_id, "Test problem id (1 or 2)")
      ->capture_default_str();
  app.add_option("--family", family, "Basis family: TPS or RP")
      ->check(CLI::IsMember({"TPS", "RP"}))
      ->capture_default_str();
  app.add_option("--k", config.exponent, "Basis exponent")->capture_default_str();
  app.add_option("--grid_sizes", config.grid_sizes,
                 "Per-side node counts n (comma separated; N = n^2)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--deltas", config.deltas,
                 "Center perturbation half-widths (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--trials", config.trials, "Center draws per (N, delta) cell")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Base RNG seed")->capture_default_str();
  app.add_option("--output", config.output,
                 "Data CSV path; the summary CSV lands next to it");
  app.add_flag("--no-timestamp", no_timestamp,
               "Omit the generated-at comment line in CSV files");
  app.set_config("--config", "", "Read options from a TOML/INI file (top-level keys; "
                                 "command-line flags win)");
}

void print_effective_config(const kansa::ExperimentConfig& config) {
  std::cout << "problem=" << config.problem_id
            << " family=" << kansa::to_string(config.family) << " k=" << config.exponent
            << " grid_sizes=";
  for (size_t i = 0; i < config.grid_sizes.size(); ++i) {
    std::cout << (i ? "," : "") << config.grid_sizes[i];
  }
  std::cout << " deltas=";
  for (size_t i = 0; i < config.deltas.size(); ++i) {
    std::cout << (i ? "," : "") << config.deltas[i];
  }
  std::cout << " trials=" << config.trials << " seed=" << config.seed << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kansa collocation on the unit square: polyharmonic bases, random centers"};
  app.require_subcommand(1);

  kansa::ExperimentConfig config;
  std::string family = "TPS";
  bool no_timestamp = false;

  add_experiment_options(app, config, family, no_timestamp);
  CLI::App* run = app.add_subcommand("run", "Solve every cell of the sweep and report mean RMSE");
  run->fallthrough();
  CLI::App* census = app.add_subcommand(
      "census", "Factor every cell's trials and count (near-)singular systems");
  census->fallthrough();
  CLI::App* check = app.add_subcommand(
      "check", "Cross-check derivative and operator code against finite differences");
  check->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    config.family = kansa::radial_family_from_string(family);
    config.timestamp_header = !no_timestamp;

    if (run->parsed()) {
      print_effective_config(config);
      const kansa::RunResult result = kansa::run_trials(config);
      kansa::print_summary_table(std::cout, result.summaries);
      if (!config.output.empty()) {
        std::cout << "wrote " << config.output << " and "
                  << kansa::summary_path_for(config.output) << "\n";
      }
    } else if (census->parsed()) {
      print_effective_config(config);
      const kansa::CensusRunResult result = kansa::singularity_census_cmd(config);
      kansa::print_census_table(std::cout, result);
      if (!config.output.empty()) {
        std::cout << "wrote " << config.output << " and "
                  << kansa::summary_path_for(config.output) << "\n";
      }
    } else if (check->parsed()) {
      bool all_pass = true;
      for (const kansa::fd::CheckResult& r : kansa::fd::run_self_checks()) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (max err "
                  << r.max_error << ", tol " << r.tolerance << ", " << r.samples
                  << " samples)\n";
        all_pass = all_pass && r.pass;
      }
      if (!all_pass) return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
