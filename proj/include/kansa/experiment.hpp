#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kansa/point.hpp"
#include "kansa/polyharmonic.hpp"
#include "kansa/solver.hpp"

namespace kansa {

// One sweep: for every (grid size, delta) cell, `trials` independent center
// draws are solved and summarized. grid_sizes holds per-side node counts n
// (so N = n^2 unknowns). Trial l uses RNG stream l, which makes every record
// reproducible from (seed, l) alone. delta = 0 runs a single trial, since
// all draws would repeat the unperturbed grid.
struct ExperimentConfig {
  int problem_id = 1;  // 1 = Poisson/Dirichlet, 2 = convection-diffusion/mixed
  RadialFamily family = RadialFamily::TPS;
  int exponent = 4;
  std::vector<int> grid_sizes = {11, 21};
  std::vector<double> deltas = {0.0, 0.001, 0.01, 0.1};
  int trials = 100;
  std::uint64_t seed = 1;
  std::string output;  // data CSV path; empty writes nothing
  bool timestamp_header = true;
};

struct TrialRecord {
  int problem_id = 0;
  RadialFamily family = RadialFamily::TPS;
  int exponent = 0;
  int N = 0;
  double delta = 0.0;
  int trial = 0;               // 1-based; doubles as the RNG stream id
  std::optional<double> rmse;  // absent when the trial's system was singular
  double rcond = 0.0;
  SolveStatus status = SolveStatus::Singular;
};

// Per-cell aggregate. mean_rmse averages the non-singular trials (absent if
// every trial was singular, or for census runs, which never solve).
struct CellSummary {
  int problem_id = 0;
  RadialFamily family = RadialFamily::TPS;
  int exponent = 0;
  int N = 0;
  double delta = 0.0;
  int trials = 0;
  std::optional<double> mean_rmse;
  int singular_count = 0;
  int nearsingular_count = 0;
};

struct RunResult {
  std::vector<TrialRecord> records;
  std::vector<CellSummary> summaries;
};

// Interpolant value sum_i coefficients[i] phi(||p - centers[i]||) at one
// point; terms accumulate in center order.
double evaluate_solution(const RadialKernel& kernel, const std::vector<Vec2>& centers,
                         const Eigen::VectorXd& coefficients, const Vec2& p);

// Batched evaluation, OpenMP-parallel over nodes (each node's sum is still
// serial, so the result matches the serial version bit for bit).
Eigen::VectorXd evaluate_at_nodes(const RadialKernel& kernel,
                                  const std::vector<Vec2>& centers,
                                  const Eigen::VectorXd& coefficients,
                                  const std::vector<Vec2>& nodes);
Eigen::VectorXd evaluate_at_nodes_serial(const RadialKernel& kernel,
                                         const std::vector<Vec2>& centers,
                                         const Eigen::VectorXd& coefficients,
                                         const std::vector<Vec2>& nodes);

// Root mean square of (exact - approx); both vectors must have equal,
// nonzero length.
double rmse(const Eigen::VectorXd& exact, const Eigen::VectorXd& approx);

// Full experiment: assemble, solve, and evaluate every trial of every cell,
// writing the data and summary CSVs when config.output is set. Trials run
// in parallel into preallocated slots, so records always come back in
// (cell, trial) order.
RunResult run_trials(const ExperimentConfig& config);

// Nonsingularity census: like run_trials but only factoring each trial's
// matrix, recording rcond and status. Records carry no rmse.
struct CensusCell {
  int problem_id = 0;
  RadialFamily family = RadialFamily::TPS;
  int exponent = 0;
  int N = 0;
  double delta = 0.0;
  CensusReport report;
};

struct CensusRunResult {
  std::vector<TrialRecord> records;
  std::vector<CensusCell> cells;
};

CensusRunResult singularity_census_cmd(const ExperimentConfig& config);

// CSV writers. The data file has one row per trial,
//   problem,family,k,N,delta,trial,rmse,rcond,status
// and the summary one row per cell,
//   problem,family,k,N,delta,mean_rmse,singular_count,nearsingular_count
// with numbers printed to round-trip precision and optional fields left
// empty. timestamp_header prepends a "# generated <time>" comment, which
// reruns must suppress to get byte-identical files.
void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                       bool timestamp_header);
void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summaries,
                       bool timestamp_header);

// results.csv -> results_summary.csv (extension preserved, "_summary" added).
std::string summary_path_for(const std::string& output_path);

// Console tables, two significant digits.
void print_summary_table(std::ostream& out, const std::vector<CellSummary>& summaries);
void print_census_table(std::ostream& out, const CensusRunResult& result);

}  // namespace kansa
