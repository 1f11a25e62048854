#include "kansa/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "kansa/assembly.hpp"
#include "kansa/geometry.hpp"
#include "kansa/pde_model.hpp"
#include "kansa/random_centers.hpp"

namespace kansa {

namespace {

// Round-trip formatting: 17 significant digits reproduce the double exactly.
std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string timestamp_utc() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

EllipticProblem problem_for_id(int id) {
  if (id == 1) return make_test_problem_1();
  if (id == 2) return make_test_problem_2();
  throw std::invalid_argument("problem must be 1 or 2, got " + std::to_string(id));
}

void validate_config(const ExperimentConfig& config) {
  if (config.problem_id != 1 && config.problem_id != 2) {
    throw std::invalid_argument("problem must be 1 or 2, got " +
                                std::to_string(config.problem_id));
  }
  if (config.grid_sizes.empty()) {
    throw std::invalid_argument("grid_sizes must not be empty");
  }
  for (int n : config.grid_sizes) {
    if (n < 3) {
      throw std::invalid_argument("grid size must be >= 3, got " + std::to_string(n));
    }
  }
  if (config.deltas.empty()) {
    throw std::invalid_argument("deltas must not be empty");
  }
  for (double d : config.deltas) {
    if (!(d >= 0.0)) {
      throw std::invalid_argument("delta must be >= 0, got " + fmt_g17(d));
    }
  }
  if (config.trials < 1) {
    throw std::invalid_argument("trials must be >= 1, got " +
                                std::to_string(config.trials));
  }
}

// All draws coincide when delta = 0, so one trial carries the whole cell.
int effective_trials(int trials, double delta) { return delta == 0.0 ? 1 : trials; }

CellSummary summarize(const std::vector<TrialRecord>& cell) {
  CellSummary s;
  s.problem_id = cell.front().problem_id;
  s.family = cell.front().family;
  s.exponent = cell.front().exponent;
  s.N = cell.front().N;
  s.delta = cell.front().delta;
  s.trials = static_cast<int>(cell.size());
  double acc = 0.0;
  int count = 0;
  for (const TrialRecord& rec : cell) {
    if (rec.status == SolveStatus::Singular) ++s.singular_count;
    if (rec.status == SolveStatus::NearSingular) ++s.nearsingular_count;
    if (rec.rmse) {
      acc += *rec.rmse;
      ++count;
    }
  }
  if (count > 0) s.mean_rmse = acc / count;
  return s;
}

void write_output_files(const std::string& path, const std::vector<TrialRecord>& records,
                        const std::vector<CellSummary>& summaries, bool timestamp_header) {
  std::ofstream data(path);
  if (!data) throw std::runtime_error("cannot open output file: " + path);
  write_records_csv(data, records, timestamp_header);
  const std::string spath = summary_path_for(path);
  std::ofstream summary(spath);
  if (!summary) throw std::runtime_error("cannot open output file: " + spath);
  write_summary_csv(summary, summaries, timestamp_header);
}

}  // namespace

double evaluate_solution(const RadialKernel& kernel, const std::vector<Vec2>& centers,
                         const Eigen::VectorXd& coefficients, const Vec2& p) {
  if (centers.empty() || static_cast<Eigen::Index>(centers.size()) != coefficients.size()) {
    throw std::invalid_argument("evaluate_solution: need one coefficient per center");
  }
  double acc = 0.0;
  for (size_t i = 0; i < centers.size(); ++i) {
    acc += coefficients[static_cast<Eigen::Index>(i)] * phi(kernel, (p - centers[i]).norm());
  }
  return acc;
}

Eigen::VectorXd evaluate_at_nodes(const RadialKernel& kernel,
                                  const std::vector<Vec2>& centers,
                                  const Eigen::VectorXd& coefficients,
                                  const std::vector<Vec2>& nodes) {
  if (centers.empty() || static_cast<Eigen::Index>(centers.size()) != coefficients.size()) {
    throw std::invalid_argument("evaluate_at_nodes: need one coefficient per center");
  }
  Eigen::VectorXd out(static_cast<Eigen::Index>(nodes.size()));
  const int n = static_cast<int>(nodes.size());
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    out[j] = evaluate_solution(kernel, centers, coefficients, nodes[j]);
  }
  return out;
}

Eigen::VectorXd evaluate_at_nodes_serial(const RadialKernel& kernel,
                                         const std::vector<Vec2>& centers,
                                         const Eigen::VectorXd& coefficients,
                                         const std::vector<Vec2>& nodes) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(nodes.size()));
  for (size_t j = 0; j < nodes.size(); ++j) {
    out[static_cast<Eigen::Index>(j)] =
        evaluate_solution(kernel, centers, coefficients, nodes[j]);
  }
  return out;
}

double rmse(const Eigen::VectorXd& exact, const Eigen::VectorXd& approx) {
  if (exact.size() == 0 || exact.size() != approx.size()) {
    throw std::invalid_argument("rmse: vectors must have equal nonzero length");
  }
  double acc = 0.0;
  for (Eigen::Index j = 0; j < exact.size(); ++j) {
    const double d = exact[j] - approx[j];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(exact.size()));
}

RunResult run_trials(const ExperimentConfig& config) {
  validate_config(config);
  const EllipticProblem problem = problem_for_id(config.problem_id);
  const RadialKernel kernel(config.family, config.exponent);
  if (!problem.exact_u) {
    throw std::invalid_argument("run_trials: problem has no exact solution");
  }

  RunResult out;
  for (int n : config.grid_sizes) {
    const CollocationSet grid = classify(tensor_grid(n), problem.partition);
    const int N = grid.size();
    Eigen::VectorXd exact(N);
    for (int j = 0; j < N; ++j) exact[j] = problem.exact_u(grid.points[j]);

    for (double delta : config.deltas) {
      const int m = effective_trials(config.trials, delta);
      std::vector<TrialRecord> cell(m);
      std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
      for (int l = 1; l <= m; ++l) {
        try {
          const std::vector<Vec2> centers =
              perturb_centers(grid, {delta, config.seed, static_cast<std::uint64_t>(l)});
          const KansaSystem sys = assemble(problem, grid, kernel, centers);
          const SolveResult res = solve(sys);
          TrialRecord rec;
          rec.problem_id = config.problem_id;
          rec.family = config.family;
          rec.exponent = config.exponent;
          rec.N = N;
          rec.delta = delta;
          rec.trial = l;
          rec.rcond = res.rcond_estimate;
          rec.status = res.status;
          if (res.coefficients) {
            const Eigen::VectorXd approx =
                evaluate_at_nodes(kernel, centers, *res.coefficients, grid.points);
            rec.rmse = rmse(exact, approx);
          }
          cell[l - 1] = rec;
        } catch (...) {
#pragma omp critical
          if (!error) error = std::current_exception();
        }
      }
      if (error) std::rethrow_exception(error);
      out.summaries.push_back(summarize(cell));
      out.records.insert(out.records.end(), cell.begin(), cell.end());
    }
  }

  if (!config.output.empty()) {
    write_output_files(config.output, out.records, out.summaries, config.timestamp_header);
  }
  return out;
}

CensusRunResult singularity_census_cmd(const ExperimentConfig& config) {
  validate_config(config);
  const EllipticProblem problem = problem_for_id(config.problem_id);
  const RadialKernel kernel(config.family, config.exponent);

  CensusRunResult out;
  for (int n : config.grid_sizes) {
    const CollocationSet grid = classify(tensor_grid(n), problem.partition);
    for (double delta : config.deltas) {
      const int m = effective_trials(config.trials, delta);
      const CensusReport report = smallest_pivot_census(m, [&](int l) {
        return assemble(problem, grid, kernel,
                        perturb_centers(grid, {delta, config.seed,
                                               static_cast<std::uint64_t>(l)}));
      });
      for (int l = 1; l <= m; ++l) {
        TrialRecord rec;
        rec.problem_id = config.problem_id;
        rec.family = config.family;
        rec.exponent = config.exponent;
        rec.N = grid.size();
        rec.delta = delta;
        rec.trial = l;
        rec.rcond = report.rcond[l - 1];
        rec.status = report.status[l - 1];
        out.records.push_back(rec);
      }
      out.cells.push_back({config.problem_id, config.family, config.exponent,
                           grid.size(), delta, report});
    }
  }

  if (!config.output.empty()) {
    std::vector<CellSummary> summaries;
    for (const CensusCell& cell : out.cells) {
      CellSummary s;
      s.problem_id = cell.problem_id;
      s.family = cell.family;
      s.exponent = cell.exponent;
      s.N = cell.N;
      s.delta = cell.delta;
      s.trials = cell.report.trials;
      s.singular_count = cell.report.singular_count;
      s.nearsingular_count = cell.report.nearsingular_count;
      summaries.push_back(s);
    }
    write_output_files(config.output, out.records, summaries, config.timestamp_header);
  }
  return out;
}

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                       bool timestamp_header) {
  if (timestamp_header) out << "# generated " << timestamp_utc() << "\n";
  out << "problem,family,k,N,delta,trial,rmse,rcond,status\n";
  for (const TrialRecord& r : records) {
    out << r.problem_id << ',' << to_string(r.family) << ',' << r.exponent << ','
        << r.N << ',' << fmt_g17(r.delta) << ',' << r.trial << ','
        << (r.rmse ? fmt_g17(*r.rmse) : std::string()) << ',' << fmt_g17(r.rcond)
        << ',' << to_string(r.status) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summaries,
                       bool timestamp_header) {
  if (timestamp_header) out << "# generated " << timestamp_utc() << "\n";
  out << "problem,family,k,N,delta,mean_rmse,singular_count,nearsingular_count\n";
  for (const CellSummary& s : summaries) {
    out << s.problem_id << ',' << to_string(s.family) << ',' << s.exponent << ','
        << s.N << ',' << fmt_g17(s.delta) << ','
        << (s.mean_rmse ? fmt_g17(*s.mean_rmse) : std::string()) << ','
        << s.singular_count << ',' << s.nearsingular_count << '\n';
  }
}

std::string summary_path_for(const std::string& output_path) {
  const size_t slash = output_path.find_last_of('/');
  const size_t start = slash == std::string::npos ? 0 : slash + 1;
  const size_t dot = output_path.find_last_of('.');
  if (dot == std::string::npos || dot <= start) return output_path + "_summary";
  return output_path.substr(0, dot) + "_summary" + output_path.substr(dot);
}

void print_summary_table(std::ostream& out, const std::vector<CellSummary>& summaries) {
  out << std::left << std::setw(8) << "problem" << std::setw(8) << "family"
      << std::setw(4) << "k" << std::setw(7) << "N" << std::setw(10) << "delta"
      << std::setw(12) << "mean_rmse" << std::setw(10) << "singular"
      << std::setw(14) << "nearsingular" << '\n';
  for (const CellSummary& s : summaries) {
    out << std::left << std::setw(8) << s.problem_id << std::setw(8)
        << to_string(s.family) << std::setw(4) << s.exponent << std::setw(7) << s.N
        << std::setw(10) << std::setprecision(1) << std::scientific << s.delta
        << std::setw(12);
    if (s.mean_rmse) {
      out << *s.mean_rmse;
    } else {
      out << "-";
    }
    out << std::setw(10) << s.singular_count << std::setw(14) << s.nearsingular_count
        << '\n';
    out << std::defaultfloat;
  }
}

void print_census_table(std::ostream& out, const CensusRunResult& result) {
  out << std::left << std::setw(8) << "problem" << std::setw(8) << "family"
      << std::setw(4) << "k" << std::setw(7) << "N" << std::setw(10) << "delta"
      << std::setw(8) << "trials" << std::setw(10) << "singular" << std::setw(14)
      << "nearsingular" << std::setw(12) << "rcond_min" << std::setw(12)
      << "rcond_med" << std::setw(12) << "rcond_max" << '\n';
  for (const CensusCell& c : result.cells) {
    out << std::left << std::setw(8) << c.problem_id << std::setw(8)
        << to_string(c.family) << std::setw(4) << c.exponent << std::setw(7) << c.N
        << std::setw(10) << std::setprecision(1) << std::scientific << c.delta
        << std::defaultfloat << std::setw(8) << c.report.trials << std::setw(10)
        << c.report.singular_count << std::setw(14) << c.report.nearsingular_count
        << std::setprecision(1) << std::scientific << std::setw(12)
        << c.report.rcond_min << std::setw(12) << c.report.rcond_median
        << std::setw(12) << c.report.rcond_max << std::defaultfloat << '\n';
  }
}

}  // namespace kansa
