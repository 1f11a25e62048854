#include "kansa/solver.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <utility>

#include <Eigen/LU>

namespace kansa {

namespace {

// Status and clamped rcond of a computed factorization. An exactly zero
// pivot on the U diagonal means LU broke down (the matrix is singular to
// working precision); anything else gets the estimator's verdict.
std::pair<SolveStatus, double> classify_lu(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu) {
  const auto diag = lu.matrixLU().diagonal();
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (diag[i] == 0.0) return {SolveStatus::Singular, 0.0};
  }
  double rc = lu.rcond();
  if (!(rc > 0.0)) rc = 0.0;
  rc = std::min(rc, 1.0);
  return {rc < kNearSingularRcond ? SolveStatus::NearSingular : SolveStatus::Ok, rc};
}

}  // namespace

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Ok: return "Ok";
    case SolveStatus::NearSingular: return "NearSingular";
    case SolveStatus::Singular: return "Singular";
  }
  return "?";
}

SolveResult solve(const KansaSystem& system) {
  const Eigen::MatrixXd& K = system.matrix;
  if (K.rows() == 0 || K.rows() != K.cols()) {
    throw std::invalid_argument("solve: matrix must be square and nonempty");
  }
  if (system.rhs.size() != K.rows()) {
    throw std::invalid_argument("solve: rhs length does not match the matrix");
  }
  if (!K.allFinite() || !system.rhs.allFinite()) {
    throw std::invalid_argument("solve: system has non-finite entries");
  }

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(K);
  SolveResult out;
  std::tie(out.status, out.rcond_estimate) = classify_lu(lu);
  if (out.status == SolveStatus::Singular) return out;

  Eigen::VectorXd x = lu.solve(system.rhs);
  const double norm_k = K.cwiseAbs().rowwise().sum().maxCoeff();
  const double denom =
      norm_k * x.lpNorm<Eigen::Infinity>() + system.rhs.lpNorm<Eigen::Infinity>();
  const double resid = (K * x - system.rhs).lpNorm<Eigen::Infinity>();
  out.relative_residual = denom > 0.0 ? resid / denom : resid;
  out.coefficients = std::move(x);
  return out;
}

CensusReport smallest_pivot_census(int trials,
                                   const std::function<KansaSystem(int)>& make_system) {
  if (trials < 1) {
    throw std::invalid_argument("smallest_pivot_census: need at least one trial");
  }
  CensusReport report;
  report.trials = trials;
  report.rcond.resize(trials);
  report.status.resize(trials);

  // Factor trials in parallel; exceptions cannot cross the OpenMP region,
  // so keep the first one and rethrow after the loop.
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int l = 1; l <= trials; ++l) {
    try {
      const KansaSystem sys = make_system(l);
      if (sys.matrix.rows() == 0 || sys.matrix.rows() != sys.matrix.cols() ||
          !sys.matrix.allFinite()) {
        throw std::invalid_argument("smallest_pivot_census: bad trial matrix");
      }
      const Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.matrix);
      const auto [status, rc] = classify_lu(lu);
      report.rcond[l - 1] = rc;
      report.status[l - 1] = status;
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  for (SolveStatus s : report.status) {
    if (s == SolveStatus::Singular) ++report.singular_count;
    if (s == SolveStatus::NearSingular) ++report.nearsingular_count;
  }
  std::vector<double> sorted = report.rcond;
  std::sort(sorted.begin(), sorted.end());
  report.rcond_min = sorted.front();
  report.rcond_max = sorted.back();
  const size_t mid = sorted.size() / 2;
  report.rcond_median = sorted.size() % 2 == 1
                            ? sorted[mid]
                            : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return report;
}

}  // namespace kansa
