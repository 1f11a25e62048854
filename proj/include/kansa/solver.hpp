#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kansa/assembly.hpp"

namespace kansa {

// Singular means LU hit an exactly zero pivot and no solution was computed.
// NearSingular flags rcond below 1e-15: the solution is returned but its
// accuracy is suspect. Ok systems solve to a small relative residual.
enum class SolveStatus { Ok, NearSingular, Singular };

const char* to_string(SolveStatus status);

inline constexpr double kNearSingularRcond = 1e-15;

struct SolveResult {
  std::optional<Eigen::VectorXd> coefficients;  // absent iff Singular
  double rcond_estimate = 0.0;                  // clamped to [0, 1]
  double relative_residual = 0.0;               // ||K x - rhs|| / (||K|| ||x|| + ||rhs||), inf norms
  SolveStatus status = SolveStatus::Singular;
};

// Dense solve by partial-pivot LU. Throws std::invalid_argument for a
// non-square system, a mis-sized rhs, or non-finite entries.
SolveResult solve(const KansaSystem& system);

// Factors one system per trial (no solve) and tallies how close each came
// to singular. make_system receives the 1-based trial index and must be
// safe to call concurrently; rcond/status are indexed by trial - 1.
struct CensusReport {
  int trials = 0;
  int singular_count = 0;
  int nearsingular_count = 0;
  double rcond_min = 0.0;
  double rcond_median = 0.0;
  double rcond_max = 0.0;
  std::vector<double> rcond;
  std::vector<SolveStatus> status;
};

CensusReport smallest_pivot_census(int trials,
                                   const std::function<KansaSystem(int)>& make_system);

}  // namespace kansa
