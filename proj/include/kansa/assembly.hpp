#pragma once

#include <vector>

#include "kansa/geometry.hpp"
#include "kansa/pde_model.hpp"
#include "kansa/point.hpp"
#include "kansa/polyharmonic.hpp"

namespace kansa {

// Square collocation system K lambda = rhs. Rows are ordered interior
// first (L rows), then boundary (B rows); column i belongs to the basis
// function centered at centers[i], which follows the grid's node order.
struct KansaSystem {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
  int interior_rows = 0;
  int boundary_rows = 0;
};

// Builds the collocation system. Requires a classify()d grid and exactly
// one center per node; throws std::invalid_argument otherwise. The
// OpenMP-parallel version splits the work over columns (each column is
// contiguous and written by one thread, so results are deterministic).
KansaSystem assemble(const EllipticProblem& problem, const CollocationSet& grid,
                     const RadialKernel& kernel, const std::vector<Vec2>& centers);

// Plain-loop reference used by the tests and the benchmark; produces the
// same bits as assemble().
KansaSystem assemble_serial(const EllipticProblem& problem, const CollocationSet& grid,
                            const RadialKernel& kernel, const std::vector<Vec2>& centers);

}  // namespace kansa
