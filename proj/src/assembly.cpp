#include "kansa/assembly.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kansa {

namespace {

// Shared precondition checks. The boundary metadata is validated up front
// so the parallel fill loop cannot throw from inside an OpenMP region.
void check_assembly_inputs(const CollocationSet& grid,
                           const std::vector<Vec2>& centers) {
  if (!grid.tagged()) {
    throw std::invalid_argument("assemble: grid has not been classified");
  }
  if (static_cast<int>(centers.size()) != grid.size()) {
    throw std::invalid_argument("assemble: expected " + std::to_string(grid.size()) +
                                " centers, got " + std::to_string(centers.size()));
  }
  for (int idx : grid.boundary) {
    const BoundaryTag tag = grid.tags[idx];
    if (tag == BoundaryTag::Interior) {
      throw std::invalid_argument("assemble: boundary node tagged Interior");
    }
    if (tag == BoundaryTag::Neumann) {
      if (!grid.normals[idx]) {
        throw std::invalid_argument("assemble: Neumann node has no outward normal");
      }
      if (std::abs(grid.normals[idx]->norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("assemble: Neumann normal is not a unit vector");
      }
    }
  }
}

// Interior-row coefficients frozen once per row.
struct FrozenRow {
  Eigen::Matrix2d c;
  Vec2 b;
  double rho;
  Vec2 p;
};

}  // namespace

KansaSystem assemble(const EllipticProblem& problem, const CollocationSet& grid,
                     const RadialKernel& kernel, const std::vector<Vec2>& centers) {
  check_assembly_inputs(grid, centers);
  const int n_i = grid.interior_count();
  const int n_b = grid.boundary_count();
  const int n = grid.size();

  std::vector<FrozenRow> rows(n_i);
  for (int h = 0; h < n_i; ++h) {
    const Vec2& p = grid.interior_point(h);
    rows[h] = {problem.op.c(p), problem.op.b(p), problem.op.rho(p), p};
  }

  KansaSystem sys;
  sys.matrix.resize(n, n);
  sys.rhs.resize(n);
  sys.interior_rows = n_i;
  sys.boundary_rows = n_b;

  // Columns are independent and contiguous in the column-major storage, so
  // the center loop parallelizes without any write sharing.
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const Vec2 a = centers[i];
    double* col = sys.matrix.col(i).data();
    for (int h = 0; h < n_i; ++h) {
      col[h] = l_row_entry(rows[h].c, rows[h].b, rows[h].rho, kernel, a, rows[h].p);
    }
    for (int k = 0; k < n_b; ++k) {
      const int idx = grid.boundary[k];
      col[n_i + k] =
          apply_B_to_basis(kernel, a, grid.points[idx], grid.tags[idx], grid.normals[idx]);
    }
  }

  for (int h = 0; h < n_i; ++h) sys.rhs[h] = problem.f(grid.interior_point(h));
  for (int k = 0; k < n_b; ++k) sys.rhs[n_i + k] = problem.g(grid.boundary_point(k));
  return sys;
}

KansaSystem assemble_serial(const EllipticProblem& problem, const CollocationSet& grid,
                            const RadialKernel& kernel, const std::vector<Vec2>& centers) {
  check_assembly_inputs(grid, centers);
  const int n_i = grid.interior_count();
  const int n_b = grid.boundary_count();
  const int n = grid.size();

  KansaSystem sys;
  sys.matrix.resize(n, n);
  sys.rhs.resize(n);
  sys.interior_rows = n_i;
  sys.boundary_rows = n_b;

  for (int h = 0; h < n_i; ++h) {
    const Vec2& p = grid.interior_point(h);
    for (int i = 0; i < n; ++i) {
      sys.matrix(h, i) = apply_L_to_basis(problem.op, kernel, centers[i], p);
    }
    sys.rhs[h] = problem.f(p);
  }
  for (int k = 0; k < n_b; ++k) {
    const int idx = grid.boundary[k];
    const Vec2& q = grid.points[idx];
    for (int i = 0; i < n; ++i) {
      sys.matrix(n_i + k, i) =
          apply_B_to_basis(kernel, centers[i], q, grid.tags[idx], grid.normals[idx]);
    }
    sys.rhs[n_i + k] = problem.g(q);
  }
  return sys;
}

}  // namespace kansa
