#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kansa/geometry.hpp"
#include "kansa/point.hpp"
#include "kansa/polyharmonic.hpp"

namespace kansa {

// Second-order operator L u = sum_ij c_ij d^2u/dx_i dx_j + <b, grad u> + rho u
// with position-dependent coefficients.
struct EllipticOperatorSpec {
  std::function<Eigen::Matrix2d(const Vec2&)> c;
  std::function<Vec2(const Vec2&)> b;
  std::function<double(const Vec2&)> rho;
};

// Boundary value problem L u = f in the domain, u = g on the Dirichlet
// portion, du/dnu = g on the Neumann portion. exact_u is present for
// manufactured problems and drives the error reporting.
struct EllipticProblem {
  EllipticOperatorSpec op;
  std::function<double(const Vec2&)> f;
  std::function<double(const Vec2&)> g;
  BoundaryPartitionSpec partition;
  std::function<double(const Vec2&)> exact_u;
};

// Interior row entry for coefficients already evaluated at p. Shared by
// apply_L_to_basis and the assembly loops, which freeze c, b, rho once per
// row, so both routes produce identical bits.
inline double l_row_entry(const Eigen::Matrix2d& c, const Vec2& b, double rho,
                          const RadialKernel& kernel, const Vec2& a, const Vec2& p) {
  const Vec2 diff = p - a;
  const double r = diff.norm();
  const RadialParts parts = radial_parts(kernel, r);
  double acc = 0.0;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      acc += c(i, j) * hessian_entry_from_parts(parts, diff, r, i, j);
    }
  }
  acc += (diff * parts.slope_over_r).dot(b);
  acc += rho * parts.value;
  return acc;
}

// L applied to the basis function centered at a, evaluated at p.
double apply_L_to_basis(const EllipticOperatorSpec& op, const RadialKernel& kernel,
                        const Vec2& a, const Vec2& p);

// Boundary operator applied to the basis function centered at a, evaluated
// at the boundary node q: the plain basis value on Dirichlet nodes, the
// outward normal derivative on Neumann ones (which therefore need a normal).
double apply_B_to_basis(const RadialKernel& kernel, const Vec2& a, const Vec2& q,
                        BoundaryTag tag, const std::optional<Vec2>& normal);

// Checks that the principal part stays uniformly elliptic on a point
// sample: at each point the symmetrized c must have eigenvalues of one
// common sign with magnitude >= 1e-12. An indefinite c (e.g. diag(1, -1))
// fails even though its eigenvalues are individually large.
struct EllipticityReport {
  bool pass = true;
  double min_abs_eigenvalue = 0.0;  // over all sampled points
  int indefinite_points = 0;
  int degenerate_points = 0;
};

EllipticityReport verify_ellipticity(const EllipticOperatorSpec& op,
                                     const std::vector<Vec2>& sample_points);

// Manufactured solution u(x1, x2) = sin(2 pi x1) + cos(2 pi x2) on the unit
// square, shared by both shipped problems.
double reference_solution(const Vec2& p);

// Poisson problem: Laplacian u = f, Dirichlet data on the whole boundary.
EllipticProblem make_test_problem_1();

// Convection-diffusion problem: Laplacian u + u_x1 + u_x2 = f, Dirichlet
// data on the x1 edges, normal derivative data on the open x2 edges.
EllipticProblem make_test_problem_2();

}  // namespace kansa
