#include "kansa/pde_model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace kansa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reference_f_laplacian(const Vec2& p) {
  // Laplacian of sin(2 pi x1) + cos(2 pi x2).
  return -kTwoPi * kTwoPi * reference_solution(p);
}

Vec2 reference_gradient(const Vec2& p) {
  return {kTwoPi * std::cos(kTwoPi * p.x()), -kTwoPi * std::sin(kTwoPi * p.y())};
}

}  // namespace

double apply_L_to_basis(const EllipticOperatorSpec& op, const RadialKernel& kernel,
                        const Vec2& a, const Vec2& p) {
  return l_row_entry(op.c(p), op.b(p), op.rho(p), kernel, a, p);
}

double apply_B_to_basis(const RadialKernel& kernel, const Vec2& a, const Vec2& q,
                        BoundaryTag tag, const std::optional<Vec2>& normal) {
  switch (tag) {
    case BoundaryTag::Dirichlet:
      return phi(kernel, (q - a).norm());
    case BoundaryTag::Neumann:
      if (!normal) {
        throw std::invalid_argument(
            "apply_B_to_basis: Neumann node has no outward normal");
      }
      return normal_derivative(kernel, q, a, *normal);
    case BoundaryTag::Interior:
      break;
  }
  throw std::invalid_argument("apply_B_to_basis: node is not a boundary node");
}

EllipticityReport verify_ellipticity(const EllipticOperatorSpec& op,
                                     const std::vector<Vec2>& sample_points) {
  EllipticityReport report;
  report.min_abs_eigenvalue = std::numeric_limits<double>::infinity();
  for (const Vec2& p : sample_points) {
    const Eigen::Matrix2d c = op.c(p);
    // Eigenvalues of the symmetric part, in closed form.
    const double s01 = 0.5 * (c(0, 1) + c(1, 0));
    const double mean = 0.5 * (c(0, 0) + c(1, 1));
    const double radius = std::hypot(0.5 * (c(0, 0) - c(1, 1)), s01);
    const double lo = mean - radius;
    const double hi = mean + radius;
    const double min_abs = std::min(std::abs(lo), std::abs(hi));
    report.min_abs_eigenvalue = std::min(report.min_abs_eigenvalue, min_abs);
    if (min_abs < 1e-12) {
      ++report.degenerate_points;
    } else if (lo * hi < 0.0) {
      // Large eigenvalues of opposite sign: the quadratic form has a zero
      // direction, so this still violates ellipticity.
      ++report.indefinite_points;
    }
  }
  report.pass = report.degenerate_points == 0 && report.indefinite_points == 0;
  return report;
}

double reference_solution(const Vec2& p) {
  return std::sin(kTwoPi * p.x()) + std::cos(kTwoPi * p.y());
}

EllipticProblem make_test_problem_1() {
  EllipticProblem problem;
  problem.op.c = [](const Vec2&) { return Eigen::Matrix2d::Identity().eval(); };
  problem.op.b = [](const Vec2&) { return Vec2::Zero().eval(); };
  problem.op.rho = [](const Vec2&) { return 0.0; };
  problem.f = reference_f_laplacian;
  problem.g = reference_solution;
  problem.partition = all_dirichlet_square();
  problem.exact_u = reference_solution;
  return problem;
}

EllipticProblem make_test_problem_2() {
  EllipticProblem problem;
  problem.op.c = [](const Vec2&) { return Eigen::Matrix2d::Identity().eval(); };
  problem.op.b = [](const Vec2&) { return Vec2(1.0, 1.0); };
  problem.op.rho = [](const Vec2&) { return 0.0; };
  problem.f = [](const Vec2& p) {
    return reference_f_laplacian(p) + reference_gradient(p).sum();
  };
  const BoundaryPartitionSpec partition = mixed_square();
  problem.g = [partition](const Vec2& q) {
    if (partition.on_dirichlet(q)) return reference_solution(q);
    return partition.outward_normal(q).dot(reference_gradient(q));
  };
  problem.partition = partition;
  problem.exact_u = reference_solution;
  return problem;
}

}  // namespace kansa
