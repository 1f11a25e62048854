#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kansa/pde_model.hpp"
#include "kansa/point.hpp"
#include "kansa/polyharmonic.hpp"

// Finite-difference cross-checks. Everything here differentiates plain
// basis values (or the exact solution) with 4th-order central stencils and
// compares against the closed-form derivative code, so the two routes share
// no formulas beyond phi itself.
namespace kansa::fd {

// 4th-order central differences of a univariate callable.
double derivative(const std::function<double(double)>& f, double x, double h);
double second_derivative(const std::function<double(double)>& f, double x, double h);

// Partials of a bivariate callable; the mixed case composes two first
// differences (16 evaluations).
double partial(const std::function<double(const Vec2&)>& f, const Vec2& p, int i,
               double h);
double second_partial(const std::function<double(const Vec2&)>& f, const Vec2& p,
                      int i, int j, double h);

struct CheckResult {
  std::string name;
  int samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// phi'(r)/r and phi''(r) - phi'(r)/r against differences of phi, on a log
// grid of radii in [1e-8, 10]: relative error above r = 1e-2, absolute
// below (the factors themselves vanish there).
CheckResult check_kernel_radial_factors(const RadialKernel& kernel);

// apply_L_to_basis against the FD Hessian/gradient of phi at `pairs` random
// (center, point) draws with separation > 0.1, under the given operator.
CheckResult check_interior_operator(const EllipticOperatorSpec& op,
                                    const std::string& op_label,
                                    const RadialKernel& kernel, int pairs,
                                    std::uint64_t seed);

// The Neumann branch of apply_B_to_basis against FD directional
// derivatives at random boundary/center draws with separation > 0.1.
CheckResult check_boundary_operator(const RadialKernel& kernel, int pairs,
                                    std::uint64_t seed);

// Internal consistency of a manufactured problem: L u = f at random
// interior points (u differentiated by FD) and B u = g at random boundary
// points.
std::vector<CheckResult> check_problem_consistency(const EllipticProblem& problem,
                                                   const std::string& label,
                                                   int points, std::uint64_t seed);

// verify_ellipticity over the shipped operators, the synthetic one, and an
// indefinite operator that must be rejected.
std::vector<CheckResult> check_ellipticity_screen();

// Variable-coefficient operator with every term populated (anisotropic
// definite c, nonzero b and rho); exercises apply_L beyond the shipped
// problems.
EllipticOperatorSpec make_full_test_operator();

// The whole battery over all four shipped kernels; backs the CLI `check`.
std::vector<CheckResult> run_self_checks();

}  // namespace kansa::fd
