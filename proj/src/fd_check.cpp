#include "kansa/fd_check.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "kansa/geometry.hpp"

namespace kansa::fd {

namespace {

// Step for the operator-level checks. Large enough that 1/h^2 roundoff
// stays near 1e-8, small enough that the h^4 truncation term is invisible.
constexpr double kOperatorStep = 2e-4;

double mixed_relative_error(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

Vec2 unit_square_sample(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double x = unit(rng);
  const double y = unit(rng);
  return {x, y};
}

// (center, point) pair with separation > 0.1, drawn by rejection.
std::pair<Vec2, Vec2> separated_pair(std::mt19937_64& rng) {
  for (;;) {
    const Vec2 a = unit_square_sample(rng);
    const Vec2 p = unit_square_sample(rng);
    if ((p - a).norm() > 0.1) return {a, p};
  }
}

}  // namespace

double derivative(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

double second_derivative(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
         (12 * h * h);
}

double partial(const std::function<double(const Vec2&)>& f, const Vec2& p, int i,
               double h) {
  Vec2 e = Vec2::Zero();
  e[i] = 1.0;
  return (-f(p + 2 * h * e) + 8 * f(p + h * e) - 8 * f(p - h * e) + f(p - 2 * h * e)) /
         (12 * h);
}

double second_partial(const std::function<double(const Vec2&)>& f, const Vec2& p,
                      int i, int j, double h) {
  if (i == j) {
    Vec2 e = Vec2::Zero();
    e[i] = 1.0;
    return (-f(p + 2 * h * e) + 16 * f(p + h * e) - 30 * f(p) + 16 * f(p - h * e) -
            f(p - 2 * h * e)) /
           (12 * h * h);
  }
  const auto dj = [&](const Vec2& x) { return partial(f, x, j, h); };
  return partial(dj, p, i, h);
}

CheckResult check_kernel_radial_factors(const RadialKernel& kernel) {
  CheckResult result;
  result.name = std::string(kernel.family_name()) + " k=" +
                std::to_string(kernel.exponent()) + " radial factors vs FD";
  result.tolerance = 1e-6;

  const auto phi_of_r = [&](double r) { return phi(kernel, r); };
  const int m = 200;
  for (int s = 0; s < m; ++s) {
    // Log-spaced radii from 1e-8 to 10.
    const double r = std::pow(10.0, -8.0 + 9.0 * s / (m - 1.0));
    // Scale-invariant step, small enough that the h^4 truncation term stays
    // invisible even where phi'' - phi'/r crosses zero and cancellation
    // deflates the reference value.
    const double h = r / 500.0;
    const double d1 = derivative(phi_of_r, r, h);
    const double d2 = second_derivative(phi_of_r, r, h);

    const double got_slope = phi_prime_over_r(kernel, r);
    const double got_tail = phi_dd_minus_phi_prime_over_r(kernel, r);
    const double want_slope = d1 / r;
    const double want_tail = d2 - d1 / r;

    double err;
    if (r >= 1e-2) {
      err = std::max(std::abs(got_slope - want_slope) / std::abs(want_slope),
                     std::abs(got_tail - want_tail) / std::abs(want_tail));
    } else {
      // Both factors tend to 0 here; absolute agreement is the meaningful
      // statement, and 1e-8 is generous against the 1e-6 headline bound.
      err = 1e2 * std::max(std::abs(got_slope - want_slope),
                           std::abs(got_tail - want_tail));
    }
    result.max_error = std::max(result.max_error, err);
    ++result.samples;
  }
  result.pass = result.max_error <= result.tolerance;
  return result;
}

CheckResult check_interior_operator(const EllipticOperatorSpec& op,
                                    const std::string& op_label,
                                    const RadialKernel& kernel, int pairs,
                                    std::uint64_t seed) {
  CheckResult result;
  result.name = std::string(kernel.family_name()) + " k=" +
                std::to_string(kernel.exponent()) + " interior rows vs FD (" +
                op_label + ")";
  result.tolerance = 1e-6;

  std::mt19937_64 rng(seed);
  for (int s = 0; s < pairs; ++s) {
    const auto [a, p] = separated_pair(rng);
    const auto basis = [&, a = a](const Vec2& x) { return phi(kernel, (x - a).norm()); };

    const Eigen::Matrix2d c = op.c(p);
    const Vec2 b = op.b(p);
    double want = op.rho(p) * basis(p);
    for (int i = 0; i < kDim; ++i) {
      want += b[i] * partial(basis, p, i, kOperatorStep);
      for (int j = 0; j < kDim; ++j) {
        want += c(i, j) * second_partial(basis, p, i, j, kOperatorStep);
      }
    }

    const double got = apply_L_to_basis(op, kernel, a, p);
    result.max_error = std::max(result.max_error, mixed_relative_error(got, want));
    ++result.samples;
  }
  result.pass = result.max_error <= result.tolerance;
  return result;
}

CheckResult check_boundary_operator(const RadialKernel& kernel, int pairs,
                                    std::uint64_t seed) {
  CheckResult result;
  result.name = std::string(kernel.family_name()) + " k=" +
                std::to_string(kernel.exponent()) + " Neumann rows vs FD";
  result.tolerance = 1e-6;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> edge(0, 3);
  for (int s = 0; s < pairs; ++s) {
    // Random point on a random edge of the square, with its outward normal.
    const double t = unit(rng);
    Vec2 q;
    switch (edge(rng)) {
      case 0: q = {0.0, t}; break;
      case 1: q = {1.0, t}; break;
      case 2: q = {t, 0.0}; break;
      default: q = {t, 1.0}; break;
    }
    const Vec2 nu = square_outward_normal(q);

    Vec2 a = unit_square_sample(rng);
    while ((q - a).norm() <= 0.1) a = unit_square_sample(rng);

    const auto basis = [&, a = a](const Vec2& x) { return phi(kernel, (x - a).norm()); };
    double want = 0.0;
    for (int i = 0; i < kDim; ++i) want += nu[i] * partial(basis, q, i, kOperatorStep);

    const double got =
        apply_B_to_basis(kernel, a, q, BoundaryTag::Neumann, nu);
    result.max_error = std::max(result.max_error, mixed_relative_error(got, want));
    ++result.samples;
  }
  result.pass = result.max_error <= result.tolerance;
  return result;
}

std::vector<CheckResult> check_problem_consistency(const EllipticProblem& problem,
                                                   const std::string& label,
                                                   int points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> edge(0, 3);

  CheckResult interior;
  interior.name = label + ": L u = f at interior samples (FD)";
  interior.tolerance = 1e-6;
  for (int s = 0; s < points; ++s) {
    // Stay a little inside so FD stencils do not matter for the statement.
    const Vec2 p(0.05 + 0.9 * unit(rng), 0.05 + 0.9 * unit(rng));
    const Eigen::Matrix2d c = problem.op.c(p);
    const Vec2 b = problem.op.b(p);
    double lu = problem.op.rho(p) * problem.exact_u(p);
    for (int i = 0; i < kDim; ++i) {
      lu += b[i] * partial(problem.exact_u, p, i, kOperatorStep);
      for (int j = 0; j < kDim; ++j) {
        lu += c(i, j) * second_partial(problem.exact_u, p, i, j, kOperatorStep);
      }
    }
    interior.max_error =
        std::max(interior.max_error, mixed_relative_error(lu, problem.f(p)));
    ++interior.samples;
  }
  interior.pass = interior.max_error <= interior.tolerance;

  CheckResult boundary;
  boundary.name = label + ": B u = g at boundary samples (FD)";
  boundary.tolerance = 1e-6;
  for (int s = 0; s < points; ++s) {
    const double t = unit(rng);
    Vec2 q;
    switch (edge(rng)) {
      case 0: q = {0.0, t}; break;
      case 1: q = {1.0, t}; break;
      case 2: q = {t, 0.0}; break;
      default: q = {t, 1.0}; break;
    }
    double bu;
    if (problem.partition.on_dirichlet(q)) {
      bu = problem.exact_u(q);
    } else {
      const Vec2 nu = problem.partition.outward_normal(q);
      bu = 0.0;
      for (int i = 0; i < kDim; ++i) {
        bu += nu[i] * partial(problem.exact_u, q, i, kOperatorStep);
      }
    }
    boundary.max_error =
        std::max(boundary.max_error, mixed_relative_error(bu, problem.g(q)));
    ++boundary.samples;
  }
  boundary.pass = boundary.max_error <= boundary.tolerance;

  return {interior, boundary};
}

EllipticOperatorSpec make_full_test_operator() {
  constexpr double pi = std::numbers::pi;
  EllipticOperatorSpec op;
  op.c = [pi](const Vec2& p) {
    Eigen::Matrix2d c;
    const double off = 0.3 * p.x() * p.y();
    c << 2.0 + std::sin(pi * p.x()) * std::cos(pi * p.y()), off, off,
        2.0 + 0.25 * std::cos(pi * p.x());
    return c;
  };
  op.b = [pi](const Vec2& p) {
    return Vec2(1.0 + std::sin(pi * p.y()), std::cos(pi * p.x()) - 0.25);
  };
  op.rho = [pi](const Vec2& p) { return 0.5 + 0.25 * std::sin(2.0 * pi * p.x()); };
  return op;
}

std::vector<CheckResult> check_ellipticity_screen() {
  const std::vector<Vec2> sample = tensor_grid(11).points;
  std::vector<CheckResult> results;

  const auto screen = [&](const EllipticOperatorSpec& op, const std::string& name,
                          bool expect_pass) {
    const EllipticityReport report = verify_ellipticity(op, sample);
    CheckResult r;
    r.name = name;
    r.samples = static_cast<int>(sample.size());
    r.max_error = report.min_abs_eigenvalue;
    r.tolerance = 1e-12;
    r.pass = report.pass == expect_pass;
    results.push_back(r);
  };

  screen(make_test_problem_1().op, "ellipticity: problem 1 operator", true);
  screen(make_test_problem_2().op, "ellipticity: problem 2 operator", true);
  screen(make_full_test_operator(), "ellipticity: synthetic operator", true);

  // Indefinite principal part: eigenvalues +1 and -1 are individually
  // large, but the quadratic form vanishes along the diagonals, so the
  // screen must reject it.
  EllipticOperatorSpec indefinite;
  indefinite.c = [](const Vec2&) {
    Eigen::Matrix2d c;
    c << 1.0, 0.0, 0.0, -1.0;
    return c;
  };
  indefinite.b = [](const Vec2&) { return Vec2::Zero().eval(); };
  indefinite.rho = [](const Vec2&) { return 0.0; };
  screen(indefinite, "ellipticity: indefinite operator rejected", false);

  return results;
}

std::vector<CheckResult> run_self_checks() {
  std::vector<CheckResult> results;
  const EllipticOperatorSpec full_op = make_full_test_operator();
  const EllipticProblem p1 = make_test_problem_1();
  const EllipticProblem p2 = make_test_problem_2();

  const std::pair<RadialFamily, int> kernels[] = {
      {RadialFamily::TPS, 4}, {RadialFamily::TPS, 6},
      {RadialFamily::RP, 3}, {RadialFamily::RP, 5}};
  std::uint64_t seed = 20260822;
  for (const auto& [family, k] : kernels) {
    const RadialKernel kernel(family, k);
    results.push_back(check_kernel_radial_factors(kernel));
    results.push_back(check_interior_operator(full_op, "synthetic operator", kernel,
                                              100, seed++));
    results.push_back(check_interior_operator(p1.op, "problem 1 operator", kernel,
                                              100, seed++));
    results.push_back(check_interior_operator(p2.op, "problem 2 operator", kernel,
                                              100, seed++));
    results.push_back(check_boundary_operator(kernel, 100, seed++));
  }

  for (const CheckResult& r : check_problem_consistency(p1, "problem 1", 50, seed++)) {
    results.push_back(r);
  }
  for (const CheckResult& r : check_problem_consistency(p2, "problem 2", 50, seed++)) {
    results.push_back(r);
  }
  for (const CheckResult& r : check_ellipticity_screen()) results.push_back(r);
  return results;
}

}  // namespace kansa::fd
