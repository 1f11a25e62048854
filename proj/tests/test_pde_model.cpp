#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kansa/fd_check.hpp"
#include "kansa/pde_model.hpp"

using namespace kansa;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const RadialKernel kKernels[] = {{RadialFamily::TPS, 4},
                                 {RadialFamily::TPS, 6},
                                 {RadialFamily::RP, 3},
                                 {RadialFamily::RP, 5}};

}  // namespace

TEST_CASE("reference solution spot values") {
  CHECK(reference_solution({0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(reference_solution({0.25, 0.0}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(reference_solution({0.75, 0.5}) == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("problem 1 wires the Poisson/Dirichlet data") {
  const EllipticProblem p1 = make_test_problem_1();
  const Vec2 samples[] = {{0.1, 0.9}, {0.5, 0.5}, {0.73, 0.11}};
  for (const Vec2& p : samples) {
    CHECK(p1.op.c(p) == Eigen::Matrix2d::Identity());
    CHECK(p1.op.b(p) == Vec2(0.0, 0.0));
    CHECK(p1.op.rho(p) == 0.0);
    // f = Laplacian of the reference solution = -4 pi^2 u.
    CHECK(p1.f(p) ==
          doctest::Approx(-4.0 * std::numbers::pi * std::numbers::pi *
                          reference_solution(p)).epsilon(1e-14));
    CHECK(p1.exact_u(p) == reference_solution(p));
  }
  // Dirichlet data is the solution trace on the whole boundary.
  for (const Vec2& q : {Vec2(0.0, 0.3), Vec2(1.0, 0.8), Vec2(0.4, 0.0), Vec2(0.6, 1.0)}) {
    CHECK(p1.partition.on_dirichlet(q));
    CHECK_FALSE(p1.partition.on_neumann(q));
    CHECK(p1.g(q) == reference_solution(q));
  }
}

TEST_CASE("problem 2 wires the convection and mixed boundary data") {
  const EllipticProblem p2 = make_test_problem_2();
  const Vec2 p(0.3, 0.65);
  CHECK(p2.op.c(p) == Eigen::Matrix2d::Identity());
  CHECK(p2.op.b(p) == Vec2(1.0, 1.0));
  CHECK(p2.op.rho(p) == 0.0);
  // f = -4 pi^2 u + 2 pi cos(2 pi x1) - 2 pi sin(2 pi x2).
  const double want = -4.0 * std::numbers::pi * std::numbers::pi * reference_solution(p) +
                      kTwoPi * std::cos(kTwoPi * p.x()) - kTwoPi * std::sin(kTwoPi * p.y());
  CHECK(p2.f(p) == doctest::Approx(want).epsilon(1e-14));

  // x1 edges (corners included) are Dirichlet with g = u.
  for (const Vec2& q : {Vec2(0.0, 0.4), Vec2(1.0, 0.9), Vec2(0.0, 0.0), Vec2(1.0, 1.0)}) {
    CHECK(p2.partition.on_dirichlet(q));
    CHECK_FALSE(p2.partition.on_neumann(q));
    CHECK(p2.g(q) == reference_solution(q));
  }
  // Open x2 edges are Neumann; du/dnu = -nu_y 2 pi sin(2 pi x2) is 0 on
  // both edges up to rounding of sin(2 pi).
  for (const Vec2& q : {Vec2(0.3, 0.0), Vec2(0.7, 1.0)}) {
    CHECK(p2.partition.on_neumann(q));
    CHECK_FALSE(p2.partition.on_dirichlet(q));
    CHECK(std::abs(p2.g(q)) < 1e-14);
  }
}

TEST_CASE("apply_L_to_basis spot value with convection") {
  // RP k=3 at r=2: Laplacian 9r = 18, gradient (2,0)*3r = (12,0), b=(1,1)
  // adds 12, total 30.
  const EllipticProblem p2 = make_test_problem_2();
  const RadialKernel rp3(RadialFamily::RP, 3);
  CHECK(apply_L_to_basis(p2.op, rp3, {0.0, 0.0}, {2.0, 0.0}) == 30.0);
}

TEST_CASE("apply_L_to_basis vanishes with the basis at coincident points") {
  const EllipticProblem p1 = make_test_problem_1();
  for (const RadialKernel& kernel : kKernels) {
    CHECK(apply_L_to_basis(p1.op, kernel, {0.4, 0.7}, {0.4, 0.7}) == 0.0);
  }
}

TEST_CASE("apply_L_to_basis agrees with finite differences of phi") {
  const EllipticOperatorSpec full = fd::make_full_test_operator();
  const EllipticProblem p2 = make_test_problem_2();
  for (const RadialKernel& kernel : kKernels) {
    const fd::CheckResult vs_full =
        fd::check_interior_operator(full, "synthetic", kernel, 50, 99 + kernel.exponent());
    CAPTURE(vs_full.name);
    CAPTURE(vs_full.max_error);
    CHECK(vs_full.pass);
    const fd::CheckResult vs_p2 =
        fd::check_interior_operator(p2.op, "problem 2", kernel, 50, 7 + kernel.exponent());
    CHECK(vs_p2.pass);
  }
}

TEST_CASE("apply_B_to_basis dispatches on the boundary tag") {
  const RadialKernel rp3(RadialFamily::RP, 3);
  const Vec2 a(0.5, 0.5);
  const Vec2 q(1.0, 0.5);
  CHECK(apply_B_to_basis(rp3, a, q, BoundaryTag::Dirichlet, std::nullopt) ==
        phi(rp3, 0.5));
  CHECK(apply_B_to_basis(rp3, a, q, BoundaryTag::Neumann, Vec2(1.0, 0.0)) == 0.75);
  CHECK_THROWS_AS(apply_B_to_basis(rp3, a, q, BoundaryTag::Neumann, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_B_to_basis(rp3, a, q, BoundaryTag::Interior, std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("Neumann rows agree with FD directional derivatives") {
  for (const RadialKernel& kernel : kKernels) {
    const fd::CheckResult result = fd::check_boundary_operator(kernel, 50, 11);
    CAPTURE(result.max_error);
    CHECK(result.pass);
  }
}

TEST_CASE("manufactured problems satisfy their own PDE and boundary data") {
  for (const auto& [problem, label] :
       {std::pair{make_test_problem_1(), "p1"}, std::pair{make_test_problem_2(), "p2"}}) {
    for (const fd::CheckResult& r : fd::check_problem_consistency(problem, label, 50, 5)) {
      CAPTURE(r.name);
      CAPTURE(r.max_error);
      CHECK(r.pass);
      CHECK(r.max_error <= 1e-6);
    }
  }
}

TEST_CASE("verify_ellipticity accepts definite and rejects degenerate forms") {
  const std::vector<Vec2> sample = {{0.1, 0.2}, {0.5, 0.5}, {0.9, 0.3}, {0.0, 1.0}};

  EllipticOperatorSpec op;
  op.b = [](const Vec2&) { return Vec2::Zero().eval(); };
  op.rho = [](const Vec2&) { return 0.0; };

  op.c = [](const Vec2&) { return Eigen::Matrix2d::Identity().eval(); };
  EllipticityReport report = verify_ellipticity(op, sample);
  CHECK(report.pass);
  CHECK(report.min_abs_eigenvalue == 1.0);

  // Negative definite is fine: the quadratic form never vanishes.
  op.c = [](const Vec2&) { return (-Eigen::Matrix2d::Identity()).eval(); };
  CHECK(verify_ellipticity(op, sample).pass);

  // Indefinite diag(1, -1) has large eigenvalues but a null direction.
  op.c = [](const Vec2&) {
    Eigen::Matrix2d c;
    c << 1.0, 0.0, 0.0, -1.0;
    return c;
  };
  report = verify_ellipticity(op, sample);
  CHECK_FALSE(report.pass);
  CHECK(report.indefinite_points == static_cast<int>(sample.size()));
  CHECK(report.min_abs_eigenvalue == 1.0);

  // Nearly rank-one form is degenerate.
  op.c = [](const Vec2&) {
    Eigen::Matrix2d c;
    c << 1.0, 0.0, 0.0, 1e-14;
    return c;
  };
  report = verify_ellipticity(op, sample);
  CHECK_FALSE(report.pass);
  CHECK(report.degenerate_points == static_cast<int>(sample.size()));

  // Only the symmetric part matters: skew entries cancel in the form.
  op.c = [](const Vec2&) {
    Eigen::Matrix2d c;
    c << 1.0, 0.7, -0.7, 1.0;
    return c;
  };
  report = verify_ellipticity(op, sample);
  CHECK(report.pass);
  CHECK(report.min_abs_eigenvalue == doctest::Approx(1.0).epsilon(1e-15));

  // A definite form with genuine off-diagonal coupling passes.
  op.c = [](const Vec2&) {
    Eigen::Matrix2d c;
    c << 2.0, 0.5, 0.5, 1.0;
    return c;
  };
  CHECK(verify_ellipticity(op, sample).pass);
}

TEST_CASE("ellipticity screen covers the shipped operators") {
  for (const fd::CheckResult& r : fd::check_ellipticity_screen()) {
    CAPTURE(r.name);
    CHECK(r.pass);
  }
}
