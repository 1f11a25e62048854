// Timing comparison of the OpenMP assembly/evaluation kernels against the
// plain-loop reference implementations, plus a consistency check that both
// produce the same bits.
#include <chrono>
#include <iomanip>
#include <iostream>

#include <omp.h>

#include "kansa/assembly.hpp"
#include "kansa/experiment.hpp"
#include "kansa/geometry.hpp"
#include "kansa/pde_model.hpp"
#include "kansa/random_centers.hpp"

namespace {

template <typename F>
double best_of_ms(int reps, F&& body) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  using namespace kansa;
  const EllipticProblem problem = make_test_problem_2();
  const RadialKernel kernel(RadialFamily::TPS, 4);

  std::cout << "threads: " << omp_get_max_threads() << "\n";
  std::cout << std::left << std::setw(7) << "N" << std::setw(14) << "assemble_ms"
            << std::setw(14) << "serial_ms" << std::setw(9) << "speedup"
            << std::setw(12) << "eval_ms" << std::setw(14) << "eval_ser_ms"
            << std::setw(9) << "speedup" << "max_diff" << "\n";

  for (int n : {11, 21, 31, 41}) {
    const CollocationSet grid = classify(tensor_grid(n), problem.partition);
    const std::vector<Vec2> centers = perturb_centers(grid, {0.01, 1, 1});

    KansaSystem par, ser;
    const double t_par = best_of_ms(3, [&] { par = assemble(problem, grid, kernel, centers); });
    const double t_ser = best_of_ms(3, [&] { ser = assemble_serial(problem, grid, kernel, centers); });
    const double mat_diff = (par.matrix - ser.matrix).cwiseAbs().maxCoeff();

    const Eigen::VectorXd coeffs =
        Eigen::VectorXd::LinSpaced(grid.size(), -1.0, 1.0);
    Eigen::VectorXd vp, vs;
    const double e_par =
        best_of_ms(3, [&] { vp = evaluate_at_nodes(kernel, centers, coeffs, grid.points); });
    const double e_ser = best_of_ms(
        3, [&] { vs = evaluate_at_nodes_serial(kernel, centers, coeffs, grid.points); });
    const double eval_diff = (vp - vs).cwiseAbs().maxCoeff();

    std::cout << std::left << std::setw(7) << grid.size() << std::fixed
              << std::setprecision(2) << std::setw(14) << t_par << std::setw(14)
              << t_ser << std::setw(9) << t_ser / t_par << std::setw(12) << e_par
              << std::setw(14) << e_ser << std::setw(9) << e_ser / e_par
              << std::scientific << std::setprecision(1)
              << std::max(mat_diff, eval_diff) << std::defaultfloat << "\n";
  }
  return 0;
}
