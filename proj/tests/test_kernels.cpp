#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "radlie/kernels.hpp"
#include "radlie/spectral.hpp"
#include "radlie/sylvester.hpp"

using namespace radlie;

namespace {

Matrix random_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = Complex(g(rng), g(rng)) / std::sqrt(2.0 * n);
  return a;
}

}  // namespace

TEST_CASE("cauchy_sum: parallel path is bitwise equal to serial") {
  for (int n : {3, 8, 16}) {
    const Matrix a = random_matrix(n, 11 + n);
    CircleNodes c;
    c.radius = 3.0;
    c.nodes = 256;
    const ScalarFunction f = [](Complex z) { return std::exp(z); };
    const Matrix s = cauchy_sum(a, c, f, Execution::serial);
    const Matrix p = cauchy_sum(a, c, f, Execution::parallel);
    CHECK((s - p).cwiseAbs().maxCoeff() == 0.0);
    c.first = 1;
    c.step = 2;
    CHECK((cauchy_sum(a, c, f, Execution::serial) - cauchy_sum(a, c, f, Execution::parallel)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("rosenblum_sum: parallel path is bitwise equal to serial") {
  const Matrix a1 = random_matrix(6, 3) + 5.0 * Matrix::Identity(6, 6);
  const Matrix a2 = random_matrix(6, 4);
  const Matrix y = random_matrix(6, 5);
  CircleNodes c;
  c.radius = 2.0;
  c.nodes = 512;
  const Matrix s = rosenblum_sum(a1, a2, 0.0, y, c, Execution::serial);
  const Matrix p = rosenblum_sum(a1, a2, 0.0, y, c, Execution::parallel);
  CHECK((s - p).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("holo_calc and rosenblum_resolve agree across execution modes") {
  const Matrix a = random_matrix(10, 21);
  const Tolerances tol;
  const Contour c = admissible_contour(HoloFunction::exp(), a, tol);
  const Matrix s = holo_calc(HoloFunction::exp(), a, c, tol, Execution::serial);
  const Matrix p = holo_calc(HoloFunction::exp(), a, c, tol, Execution::parallel);
  CHECK((s - p).cwiseAbs().maxCoeff() == 0.0);

  const SylvesterOperator op(random_matrix(4, 1) + 4.0 * Matrix::Identity(4, 4), random_matrix(4, 2));
  const Matrix y = random_matrix(4, 3);
  const Matrix xs = rosenblum_resolve(op, 0.0, y, tol, Execution::serial);
  const Matrix xp = rosenblum_resolve(op, 0.0, y, tol, Execution::parallel);
  CHECK((xs - xp).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("trapezoidal Cauchy sum reproduces a for f(z) = z") {
  const Matrix a = random_matrix(5, 8);
  CircleNodes c;
  c.radius = 4.0;
  c.nodes = 128;
  const Matrix s = cauchy_sum(a, c, [](Complex z) { return z; }, Execution::serial) / 128.0;
  CHECK((s - a).norm() / a.norm() < 1e-12);
}
