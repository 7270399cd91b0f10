#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "radlie/kernels.hpp"
#include "radlie/numeric.hpp"

using namespace radlie;
using oracle::E;

TEST_CASE("eigenvalues of triangular and diagonal matrices") {
  auto ev = eigenvalues(oracle::diag({1.0, 2.0}) + E(2, 1, 2));
  std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
  CHECK(std::abs(ev[0] - 1.0) < 1e-12);
  CHECK(std::abs(ev[1] - 2.0) < 1e-12);
  CHECK(eigenvalues(E(3, 1, 3)).size() == 3);
}

TEST_CASE("clusters keep a Jordan block together and split distinct points") {
  Matrix j = Matrix::Zero(4, 4);
  for (int i = 0; i < 3; ++i) j(i, i + 1) = 1.0;
  const Tolerances tol;
  const auto ev = eigenvalues(j);
  auto c = cluster_eigenvalues(ev, spectral_scale(j), tol);
  REQUIRE(c.size() == 1);
  CHECK(c[0].multiplicity == 4);

  const Matrix d = oracle::diag({1.0, 1.0, 2.0, Complex(0.0, 3.0)});
  c = cluster_eigenvalues(eigenvalues(d), spectral_scale(d), tol);
  REQUIRE(c.size() == 3);
  int total = 0;
  for (const Cluster& k : c) total += k.multiplicity;
  CHECK(total == 4);
}

TEST_CASE("clusters of a random 16x16 matrix are singletons") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  Matrix a(16, 16);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = Complex(g(rng), g(rng));
  const auto c = cluster_eigenvalues(eigenvalues(a), spectral_scale(a), Tolerances{});
  CHECK(c.size() == 16);
}

TEST_CASE("multiplicity-aware matching") {
  const Tolerances tol;
  const std::vector<Complex> ref{1.0, 1.0, 2.0};
  const std::vector<Complex> same{2.0, 1.0 + 1e-12, 1.0};
  CHECK(spectral_match_distance(ref, 1.0, same, true, tol) < 1e-10);
  const std::vector<Complex> wrong{2.0, 2.0, 1.0};
  CHECK(std::isinf(spectral_match_distance(ref, 1.0, wrong, true, tol)));
  CHECK(spectral_match_distance(ref, 1.0, wrong, false, tol) < 1e-10);
}

TEST_CASE("span_basis is orthonormal and spans the input") {
  const Tolerances tol;
  std::vector<Matrix> v{E(2, 1, 1), E(2, 1, 2), E(2, 1, 1) + 2.0 * E(2, 1, 2)};
  const Basis b = span_basis(v, tol);
  REQUIRE(b.size() == 2);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      CHECK(std::abs(inner(b[i], b[j]) - (i == j ? 1.0 : 0.0)) < 1e-12);
  for (const Matrix& x : v) CHECK(projection_residual(b, x) < 1e-12);
  CHECK(oracle::span_gap(b, v) == 0.0);
}

TEST_CASE("nullspace and subspace geometry") {
  Matrix m = Matrix::Zero(2, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  const Nullspace ns = nullspace(m, 1e-9);
  REQUIRE(ns.basis.cols() == 1);
  CHECK(std::abs(std::abs(ns.basis(2, 0)) - 1.0) < 1e-12);

  const Tolerances tol;
  const Basis a = span_basis(std::vector<Matrix>{E(2, 1, 1), E(2, 1, 2)}, tol);
  const Basis b = span_basis(std::vector<Matrix>{E(2, 1, 2), E(2, 1, 1) + E(2, 1, 2)}, tol);
  CHECK(subspace_distance(a, b) < 1e-12);
  const Basis i = intersect(a, span_basis(std::vector<Matrix>{E(2, 1, 2), E(2, 2, 2)}, tol), tol);
  REQUIRE(i.size() == 1);
  CHECK(projection_residual(i, E(2, 1, 2)) < 1e-12);
  CHECK(complement_in(a, i, tol).size() == 1);
}

TEST_CASE("generalized eigenspaces sum to the ambient size") {
  const Matrix a = oracle::diag({1.0, 1.0, 2.0}) + E(3, 1, 2);
  const Tolerances tol;
  CHECK(generalized_eigenspace(a, 1.0, tol).cols() == 2);
  CHECK(generalized_eigenspace(a, 2.0, tol).cols() == 1);
  CHECK(generalized_eigenspace(oracle::diag({1.0, 2.0}), 5.0, tol).cols() == 0);
}

TEST_CASE("tolerance validation") {
  Tolerances t;
  t.rank_tol = 2.0;
  CHECK_THROWS_AS(t.validate(), PreconditionError);
  t = {};
  t.spec_tol = -1.0;
  CHECK_THROWS_AS(t.validate(), PreconditionError);
}
