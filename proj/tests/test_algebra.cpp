#include <doctest.h>

#include "oracles.hpp"
#include "radlie/algebra.hpp"

using namespace radlie;
using oracle::E;

namespace {

const Tolerances tol;

FiniteAlgebra upper2() { return generate_algebra(std::vector<Matrix>{E(2, 1, 1), E(2, 1, 2)}, 2, tol); }
FiniteAlgebra full2() { return generate_algebra(std::vector<Matrix>{E(2, 1, 1), E(2, 1, 2), E(2, 2, 1)}, 2, tol); }
FiniteAlgebra dual2() { return generate_algebra(std::vector<Matrix>{E(2, 1, 2)}, 2, tol); }

// 1 - t y x invertible for every t, i.e. det(1 - t y x) == 1, for y over
// basis elements and their pairwise sums.
bool grid_oracle_in_radical(const FiniteAlgebra& a, const Matrix& x) {
  const int n = a.ambient_n;
  std::vector<Matrix> ys(a.basis.begin(), a.basis.end());
  for (std::size_t i = 0; i < a.basis.size(); ++i)
    for (std::size_t j = i + 1; j < a.basis.size(); ++j) ys.push_back(a.basis[i] + a.basis[j]);
  for (const Matrix& y : ys)
    for (double t : {-3.0, -1.0, -0.5, 0.5, 1.0, 2.0, 7.0}) {
      const Matrix m = Matrix::Identity(n, n) - t * y * x;
      if (std::abs(m.determinant() - 1.0) > 1e-9) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("generation matches brute-force word closure") {
  CHECK(generate_algebra(std::vector<Matrix>{}, 2, tol).dim() == 1);
  CHECK(dual2().dim() == 2);
  CHECK(full2().dim() == 4);
  CHECK(upper2().dim() == oracle::closure_dim({E(2, 1, 1), E(2, 1, 2)}, 2));
  const std::vector<Matrix> g3{E(3, 1, 2) + E(3, 2, 3), oracle::diag({1.0, 2.0, 2.0})};
  CHECK(generate_algebra(g3, 3, tol).dim() == oracle::closure_dim(g3, 3));
}

TEST_CASE("structure constants reproduce products and the unit") {
  const FiniteAlgebra a = upper2();
  const AbstractAlgebra abs = a.abstract();
  CHECK(abs.associativity_residual() < 1e-12);
  CHECK(abs.unit_residual() < 1e-12);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      Matrix sum = Matrix::Zero(2, 2);
      for (int k = 0; k < a.dim(); ++k) sum += a.constants(i, j, k) * a.basis[static_cast<std::size_t>(k)];
      CHECK((sum - a.basis[static_cast<std::size_t>(i)] * a.basis[static_cast<std::size_t>(j)]).norm() < 1e-12);
    }
}

TEST_CASE("center") {
  CHECK(center(full2(), tol).size() == 1);
  CHECK(center(dual2(), tol).size() == 2);
  const Basis z = center(upper2(), tol);
  REQUIRE(z.size() == 1);
  CHECK(projection_residual(z, Matrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("radical agrees with the definitional grid oracle") {
  CHECK(radical(full2(), tol).empty());
  for (const FiniteAlgebra& a : {upper2(), dual2()}) {
    const Basis r = radical(a, tol);
    REQUIRE(r.size() == 1);
    CHECK(projection_residual(r, E(2, 1, 2)) < 1e-12);
    CHECK(grid_oracle_in_radical(a, E(2, 1, 2)));
    CHECK_FALSE(grid_oracle_in_radical(a, Matrix::Identity(2, 2)));
    CHECK(is_two_sided_ideal(a, r, tol));
  }
}

TEST_CASE("quotient by the radical") {
  const FiniteAlgebra a = upper2();
  const Quotient q = quotient_by_ideal(a, radical(a, tol), tol);
  CHECK(q.algebra.dim == 2);
  CHECK(q.algebra.associativity_residual() < 1e-12);
  // Commutative: L_x = R_x on the basis.
  for (int i = 0; i < 2; ++i) CHECK((q.algebra.constants.left(i) - q.algebra.constants.right(i)).norm() < 1e-12);
  CHECK(radical_coords(q.algebra, tol).cols() == 0);
  const Quotient same = quotient_by_ideal(full2(), {}, tol);
  CHECK(same.algebra.dim == 4);
  CHECK_THROWS_AS(quotient_by_ideal(a, span_basis(std::vector<Matrix>{E(2, 1, 1)}, tol), tol), PreconditionError);
}

TEST_CASE("abstract spectrum against eigenvalues") {
  const FiniteAlgebra a = upper2();
  const Matrix x = oracle::diag({1.0, 2.0}) + E(2, 1, 2);
  const auto s = abstract_spectrum(a.coords(x), a.abstract());
  CHECK(s.size() == 3);
  CHECK(oracle::hausdorff(s, {1.0, 2.0}) < 1e-10);
  const auto unit = abstract_spectrum(a.unit_coords, a.abstract());
  CHECK(oracle::hausdorff(unit, {1.0}) < 1e-12);
  CHECK(oracle::hausdorff(abstract_spectrum(a.coords(E(2, 1, 2)), a.abstract()), {0.0}) < 1e-12);
}

TEST_CASE("nilpotency predicates") {
  Matrix m(2, 2);
  m << 1.0, -1.0, 1.0, -1.0;
  CHECK(is_nilpotent(E(2, 1, 2), tol));
  CHECK(is_quasinilpotent(E(2, 1, 2), tol));
  CHECK_FALSE(is_nilpotent(oracle::diag({1.0, 0.0}), tol));
  CHECK_FALSE(is_quasinilpotent(oracle::diag({1.0, 0.0}), tol));
  CHECK(is_nilpotent(m, tol));
  CHECK(is_quasinilpotent(m, tol));
}

TEST_CASE("maximal commutative extensions") {
  const FiniteAlgebra m2 = full2();
  const FiniteAlgebra d = extend_to_maximal_commutative(m2, oracle::diag({1.0, 2.0}), tol);
  CHECK(d.dim() == 2);
  CHECK(is_commutative(d, tol));
  CHECK(d.contains(E(2, 1, 1), tol));
  const FiniteAlgebra n = extend_to_maximal_commutative(m2, E(2, 1, 2), tol);
  CHECK(n.dim() == 2);
  CHECK(n.contains(E(2, 1, 2), tol));
  CHECK(extend_to_maximal_commutative(dual2(), E(2, 1, 2), tol).dim() == 2);
  const Matrix x = oracle::diag({1.0, 2.0});
  CHECK(oracle::hausdorff(abstract_spectrum(d.coords(x), d.abstract()), oracle::eig(x)) < 1e-10);
}
