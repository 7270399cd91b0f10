#include <doctest.h>

#include "oracles.hpp"
#include "radlie/lie.hpp"

using namespace radlie;
using oracle::E;

namespace {
const Tolerances tol;

LieSubalgebra lie(std::vector<Matrix> span, int n) { return make_lie_subalgebra(span, n, tol); }
LieSubalgebra sl2() { return lie({E(2, 1, 2), E(2, 2, 1)}, 2); }
LieSubalgebra borel2() { return lie({E(2, 1, 1), E(2, 2, 2), E(2, 1, 2)}, 2); }
LieSubalgebra heisenberg() { return lie({E(3, 1, 2), E(3, 1, 3), E(3, 2, 3)}, 3); }
LieSubalgebra strict3() { return lie({E(3, 1, 2), E(3, 2, 3)}, 3); }

std::vector<int> dims(const std::vector<LieSubalgebra>& s) {
  std::vector<int> out;
  for (const LieSubalgebra& g : s) out.push_back(g.dim());
  return out;
}
}  // namespace

TEST_CASE("closure matches the brute-force bracket oracle") {
  CHECK(lie({E(2, 1, 2)}, 2).dim() == 1);
  const LieSubalgebra s = sl2();
  CHECK(s.dim() == 3);
  CHECK(s.dim() == oracle::lie_closure_dim({E(2, 1, 2), E(2, 2, 1)}));
  CHECK(s.contains(E(2, 1, 1) - E(2, 2, 2), tol));
  CHECK(lie({E(2, 1, 1), E(2, 1, 2)}, 2).dim() == 2);
  const std::vector<Matrix> m{E(4, 1, 2) + E(4, 3, 4), E(4, 2, 3), oracle::diag({1.0, 0.0, 2.0, 0.0})};
  CHECK(lie(m, 4).dim() == oracle::lie_closure_dim(m));
}

TEST_CASE("structure constants reproduce brackets") {
  const LieSubalgebra g = borel2();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      Matrix sum = Matrix::Zero(2, 2);
      for (int k = 0; k < g.dim(); ++k) sum += g.constants(i, j, k) * g.basis[static_cast<std::size_t>(k)];
      const Matrix& a = g.basis[static_cast<std::size_t>(i)];
      const Matrix& b = g.basis[static_cast<std::size_t>(j)];
      CHECK((sum - (a * b - b * a)).norm() < 1e-12);
    }
}

TEST_CASE("derived and lower central series") {
  CHECK(dims(derived_series(borel2(), tol)) == std::vector<int>{3, 1, 0});
  CHECK(is_solvable(borel2(), tol));
  CHECK_FALSE(is_solvable(sl2(), tol));
  CHECK(is_solvable(lie({E(2, 1, 1), E(2, 2, 2)}, 2), tol));
  CHECK(is_nilpotent_lie(strict3(), tol));
  CHECK_FALSE(is_nilpotent_lie(borel2(), tol));
  CHECK(is_nilpotent_lie(lie({E(2, 1, 1), E(2, 2, 2)}, 2), tol));
}

TEST_CASE("solvable radical") {
  CHECK(solvable_radical(sl2(), tol).dim() == 0);
  CHECK(solvable_radical(borel2(), tol).dim() == 3);
  const LieSubalgebra gl2 = lie({E(2, 1, 1), E(2, 1, 2), E(2, 2, 1), E(2, 2, 2)}, 2);
  const LieSubalgebra r = solvable_radical(gl2, tol);
  REQUIRE(r.dim() == 1);
  CHECK(r.contains(Matrix::Identity(2, 2), tol));
  CHECK(quotient_killing_conditioning(gl2, r.basis, tol) > 1e-3);

  const LieSubalgebra mixed = lie({E(4, 1, 2), E(4, 2, 1), E(4, 3, 4)}, 4);
  const LieSubalgebra rm = solvable_radical(mixed, tol);
  REQUIRE(rm.dim() == 1);
  CHECK(rm.contains(E(4, 3, 4), tol));
}

TEST_CASE("Cartan subalgebras and roots") {
  const LieSubalgebra b = borel2();
  const LieSubalgebra h = cartan_subalgebra(b, 1, tol);
  CHECK(h.dim() == 2);
  // Any Cartan subalgebra of the Borel is a unipotent conjugate of the diagonal.
  CHECK(h.contains(Matrix::Identity(2, 2), tol));
  for (const Matrix& x : h.basis) {
    CHECK(std::abs(x(1, 0)) < 1e-12);
    for (const Matrix& y : h.basis) CHECK(commutator(x, y).norm() < 1e-12);
  }
  const CartanDecomposition d = root_decomposition(b, h, 2, tol);
  REQUIRE(d.roots.size() == 1);
  CHECK(projection_residual(d.roots[0].space, E(2, 1, 2)) < 1e-10);
  CHECK(d.fitting_plus.size() == 1);
  // alpha(diag(h1, h2)) = h1 - h2, checked on h's own basis.
  for (std::size_t i = 0; i < h.basis.size(); ++i) {
    const Matrix& x = h.basis[i];
    CHECK(std::abs(d.roots[0].values[i] - (x(0, 0) - x(1, 1))) < 1e-9);
  }

  const LieSubalgebra ab = lie({E(2, 1, 1), E(2, 2, 2)}, 2);
  const LieSubalgebra ha = cartan_subalgebra(ab, 3, tol);
  CHECK(ha.dim() == 2);
  CHECK(root_decomposition(ab, ha, 4, tol).roots.empty());
  CHECK(cartan_subalgebra(heisenberg(), 5, tol).dim() == 3);

  const LieSubalgebra g = lie({oracle::diag({1.0, -1.0}), E(2, 1, 2)}, 2);
  const LieSubalgebra hg = cartan_subalgebra(g, 6, tol);
  const CartanDecomposition dg = root_decomposition(g, hg, 7, tol);
  REQUIRE(dg.roots.size() == 1);
  CHECK(projection_residual(dg.roots[0].space, E(2, 1, 2)) < 1e-10);
  CHECK(hg.dim() + static_cast<int>(dg.fitting_plus.size()) == g.dim());
}

TEST_CASE("Fitting chain and nilpotent part for a Borel algebra") {
  const LieSubalgebra b = lie({E(3, 1, 1), E(3, 2, 2), E(3, 3, 3), E(3, 1, 2), E(3, 1, 3), E(3, 2, 3)}, 3);
  const LieSubalgebra h = cartan_subalgebra(b, 9, tol);
  const CartanDecomposition d = root_decomposition(b, h, 10, tol);
  CHECK(h.dim() == 3);
  CHECK(d.fitting_plus.size() == 3);
  const Basis n = nilpotent_subspace(b, 11, tol);
  CHECK(n.size() == 3);
  for (const Matrix& x : d.fitting_plus) CHECK(projection_residual(n, x) < 1e-9);
  for (const Matrix& x : n) CHECK(projection_residual(d.ad_nilpotent_part, x) < 1e-9);
  CHECK(d.ad_nilpotent_is_subspace);
  // Identity is ad-nilpotent but not nilpotent.
  CHECK(projection_residual(d.ad_nilpotent_part, Matrix::Identity(3, 3)) < 1e-9);
  CHECK(projection_residual(n, Matrix::Identity(3, 3)) > 0.5);
}

TEST_CASE("nest quotients") {
  const LieSubalgebra g = heisenberg();
  const NestQuotients q = nest_quotients(g, E(3, 1, 3), tol);
  CHECK(q.dims == std::vector<int>{0, 2, 3});
  int nonzero1 = 0, nonzero2 = 0;
  for (const Matrix& x : g.basis) {
    if (q.act(1, x).norm() > 1e-9) ++nonzero1;
    if (q.act(2, x).norm() > 1e-9) ++nonzero2;
  }
  CHECK(oracle::rank({q.act(1, E(3, 1, 2)), q.act(1, E(3, 1, 3)), q.act(1, E(3, 2, 3))}) == 1);
  CHECK(nonzero2 == 0);
  CHECK(nonzero1 >= 1);

  const NestQuotients a = nest_quotients(lie({E(2, 1, 2)}, 2), E(2, 1, 2), tol);
  CHECK(a.dims == std::vector<int>{0, 1, 2});
  CHECK(a.act(1, E(2, 1, 2)).norm() < 1e-12);
  CHECK(a.act(2, E(2, 1, 2)).norm() < 1e-12);
  CHECK_THROWS_AS(nest_quotients(g, E(3, 1, 2), tol), PreconditionError);
}

TEST_CASE("central nilpotent element") {
  const Matrix y = central_nilpotent_element(heisenberg(), 1, tol);
  REQUIRE(y.size() > 0);
  CHECK(projection_residual(span_basis(std::vector<Matrix>{E(3, 1, 3)}, tol), y) < 1e-9);
  CHECK(central_nilpotent_element(lie({E(2, 1, 1), E(2, 2, 2)}, 2), 1, tol).size() == 0);
}

TEST_CASE("minimal vanishing degree") {
  CHECK(minimal_vanishing_degree(lie({E(2, 1, 2)}, 2), tol) == 2);
  CHECK(minimal_vanishing_degree(strict3(), tol) == 3);
  CHECK(minimal_vanishing_degree(heisenberg(), tol) == 3);
  CHECK_THROWS_AS(minimal_vanishing_degree(borel2(), tol), PreconditionError);
}

TEST_CASE("ad-nilpotency on an ideal") {
  const LieSubalgebra j = lie({E(2, 1, 2)}, 2);
  CHECK(is_ad_nilpotent_on(E(2, 1, 2), j, tol));
  CHECK_FALSE(is_ad_nilpotent_on(oracle::diag({1.0, 0.0}), j, tol));
  const LieSubalgebra h = heisenberg();
  for (const Matrix& x : h.basis) {
    CHECK(is_ad_nilpotent_on(x, h, tol));
    // Engel by matrix power of ad x on g.
    const Matrix adx = h.ad(h.coords(x));
    CHECK(oracle::power(adx, h.dim()).norm() < 1e-12);
  }
  CHECK_THROWS_AS(is_ad_nilpotent_on(E(2, 2, 1), j, tol), PreconditionError);
}

TEST_CASE("size limit on closure") {
  std::vector<Matrix> big;
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j)
      if (i != j) big.push_back(E(9, i, j));
  CHECK_THROWS_AS(make_lie_subalgebra(big, 9, tol), SizeError);
}
