#include "radlie/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace radlie {

StructureConstants::StructureConstants(int dim)
    : dim_(dim), left_(static_cast<std::size_t>(dim), Matrix::Zero(dim, dim)) {}

Matrix StructureConstants::right(int i) const {
  Matrix r(dim_, dim_);
  for (int j = 0; j < dim_; ++j) r.col(j) = left_[static_cast<std::size_t>(j)].col(i);
  return r;
}

Matrix AbstractAlgebra::left_regular(const Vector& a) const {
  Matrix l = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) l += a(i) * constants.left(i);
  return l;
}

Matrix AbstractAlgebra::right_regular(const Vector& a) const {
  Matrix r = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) r += a(i) * constants.right(i);
  return r;
}

Vector AbstractAlgebra::multiply(const Vector& a, const Vector& b) const { return left_regular(a) * b; }

double AbstractAlgebra::associativity_residual() const {
  double worst = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      // L_{b_i b_j} = L_{b_i} L_{b_j}
      const Matrix lhs = left_regular(constants.left(i).col(j));
      const Matrix rhs = constants.left(i) * constants.left(j);
      worst = std::max(worst, (lhs - rhs).norm());
    }
  return worst;
}

double AbstractAlgebra::unit_residual() const {
  const Matrix l = left_regular(unit);
  const Matrix r = right_regular(unit);
  const Matrix id = Matrix::Identity(dim, dim);
  return std::max((l - id).norm(), (r - id).norm());
}

FiniteAlgebra algebra_from_basis(int ambient_n, Basis basis, const Tolerances& tol) {
  FiniteAlgebra a;
  a.ambient_n = ambient_n;
  a.basis = std::move(basis);
  const int d = a.dim();
  a.constants = StructureConstants(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Matrix p = a.basis[static_cast<std::size_t>(i)] * a.basis[static_cast<std::size_t>(j)];
      if (projection_residual(a.basis, p) > tol.residual_tol)
        throw PreconditionError("algebra basis is not closed under products");
      const Vector c = a.coords(p);
      for (int k = 0; k < d; ++k) a.constants(i, j, k) = c(k);
    }
  const Matrix id = identity(ambient_n);
  if (!a.contains(id, tol)) throw PreconditionError("algebra basis does not contain the identity");
  a.unit_coords = a.coords(id);
  return a;
}

FiniteAlgebra generate_algebra(std::span<const Matrix> generators, int ambient_n,
                               const Tolerances& tol) {
  if (ambient_n < 1 || ambient_n > kMaxAmbient) throw DimensionError("generate_algebra: ambient size out of range");
  std::vector<Matrix> seeds{identity(ambient_n)};
  for (const Matrix& g : generators) {
    if (g.rows() != ambient_n || g.cols() != ambient_n)
      throw DimensionError("generate_algebra: generator has wrong shape");
    require_finite(g, "generate_algebra");
    seeds.push_back(g);
  }
  if (seeds.size() == 2) {
    // One generator: Arnoldi on the shifted powers.
    const Matrix shifted = seeds[1] - (seeds[1].trace() / static_cast<double>(ambient_n)) * seeds[0];
    const double scale = shifted.norm();
    Basis basis{seeds[0] / std::sqrt(static_cast<double>(ambient_n))};
    for (int k = 1; k < ambient_n && scale > 0.0; ++k) {
      Matrix w = shifted * basis.back();
      for (int pass = 0; pass < 2; ++pass)
        for (const Matrix& q : basis) w -= inner(q, w) * q;
      const double norm = w.norm();
      if (norm <= tol.rank_tol * scale) break;
      basis.push_back(w / norm);
    }
    return algebra_from_basis(ambient_n, std::move(basis), tol);
  }
  Basis basis = span_basis(seeds, tol);
  for (int round = 0; round < ambient_n * ambient_n; ++round) {
    std::vector<Matrix> candidates(basis.begin(), basis.end());
    for (const Matrix& x : basis)
      for (const Matrix& y : basis) candidates.push_back(x * y);
    Basis next = span_basis(candidates, tol);
    if (next.size() == basis.size()) break;
    basis = std::move(next);
  }
  return algebra_from_basis(ambient_n, std::move(basis), tol);
}

Basis center(const FiniteAlgebra& a, const Tolerances& tol) {
  const int d = a.dim();
  Matrix stacked(static_cast<Eigen::Index>(d) * d, d);
  for (int j = 0; j < d; ++j)
    stacked.middleRows(static_cast<Eigen::Index>(j) * d, d) = a.constants.right(j) - a.constants.left(j);
  const Nullspace ns = nullspace(stacked, tol.rank_tol, 1.0);
  std::vector<Matrix> elems;
  for (Eigen::Index k = 0; k < ns.basis.cols(); ++k) elems.push_back(a.element(ns.basis.col(k)));
  return span_basis(elems, tol, 0.1);
}

namespace {

Basis elements_from_columns(const FiniteAlgebra& a, const Matrix& cols, const Tolerances& tol) {
  std::vector<Matrix> elems;
  for (Eigen::Index k = 0; k < cols.cols(); ++k) elems.push_back(a.element(cols.col(k)));
  return span_basis(elems, tol, 0.1);
}

}  // namespace

Basis radical(const FiniteAlgebra& a, const Tolerances& tol) {
  const int d = a.dim();
  Matrix gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      gram(i, j) = (a.basis[static_cast<std::size_t>(i)] * a.basis[static_cast<std::size_t>(j)]).trace();
  const Nullspace ns = nullspace(gram, tol.rank_tol);
  if (ns.ambiguous) throw NumericalFailure("radical: trace-form nullspace is tolerance-ambiguous");
  return elements_from_columns(a, ns.basis, tol);
}

Matrix radical_coords(const AbstractAlgebra& a, const Tolerances& tol) {
  Matrix gram(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) gram(i, j) = (a.constants.left(i) * a.constants.left(j)).trace();
  const Nullspace ns = nullspace(gram, tol.rank_tol);
  if (ns.ambiguous) throw NumericalFailure("radical: trace-form nullspace is tolerance-ambiguous");
  return ns.basis;
}

bool is_two_sided_ideal(const FiniteAlgebra& a, const Basis& ideal, const Tolerances& tol) {
  for (const Matrix& r : ideal) {
    if (!a.contains(r, tol)) return false;
    for (const Matrix& b : a.basis)
      if (!contains(ideal, b * r, tol) || !contains(ideal, r * b, tol)) return false;
  }
  return true;
}

Quotient quotient_by_ideal(const FiniteAlgebra& a, const Basis& ideal, const Tolerances& tol) {
  if (!is_two_sided_ideal(a, ideal, tol))
    throw PreconditionError("quotient_by_ideal: subspace is not a two-sided ideal");
  const int d = a.dim();
  Matrix ideal_coords(d, static_cast<Eigen::Index>(ideal.size()));
  for (std::size_t j = 0; j < ideal.size(); ++j) ideal_coords.col(static_cast<Eigen::Index>(j)) = a.coords(ideal[j]);

  Matrix comp;
  if (ideal.empty()) {
    comp = Matrix::Identity(d, d);
  } else {
    comp = nullspace(ideal_coords.adjoint(), tol.rank_tol, 1.0).basis;
  }
  const auto k = static_cast<int>(comp.cols());
  if (k + static_cast<int>(ideal.size()) != d)
    throw NumericalFailure("quotient_by_ideal: complement dimension mismatch");

  Quotient q;
  q.projection = comp.adjoint();
  const AbstractAlgebra abs = a.abstract();
  q.algebra.dim = k;
  q.algebra.constants = StructureConstants(k);
  for (int p = 0; p < k; ++p)
    for (int r = 0; r < k; ++r) {
      const Vector prod = q.projection * abs.multiply(comp.col(p), comp.col(r));
      for (int s = 0; s < k; ++s) q.algebra.constants(p, r, s) = prod(s);
    }
  q.algebra.unit = q.projection * a.unit_coords;
  for (int p = 0; p < k; ++p) q.complement.push_back(a.element(comp.col(p)));
  return q;
}

std::vector<Complex> abstract_spectrum(const Vector& a, const AbstractAlgebra& alg) {
  if (a.size() != alg.dim) throw DimensionError("abstract_spectrum: coordinate vector has wrong length");
  return eigenvalues(alg.left_regular(a));
}

double nilpotency_residual(const Matrix& a) {
  require_square(a, "nilpotency_residual");
  const double s = std::max(1.0, norm2(a));
  const Matrix x = a / s;
  Matrix p = x;
  for (Eigen::Index k = 1; k < a.rows(); ++k) p = p * x;
  return p.norm();
}

bool is_quasinilpotent(const Matrix& a, const Tolerances& tol) {
  require_square(a, "is_quasinilpotent");
  const double scale = spectral_scale(a);
  for (const Cluster& c : cluster_spectrum(a, tol))
    if (std::abs(c.centroid) > tol.spec_tol * scale) return false;
  return true;
}

bool is_nilpotent(const Matrix& a, const Tolerances& tol) {
  return nilpotency_residual(a) <= tol.residual_tol && is_quasinilpotent(a, tol);
}

bool is_commutative(const FiniteAlgebra& a, const Tolerances& tol) {
  for (int i = 0; i < a.dim(); ++i)
    if ((a.constants.left(i) - a.constants.right(i)).norm() > tol.residual_tol) return false;
  return true;
}

namespace {

// Centralizer of the subspace `s` inside A.
Basis centralizer_in(const FiniteAlgebra& a, const Basis& s, const Tolerances& tol) {
  const int d = a.dim();
  const AbstractAlgebra abs = a.abstract();
  Matrix stacked(static_cast<Eigen::Index>(s.size()) * d, d);
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Vector sc = a.coords(s[j]);
    stacked.middleRows(static_cast<Eigen::Index>(j) * d, d) = abs.right_regular(sc) - abs.left_regular(sc);
  }
  const Nullspace ns = nullspace(stacked, tol.rank_tol, 1.0);
  return elements_from_columns(a, ns.basis, tol);
}

}  // namespace

FiniteAlgebra extend_to_maximal_commutative(const FiniteAlgebra& a, const Matrix& x,
                                            const Tolerances& tol) {
  if (!a.contains(x, tol)) throw PreconditionError("extend_to_maximal_commutative: x is not in A");
  std::vector<Matrix> gens{x};
  FiniteAlgebra s = generate_algebra(gens, a.ambient_n, tol);
  for (int guard = 0; guard <= a.dim(); ++guard) {
    const Basis c = centralizer_in(a, s.basis, tol);
    if (c.size() <= s.basis.size()) return s;
    // Skip spurious centralizer directions.
    bool grown = false;
    for (const Matrix& e : complement_in(c, s.basis, tol)) {
      gens.push_back(e);
      FiniteAlgebra next = generate_algebra(gens, a.ambient_n, tol);
      if (is_commutative(next, tol)) {
        s = std::move(next);
        grown = true;
        break;
      }
      gens.pop_back();
    }
    if (!grown) return s;
  }
  throw NumericalFailure("extend_to_maximal_commutative: did not stabilize");
}

}  // namespace radlie
