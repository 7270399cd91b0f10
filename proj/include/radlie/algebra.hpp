// Finite-dimensional unital associative subalgebras of M_n(C) and abstract
// algebras given by structure constants.
#pragma once

#include "radlie/numeric.hpp"

namespace radlie {

/// b_i b_j = sum_k c(i, j, k) b_k, stored as left-multiplication matrices
/// (left[i])(k, j) = c(i, j, k).
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int dim);

  int dim() const { return dim_; }
  Complex operator()(int i, int j, int k) const { return left_[static_cast<std::size_t>(i)](k, j); }
  Complex& operator()(int i, int j, int k) { return left_[static_cast<std::size_t>(i)](k, j); }

  /// Matrix of x -> b_i x in coordinates.
  const Matrix& left(int i) const { return left_[static_cast<std::size_t>(i)]; }
  /// Matrix of x -> x b_i in coordinates.
  Matrix right(int i) const;

 private:
  int dim_ = 0;
  std::vector<Matrix> left_;
};

struct AbstractAlgebra {
  int dim = 0;
  StructureConstants constants;
  Vector unit;

  /// Matrix of the left-regular action L_a.
  Matrix left_regular(const Vector& a) const;
  Matrix right_regular(const Vector& a) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  /// max over basis triples of |(b_i b_j) b_k - b_i (b_j b_k)|.
  double associativity_residual() const;
  /// max over basis of |1 b_i - b_i| and |b_i 1 - b_i|.
  double unit_residual() const;
};

struct FiniteAlgebra {
  int ambient_n = 0;
  Basis basis;
  StructureConstants constants;
  Vector unit_coords;

  int dim() const { return static_cast<int>(basis.size()); }
  Vector coords(const Matrix& x) const { return coordinates(basis, x); }
  Matrix element(const Vector& c) const { return combine(basis, c); }
  bool contains(const Matrix& x, const Tolerances& tol) const { return radlie::contains(basis, x, tol); }
  AbstractAlgebra abstract() const { return {dim(), constants, unit_coords}; }
};

/// Builds the algebra structure on an orthonormal basis already closed under
/// products and containing the identity; throws PreconditionError otherwise.
FiniteAlgebra algebra_from_basis(int ambient_n, Basis basis, const Tolerances& tol);

/// Smallest unital subalgebra of M_n(C) containing the generators.
FiniteAlgebra generate_algebra(std::span<const Matrix> generators, int ambient_n,
                               const Tolerances& tol);

Basis center(const FiniteAlgebra& a, const Tolerances& tol);

/// Jacobson radical as the nullspace of the trace form tr(b_i b_j).
Basis radical(const FiniteAlgebra& a, const Tolerances& tol);

/// Radical of an abstract algebra via the trace form of its left-regular
/// representation; columns are coordinate vectors.
Matrix radical_coords(const AbstractAlgebra& a, const Tolerances& tol);

bool is_two_sided_ideal(const FiniteAlgebra& a, const Basis& ideal, const Tolerances& tol);

struct Quotient {
  AbstractAlgebra algebra;
  /// Maps coordinates in A to coordinates in A / I.
  Matrix projection;
  /// Matrices in A spanning the Frobenius-orthogonal complement of I.
  Basis complement;

  Vector project(const FiniteAlgebra& a, const Matrix& x) const { return projection * a.coords(x); }
};

Quotient quotient_by_ideal(const FiniteAlgebra& a, const Basis& ideal, const Tolerances& tol);

/// Spectrum of a in A computed as the eigenvalues of L_a.
std::vector<Complex> abstract_spectrum(const Vector& a, const AbstractAlgebra& alg);

/// |(a / max(1, |a|_2))^n|_F
double nilpotency_residual(const Matrix& a);
bool is_nilpotent(const Matrix& a, const Tolerances& tol);
bool is_quasinilpotent(const Matrix& a, const Tolerances& tol);

bool is_commutative(const FiniteAlgebra& a, const Tolerances& tol);

/// Maximal commutative subalgebra of A containing x, by greedy adjunction of
/// centralizer elements.
FiniteAlgebra extend_to_maximal_commutative(const FiniteAlgebra& a, const Matrix& x,
                                            const Tolerances& tol);

}  // namespace radlie
