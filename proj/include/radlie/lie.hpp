// Lie subalgebras of M_n(C): closure, series, Killing form, solvable radical,
// Cartan subalgebras, root and Fitting decompositions, nest quotients.
#pragma once

#include <cstdint>

#include "radlie/algebra.hpp"

namespace radlie {

inline constexpr int kMaxLieDim = 64;

struct LieSubalgebra {
  int ambient_n = 0;
  Basis basis;
  /// [x_i, x_j] = sum_k c(i, j, k) x_k; left(i) is ad x_i in coordinates.
  StructureConstants constants;

  int dim() const { return static_cast<int>(basis.size()); }
  Vector coords(const Matrix& x) const { return coordinates(basis, x); }
  Matrix element(const Vector& c) const { return combine(basis, c); }
  bool contains(const Matrix& x, const Tolerances& tol) const { return radlie::contains(basis, x, tol); }
  /// ad x restricted to g, for x in g.
  Matrix ad(const Vector& x) const;
};

/// Structure on an orthonormal basis that is already bracket-closed.
LieSubalgebra lie_from_basis(int ambient_n, Basis basis, const Tolerances& tol);

/// Closes span(spanning) under commutators.
LieSubalgebra make_lie_subalgebra(std::span<const Matrix> spanning, int ambient_n, const Tolerances& tol);

/// span{[a, b] : a in x, b in y}
Basis bracket_span(const Basis& x, const Basis& y, const Tolerances& tol);

bool is_lie_ideal(const LieSubalgebra& g, const Basis& sub, const Tolerances& tol);

std::vector<LieSubalgebra> derived_series(const LieSubalgebra& g, const Tolerances& tol);
bool is_solvable(const LieSubalgebra& g, const Tolerances& tol);
std::vector<LieSubalgebra> lower_central_series(const LieSubalgebra& g, const Tolerances& tol);
bool is_nilpotent_lie(const LieSubalgebra& g, const Tolerances& tol);

/// tr(ad x_i ad x_j)
Matrix killing_form(const LieSubalgebra& g);

/// Killing-orthogonal of [g, g], verified solvable and an ideal.
LieSubalgebra solvable_radical(const LieSubalgebra& g, const Tolerances& tol);

/// Smallest singular value of the Killing form of g / r relative to its
/// largest; 1 when g = r.
double quotient_killing_conditioning(const LieSubalgebra& g, const Basis& r, const Tolerances& tol);

/// Normalizer {x in g : [x, h] in h}.
Basis normalizer(const LieSubalgebra& g, const Basis& h, const Tolerances& tol);

/// Generalized 0-eigenspace of ad h0 for random h0 drawn from `seed`; retried
/// up to 10 times until nilpotent and self-normalizing.
LieSubalgebra cartan_subalgebra(const LieSubalgebra& g, std::uint64_t seed, const Tolerances& tol);

/// A joint generalized eigenspace of commuting-up-to-nilpotent operators.
struct WeightSpace {
  std::vector<Complex> values;  ///< one value per operator
  Matrix space;                 ///< orthonormal columns
};

/// Simultaneous generalized-eigenspace refinement. The operators must leave
/// each other's generalized eigenspaces invariant (e.g. a representation of a
/// nilpotent Lie algebra).
std::vector<WeightSpace> simultaneous_weights(std::span<const Matrix> ops, const Tolerances& tol);

struct Root {
  std::vector<Complex> values;  ///< alpha(h_i) on the Cartan basis
  Basis space;                  ///< g^alpha
};

struct CartanDecomposition {
  LieSubalgebra cartan;
  std::vector<Root> roots;  ///< nonzero roots only
  Basis fitting_plus;       ///< sum of the nonzero root spaces
  /// {x : ad x nilpotent}. A subspace for solvable g; otherwise only the
  /// ad-nilpotent basis directions, with is_subspace = false.
  Basis ad_nilpotent_part;
  bool ad_nilpotent_is_subspace = false;
};

CartanDecomposition root_decomposition(const LieSubalgebra& g, const LieSubalgebra& h, std::uint64_t seed,
                                       const Tolerances& tol);

/// Nilpotent matrices of a solvable g: elements of h on which every weight of
/// h on C^n vanishes, plus [g, g].
Basis nilpotent_subspace(const LieSubalgebra& g, std::uint64_t seed, const Tolerances& tol);

/// A nonzero central nilpotent element of g, or an empty matrix.
Matrix central_nilpotent_element(const LieSubalgebra& g, std::uint64_t seed, const Tolerances& tol);

/// Flag X_k = Ker(Y^k) and the induced actions on X_k / X_{k-1}.
struct NestQuotients {
  std::vector<int> dims;  ///< dim X_0 = 0, ..., dim X_m = n
  /// Orthonormal complement of X_{k-1} in X_k, for k = 1..m.
  std::vector<Matrix> levels;

  /// Matrix of rho_k(t) on X_k / X_{k-1} (k is 1-based).
  Matrix act(int k, const Matrix& t) const;
};

NestQuotients nest_quotients(const LieSubalgebra& g, const Matrix& y, const Tolerances& tol);

/// Smallest m with every m-fold product of elements of g equal to zero.
int minimal_vanishing_degree(const LieSubalgebra& g, const Tolerances& tol);

/// Whether ad a restricted to j is nilpotent; requires [a, j] in j.
bool is_ad_nilpotent_on(const Matrix& a, const LieSubalgebra& j, const Tolerances& tol);

}  // namespace radlie
