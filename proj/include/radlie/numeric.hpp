// Dense complex linear algebra at desk scale: eigenvalues and clustering,
// tolerant spans and nullspaces, Frobenius geometry on subspaces of M_n(C).
#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace radlie {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Ordered list of Frobenius-orthonormal matrices spanning a subspace of M_n(C).
using Basis = std::vector<Matrix>;

inline constexpr int kMaxAmbient = 64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class DimensionError : public Error {
 public:
  using Error::Error;
};
class NumericalFailure : public Error {
 public:
  using Error::Error;
};
class PreconditionError : public Error {
 public:
  using Error::Error;
};
class ContourError : public Error {
 public:
  using Error::Error;
};
class ResolventError : public Error {
 public:
  using Error::Error;
};
class SizeError : public Error {
 public:
  using Error::Error;
};

struct Tolerances {
  double rank_tol = 1e-9;      ///< relative singular-value cutoff
  double spec_tol = 1e-7;      ///< eigenvalue matching radius (relative to max(1, |m|))
  double residual_tol = 1e-8;  ///< acceptance residual

  /// Throws PreconditionError unless all positive and rank_tol < 1.
  void validate() const;
};

Matrix identity(int n);
/// Matrix unit E_ij of size n (zero-based indices).
Matrix unit(int n, int i, int j);
Matrix commutator(const Matrix& a, const Matrix& b);

double norm(const Matrix& m);  // Frobenius
double norm2(const Matrix& m);  // spectral
/// Frobenius inner product <a, b> = tr(a^* b).
Complex inner(const Matrix& a, const Matrix& b);

void require_square(const Matrix& m, const char* what);
void require_finite(const Matrix& m, const char* what);

// ---------------------------------------------------------------------------
// Eigenvalues

/// All eigenvalues with algebraic multiplicity (complex Schur form).
std::vector<Complex> eigenvalues(const Matrix& m);

/// Eigenvalues with their condition numbers |x_i| |y_i| / |y_i^* x_i|; the
/// conditions are +inf when the eigenvector matrix is numerically singular.
struct EigenSystem {
  std::vector<Complex> values;
  std::vector<double> conditions;
};
EigenSystem eigen_system(const Matrix& m);

/// A group of computed eigenvalues treated as one spectral point.
struct Cluster {
  Complex centroid;
  int multiplicity = 0;
  double radius = 0.0;  ///< max distance of a member from the centroid
};

/// Largest diameter of a cluster of `size` eigenvalues at matrix scale `scale`.
/// A k-fold defective eigenvalue perturbed by O(e) spreads on a circle of
/// radius O(e^{1/k}), so the threshold grows with k; size 1 falls back to
/// spec_tol * scale.
double cluster_threshold(int size, double scale, const Tolerances& tol);

/// Divisive clustering: a group whose diameter exceeds the threshold for its
/// size, or whose longest spanning tree edge is over 10 times the next one,
/// is cut at the longest edge of its minimum spanning tree. With
/// condition numbers, each member must also lie within its first-order error
/// bound of the group centroid. Clusters are returned sorted by
/// (real, imag) of their centroids.
std::vector<Cluster> cluster_eigenvalues(std::span<const Complex> eigs, double scale,
                                         const Tolerances& tol, std::span<const double> conditions = {});
/// Clusters of eigen_system(m).
std::vector<Cluster> cluster_spectrum(const Matrix& m, const Tolerances& tol);

/// Hausdorff distance between the centroid sets of two clusterings.
double set_distance(std::span<const Cluster> a, std::span<const Cluster> b);

/// Greedy multiplicity-aware matching; returns the largest centroid distance
/// used, or +inf when the multiplicities cannot be matched.
double multiset_distance(std::span<const Cluster> a, std::span<const Cluster> b);

/// Compares `other` against the clustered reference eigenvalues: each value in
/// `other` joins its nearest reference cluster and the mean of each cluster's
/// members is compared with the cluster centroid. Returns the largest
/// deviation, or +inf when a cluster receives nothing (or, with
/// `with_multiplicity`, a different count).
double spectral_match_distance(std::span<const Complex> reference, double scale, std::span<const Complex> other,
                               bool with_multiplicity, const Tolerances& tol,
                               std::span<const double> conditions = {});

/// max(1, |m|_F): the scale used for all relative spectral comparisons.
double spectral_scale(const Matrix& m);

// ---------------------------------------------------------------------------
// Subspaces

/// Orthonormal basis of span(vectors). Rank is decided by singular values
/// greater than rank_tol * max(s_max, scale); pass scale = 1 when the inputs
/// are built from unit-norm elements so that numerically-zero inputs vanish.
Basis span_basis(std::span<const Matrix> vectors, const Tolerances& tol, double scale = 0.0);

Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, int rows, int cols);
/// Columns are vec(vectors[i]).
Matrix stack(std::span<const Matrix> vectors);

Vector coordinates(const Basis& basis, const Matrix& x);
Matrix combine(const Basis& basis, const Vector& coords);
Matrix project(const Basis& basis, const Matrix& x);
/// |x - P x|_F / max(1, |x|_F)
double projection_residual(const Basis& basis, const Matrix& x);
bool contains(const Basis& basis, const Matrix& x, const Tolerances& tol);
/// Largest mutual projection residual between the two subspaces; +inf when
/// their dimensions differ.
double subspace_distance(const Basis& a, const Basis& b);
/// Orthonormal basis of the orthogonal complement of `sub` inside `big`.
Basis complement_in(const Basis& big, const Basis& sub, const Tolerances& tol);
Basis intersect(const Basis& a, const Basis& b, const Tolerances& tol);

struct Nullspace {
  Matrix basis;  ///< orthonormal columns
  Eigen::VectorXd singular_values;
  /// Some singular value lies within a factor 10 of the cutoff.
  bool ambiguous = false;
};

/// Right nullspace of m with cutoff rank_tol * max(s_max, scale).
Nullspace nullspace(const Matrix& m, double rank_tol, double scale = 0.0);

/// Orthonormal basis (columns) of Ker((m - lambda)^n), the invariant
/// subspace of the cluster matching lambda.
Matrix generalized_eigenspace(const Matrix& m, Complex lambda, const Tolerances& tol);

/// Invariant subspace of one cluster of m (columns, orthonormal), from a
/// Schur form reordered to put the cluster first.
Matrix cluster_eigenspace(const Matrix& m, std::span<const Cluster> clusters, std::size_t which,
                          const Tolerances& tol);

}  // namespace radlie
