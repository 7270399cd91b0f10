// The Sylvester operator x -> a1 x - x a2, its spectrum, and its resolvent as
// a contour integral of a product of resolvents.
#pragma once

#include "radlie/kernels.hpp"
#include "radlie/numeric.hpp"

namespace radlie {

class SylvesterOperator {
 public:
  SylvesterOperator(Matrix a1, Matrix a2);
  /// The inner derivation x -> a x - x a.
  static SylvesterOperator ad(const Matrix& a) { return {a, a}; }

  const Matrix& a1() const { return a1_; }
  const Matrix& a2() const { return a2_; }
  int size() const { return static_cast<int>(a1_.rows()); }
  /// n^2 x n^2 matrix acting on column-major vec(x).
  const Matrix& matrix_form() const { return form_; }
  Matrix apply(const Matrix& x) const { return a1_ * x - x * a2_; }

 private:
  Matrix a1_, a2_, form_;
};

std::vector<Complex> sylvester_spectrum(const SylvesterOperator& op);

struct InclusionCheck {
  /// Largest distance from an eigenvalue of the operator to the difference set.
  double max_distance = 0.0;
  bool included = false;
  /// Observational: every difference is also within tolerance of an eigenvalue.
  bool equality = false;
};

InclusionCheck check_spectrum_inclusion(const SylvesterOperator& op, const Tolerances& tol = {});

/// Distance from z to {l - m : l in sigma(a1), m in sigma(a2)}.
double distance_to_difference_set(Complex z, std::span<const Complex> s1, std::span<const Complex> s2);

struct SeparatingCircle {
  Complex center;
  double radius = 0.0;
  int rung = 0;
};

/// Circle about the centroid of sigma(a2) that encloses sigma(a2) while
/// sigma(a1) - lambda stays outside; radii r2 * 1.1^k for k = 1..20 are tried
/// and the rung with the best worst-case clearance ratio wins.
SeparatingCircle separating_circle(const SylvesterOperator& op, Complex lambda, const Tolerances& tol = {});

/// Solves lambda x - (a1 x - x a2) = y with the contour-integral inverse.
Matrix rosenblum_resolve(const SylvesterOperator& op, Complex lambda, const Matrix& y,
                         const Tolerances& tol = {}, Execution exec = Execution::parallel);

/// Dense solve of (lambda I - matrix_form) vec(x) = vec(y).
Matrix resolve_dense(const SylvesterOperator& op, Complex lambda, const Matrix& y);

/// Smallest integer strictly above 2 r(a) / |lambda|.
int nilpotency_bound(const Matrix& a, Complex lambda, const Tolerances& tol = {});

struct AdEigenvectorCheck {
  bool hypothesis_met = false;
  double hypothesis_residual = 0.0;  ///< |(ad a - lambda)^m b| / |b|
  int bound = 0;                     ///< N
  double power_residual = 0.0;       ///< |(b / |b|)^N|
  bool passed = false;               ///< hypothesis met and power_residual < residual_tol
};

AdEigenvectorCheck check_ad_eigvector_nilpotent(const Matrix& a, const Matrix& b, Complex lambda, int m,
                                                const Tolerances& tol = {});

}  // namespace radlie
