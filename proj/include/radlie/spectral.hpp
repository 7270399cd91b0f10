// Spectra, spectral radii and the holomorphic functional calculus by
// trapezoidal quadrature of the Cauchy integral on a circle.
#pragma once

#include <string>

#include "radlie/kernels.hpp"
#include "radlie/numeric.hpp"

namespace radlie {

struct Contour {
  Complex center;
  double radius = 1.0;
  int nodes = 64;
};

struct SpectrumReport {
  std::vector<Complex> eigenvalues;
  std::vector<Cluster> clusters;
  /// Largest cluster-centroid modulus.
  double spectral_radius = 0.0;
};

SpectrumReport spectrum(const Matrix& a, const Tolerances& tol = {});
double spectral_radius(const Matrix& a, const Tolerances& tol = {});

/// Circle about the eigenvalue centroid with radius 1.5 * (max distance to an
/// eigenvalue), floored at 1e-3.
Contour auto_contour(const Matrix& a, const Tolerances& tol = {});

/// Where a function stops being holomorphic.
enum class Singularity { none, pole_at_zero, cut_nonpositive_reals };

struct HoloFunction {
  std::string name;
  ScalarFunction eval;
  Singularity singularity = Singularity::none;

  static HoloFunction exp();
  static HoloFunction log();  // principal branch
  static HoloFunction inv();
  static HoloFunction identity();
  static HoloFunction constant_one();
  /// c0 + c1 z + c2 z^2 + ...
  static HoloFunction polynomial(std::vector<Complex> coeffs);
};

/// The circle f(a) is evaluated on by default: auto_contour widened to
/// 2 |a - c|_2 so that the resolvent stays well conditioned, and shrunk back
/// when f's singular set is in the way. Throws ContourError when no circle
/// around the spectrum avoids the singular set.
Contour admissible_contour(const HoloFunction& f, const Matrix& a, const Tolerances& tol = {});

struct HoloResult {
  Matrix value;
  int nodes = 0;
  double last_change = 0.0;
};

/// (1 / 2 pi i) \oint f(z) (z - a)^{-1} dz with node doubling until successive
/// approximations agree to residual_tol * max(1, |f(a)|) or 4096 nodes.
HoloResult holo_calc_detailed(const HoloFunction& f, const Matrix& a, const Contour& contour,
                              const Tolerances& tol = {}, Execution exec = Execution::parallel);
Matrix holo_calc(const HoloFunction& f, const Matrix& a, const Contour& contour,
                 const Tolerances& tol = {}, Execution exec = Execution::parallel);
/// holo_calc on admissible_contour(f, a).
Matrix holo_calc(const HoloFunction& f, const Matrix& a, const Tolerances& tol = {});

/// Scaling and squaring with a Taylor core.
Matrix exp_series(const Matrix& a);
Matrix exp_contour(const Matrix& a, const Tolerances& tol = {});
/// Contour value cross-checked against exp_series when the contour is well
/// conditioned; exp_series alone otherwise.
Matrix exp_matrix(const Matrix& a, const Tolerances& tol = {});
/// Finite series sum_{k>=1} (-1)^{k+1} (u - 1)^k / k for unipotent u.
Matrix log_unipotent(const Matrix& u, const Tolerances& tol = {});

struct SubmultiplicativityCheck {
  bool holds = false;
  double r_a = 0.0, r_b = 0.0, r_product = 0.0, r_sum = 0.0;
  /// r(a) r(b) - r(ab) and r(a) + r(b) - r(a + b); negative means violated.
  double product_slack = 0.0;
  double sum_slack = 0.0;
};

SubmultiplicativityCheck submultiplicativity_check(const Matrix& a, const Matrix& b,
                                                   const Tolerances& tol = {});

}  // namespace radlie
