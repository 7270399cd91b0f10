// Trapezoidal contour-quadrature kernels on a circle. Each kernel has an
// OpenMP path and a serial reference; both accumulate nodes in fixed blocks
// and reduce the block sums in index order, so the two paths agree bit for bit.
#pragma once

#include <functional>

#include "radlie/numeric.hpp"

namespace radlie {

enum class Execution { serial, parallel };

/// Nodes z_j = center + radius * exp(2 pi i j / nodes) for j = first, first + step, ...
struct CircleNodes {
  Complex center;
  double radius = 1.0;
  int nodes = 64;
  int first = 0;
  int step = 1;

  int count() const { return (nodes - first + step - 1) / step; }
  Complex node(int index) const;
  /// dz / (2 pi i) per unit of (1 / nodes): radius * exp(i theta_j).
  Complex weight(int index) const;
};

using ScalarFunction = std::function<Complex(Complex)>;

/// Sum over the selected nodes of f(z_j) * w_j * (z_j - a)^{-1}.
/// Dividing by `nodes` gives the trapezoidal approximation of
/// (1 / 2 pi i) \oint f(z) (z - a)^{-1} dz.
Matrix cauchy_sum(const Matrix& a, const CircleNodes& circle, const ScalarFunction& f,
                  Execution exec);

/// Sum over the selected nodes of w_j * ((lambda + z_j) - a1)^{-1} y (z_j - a2)^{-1}.
Matrix rosenblum_sum(const Matrix& a1, const Matrix& a2, Complex lambda, const Matrix& y,
                     const CircleNodes& circle, Execution exec);

/// Nodes per reduction block; fixed so results do not depend on thread count.
inline constexpr int kReductionBlock = 16;

}  // namespace radlie
