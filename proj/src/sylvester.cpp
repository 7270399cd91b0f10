#include "radlie/sylvester.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "radlie/spectral.hpp"

namespace radlie {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Complex centroid(std::span<const Complex> zs) {
  Complex s = 0.0;
  for (const Complex& z : zs) s += z;
  return s / static_cast<double>(zs.size());
}

double operator_scale(const SylvesterOperator& op) {
  return std::max(1.0, op.a1().norm() + op.a2().norm());
}

}  // namespace

SylvesterOperator::SylvesterOperator(Matrix a1, Matrix a2) : a1_(std::move(a1)), a2_(std::move(a2)) {
  require_square(a1_, "SylvesterOperator");
  require_square(a2_, "SylvesterOperator");
  if (a1_.rows() != a2_.rows()) throw DimensionError("SylvesterOperator: a1 and a2 differ in size");
  const Eigen::Index n = a1_.rows();
  const Matrix id = Matrix::Identity(n, n);
  form_ = kron(id, a1_) - kron(a2_.transpose(), id);
}

std::vector<Complex> sylvester_spectrum(const SylvesterOperator& op) {
  if (op.size() > 16) throw DimensionError("sylvester_spectrum: n must be <= 16");
  return eigenvalues(op.matrix_form());
}

double distance_to_difference_set(Complex z, std::span<const Complex> s1, std::span<const Complex> s2) {
  double best = std::numeric_limits<double>::infinity();
  for (const Complex& l : s1)
    for (const Complex& m : s2) best = std::min(best, std::abs(z - (l - m)));
  return best;
}

InclusionCheck check_spectrum_inclusion(const SylvesterOperator& op, const Tolerances& tol) {
  const auto s1 = eigenvalues(op.a1());
  const auto s2 = eigenvalues(op.a2());
  const auto sd = sylvester_spectrum(op);
  const double radius = tol.spec_tol * operator_scale(op);
  InclusionCheck c;
  for (const Complex& z : sd) c.max_distance = std::max(c.max_distance, distance_to_difference_set(z, s1, s2));
  c.included = c.max_distance <= radius;
  c.equality = true;
  for (const Complex& l : s1)
    for (const Complex& m : s2) {
      double best = std::numeric_limits<double>::infinity();
      for (const Complex& z : sd) best = std::min(best, std::abs(z - (l - m)));
      if (best > radius) c.equality = false;
    }
  return c;
}

SeparatingCircle separating_circle(const SylvesterOperator& op, Complex lambda, const Tolerances& tol) {
  const auto s1 = eigenvalues(op.a1());
  const auto s2 = eigenvalues(op.a2());
  const double scale = operator_scale(op);
  if (distance_to_difference_set(lambda, s1, s2) <= 2.0 * tol.spec_tol * scale)
    throw ResolventError("rosenblum_resolve: lambda is too close to sigma(a1) - sigma(a2)");

  const Complex c2 = centroid(s2);
  double r2 = 0.0;
  for (const Complex& m : s2) r2 = std::max(r2, std::abs(m - c2));
  double r_out = std::numeric_limits<double>::infinity();
  for (const Complex& l : s1) r_out = std::min(r_out, std::abs(l - lambda - c2));

  const double gap = tol.spec_tol * scale;
  const double base = std::max(r2, 1e-3 * std::min(1.0, r_out));
  SeparatingCircle best;
  double best_score = 1.0;
  double rho = base;
  for (int k = 1; k <= 20; ++k) {
    rho *= 1.1;
    if (rho < r2 + gap || rho > r_out - gap) continue;
    const double score = std::max(r2 / rho, rho / r_out);
    if (score < best_score) {
      best_score = score;
      best = {c2, rho, k};
    }
  }
  if (best.rung == 0) throw ContourError("rosenblum_resolve: no separating circle found");
  return best;
}

Matrix rosenblum_resolve(const SylvesterOperator& op, Complex lambda, const Matrix& y, const Tolerances& tol,
                         Execution exec) {
  if (y.rows() != op.size() || y.cols() != op.size()) throw DimensionError("rosenblum_resolve: y has wrong shape");
  const SeparatingCircle sc = separating_circle(op, lambda, tol);

  CircleNodes circle{sc.center, sc.radius, 64, 0, 1};
  Matrix sum = rosenblum_sum(op.a1(), op.a2(), lambda, y, circle, exec);
  Matrix x = sum / static_cast<double>(circle.nodes);
  bool converged = false;
  while (circle.nodes < 4096) {
    CircleNodes odd{sc.center, sc.radius, circle.nodes * 2, 1, 2};
    sum += rosenblum_sum(op.a1(), op.a2(), lambda, y, odd, exec);
    circle.nodes *= 2;
    Matrix next = sum / static_cast<double>(circle.nodes);
    const double change = (next - x).norm();
    x = std::move(next);
    if (change <= tol.residual_tol * std::max(1.0, x.norm())) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericalFailure("rosenblum_resolve: quadrature did not converge at 4096 nodes");

  const double residual = (lambda * x - op.apply(x) - y).norm();
  const double scale = std::max(1.0, std::abs(lambda) + norm2(op.a1()) + norm2(op.a2()));
  if (residual > 1e-7 * std::max(1.0, y.norm()) * scale)
    throw NumericalFailure("rosenblum_resolve: residual exceeds 1e-7");
  return x;
}

Matrix resolve_dense(const SylvesterOperator& op, Complex lambda, const Matrix& y) {
  const Eigen::Index n2 = op.matrix_form().rows();
  Matrix system = -op.matrix_form();
  system.diagonal().array() += lambda;
  const Vector v = system.partialPivLu().solve(vec(y));
  (void)n2;
  return unvec(v, op.size(), op.size());
}

int nilpotency_bound(const Matrix& a, Complex lambda, const Tolerances& tol) {
  if (lambda == Complex(0.0)) throw PreconditionError("nilpotency_bound: lambda must be nonzero");
  const double r = spectral_radius(a, tol);
  return static_cast<int>(std::floor(2.0 * r / std::abs(lambda))) + 1;
}

AdEigenvectorCheck check_ad_eigvector_nilpotent(const Matrix& a, const Matrix& b, Complex lambda, int m,
                                                const Tolerances& tol) {
  AdEigenvectorCheck c;
  c.bound = nilpotency_bound(a, lambda, tol);
  const double nb = b.norm();
  if (nb == 0.0) {
    c.hypothesis_met = true;
    c.passed = true;
    return c;
  }
  Matrix x = b;
  for (int k = 0; k < m; ++k) x = commutator(a, x) - lambda * x;
  c.hypothesis_residual = x.norm() / nb;
  c.hypothesis_met = c.hypothesis_residual < tol.residual_tol;
  if (!c.hypothesis_met) return c;

  const Matrix unit_b = b / nb;
  Matrix p = unit_b;
  for (int k = 1; k < c.bound; ++k) p = p * unit_b;
  c.power_residual = p.norm();
  c.passed = c.power_residual < tol.residual_tol;
  return c;
}

}  // namespace radlie
