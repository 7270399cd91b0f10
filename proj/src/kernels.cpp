#include "radlie/kernels.hpp"

#include <numbers>

#include <omp.h>

namespace radlie {

Complex CircleNodes::node(int index) const {
  const int j = first + index * step;
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / nodes;
  return center + radius * std::polar(1.0, theta);
}

Complex CircleNodes::weight(int index) const {
  const int j = first + index * step;
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / nodes;
  return radius * std::polar(1.0, theta);
}

namespace {

Matrix resolvent(const Matrix& a, Complex z) {
  const Eigen::Index n = a.rows();
  Matrix shifted = -a;
  shifted.diagonal().array() += z;
  return shifted.partialPivLu().solve(Matrix::Identity(n, n));
}

// Block b covers node indices [b * kReductionBlock, min(count, (b + 1) * kReductionBlock)).
template <class Term>
Matrix blocked_sum(int count, Eigen::Index rows, Eigen::Index cols, Term term, Execution exec) {
  const int blocks = (count + kReductionBlock - 1) / kReductionBlock;
  std::vector<Matrix> partial(static_cast<std::size_t>(blocks), Matrix::Zero(rows, cols));

  auto run_block = [&](int b) {
    Matrix& acc = partial[static_cast<std::size_t>(b)];
    const int end = std::min(count, (b + 1) * kReductionBlock);
    for (int i = b * kReductionBlock; i < end; ++i) acc += term(i);
  };

  if (exec == Execution::parallel && blocks > 1 && omp_get_level() == 0) {
#pragma omp parallel for schedule(static)
    for (int b = 0; b < blocks; ++b) run_block(b);
  } else {
    for (int b = 0; b < blocks; ++b) run_block(b);
  }

  Matrix total = Matrix::Zero(rows, cols);
  for (const Matrix& p : partial) total += p;
  return total;
}

}  // namespace

Matrix cauchy_sum(const Matrix& a, const CircleNodes& circle, const ScalarFunction& f,
                  Execution exec) {
  auto term = [&](int i) -> Matrix {
    const Complex z = circle.node(i);
    return (f(z) * circle.weight(i)) * resolvent(a, z);
  };
  return blocked_sum(circle.count(), a.rows(), a.cols(), term, exec);
}

Matrix rosenblum_sum(const Matrix& a1, const Matrix& a2, Complex lambda, const Matrix& y,
                     const CircleNodes& circle, Execution exec) {
  auto term = [&](int i) -> Matrix {
    const Complex z = circle.node(i);
    return circle.weight(i) * (resolvent(a1, lambda + z) * y * resolvent(a2, z));
  };
  return blocked_sum(circle.count(), y.rows(), y.cols(), term, exec);
}

}  // namespace radlie
