// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; only its types.
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "radlie/numeric.hpp"

namespace oracle {

using radlie::Complex;
using radlie::Matrix;

inline Matrix E(int n, int i, int j) {
  Matrix m = Matrix::Zero(n, n);
  m(i - 1, j - 1) = 1.0;
  return m;
}

inline Matrix diag(std::initializer_list<Complex> d) {
  const int n = static_cast<int>(d.size());
  Matrix m = Matrix::Zero(n, n);
  int i = 0;
  for (Complex z : d) m(i, i) = z, ++i;
  return m;
}

inline Matrix horner(const std::vector<Complex>& c, const Matrix& a) {
  Matrix acc = Matrix::Zero(a.rows(), a.cols());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it * Matrix::Identity(a.rows(), a.cols());
  return acc;
}

inline Eigen::VectorXcd flatten(const Matrix& m) {
  Eigen::VectorXcd v(m.size());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) v(j * m.rows() + i) = m(i, j);
  return v;
}

inline int rank(const std::vector<Matrix>& ms, double tol = 1e-9) {
  if (ms.empty()) return 0;
  Matrix s(ms.front().size(), static_cast<Eigen::Index>(ms.size()));
  for (std::size_t k = 0; k < ms.size(); ++k) s.col(static_cast<Eigen::Index>(k)) = flatten(ms[k]);
  Eigen::FullPivLU<Matrix> lu(s);
  lu.setThreshold(tol);
  return static_cast<int>(lu.rank());
}

/// Dimension of the unital algebra generated by gens: all words up to length n^2.
inline int closure_dim(const std::vector<Matrix>& gens, int n) {
  std::vector<Matrix> words{Matrix::Identity(n, n)};
  std::vector<Matrix> frontier = words;
  for (int len = 0; len < n * n && !frontier.empty(); ++len) {
    std::vector<Matrix> next;
    for (const Matrix& w : frontier)
      for (const Matrix& g : gens) {
        std::vector<Matrix> trial = words;
        trial.push_back(w * g);
        if (rank(trial) > rank(words)) {
          words.push_back(w * g);
          next.push_back(w * g);
        }
      }
    frontier = next;
  }
  return rank(words);
}

/// Dimension of the Lie closure by repeated brackets of all pairs.
inline int lie_closure_dim(std::vector<Matrix> span) {
  for (;;) {
    const int before = rank(span);
    std::vector<Matrix> grown = span;
    for (const Matrix& a : span)
      for (const Matrix& b : span) grown.push_back(a * b - b * a);
    if (rank(grown) == before) return before;
    span = grown;
  }
}

/// Kronecker form of x -> a1 x - x a2 built entrywise.
inline Matrix sylvester_kron(const Matrix& a1, const Matrix& a2) {
  const Eigen::Index n = a1.rows();
  Matrix k = Matrix::Zero(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      Matrix unit = Matrix::Zero(n, n);
      unit(i, j) = 1.0;
      k.col(j * n + i) = flatten(a1 * unit - unit * a2);
    }
  return k;
}

inline Matrix unflatten(const Eigen::VectorXcd& v, Eigen::Index n) {
  Matrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = v(j * n + i);
  return m;
}

inline Matrix sylvester_solve(const Matrix& a1, const Matrix& a2, Complex lambda, const Matrix& y) {
  const Eigen::Index n = a1.rows();
  const Matrix op = lambda * Matrix::Identity(n * n, n * n) - sylvester_kron(a1, a2);
  return unflatten(Eigen::FullPivLU<Matrix>(op).solve(flatten(y)), n);
}

inline Matrix power(const Matrix& a, int k) {
  Matrix p = Matrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) p = p * a;
  return p;
}

/// Taylor series with enough terms for |a| small to moderate.
inline Matrix exp_taylor(const Matrix& a, int terms = 80) {
  Matrix sum = Matrix::Identity(a.rows(), a.cols());
  Matrix term = sum;
  for (int k = 1; k < terms; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

/// max over x of min distance to y, symmetrised.
inline double hausdorff(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  auto one = [](const std::vector<Complex>& p, const std::vector<Complex>& q) {
    double worst = 0.0;
    for (Complex a : p) {
      double best = 1e300;
      for (Complex b : q) best = std::min(best, std::abs(a - b));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one(x, y), one(y, x));
}

inline std::vector<Complex> eig(const Matrix& a) {
  Eigen::ComplexEigenSolver<Matrix> s(a, false);
  return {s.eigenvalues().data(), s.eigenvalues().data() + s.eigenvalues().size()};
}

/// Largest residual of projecting each of x onto span(y) and back.
inline double span_gap(const std::vector<Matrix>& x, const std::vector<Matrix>& y) {
  if (rank(x) != rank(y)) return 1e300;
  std::vector<Matrix> both = x;
  both.insert(both.end(), y.begin(), y.end());
  return rank(both) == rank(x) ? 0.0 : 1e300;
}

}  // namespace oracle
