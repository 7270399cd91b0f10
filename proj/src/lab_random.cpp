#include <algorithm>
#include <array>
#include <cmath>

#include "radlie/lab.hpp"

namespace radlie {

void InstanceSpec::validate() const {
  if (trials < 1) throw UsageError("trials must be at least 1");
  if (ambient_n < 1 || ambient_n > kMaxAmbient) throw UsageError("dim must be between 1 and 64");
  if (lie_dim_cap < 1 || lie_dim_cap > kMaxLieDim) throw UsageError("max-lie-dim must be between 1 and 64");
  if (jobs < 0) throw UsageError("jobs must be non-negative");
  try {
    tol.validate();
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

Complex random_complex(Rng& rng) {
  std::normal_distribution<double> normal;
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

Matrix random_gaussian(int rows, int cols, Rng& rng) {
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = random_complex(rng);
  return m;
}

Matrix random_unitary(int n, Rng& rng) {
  const Matrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // Fix the phases so the distribution does not depend on QR conventions.
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

Matrix random_conjugator(int n, Rng& rng) {
  const Matrix u = random_unitary(n, rng);
  const Matrix v = random_unitary(n, rng);
  Eigen::VectorXd s(n);
  for (int i = 0; i < n; ++i) s(i) = std::pow(10.0, uniform_real(0.0, 1.0, rng));
  return u * s.cast<Complex>().asDiagonal() * v.adjoint();
}

int uniform_int(int lo, int hi, Rng& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng);
}

double uniform_real(double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng);
}

Matrix conjugate(const Matrix& p, const Matrix& p_inv, const Matrix& x) { return p * x * p_inv; }

}  // namespace radlie
