#include "radlie/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "radlie/algebra.hpp"

namespace radlie {

SpectrumReport spectrum(const Matrix& a, const Tolerances& tol) {
  SpectrumReport r;
  const EigenSystem es = eigen_system(a);
  r.eigenvalues = es.values;
  r.clusters = cluster_eigenvalues(r.eigenvalues, spectral_scale(a), tol, es.conditions);
  for (const Cluster& c : r.clusters) r.spectral_radius = std::max(r.spectral_radius, std::abs(c.centroid));
  return r;
}

double spectral_radius(const Matrix& a, const Tolerances& tol) { return spectrum(a, tol).spectral_radius; }

namespace {

struct Extent {
  Complex center;
  double radius = 0.0;
  std::vector<Complex> eigs;
};

Extent spectral_extent(const Matrix& a) {
  Extent e;
  e.eigs = eigenvalues(a);
  Complex sum = 0.0;
  for (const Complex& z : e.eigs) sum += z;
  e.center = sum / static_cast<double>(e.eigs.size());
  for (const Complex& z : e.eigs) e.radius = std::max(e.radius, std::abs(z - e.center));
  return e;
}

constexpr double kMargin = 0.5;
constexpr double kMinRadius = 1e-3;
constexpr int kMaxNodes = 4096;

double distance_to_singular_set(Singularity s, Complex c) {
  switch (s) {
    case Singularity::none:
      return std::numeric_limits<double>::infinity();
    case Singularity::pole_at_zero:
      return std::abs(c);
    case Singularity::cut_nonpositive_reals:
      return c.real() >= 0.0 ? std::abs(c) : std::abs(c.imag());
  }
  return 0.0;
}

}  // namespace

Contour auto_contour(const Matrix& a, const Tolerances&) {
  require_square(a, "auto_contour");
  const Extent e = spectral_extent(a);
  return {e.center, std::max(kMinRadius, e.radius * (1.0 + kMargin)), 64};
}

HoloFunction HoloFunction::exp() {
  return {"exp", [](Complex z) { return std::exp(z); }, Singularity::none};
}
HoloFunction HoloFunction::log() {
  return {"log", [](Complex z) { return std::log(z); }, Singularity::cut_nonpositive_reals};
}
HoloFunction HoloFunction::inv() {
  return {"inv", [](Complex z) { return 1.0 / z; }, Singularity::pole_at_zero};
}
HoloFunction HoloFunction::identity() {
  return {"identity", [](Complex z) { return z; }, Singularity::none};
}
HoloFunction HoloFunction::constant_one() {
  return {"one", [](Complex) { return Complex(1.0); }, Singularity::none};
}
HoloFunction HoloFunction::polynomial(std::vector<Complex> coeffs) {
  return {"poly",
          [c = std::move(coeffs)](Complex z) {
            Complex acc = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
            return acc;
          },
          Singularity::none};
}

Contour admissible_contour(const HoloFunction& f, const Matrix& a, const Tolerances& tol) {
  require_square(a, "admissible_contour");
  const Contour base = auto_contour(a, tol);
  const Extent e = spectral_extent(a);
  Matrix shifted = a;
  shifted.diagonal().array() -= base.center;
  double radius = std::max(base.radius, 2.0 * norm2(shifted));

  const double limit = distance_to_singular_set(f.singularity, base.center);
  if (std::isfinite(limit)) {
    radius = std::min(radius, 0.9 * limit);
    const double needed = e.radius + tol.spec_tol * spectral_scale(a);
    if (!(radius > needed * 1.05) || radius <= 0.0)
      throw ContourError(f.name + ": no circle around the spectrum avoids the singular set of f");
  }
  return {base.center, radius, base.nodes};
}

HoloResult holo_calc_detailed(const HoloFunction& f, const Matrix& a, const Contour& contour,
                              const Tolerances& tol, Execution exec) {
  require_square(a, "holo_calc");
  require_finite(a, "holo_calc");
  if (!(contour.radius > 0.0)) throw ContourError("holo_calc: contour radius must be positive");
  if (contour.nodes < 16 || (contour.nodes & (contour.nodes - 1)) != 0)
    throw ContourError("holo_calc: node count must be a power of two >= 16");

  const double scale = spectral_scale(a);
  for (const Complex& z : eigenvalues(a)) {
    if (std::abs(z - contour.center) > contour.radius - tol.spec_tol * scale)
      throw ContourError("holo_calc: eigenvalue on or outside the contour");
  }
  if (distance_to_singular_set(f.singularity, contour.center) <= contour.radius + tol.spec_tol * scale)
    throw ContourError("holo_calc: " + f.name + " is not holomorphic inside the contour");

  CircleNodes circle{contour.center, contour.radius, contour.nodes, 0, 1};
  Matrix sum = cauchy_sum(a, circle, f.eval, exec);
  HoloResult r;
  r.value = sum / static_cast<double>(circle.nodes);
  while (circle.nodes < kMaxNodes) {
    CircleNodes odd{contour.center, contour.radius, circle.nodes * 2, 1, 2};
    sum += cauchy_sum(a, odd, f.eval, exec);
    circle.nodes *= 2;
    Matrix next = sum / static_cast<double>(circle.nodes);
    r.last_change = (next - r.value).norm();
    r.value = std::move(next);
    r.nodes = circle.nodes;
    if (r.last_change <= tol.residual_tol * std::max(1.0, r.value.norm())) return r;
  }
  throw NumericalFailure("holo_calc: quadrature did not converge at 4096 nodes");
}

Matrix holo_calc(const HoloFunction& f, const Matrix& a, const Contour& contour, const Tolerances& tol,
                 Execution exec) {
  return holo_calc_detailed(f, a, contour, tol, exec).value;
}

Matrix holo_calc(const HoloFunction& f, const Matrix& a, const Tolerances& tol) {
  return holo_calc(f, a, admissible_contour(f, a, tol), tol);
}

Matrix exp_series(const Matrix& a) {
  require_square(a, "exp_series");
  const double l1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (l1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(l1 / 0.5)));
  const Matrix x = a / std::ldexp(1.0, squarings);
  const Eigen::Index n = a.rows();
  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 30; ++k) {
    term = term * x / static_cast<double>(k);
    result += term;
    if (term.norm() <= 1e-18 * result.norm()) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Matrix exp_contour(const Matrix& a, const Tolerances& tol) {
  return holo_calc(HoloFunction::exp(), a, tol);
}

Matrix exp_matrix(const Matrix& a, const Tolerances& tol) {
  require_square(a, "exp_matrix");
  const Matrix series = exp_series(a);
  const HoloFunction f = HoloFunction::exp();
  const Contour c = admissible_contour(f, a, tol);
  // Cancellation in the quadrature grows like exp(radius + spectral extent).
  const Extent e = spectral_extent(a);
  if (c.radius + e.radius > 16.0) return series;
  const Matrix contour = holo_calc(f, a, c, tol);
  if ((contour - series).norm() > 10.0 * tol.residual_tol * std::max(1.0, series.norm()))
    throw NumericalFailure("exp_matrix: contour and series evaluations disagree");
  return contour;
}

Matrix log_unipotent(const Matrix& u, const Tolerances& tol) {
  require_square(u, "log_unipotent");
  const Eigen::Index n = u.rows();
  const Matrix nil = u - Matrix::Identity(n, n);
  if (!is_nilpotent(nil, tol)) throw PreconditionError("log_unipotent: u - 1 is not nilpotent");
  Matrix result = Matrix::Zero(n, n);
  Matrix power = Matrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    power = power * nil;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    result += (sign / static_cast<double>(k)) * power;
  }
  return result;
}

SubmultiplicativityCheck submultiplicativity_check(const Matrix& a, const Matrix& b,
                                                   const Tolerances& tol) {
  require_square(a, "submultiplicativity_check");
  require_square(b, "submultiplicativity_check");
  if (commutator(a, b).norm() > tol.residual_tol * std::max(1.0, a.norm() * b.norm()))
    throw PreconditionError("submultiplicativity_check: a and b do not commute");
  SubmultiplicativityCheck c;
  c.r_a = spectral_radius(a, tol);
  c.r_b = spectral_radius(b, tol);
  c.r_product = spectral_radius(a * b, tol);
  c.r_sum = spectral_radius(a + b, tol);
  c.product_slack = c.r_a * c.r_b - c.r_product;
  c.sum_slack = c.r_a + c.r_b - c.r_sum;
  c.holds = c.product_slack >= -tol.spec_tol * std::max(1.0, c.r_a * c.r_b) &&
            c.sum_slack >= -tol.spec_tol * std::max(1.0, c.r_a + c.r_b);
  return c;
}

}  // namespace radlie
