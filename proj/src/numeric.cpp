#include "radlie/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace radlie {

namespace {

// Assumed backward error of inputs, relative to their scale.
constexpr double kPerturbation = 1e-12;
constexpr double kGapRatio = 10.0;

}  // namespace

void Tolerances::validate() const {
  if (!(rank_tol > 0.0) || !(spec_tol > 0.0) || !(residual_tol > 0.0))
    throw PreconditionError("tolerances must be strictly positive");
  if (!(rank_tol < 1.0)) throw PreconditionError("rank_tol must be < 1");
}

Matrix identity(int n) { return Matrix::Identity(n, n); }

Matrix unit(int n, int i, int j) {
  Matrix m = Matrix::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double norm(const Matrix& m) { return m.norm(); }

double norm2(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Complex inner(const Matrix& a, const Matrix& b) {
  return (a.array().conjugate() * b.array()).sum();
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) throw DimensionError(std::string(what) + ": non-finite entries");
}

std::vector<Complex> eigenvalues(const Matrix& m) {
  require_square(m, "eigenvalues");
  require_finite(m, "eigenvalues");
  if (m.rows() > kMaxAmbient * kMaxAmbient)
    throw DimensionError("eigenvalues: matrix too large");
  Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("eigenvalues: Schur iteration did not converge");
  const Vector& ev = solver.eigenvalues();
  std::vector<Complex> out(ev.data(), ev.data() + ev.size());
  return out;
}

EigenSystem eigen_system(const Matrix& m) {
  require_square(m, "eigen_system");
  require_finite(m, "eigen_system");
  if (m.rows() > kMaxAmbient * kMaxAmbient) throw DimensionError("eigen_system: matrix too large");
  Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) throw NumericalFailure("eigen_system: Schur iteration did not converge");
  EigenSystem out;
  const Vector& ev = solver.eigenvalues();
  out.values.assign(ev.data(), ev.data() + ev.size());
  Matrix v = solver.eigenvectors();
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    const double nj = v.col(j).norm();
    if (nj > 0.0) v.col(j) /= nj;
  }
  const Matrix w = v.partialPivLu().inverse();
  const bool finite = w.allFinite();
  out.conditions.resize(out.values.size(), std::numeric_limits<double>::infinity());
  if (finite)
    for (Eigen::Index i = 0; i < w.rows(); ++i) out.conditions[static_cast<std::size_t>(i)] = w.row(i).norm();
  return out;
}

double spectral_scale(const Matrix& m) { return std::max(1.0, m.norm()); }

double cluster_threshold(int size, double scale, const Tolerances& tol) {
  const double defect = size <= 1 ? 0.0 : 2.0 * std::pow(kPerturbation, 1.0 / size);
  return std::max(tol.spec_tol, defect) * scale;
}

namespace {

struct MstCut {
  std::vector<int> left, right;
  double longest = 0.0;
  double second = 0.0;  ///< next longest edge, 0 for a pair
};

// Splits `group` in two by removing the longest edge of its minimum spanning tree.
MstCut cut_longest_edge(std::span<const Complex> eigs, const std::vector<int>& group) {
  const std::size_t k = group.size();
  auto dist = [&](std::size_t i, std::size_t j) {
    return std::abs(eigs[static_cast<std::size_t>(group[i])] - eigs[static_cast<std::size_t>(group[j])]);
  };
  std::vector<double> best(k, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> link(k, 0);
  std::vector<bool> in_tree(k, false);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  best[0] = 0.0;
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t u = k;
    for (std::size_t i = 0; i < k; ++i)
      if (!in_tree[i] && (u == k || best[i] < best[u])) u = i;
    in_tree[u] = true;
    if (step > 0) edges.emplace_back(link[u], u);
    for (std::size_t i = 0; i < k; ++i)
      if (!in_tree[i] && dist(u, i) < best[i]) {
        best[i] = dist(u, i);
        link[i] = u;
      }
  }
  std::size_t cut = 0;
  for (std::size_t e = 1; e < edges.size(); ++e)
    if (dist(edges[e].first, edges[e].second) > dist(edges[cut].first, edges[cut].second)) cut = e;
  MstCut out;
  out.longest = dist(edges[cut].first, edges[cut].second);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (e != cut) out.second = std::max(out.second, dist(edges[e].first, edges[e].second));

  std::vector<std::vector<std::size_t>> adj(k);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e == cut) continue;
    adj[edges[e].first].push_back(edges[e].second);
    adj[edges[e].second].push_back(edges[e].first);
  }
  std::vector<bool> side(k, false);
  std::vector<std::size_t> todo{edges[cut].first};
  side[edges[cut].first] = true;
  while (!todo.empty()) {
    const std::size_t u = todo.back();
    todo.pop_back();
    for (std::size_t v : adj[u])
      if (!side[v]) {
        side[v] = true;
        todo.push_back(v);
      }
  }
  for (std::size_t i = 0; i < k; ++i) (side[i] ? out.left : out.right).push_back(group[i]);
  return out;
}

double diameter(std::span<const Complex> eigs, const std::vector<int>& group) {
  double d = 0.0;
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = i + 1; j < group.size(); ++j)
      d = std::max(d, std::abs(eigs[static_cast<std::size_t>(group[i])] - eigs[static_cast<std::size_t>(group[j])]));
  return d;
}

// Every member must lie within its first-order error, under a backward error
// of kPerturbation per unit scale, of the group centroid.
bool within_error(std::span<const Complex> eigs, std::span<const double> conditions, const std::vector<int>& group,
                  Complex centroid, double scale, const Tolerances& tol) {
  if (conditions.empty()) return true;
  const double n = static_cast<double>(eigs.size());
  for (int i : group) {
    const auto k = static_cast<std::size_t>(i);
    const double bound = std::max(tol.spec_tol, n * kPerturbation * conditions[k]) * scale;
    if (std::abs(eigs[k] - centroid) > bound) return false;
  }
  return true;
}

void split_group(std::span<const Complex> eigs, std::span<const double> conditions, const std::vector<int>& group,
                 double scale, const Tolerances& tol, std::vector<Cluster>& out) {
  const int k = static_cast<int>(group.size());
  Complex sum = 0.0;
  for (int i : group) sum += eigs[static_cast<std::size_t>(i)];
  const Complex centroid = sum / static_cast<double>(k);
  if (k > 1) {
    // A dominant spanning tree edge separates distinct points.
    MstCut cut = cut_longest_edge(eigs, group);
    const bool gap = k > 2 && cut.longest > tol.spec_tol * scale && cut.longest > kGapRatio * cut.second;
    if (gap || diameter(eigs, group) > cluster_threshold(k, scale, tol) ||
        !within_error(eigs, conditions, group, centroid, scale, tol)) {
      split_group(eigs, conditions, cut.left, scale, tol, out);
      split_group(eigs, conditions, cut.right, scale, tol, out);
      return;
    }
  }
  Cluster c;
  c.centroid = centroid;
  c.multiplicity = k;
  for (int i : group) c.radius = std::max(c.radius, std::abs(eigs[static_cast<std::size_t>(i)] - c.centroid));
  out.push_back(c);
}

}  // namespace

std::vector<Cluster> cluster_eigenvalues(std::span<const Complex> eigs, double scale,
                                         const Tolerances& tol, std::span<const double> conditions) {
  std::vector<Cluster> out;
  if (eigs.empty()) return out;
  if (!conditions.empty() && conditions.size() != eigs.size())
    throw DimensionError("cluster_eigenvalues: one condition number per eigenvalue");
  std::vector<int> all(eigs.size());
  std::iota(all.begin(), all.end(), 0);
  split_group(eigs, conditions, all, scale, tol, out);
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) {
    if (a.centroid.real() != b.centroid.real()) return a.centroid.real() < b.centroid.real();
    return a.centroid.imag() < b.centroid.imag();
  });
  return out;
}

std::vector<Cluster> cluster_spectrum(const Matrix& m, const Tolerances& tol) {
  const EigenSystem es = eigen_system(m);
  return cluster_eigenvalues(es.values, spectral_scale(m), tol, es.conditions);
}

double set_distance(std::span<const Cluster> a, std::span<const Cluster> b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  auto directed = [](std::span<const Cluster> x, std::span<const Cluster> y) {
    double worst = 0.0;
    for (const Cluster& p : x) {
      double best = std::numeric_limits<double>::infinity();
      for (const Cluster& q : y) best = std::min(best, std::abs(p.centroid - q.centroid));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

double multiset_distance(std::span<const Cluster> a, std::span<const Cluster> b) {
  std::vector<Complex> pa, pb;
  for (const Cluster& c : a) pa.insert(pa.end(), static_cast<std::size_t>(c.multiplicity), c.centroid);
  for (const Cluster& c : b) pb.insert(pb.end(), static_cast<std::size_t>(c.multiplicity), c.centroid);
  if (pa.size() != pb.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(pb.size(), false);
  double worst = 0.0;
  for (const Complex& p : pa) {
    std::size_t best_j = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pb.size(); ++j)
      if (!used[j] && std::abs(p - pb[j]) < best) {
        best = std::abs(p - pb[j]);
        best_j = j;
      }
    used[best_j] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

double spectral_match_distance(std::span<const Complex> reference, double scale, std::span<const Complex> other,
                               bool with_multiplicity, const Tolerances& tol,
                               std::span<const double> conditions) {
  const auto clusters = cluster_eigenvalues(reference, scale, tol, conditions);
  if (clusters.empty()) return other.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  std::vector<Complex> sums(clusters.size(), 0.0);
  std::vector<int> counts(clusters.size(), 0);
  for (const Complex& z : other) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < clusters.size(); ++k)
      if (std::abs(z - clusters[k].centroid) < std::abs(z - clusters[best].centroid)) best = k;
    sums[best] += z;
    ++counts[best];
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    if (counts[k] == 0 || (with_multiplicity && counts[k] != clusters[k].multiplicity))
      return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::abs(sums[k] / static_cast<double>(counts[k]) - clusters[k].centroid));
  }
  return worst;
}

// ---------------------------------------------------------------------------

Vector vec(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

Matrix unvec(const Vector& v, int rows, int cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

Matrix stack(std::span<const Matrix> vectors) {
  if (vectors.empty()) return Matrix(0, 0);
  const Eigen::Index len = vectors.front().size();
  Matrix out(len, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].rows() != vectors.front().rows() || vectors[i].cols() != vectors.front().cols())
      throw DimensionError("stack: vectors of different shapes");
    out.col(static_cast<Eigen::Index>(i)) = vec(vectors[i]);
  }
  return out;
}

Basis span_basis(std::span<const Matrix> vectors, const Tolerances& tol, double scale) {
  Basis out;
  if (vectors.empty()) return out;
  const int rows = static_cast<int>(vectors.front().rows());
  const int cols = static_cast<int>(vectors.front().cols());
  const Matrix s = stack(vectors);
  Eigen::BDCSVD<Matrix> svd(s, Eigen::ComputeThinU);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return out;
  const double cutoff = tol.rank_tol * std::max(sv(0), scale);
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= cutoff) break;
    out.push_back(unvec(svd.matrixU().col(i), rows, cols));
  }
  return out;
}

Vector coordinates(const Basis& basis, const Matrix& x) {
  Vector c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) c(static_cast<Eigen::Index>(k)) = inner(basis[k], x);
  return c;
}

Matrix combine(const Basis& basis, const Vector& coords) {
  if (basis.empty()) throw DimensionError("combine: empty basis");
  Matrix out = Matrix::Zero(basis.front().rows(), basis.front().cols());
  for (std::size_t k = 0; k < basis.size(); ++k) out += coords(static_cast<Eigen::Index>(k)) * basis[k];
  return out;
}

Matrix project(const Basis& basis, const Matrix& x) {
  if (basis.empty()) return Matrix::Zero(x.rows(), x.cols());
  return combine(basis, coordinates(basis, x));
}

double projection_residual(const Basis& basis, const Matrix& x) {
  return (x - project(basis, x)).norm() / std::max(1.0, x.norm());
}

bool contains(const Basis& basis, const Matrix& x, const Tolerances& tol) {
  return projection_residual(basis, x) <= tol.residual_tol;
}

double subspace_distance(const Basis& a, const Basis& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const Matrix& x : a) worst = std::max(worst, projection_residual(b, x));
  for (const Matrix& x : b) worst = std::max(worst, projection_residual(a, x));
  return worst;
}

Nullspace nullspace(const Matrix& m, double rank_tol, double scale) {
  Nullspace out;
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) {
    out.basis = Matrix::Identity(cols, cols);
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  out.singular_values = svd.singularValues();
  const Eigen::VectorXd& sv = out.singular_values;
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double cutoff = rank_tol * std::max(smax, scale);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
    if (sv(i) > cutoff / 10.0 && sv(i) < cutoff * 10.0) out.ambiguous = true;
  }
  out.basis = svd.matrixV().rightCols(cols - rank);
  return out;
}

Basis complement_in(const Basis& big, const Basis& sub, const Tolerances& tol) {
  if (sub.empty()) return big;
  Matrix c(static_cast<Eigen::Index>(big.size()), static_cast<Eigen::Index>(sub.size()));
  for (std::size_t j = 0; j < sub.size(); ++j) c.col(static_cast<Eigen::Index>(j)) = coordinates(big, sub[j]);
  const Nullspace ns = nullspace(c.adjoint(), tol.rank_tol, 1.0);
  Basis out;
  for (Eigen::Index k = 0; k < ns.basis.cols(); ++k) out.push_back(combine(big, ns.basis.col(k)));
  return out;
}

Basis intersect(const Basis& a, const Basis& b, const Tolerances& tol) {
  if (a.empty() || b.empty()) return {};
  const auto pa = static_cast<Eigen::Index>(a.size());
  const auto pb = static_cast<Eigen::Index>(b.size());
  Matrix m(a.front().size(), pa + pb);
  m.leftCols(pa) = stack(a);
  m.rightCols(pb) = -stack(b);
  const Nullspace ns = nullspace(m, tol.rank_tol, 1.0);
  Basis raw;
  for (Eigen::Index k = 0; k < ns.basis.cols(); ++k) raw.push_back(combine(a, ns.basis.col(k).head(pa)));
  return span_basis(raw, tol, 0.1);
}

// ---------------------------------------------------------------------------

namespace {

// Swaps diagonal entries k and k+1 of the upper triangular t, updating u so
// that u t u^* is unchanged.
void swap_schur(Matrix& t, Matrix& u, Eigen::Index k) {
  const Eigen::Index n = t.rows();
  const Complex a = t(k, k), b = t(k + 1, k + 1);
  Complex x1 = t(k, k + 1), x2 = b - a;
  const double r = std::hypot(std::abs(x1), std::abs(x2));
  if (r == 0.0) return;
  x1 /= r;
  x2 /= r;
  Matrix q(2, 2);
  q << x1, -std::conj(x2), x2, std::conj(x1);
  t.block(k, k, 2, n - k) = q.adjoint() * t.block(k, k, 2, n - k);
  t.block(0, k, k + 2, 2) = t.block(0, k, k + 2, 2) * q;
  u.middleCols(k, 2) = u.middleCols(k, 2) * q;
  t(k + 1, k) = 0.0;
  t(k, k) = b;
  t(k + 1, k + 1) = a;
}

}  // namespace

Matrix cluster_eigenspace(const Matrix& m, std::span<const Cluster> clusters, std::size_t which,
                          const Tolerances&) {
  const Eigen::Index n = m.rows();
  const Cluster& target = clusters[which];
  if (clusters.size() == 1) return Matrix::Identity(n, n);

  const Eigen::ComplexSchur<Matrix> schur(m);
  if (schur.info() != Eigen::Success) throw NumericalFailure("generalized_eigenspace: Schur form failed");
  Matrix t = schur.matrixT();
  Matrix u = schur.matrixU();
  t.triangularView<Eigen::StrictlyLower>().setZero();

  const auto member = [&](Complex v) {
    std::size_t best = 0;
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      const double g = std::abs(v - clusters[i].centroid) - clusters[i].radius;
      if (g < gap) {
        gap = g;
        best = i;
      }
    }
    return best == which;
  };
  Eigen::Index placed = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!member(t(i, i))) continue;
    for (Eigen::Index k = i - 1; k >= placed; --k) swap_schur(t, u, k);
    ++placed;
  }
  if (placed != target.multiplicity)
    throw NumericalFailure("generalized_eigenspace: Schur diagonal disagrees with multiplicity");
  return u.leftCols(placed);
}

Matrix generalized_eigenspace(const Matrix& m, Complex lambda, const Tolerances& tol) {
  require_square(m, "generalized_eigenspace");
  const double scale = spectral_scale(m);
  const auto clusters = cluster_spectrum(m, tol);
  std::size_t best = clusters.size();
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const double d = std::abs(clusters[i].centroid - lambda);
    if (d <= clusters[i].radius + tol.spec_tol * scale && d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  if (best == clusters.size()) return Matrix(m.rows(), 0);
  return cluster_eigenspace(m, clusters, best, tol);
}

}  // namespace radlie
