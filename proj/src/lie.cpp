#include "radlie/lie.hpp"

#include <algorithm>
#include <random>

namespace radlie {

namespace {

Vector random_coords(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector c(dim);
  for (int i = 0; i < dim; ++i) c(i) = Complex(normal(rng), normal(rng));
  return c;
}

Basis columns_to_elements(const LieSubalgebra& g, const Matrix& cols) {
  Basis out;
  for (Eigen::Index k = 0; k < cols.cols(); ++k) out.push_back(g.element(cols.col(k)));
  return out;
}

Matrix coords_of(const LieSubalgebra& g, const Basis& elems) {
  Matrix out(g.dim(), static_cast<Eigen::Index>(elems.size()));
  for (std::size_t k = 0; k < elems.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = g.coords(elems[k]);
  return out;
}

}  // namespace

Matrix LieSubalgebra::ad(const Vector& x) const {
  Matrix m = Matrix::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) m += x(i) * constants.left(i);
  return m;
}

LieSubalgebra lie_from_basis(int ambient_n, Basis basis, const Tolerances& tol) {
  if (static_cast<int>(basis.size()) > kMaxLieDim) throw SizeError("Lie subalgebra dimension exceeds 64");
  LieSubalgebra g;
  g.ambient_n = ambient_n;
  g.basis = std::move(basis);
  const int d = g.dim();
  g.constants = StructureConstants(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Matrix br = commutator(g.basis[static_cast<std::size_t>(i)], g.basis[static_cast<std::size_t>(j)]);
      if (projection_residual(g.basis, br) > tol.residual_tol)
        throw PreconditionError("Lie basis is not closed under brackets");
      const Vector c = g.coords(br);
      for (int k = 0; k < d; ++k) g.constants(i, j, k) = c(k);
    }
  return g;
}

LieSubalgebra make_lie_subalgebra(std::span<const Matrix> spanning, int ambient_n, const Tolerances& tol) {
  if (ambient_n < 1 || ambient_n > kMaxAmbient) throw DimensionError("make_lie_subalgebra: ambient size out of range");
  for (const Matrix& x : spanning) {
    if (x.rows() != ambient_n || x.cols() != ambient_n)
      throw DimensionError("make_lie_subalgebra: matrix has wrong shape");
    require_finite(x, "make_lie_subalgebra");
  }
  Basis basis = span_basis(spanning, tol);
  while (true) {
    if (static_cast<int>(basis.size()) > kMaxLieDim) throw SizeError("Lie closure exceeds dimension 64");
    std::vector<Matrix> candidates(basis.begin(), basis.end());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) candidates.push_back(commutator(basis[i], basis[j]));
    Basis next = span_basis(candidates, tol, 1.0);
    if (next.size() == basis.size()) break;
    basis = std::move(next);
  }
  return lie_from_basis(ambient_n, std::move(basis), tol);
}

Basis bracket_span(const Basis& x, const Basis& y, const Tolerances& tol) {
  std::vector<Matrix> out;
  for (const Matrix& a : x)
    for (const Matrix& b : y) out.push_back(commutator(a, b));
  return span_basis(out, tol, 1.0);
}

bool is_lie_ideal(const LieSubalgebra& g, const Basis& sub, const Tolerances& tol) {
  for (const Matrix& s : sub) {
    if (!g.contains(s, tol)) return false;
    for (const Matrix& x : g.basis)
      if (!contains(sub, commutator(x, s), tol)) return false;
  }
  return true;
}

std::vector<LieSubalgebra> derived_series(const LieSubalgebra& g, const Tolerances& tol) {
  std::vector<LieSubalgebra> series{g};
  while (series.back().dim() > 0) {
    const LieSubalgebra& last = series.back();
    Basis next = bracket_span(last.basis, last.basis, tol);
    if (static_cast<int>(next.size()) == last.dim()) break;
    series.push_back(lie_from_basis(g.ambient_n, std::move(next), tol));
  }
  return series;
}

bool is_solvable(const LieSubalgebra& g, const Tolerances& tol) { return derived_series(g, tol).back().dim() == 0; }

std::vector<LieSubalgebra> lower_central_series(const LieSubalgebra& g, const Tolerances& tol) {
  std::vector<LieSubalgebra> series{g};
  while (series.back().dim() > 0) {
    Basis next = bracket_span(g.basis, series.back().basis, tol);
    if (static_cast<int>(next.size()) == series.back().dim()) break;
    series.push_back(lie_from_basis(g.ambient_n, std::move(next), tol));
  }
  return series;
}

bool is_nilpotent_lie(const LieSubalgebra& g, const Tolerances& tol) {
  return lower_central_series(g, tol).back().dim() == 0;
}

Matrix killing_form(const LieSubalgebra& g) {
  const int d = g.dim();
  Matrix k(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) k(i, j) = (g.constants.left(i) * g.constants.left(j)).trace();
  return k;
}

LieSubalgebra solvable_radical(const LieSubalgebra& g, const Tolerances& tol) {
  const Basis derived = bracket_span(g.basis, g.basis, tol);
  if (derived.empty()) return g;
  const Matrix dc = coords_of(g, derived);
  const Matrix rows = dc.transpose() * killing_form(g);
  const Nullspace ns = nullspace(rows, tol.rank_tol, 1.0);
  Basis r = span_basis(columns_to_elements(g, ns.basis), tol, 0.1);
  LieSubalgebra rad = lie_from_basis(g.ambient_n, std::move(r), tol);
  if (!is_lie_ideal(g, rad.basis, tol) || !is_solvable(rad, tol))
    throw NumericalFailure("solvable_radical: Killing-orthogonal of [g, g] is not a solvable ideal");
  return rad;
}

double quotient_killing_conditioning(const LieSubalgebra& g, const Basis& r, const Tolerances& tol) {
  const int d = g.dim();
  const Matrix comp = r.empty() ? Matrix::Identity(d, d) : nullspace(coords_of(g, r).adjoint(), tol.rank_tol, 1.0).basis;
  const auto k = static_cast<int>(comp.cols());
  if (k == 0) return 1.0;
  const Matrix proj = comp.adjoint();
  std::vector<Matrix> ads;
  for (int p = 0; p < k; ++p) ads.push_back(proj * g.ad(comp.col(p)) * comp);
  Matrix kf(k, k);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) kf(p, q) = (ads[static_cast<std::size_t>(p)] * ads[static_cast<std::size_t>(q)]).trace();
  Eigen::JacobiSVD<Matrix> svd(kf);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0.0;
  return sv(sv.size() - 1) / sv(0);
}

Basis normalizer(const LieSubalgebra& g, const Basis& h, const Tolerances& tol) {
  const int d = g.dim();
  if (h.empty()) return g.basis;
  const Matrix hc = coords_of(g, h);
  Eigen::HouseholderQR<Matrix> qr(hc);
  const Matrix q = qr.householderQ() * Matrix::Identity(d, static_cast<Eigen::Index>(h.size()));
  const Matrix off = Matrix::Identity(d, d) - q * q.adjoint();
  Matrix stacked(static_cast<Eigen::Index>(h.size()) * d, d);
  for (std::size_t i = 0; i < h.size(); ++i)
    stacked.middleRows(static_cast<Eigen::Index>(i) * d, d) = off * g.ad(hc.col(static_cast<Eigen::Index>(i)));
  const Nullspace ns = nullspace(stacked, tol.rank_tol, 1.0);
  return span_basis(columns_to_elements(g, ns.basis), tol, 0.1);
}

LieSubalgebra cartan_subalgebra(const LieSubalgebra& g, std::uint64_t seed, const Tolerances& tol) {
  if (g.dim() == 0) return g;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10; ++attempt) {
    try {
      const Vector h0 = random_coords(g.dim(), rng);
      const Matrix null0 = generalized_eigenspace(g.ad(h0), Complex(0.0), tol);
      Basis hb = span_basis(columns_to_elements(g, null0), tol, 0.1);
      LieSubalgebra h = lie_from_basis(g.ambient_n, std::move(hb), tol);
      if (!is_nilpotent_lie(h, tol)) continue;
      if (normalizer(g, h.basis, tol).size() != h.basis.size()) continue;
      return h;
    } catch (const NumericalFailure&) {
    } catch (const PreconditionError&) {
    }
  }
  throw NumericalFailure("cartan_subalgebra: no regular element found in 10 attempts");
}

std::vector<WeightSpace> simultaneous_weights(std::span<const Matrix> ops, const Tolerances& tol) {
  if (ops.empty()) throw PreconditionError("simultaneous_weights: no operators");
  const Eigen::Index n = ops.front().rows();
  std::vector<WeightSpace> blocks{{{}, Matrix::Identity(n, n)}};
  for (const Matrix& op : ops) {
    const double scale = spectral_scale(op);
    std::vector<WeightSpace> next;
    for (const WeightSpace& b : blocks) {
      const Matrix restricted = b.space.adjoint() * op * b.space;
      const EigenSystem es = eigen_system(restricted);
      const auto clusters = cluster_eigenvalues(es.values, scale, tol, es.conditions);
      for (std::size_t c = 0; c < clusters.size(); ++c) {
        WeightSpace w = b;
        w.values.push_back(clusters[c].centroid);
        w.space = b.space * cluster_eigenspace(restricted, clusters, c, tol);
        next.push_back(std::move(w));
      }
    }
    blocks = std::move(next);
  }
  // Exact block means.
  for (WeightSpace& b : blocks)
    for (std::size_t i = 0; i < ops.size(); ++i)
      b.values[i] = (b.space.adjoint() * ops[i] * b.space).trace() / static_cast<double>(b.space.cols());
  return blocks;
}

namespace {

bool is_zero_weight(const std::vector<Complex>& values, double radius) {
  return std::all_of(values.begin(), values.end(), [&](Complex v) { return std::abs(v) <= radius; });
}

// Coordinates (in h's basis) of the common kernel of the given weights.
Matrix common_kernel(const std::vector<std::vector<Complex>>& weights, int dim_h, const Tolerances& tol) {
  if (weights.empty()) return Matrix::Identity(dim_h, dim_h);
  Matrix rows(static_cast<Eigen::Index>(weights.size()), dim_h);
  for (std::size_t w = 0; w < weights.size(); ++w)
    for (int i = 0; i < dim_h; ++i) rows(static_cast<Eigen::Index>(w), i) = weights[w][static_cast<std::size_t>(i)];
  return nullspace(rows, tol.rank_tol, 1.0).basis;
}

Basis elements_of_h(const LieSubalgebra& h, const Matrix& cols) {
  Basis out;
  for (Eigen::Index k = 0; k < cols.cols(); ++k) out.push_back(h.element(cols.col(k)));
  return out;
}

bool ad_nilpotent(const LieSubalgebra& g, const Vector& x, const Tolerances& tol) {
  return is_nilpotent(g.ad(x), tol);
}

}  // namespace

CartanDecomposition root_decomposition(const LieSubalgebra& g, const LieSubalgebra& h, std::uint64_t seed,
                                       const Tolerances& tol) {
  CartanDecomposition d;
  d.cartan = h;
  const int dg = g.dim();
  if (dg == 0) {
    d.ad_nilpotent_is_subspace = true;
    return d;
  }
  if (h.dim() == 0) throw PreconditionError("root_decomposition: empty Cartan subalgebra");

  std::vector<Matrix> ops;
  for (const Matrix& x : h.basis) {
    if (!g.contains(x, tol)) throw PreconditionError("root_decomposition: h is not inside g");
    ops.push_back(g.ad(g.coords(x)));
  }
  const auto weights = simultaneous_weights(ops, tol);
  int zero_dim = 0;
  std::vector<Matrix> plus;
  std::vector<std::vector<Complex>> root_values;
  for (const WeightSpace& w : weights) {
    if (is_zero_weight(w.values, tol.spec_tol * std::max(1.0, static_cast<double>(dg)))) {
      zero_dim += static_cast<int>(w.space.cols());
      continue;
    }
    Root r;
    r.values = w.values;
    for (Eigen::Index k = 0; k < w.space.cols(); ++k) r.space.push_back(g.element(w.space.col(k)));
    r.space = span_basis(r.space, tol, 0.1);
    plus.insert(plus.end(), r.space.begin(), r.space.end());
    root_values.push_back(r.values);
    d.roots.push_back(std::move(r));
  }
  if (zero_dim != h.dim()) throw NumericalFailure("root_decomposition: zero weight space differs from h");
  d.fitting_plus = span_basis(plus, tol, 0.1);
  if (static_cast<int>(d.fitting_plus.size()) + h.dim() != dg)
    throw NumericalFailure("root_decomposition: dim h + dim g_plus != dim g");

  if (is_solvable(g, tol)) {
    const Matrix kernel = common_kernel(root_values, h.dim(), tol);
    std::vector<Matrix> spanning = elements_of_h(h, kernel);
    const Basis derived = bracket_span(g.basis, g.basis, tol);
    spanning.insert(spanning.end(), derived.begin(), derived.end());
    d.ad_nilpotent_part = span_basis(spanning, tol, 0.1);
    d.ad_nilpotent_is_subspace = true;
    std::mt19937_64 rng(seed);
    for (const Matrix& x : d.ad_nilpotent_part)
      if (!ad_nilpotent(g, g.coords(x), tol))
        throw NumericalFailure("root_decomposition: g_0 basis element is not ad-nilpotent");
    for (int s = 0; s < 20 && !d.ad_nilpotent_part.empty(); ++s) {
      const Vector c = random_coords(static_cast<int>(d.ad_nilpotent_part.size()), rng);
      if (!ad_nilpotent(g, g.coords(combine(d.ad_nilpotent_part, c)), tol))
        throw NumericalFailure("root_decomposition: g_0 is not closed under combinations");
    }
  } else {
    for (const Matrix& x : g.basis)
      if (ad_nilpotent(g, g.coords(x), tol)) d.ad_nilpotent_part.push_back(x);
    d.ad_nilpotent_is_subspace = false;
  }
  return d;
}

Basis nilpotent_subspace(const LieSubalgebra& g, std::uint64_t seed, const Tolerances& tol) {
  if (g.dim() == 0) return {};
  if (!is_solvable(g, tol)) throw PreconditionError("nilpotent_subspace: g is not solvable");
  const LieSubalgebra h = cartan_subalgebra(g, seed, tol);
  const auto weights = simultaneous_weights(h.basis, tol);
  std::vector<std::vector<Complex>> values;
  for (const WeightSpace& w : weights) values.push_back(w.values);
  const Matrix kernel = common_kernel(values, h.dim(), tol);
  std::vector<Matrix> spanning = elements_of_h(h, kernel);
  const Basis derived = bracket_span(g.basis, g.basis, tol);
  spanning.insert(spanning.end(), derived.begin(), derived.end());
  return span_basis(spanning, tol, 0.1);
}

Matrix central_nilpotent_element(const LieSubalgebra& g, std::uint64_t seed, const Tolerances& tol) {
  const int d = g.dim();
  if (d == 0) return {};
  Matrix stacked(static_cast<Eigen::Index>(d) * d, d);
  for (int j = 0; j < d; ++j) stacked.middleRows(static_cast<Eigen::Index>(j) * d, d) = g.constants.right(j);
  const Nullspace ns = nullspace(stacked, tol.rank_tol, 1.0);
  const Basis z = span_basis(columns_to_elements(g, ns.basis), tol, 0.1);
  if (z.empty()) return {};
  Basis nil;
  try {
    nil = nilpotent_subspace(g, seed, tol);
  } catch (const PreconditionError&) {
    for (const Matrix& x : z)
      if (is_nilpotent(x, tol)) return x;
    return {};
  }
  const Basis both = intersect(z, nil, tol);
  if (both.empty()) return {};
  return both.front();
}

Matrix NestQuotients::act(int k, const Matrix& t) const {
  const Matrix& c = levels.at(static_cast<std::size_t>(k - 1));
  return c.adjoint() * t * c;
}

NestQuotients nest_quotients(const LieSubalgebra& g, const Matrix& y, const Tolerances& tol) {
  const int n = g.ambient_n;
  if (y.rows() != n || y.cols() != n) throw DimensionError("nest_quotients: Y has wrong shape");
  const double ny = norm2(y);
  if (ny == 0.0) throw PreconditionError("nest_quotients: Y is zero");
  if (!is_nilpotent(y, tol)) throw PreconditionError("nest_quotients: Y is not nilpotent");
  for (const Matrix& x : g.basis)
    if (commutator(y, x).norm() > tol.residual_tol * std::max(1.0, y.norm()))
      throw PreconditionError("nest_quotients: Y is not central in g");

  const Matrix unit_y = y / ny;
  NestQuotients out;
  out.dims.push_back(0);
  Matrix previous(n, 0);
  Matrix power = Matrix::Identity(n, n);
  for (int k = 1; k <= n && out.dims.back() < n; ++k) {
    power = power * unit_y;
    const Matrix kernel = nullspace(power, tol.rank_tol, 1.0).basis;
    Matrix fresh = kernel - previous * (previous.adjoint() * kernel);
    Eigen::JacobiSVD<Matrix> svd(fresh, Eigen::ComputeThinU);
    const auto extra = static_cast<Eigen::Index>(kernel.cols() - previous.cols());
    if (extra <= 0) throw NumericalFailure("nest_quotients: kernel flag did not grow");
    const Matrix level = svd.matrixU().leftCols(extra);
    Matrix grown(n, previous.cols() + extra);
    grown << previous, level;
    for (const Matrix& x : g.basis) {
      const Matrix image = x * grown;
      if ((image - grown * (grown.adjoint() * image)).norm() > tol.residual_tol * std::max(1.0, x.norm()))
        throw NumericalFailure("nest_quotients: kernel flag is not invariant under g");
    }
    out.levels.push_back(level);
    out.dims.push_back(static_cast<int>(grown.cols()));
    previous = std::move(grown);
  }
  if (out.dims.back() != n) throw NumericalFailure("nest_quotients: flag does not reach C^n");
  return out;
}

int minimal_vanishing_degree(const LieSubalgebra& g, const Tolerances& tol) {
  for (const Matrix& x : g.basis)
    if (!is_nilpotent(x, tol)) throw PreconditionError("minimal_vanishing_degree: basis element is not nilpotent");
  Basis products = g.basis;
  int m = 1;
  while (!products.empty()) {
    if (m > g.ambient_n) throw NumericalFailure("minimal_vanishing_degree: products do not vanish by degree n");
    std::vector<Matrix> next;
    for (const Matrix& p : products)
      for (const Matrix& x : g.basis) next.push_back(p * x);
    products = span_basis(next, tol, 1.0);
    ++m;
  }
  return m;
}

bool is_ad_nilpotent_on(const Matrix& a, const LieSubalgebra& j, const Tolerances& tol) {
  const int d = j.dim();
  Matrix restricted(d, d);
  for (int i = 0; i < d; ++i) {
    const Matrix br = commutator(a, j.basis[static_cast<std::size_t>(i)]);
    if (projection_residual(j.basis, br) > tol.residual_tol)
      throw PreconditionError("is_ad_nilpotent_on: j is not invariant under ad a");
    restricted.col(i) = j.coords(br);
  }
  if (d == 0) return true;
  return is_nilpotent(restricted, tol);
}

}  // namespace radlie
