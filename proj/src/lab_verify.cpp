#include <algorithm>
#include <cmath>
#include <limits>

#include "radlie/lab.hpp"
#include "radlie/spectral.hpp"
#include "radlie/sylvester.hpp"

namespace radlie {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Matrix random_element(const Basis& basis, Rng& rng) {
  Matrix x = Matrix::Zero(basis.front().rows(), basis.front().cols());
  for (const Matrix& b : basis) x += random_complex(rng) * b;
  return x;
}

double max_projection_residual(const Basis& into, const std::vector<Matrix>& xs) {
  double worst = 0.0;
  for (const Matrix& x : xs) worst = std::max(worst, into.empty() ? x.norm() / std::max(1.0, x.norm()) : projection_residual(into, x));
  return worst;
}

// Elements of a commuting family's span on which every joint weight on C^n
// vanishes: the quasi-nilpotent elements of the span.
Basis quasinilpotent_part(const Basis& commuting, const Tolerances& tol) {
  if (commuting.empty()) return {};
  const auto weights = simultaneous_weights(commuting, tol);
  const auto d = static_cast<Eigen::Index>(commuting.size());
  Matrix rows(static_cast<Eigen::Index>(weights.size()), d);
  for (std::size_t w = 0; w < weights.size(); ++w)
    for (Eigen::Index i = 0; i < d; ++i) rows(static_cast<Eigen::Index>(w), i) = weights[w].values[static_cast<std::size_t>(i)];
  const Matrix kernel = nullspace(rows, tol.rank_tol, 1.0).basis;
  std::vector<Matrix> out;
  for (Eigen::Index k = 0; k < kernel.cols(); ++k) out.push_back(combine(commuting, kernel.col(k)));
  return span_basis(out, tol, 0.1);
}

double finite_or_large(double x) { return std::isfinite(x) ? x : 1e300; }

void fold(TrialOutcome& out, double residual, double threshold) {
  out.residual = std::max(out.residual, finite_or_large(residual));
  if (!(residual < threshold)) out.failed = true;
}

}  // namespace

Json describe(const LieInstance& inst) {
  return {{"family", inst.family}, {"n", inst.g.ambient_n}, {"dim_g", inst.g.dim()}, {"dim_j", inst.j.dim()}};
}

TrialOutcome verify_t43(const LieInstance& inst, const Tolerances& tol) {
  TrialOutcome out;
  out.witness = describe(inst);
  const FiniteAlgebra a = generate_algebra(inst.g.basis, inst.g.ambient_n, tol);
  const Basis rad = radical(a, tol);
  std::vector<Matrix> brackets;
  for (const Matrix& x : inst.j.basis)
    for (const Matrix& y : inst.g.basis) brackets.push_back(commutator(x, y));
  const double membership = max_projection_residual(rad, brackets);
  double nil = 0.0;
  bool quasi = true;
  for (const Matrix& r : rad) {
    nil = std::max(nil, nilpotency_residual(r));
    quasi = quasi && is_quasinilpotent(r, tol);
  }
  fold(out, membership, tol.residual_tol);
  fold(out, nil, tol.residual_tol);
  if (!quasi) out.failed = true;
  out.witness["dim_algebra"] = a.dim();
  out.witness["dim_radical"] = static_cast<int>(rad.size());
  out.witness["membership_residual"] = membership;
  out.witness["nilpotency_residual"] = nil;
  return out;
}

TrialOutcome verify_prop42(const LieInstance& inst, std::uint64_t seed, const Tolerances& tol) {
  TrialOutcome out;
  out.witness = describe(inst);
  const Basis nj = nilpotent_subspace(inst.j, seed, tol);
  const FiniteAlgebra a = generate_algebra(inst.g.basis, inst.g.ambient_n, tol);
  const Basis rad = radical(a, tol);

  std::vector<Matrix> brackets;
  for (const Matrix& x : inst.g.basis)
    for (const Matrix& y : nj) brackets.push_back(commutator(x, y));
  const double ideal = max_projection_residual(nj, brackets);
  const double inside = max_projection_residual(rad, nj);
  fold(out, ideal, tol.residual_tol);
  fold(out, inside, tol.residual_tol);

  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  int mismatches = 0;
  for (int s = 0; s < 50; ++s) {
    if (!nj.empty() && !is_nilpotent(random_element(nj, rng), tol)) ++mismatches;
    const Matrix x = random_element(inst.j.basis, rng);
    if (is_nilpotent(x, tol) && !contains(nj, x, tol)) ++mismatches;
  }
  if (mismatches > 0) out.failed = true;
  out.witness["dim_nilpotent_part"] = static_cast<int>(nj.size());
  out.witness["dim_radical"] = static_cast<int>(rad.size());
  out.witness["ideal_residual"] = ideal;
  out.witness["radical_residual"] = inside;
  out.witness["cross_check_mismatches"] = mismatches;
  return out;
}

TrialOutcome verify_prop26(const LieInstance& inst, std::uint64_t seed, const Tolerances& tol) {
  TrialOutcome out;
  out.witness = describe(inst);
  const LieSubalgebra& g = inst.g;
  const LieSubalgebra h = cartan_subalgebra(g, seed, tol);
  const CartanDecomposition dec = root_decomposition(g, h, seed + 1, tol);
  out.witness["dim_cartan"] = h.dim();
  out.witness["roots"] = static_cast<int>(dec.roots.size());

  Rng rng(seed ^ 0x2545f4914f6cdd1dULL);
  for (const Root& r : dec.roots) {
    bool nil = std::all_of(r.space.begin(), r.space.end(), [&](const Matrix& x) { return is_nilpotent(x, tol); });
    for (int s = 0; s < 5 && nil; ++s) nil = is_nilpotent(random_element(r.space, rng), tol);
    if (!nil) {
      out.hypothesis_met = false;
      return out;
    }
  }

  const Basis n_g = nilpotent_subspace(g, seed + 2, tol);
  std::vector<Matrix> brackets;
  for (const Matrix& x : g.basis)
    for (const Matrix& y : n_g) brackets.push_back(commutator(x, y));
  const double ideal = max_projection_residual(n_g, brackets);
  const double plus_in_n = max_projection_residual(n_g, dec.fitting_plus);
  const double n_in_g0 = max_projection_residual(dec.ad_nilpotent_part, n_g);
  fold(out, ideal, tol.residual_tol);
  fold(out, plus_in_n, tol.residual_tol);
  fold(out, n_in_g0, tol.residual_tol);
  if (h.dim() + static_cast<int>(dec.fitting_plus.size()) != g.dim()) out.failed = true;
  for (int s = 0; s < 10 && !n_g.empty(); ++s)
    if (!is_nilpotent(random_element(n_g, rng), tol)) out.failed = true;
  out.witness["dim_nilpotent_part"] = static_cast<int>(n_g.size());
  out.witness["dim_fitting_plus"] = static_cast<int>(dec.fitting_plus.size());
  out.witness["ideal_residual"] = ideal;
  out.witness["fitting_in_nilpotent"] = finite_or_large(plus_in_n);
  out.witness["nilpotent_in_g0"] = finite_or_large(n_in_g0);
  out.witness["dim_sum_mismatch"] = h.dim() + static_cast<int>(dec.fitting_plus.size()) != g.dim();

  const Matrix y = central_nilpotent_element(g, seed + 3, tol);
  if (y.size() > 0) {
    const NestQuotients nest = nest_quotients(g, y, tol);
    std::vector<Matrix> tests(g.basis.begin(), g.basis.end());
    for (int s = 0; s < 50; ++s) tests.push_back(random_element(g.basis, rng));
    for (int s = 0; s < 10 && !n_g.empty(); ++s) tests.push_back(random_element(n_g, rng));
    int mismatches = 0;
    for (const Matrix& x : tests) {
      bool quotients = true;
      for (int k = 1; k < static_cast<int>(nest.dims.size()); ++k) quotients = quotients && is_nilpotent(nest.act(k, x), tol);
      if (quotients != is_nilpotent(x, tol)) ++mismatches;
    }
    if (mismatches > 0) out.failed = true;
    out.witness["nest_dims"] = nest.dims;
    out.witness["nest_mismatches"] = mismatches;
  }
  return out;
}

TrialOutcome verify_lemma27(const LieInstance& inst, Rng& rng, const Tolerances& tol) {
  TrialOutcome out;
  out.witness = describe(inst);
  const int m = minimal_vanishing_degree(inst.g, tol);
  out.witness["degree"] = m;
  if (m > inst.g.ambient_n) out.failed = true;
  double worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    Matrix p = identity(inst.g.ambient_n);
    for (int k = 0; k < m; ++k) {
      const Matrix x = random_element(inst.g.basis, rng);
      p = p * (x / x.norm());
    }
    worst = std::max(worst, p.norm());
  }
  fold(out, worst, tol.residual_tol);
  out.witness["product_residual"] = worst;
  return out;
}

TrialOutcome verify_lemma41(const LieInstance& inst, const Tolerances& tol) {
  TrialOutcome out;
  out.witness = describe(inst);
  const FiniteAlgebra a = generate_algebra(inst.g.basis, inst.g.ambient_n, tol);
  if (!radical(a, tol).empty()) {
    out.hypothesis_met = false;
    return out;
  }
  for (const Matrix& x : inst.g.basis) {
    bool nil = false;
    try {
      nil = is_ad_nilpotent_on(x, inst.j, tol);
    } catch (const PreconditionError&) {
    }
    if (!nil) {
      out.hypothesis_met = false;
      return out;
    }
  }
  double worst = 0.0;
  for (const Matrix& x : inst.g.basis)
    for (const Matrix& y : inst.j.basis) worst = std::max(worst, commutator(x, y).norm());
  fold(out, worst, tol.residual_tol);
  out.witness["bracket_residual"] = worst;
  return out;
}

TrialOutcome verify_lemma32(const AlgebraInstance& inst, Rng& rng, const Tolerances& tol) {
  TrialOutcome out;
  const FiniteAlgebra& a = inst.algebra;
  out.witness = {{"family", inst.family}, {"n", a.ambient_n}, {"dim_algebra", a.dim()}};
  const Basis z = center(a, tol);
  const Basis zq = quasinilpotent_part(z, tol);
  const Basis rad = radical(a, tol);
  const double inside = max_projection_residual(rad, zq);
  fold(out, inside, tol.residual_tol);
  for (int s = 0; s < 50; ++s) {
    if (!zq.empty() && !is_quasinilpotent(random_element(zq, rng), tol)) out.failed = true;
    const Matrix x = random_element(z, rng);
    if (is_quasinilpotent(x, tol) && !contains(rad, x, tol)) out.failed = true;
  }
  out.witness["dim_center"] = static_cast<int>(z.size());
  out.witness["dim_center_quasinilpotent"] = static_cast<int>(zq.size());
  out.witness["dim_radical"] = static_cast<int>(rad.size());
  out.witness["containment_residual"] = inside;
  return out;
}

TrialOutcome verify_kleinecke_shirokov(const KsTriple& t, const Tolerances& tol) {
  TrialOutcome out;
  out.witness = {{"family", t.family}, {"n", static_cast<int>(t.a.rows())}};
  const double rc = spectral_radius(t.c, tol);
  fold(out, rc, tol.spec_tol);
  out.witness["spectral_radius_c"] = rc;
  const EigenSystem sb = eigen_system(t.b);
  for (double s : {1.0, 2.5}) {
    const Matrix lhs = exp_matrix(s * t.a, tol) * t.b * exp_matrix(-s * t.a, tol);
    const Matrix rhs = t.b + s * t.c;
    const double identity_residual = (lhs - rhs).norm() / std::max(1.0, rhs.norm());
    fold(out, identity_residual, 1e-6);
    const double spec = spectral_match_distance(sb.values, spectral_scale(t.b), eigenvalues(rhs), true, tol, sb.conditions);
    fold(out, spec, tol.spec_tol * spectral_scale(rhs));
    out.witness["identity_residual_t" + std::to_string(static_cast<int>(10 * s))] = identity_residual;
    out.witness["spectrum_distance_t" + std::to_string(static_cast<int>(10 * s))] = finite_or_large(spec);
  }
  return out;
}

TrialOutcome verify_rosenblum(const SylvesterPair& p, Rng& rng, const Tolerances& tol) {
  TrialOutcome out;
  const int n = static_cast<int>(p.a1.rows());
  out.witness = {{"family", p.family}, {"n", n}};
  const SylvesterOperator op(p.a1, p.a2);
  const InclusionCheck inc = check_spectrum_inclusion(op, tol);
  fold(out, inc.max_distance, tol.spec_tol);
  out.witness["inclusion_distance"] = inc.max_distance;
  out.witness["equality_observed"] = inc.equality;
  double agree = 0.0, left = 0.0, right = 0.0;
  for (const Complex& lambda : p.lambdas) {
    const Matrix y = random_gaussian(n, n, rng);
    const Matrix x = rosenblum_resolve(op, lambda, y, tol, Execution::serial);
    const Matrix xd = resolve_dense(op, lambda, y);
    agree = std::max(agree, (x - xd).norm() / std::max(xd.norm(), 1e-300));
    left = std::max(left, (lambda * x - op.apply(x) - y).norm() / y.norm());
    const Matrix back = rosenblum_resolve(op, lambda, lambda * y - op.apply(y), tol, Execution::serial);
    right = std::max(right, (back - y).norm() / y.norm());
  }
  fold(out, agree, tol.spec_tol);
  fold(out, left, tol.spec_tol);
  fold(out, right, tol.spec_tol);
  out.witness["oracle_relative_error"] = agree;
  out.witness["identity_residual_left"] = left;
  out.witness["identity_residual_right"] = right;
  return out;
}

TrialOutcome verify_ad_eigen_nilpotent(const AdEigenInstance& inst, const Tolerances& tol) {
  TrialOutcome out;
  out.witness = {{"n", static_cast<int>(inst.a.rows())}, {"m", inst.m}};
  const AdEigenvectorCheck c = check_ad_eigvector_nilpotent(inst.a, inst.b, inst.lambda, inst.m, tol);
  out.witness["bound"] = c.bound;
  out.witness["hypothesis_residual"] = c.hypothesis_residual;
  if (!c.hypothesis_met) {
    out.hypothesis_met = false;
    return out;
  }
  fold(out, c.power_residual, 1e-2 * tol.residual_tol);
  out.witness["power_residual"] = c.power_residual;
  return out;
}

TrialOutcome verify_quotient_spectrum(const AlgebraInstance& inst, Rng& rng, const Tolerances& tol) {
  TrialOutcome out;
  const FiniteAlgebra& a = inst.algebra;
  out.witness = {{"family", inst.family}, {"n", a.ambient_n}, {"dim_algebra", a.dim()}};
  const Basis rad = radical(a, tol);
  const Quotient q = quotient_by_ideal(a, rad, tol);
  const AbstractAlgebra abs = a.abstract();
  const int quotient_radical = static_cast<int>(radical_coords(q.algebra, tol).cols());
  if (quotient_radical != 0) out.failed = true;
  out.witness["dim_radical"] = static_cast<int>(rad.size());
  out.witness["quotient_radical_dim"] = quotient_radical;

  std::vector<Matrix> elems(a.basis.begin(), a.basis.end());
  for (int s = 0; s < 20; ++s) elems.push_back(random_element(a.basis, rng));
  double worst = 0.0;
  for (const Matrix& x : elems) {
    const EigenSystem eig = eigen_system(x);
    const double scale = spectral_scale(x);
    const auto in_a = abstract_spectrum(a.coords(x), abs);
    const auto in_q = abstract_spectrum(q.project(a, x), q.algebra);
    const double d = std::max(spectral_match_distance(eig.values, scale, in_a, false, tol, eig.conditions),
                              spectral_match_distance(eig.values, scale, in_q, false, tol, eig.conditions));
    worst = std::max(worst, finite_or_large(d / scale));
  }
  fold(out, worst, tol.spec_tol);
  out.witness["spectrum_distance"] = worst;
  return out;
}

DefinitionalRadical definitional_radical(const FiniteAlgebra& a, Rng& rng, int samples, const Tolerances& tol) {
  const int d = a.dim();
  const AbstractAlgebra abs = a.abstract();
  std::vector<Vector> bs;
  for (int i = 0; i < d; ++i) bs.push_back(Vector::Unit(d, i));
  for (int s = 0; s < samples; ++s) {
    Vector c(d);
    for (int i = 0; i < d; ++i) c(i) = random_complex(rng);
    bs.push_back(c);
  }
  std::vector<Matrix> left;
  for (int j = 0; j < d; ++j) left.push_back(abs.constants.left(j));
  // tr(L_b L_x) is linear in x; x is in the radical iff it vanishes for all b.
  Matrix rows(static_cast<Eigen::Index>(bs.size()), d);
  for (std::size_t k = 0; k < bs.size(); ++k) {
    const Matrix lb = abs.left_regular(bs[k]);
    for (int j = 0; j < d; ++j) rows(static_cast<Eigen::Index>(k), j) = (lb * left[static_cast<std::size_t>(j)]).trace();
  }
  const Matrix kernel = nullspace(rows, tol.rank_tol).basis;
  DefinitionalRadical out;
  std::vector<Matrix> elems;
  for (Eigen::Index k = 0; k < kernel.cols(); ++k) elems.push_back(a.element(kernel.col(k)));
  out.radical = span_basis(elems, tol, 0.1);

  std::vector<Matrix> bm;
  for (const Vector& c : bs) bm.push_back(a.element(c));
  for (const Matrix& r : out.radical)
    for (const Matrix& b : bm) {
      const Matrix br = b * r;
      out.invertibility_residual =
          std::max(out.invertibility_residual, spectral_radius(br, tol) / std::max(1.0, norm2(b) * norm2(r)));
    }

  out.witnesses_found = true;
  const Eigen::Index n = a.ambient_n;
  for (const Matrix& x : complement_in(a.basis, out.radical, tol)) {
    bool found = false;
    for (const Matrix& b : bm) {
      const Matrix bx = b * x;
      Complex mu = 0.0;
      for (const Complex& z : eigenvalues(bx))
        if (std::abs(z) > std::abs(mu)) mu = z;
      if (std::abs(mu) <= tol.spec_tol * spectral_scale(bx)) continue;
      // 1 - (b / mu) x is singular.
      const Matrix m = Matrix::Identity(n, n) - bx / mu;
      Eigen::JacobiSVD<Matrix> svd(m);
      if (svd.singularValues()(n - 1) <= 1e-6 * std::max(1.0, svd.singularValues()(0))) {
        found = true;
        break;
      }
    }
    out.witnesses_found = out.witnesses_found && found;
  }
  return out;
}

TrialOutcome verify_radical_oracle(const AlgebraInstance& inst, Rng& rng, const Tolerances& tol) {
  TrialOutcome out;
  const FiniteAlgebra& a = inst.algebra;
  out.witness = {{"family", inst.family}, {"n", a.ambient_n}, {"dim_algebra", a.dim()}};
  const Basis rad = radical(a, tol);
  const DefinitionalRadical def = definitional_radical(a, rng, 200, tol);
  const double distance = rad.empty() && def.radical.empty() ? 0.0 : subspace_distance(rad, def.radical);
  fold(out, distance, tol.residual_tol);
  fold(out, def.invertibility_residual, tol.spec_tol);
  if (!def.witnesses_found) out.failed = true;
  out.witness["dim_radical"] = static_cast<int>(rad.size());
  out.witness["dim_definitional_radical"] = static_cast<int>(def.radical.size());
  out.witness["subspace_distance"] = finite_or_large(distance);
  out.witness["witnesses_found"] = def.witnesses_found;
  return out;
}

TrialOutcome verify_radii(const AlgebraInstance& inst, Rng& rng, const Tolerances& tol) {
  TrialOutcome out;
  const FiniteAlgebra& a = inst.algebra;
  out.witness = {{"family", inst.family}, {"n", a.ambient_n}, {"dim_algebra", a.dim()}};
  if (!is_commutative(a, tol)) {
    out.hypothesis_met = false;
    return out;
  }
  double slack = 0.0;
  for (int s = 0; s < 50; ++s) {
    const Matrix x = random_element(a.basis, rng);
    const Matrix y = random_element(a.basis, rng);
    const SubmultiplicativityCheck c = submultiplicativity_check(x, y, tol);
    if (!c.holds) out.failed = true;
    slack = std::max({slack, -c.product_slack / std::max(1.0, c.r_a * c.r_b), -c.sum_slack / std::max(1.0, c.r_a + c.r_b)});
  }
  const Basis rad = radical(a, tol);
  const Basis q = quasinilpotent_part(a.basis, tol);
  const double distance = rad.empty() && q.empty() ? 0.0 : subspace_distance(rad, q);
  fold(out, distance, tol.residual_tol);
  for (int s = 0; s < 10 && !q.empty(); ++s)
    if (!is_quasinilpotent(random_element(q, rng), tol)) out.failed = true;
  out.witness["radius_violation"] = slack;
  out.witness["dim_radical"] = static_cast<int>(rad.size());
  out.witness["dim_quasinilpotent"] = static_cast<int>(q.size());
  out.witness["subspace_distance"] = finite_or_large(distance);
  return out;
}

TrialOutcome verify_unbounded_exp(const Matrix& x, Rng& rng, const Tolerances& tol) {
  TrialOutcome out;
  const int n = static_cast<int>(x.rows());
  out.witness = {{"n", n}};
  if (x.norm() == 0.0 || !is_nilpotent(x, tol)) throw PreconditionError("unbounded-exp: x must be nonzero nilpotent");
  const double growth = exp_matrix(1000.0 * x, tol).norm();
  const double floor = 10.0 * std::sqrt(static_cast<double>(n));
  if (!(growth >= floor)) out.failed = true;
  out.witness["growth"] = growth;

  double round = 0.0;
  for (int s = 0; s < 10; ++s) {
    const Complex t = std::polar(uniform_real(0.1, 2.0, rng), uniform_real(0.0, 6.283185307179586, rng));
    const Matrix tx = t * x;
    const Matrix u = exp_matrix(tx, tol);
    round = std::max(round, (log_unipotent(u, tol) - tx).norm() / std::max(1.0, tx.norm()));
    const Matrix v = identity(n) + tx;
    round = std::max(round, (exp_matrix(log_unipotent(v, tol), tol) - v).norm() / std::max(1.0, v.norm()));
  }
  fold(out, round, 0.1 * tol.residual_tol);
  out.witness["round_trip_residual"] = round;
  return out;
}

TrialOutcome verify_funcalc(const Matrix& a, const std::vector<Complex>& coeffs, const Tolerances& tol) {
  TrialOutcome out;
  const int n = static_cast<int>(a.rows());
  out.witness = {{"n", n}, {"degree", static_cast<int>(coeffs.size()) - 1}};
  Matrix horner = Matrix::Zero(n, n);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    horner = horner * a;
    horner.diagonal().array() += *it;
  }
  const HoloFunction poly = HoloFunction::polynomial(coeffs);
  const Matrix pa = holo_calc(poly, a, tol);
  const double poly_error = (pa - horner).norm() / std::max(1.0, horner.norm());
  fold(out, poly_error, 0.1 * tol.residual_tol);

  const Matrix ec = exp_contour(a, tol);
  const Matrix es = exp_series(a);
  const double exp_error = (ec - es).norm() / std::max(1.0, es.norm());
  fold(out, exp_error, tol.residual_tol);

  const EigenSystem eig = eigen_system(a);
  double mapping = 0.0;
  for (const auto& [f, fa] : {std::pair{poly, pa}, std::pair{HoloFunction::exp(), ec}}) {
    std::vector<Complex> mapped;
    for (const Complex& z : eig.values) mapped.push_back(f.eval(z));
    const double scale = spectral_scale(fa);
    mapping = std::max(mapping, finite_or_large(spectral_match_distance(mapped, scale, eigenvalues(fa), true, tol,
                                                                        eig.conditions) / scale));
  }
  fold(out, mapping, tol.spec_tol);
  out.witness["poly_relative_error"] = poly_error;
  out.witness["exp_relative_error"] = exp_error;
  out.witness["spectral_mapping_distance"] = mapping;
  return out;
}

TrialOutcome verify_equispectral(const AlgebraInstance& inst, Rng& rng, const Tolerances& tol) {
  TrialOutcome out;
  const FiniteAlgebra& a = inst.algebra;
  out.witness = {{"family", inst.family}, {"n", a.ambient_n}, {"dim_algebra", a.dim()}};
  Matrix x;
  FiniteAlgebra s;
  int redraws = 0;
  for (bool built = false; !built; ++redraws) {
    if (redraws == 5) {
      out.hypothesis_met = false;
      return out;
    }
    x = random_element(a.basis, rng);
    try {
      s = extend_to_maximal_commutative(a, x, tol);
      built = is_commutative(s, tol) && s.contains(x, tol);
    } catch (const NumericalFailure&) {
    } catch (const PreconditionError&) {
    }
  }
  out.witness["redraws"] = redraws - 1;
  const EigenSystem eig = eigen_system(x);
  const double scale = spectral_scale(x);
  const double d = std::max(
      spectral_match_distance(eig.values, scale, abstract_spectrum(s.coords(x), s.abstract()), false, tol, eig.conditions),
      spectral_match_distance(eig.values, scale, abstract_spectrum(a.coords(x), a.abstract()), false, tol, eig.conditions));
  fold(out, d / scale, tol.spec_tol);
  out.witness["dim_commutative"] = s.dim();
  out.witness["spectrum_distance"] = finite_or_large(d / scale);
  return out;
}

}  // namespace radlie
