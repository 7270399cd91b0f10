#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "radlie/lab.hpp"

namespace radlie {

namespace {

constexpr int kAttempts = 50;

Tolerances construction(const Tolerances& tol) {
  Tolerances t = tol;
  t.residual_tol = tol.residual_tol / 10.0;
  return t;
}

double small_integer(Rng& rng) { return static_cast<double>(uniform_int(-2, 2, rng)); }

bool coin(Rng& rng, double p = 0.5) { return uniform_real(0.0, 1.0, rng) < p; }

// Random upper-triangular matrix with a sparse diagonal and one or two entries above it.
Matrix random_upper(int n, bool strict, Rng& rng) {
  Matrix m = Matrix::Zero(n, n);
  if (!strict)
    for (int i = 0; i < n; ++i)
      if (coin(rng)) m(i, i) = small_integer(rng);
  if (n >= 2) {
    const int entries = uniform_int(1, 2, rng);
    for (int e = 0; e < entries; ++e) {
      const int i = uniform_int(0, n - 2, rng);
      const int j = uniform_int(i + 1, n - 1, rng);
      m(i, j) = random_complex(rng);
    }
  }
  return m;
}

struct Conjugation {
  Matrix p, p_inv;
  Matrix operator()(const Matrix& x) const { return p * x * p_inv; }
};

Conjugation random_conjugation(int n, Rng& rng) {
  Conjugation c;
  c.p = random_conjugator(n, rng);
  c.p_inv = c.p.inverse();
  return c;
}

std::vector<Matrix> conjugate_all(const Conjugation& c, const std::vector<Matrix>& xs) {
  std::vector<Matrix> out;
  for (const Matrix& x : xs) out.push_back(c(x));
  return out;
}

// Embeds an m x m block at offset `at` in an n x n zero matrix.
Matrix embed(int n, int at, const Matrix& block) {
  Matrix m = Matrix::Zero(n, n);
  m.block(at, at, block.rows(), block.cols()) = block;
  return m;
}

Matrix shift(int m) {
  Matrix s = Matrix::Zero(m, m);
  for (int i = 0; i + 1 < m; ++i) s(i, i + 1) = 1.0;
  return s;
}

LieInstance fallback_instance(int n, Rng& rng, const Tolerances& tol) {
  LieInstance inst;
  inst.family = "abelian";
  const Conjugation c = random_conjugation(n, rng);
  Matrix d = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = static_cast<double>(i + 1);
  const std::vector<Matrix> gens{c(d)};
  inst.g = make_lie_subalgebra(gens, n, tol);
  inst.j = inst.g;
  inst.conjugator = c.p;
  return inst;
}

}  // namespace

LieInstance gen_solvable_instance(int n, int cap, Rng& rng, const Tolerances& tol) {
  const Tolerances ct = construction(tol);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    try {
      const int k = uniform_int(1, 3, rng);
      int option = uniform_int(0, 2, rng);
      if (n < 2 && option == 2) option = 0;
      std::vector<Matrix> gens;
      for (int i = 0; i < k; ++i) gens.push_back(random_upper(n, false, rng));
      if (option == 2) gens.push_back(unit(n, 0, n - 1));
      const Conjugation c = random_conjugation(n, rng);
      LieInstance inst;
      inst.g = make_lie_subalgebra(conjugate_all(c, gens), n, tol);
      if (inst.g.dim() == 0 || inst.g.dim() > cap) continue;
      inst.conjugator = c.p;
      Basis derived = bracket_span(inst.g.basis, inst.g.basis, tol);
      if (derived.empty()) option = 0;
      if (option == 0) {
        inst.family = "solvable/j=g";
        inst.j = inst.g;
      } else if (option == 1) {
        inst.family = "solvable/j=derived";
        inst.j = lie_from_basis(n, std::move(derived), tol);
      } else {
        inst.family = "solvable/j=corner+derived";
        derived.push_back(c(unit(n, 0, n - 1)));
        inst.j = lie_from_basis(n, span_basis(derived, tol, 0.1), tol);
      }
      if (!is_solvable(inst.g, tol) || !is_lie_ideal(inst.g, inst.j.basis, ct)) continue;
      return inst;
    } catch (const NumericalFailure&) {
    } catch (const PreconditionError&) {
    }
  }
  return fallback_instance(n, rng, tol);
}

LieInstance gen_mixed_instance(int n, int cap, Rng& rng, const Tolerances& tol) {
  if (n < 4 || cap < 4) return gen_solvable_instance(n, cap, rng, tol);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    try {
      const int d = (n >= 5 && coin(rng)) ? 3 : 2;
      const int m = n - d;
      Matrix e, f;
      if (d == 2) {
        e = unit(2, 0, 1);
        f = unit(2, 1, 0);
      } else {
        e = std::sqrt(2.0) * (unit(3, 0, 1) + unit(3, 1, 2));
        f = std::sqrt(2.0) * (unit(3, 1, 0) + unit(3, 2, 1));
      }
      std::vector<Matrix> block_gens;
      const int k = uniform_int(1, 2, rng);
      for (int i = 0; i < k; ++i) block_gens.push_back(embed(n, d, random_upper(m, false, rng)));
      if (coin(rng)) block_gens.push_back(embed(n, d, Matrix::Identity(m, m)));
      const LieSubalgebra planted = make_lie_subalgebra(block_gens, n, tol);
      if (planted.dim() == 0 || planted.dim() > cap - 3) continue;

      const Conjugation c = random_conjugation(n, rng);
      std::vector<Matrix> gens{c(embed(n, 0, e)), c(embed(n, 0, f))};
      for (const Matrix& x : block_gens) gens.push_back(c(x));
      LieInstance inst;
      inst.family = d == 2 ? "mixed/sl2-dim2" : "mixed/sl2-dim3";
      inst.g = make_lie_subalgebra(gens, n, tol);
      inst.conjugator = c.p;
      if (inst.g.dim() != planted.dim() + 3) continue;
      inst.j = solvable_radical(inst.g, tol);
      if (inst.j.dim() != planted.dim()) continue;
      return inst;
    } catch (const NumericalFailure&) {
    } catch (const PreconditionError&) {
    }
  }
  return gen_solvable_instance(n, cap, rng, tol);
}

LieInstance gen_nilpotent_instance(int n, int cap, Rng& rng, const Tolerances& tol) {
  if (n < 2) throw UsageError("nilpotent instances need n >= 2");
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    try {
      std::vector<Matrix> gens;
      const int k = uniform_int(1, 3, rng);
      for (int i = 0; i < k; ++i) gens.push_back(random_upper(n, true, rng));
      const Conjugation c = random_conjugation(n, rng);
      LieInstance inst;
      inst.family = "nilpotent";
      inst.g = make_lie_subalgebra(conjugate_all(c, gens), n, tol);
      if (inst.g.dim() == 0 || inst.g.dim() > cap) continue;
      inst.j = inst.g;
      inst.conjugator = c.p;
      return inst;
    } catch (const NumericalFailure&) {
    } catch (const PreconditionError&) {
    }
  }
  LieInstance inst;
  inst.family = "nilpotent/single";
  const std::vector<Matrix> gens{unit(n, 0, n - 1)};
  inst.g = make_lie_subalgebra(gens, n, tol);
  inst.j = inst.g;
  inst.conjugator = identity(n);
  return inst;
}

LieInstance gen_commuting_semisimple_instance(int n, int cap, Rng& rng, const Tolerances& tol) {
  const Conjugation c = random_conjugation(n, rng);
  LieInstance inst;
  inst.conjugator = c.p;
  if (n >= 3 && cap >= 5 && coin(rng)) {
    std::vector<Matrix> gens{unit(n, 0, 0), unit(n, 0, 1), unit(n, 1, 0), unit(n, 1, 1)};
    const int extra = uniform_int(1, std::min(n - 2, cap - 4), rng);
    for (int e = 0; e < extra; ++e) {
      Matrix d = Matrix::Zero(n, n);
      for (int i = 2; i < n; ++i) d(i, i) = small_integer(rng) + random_complex(rng);
      gens.push_back(d);
    }
    inst.g = make_lie_subalgebra(conjugate_all(c, gens), n, tol);
    if (coin(rng, 0.15)) {
      inst.family = "gl2+diagonal/j=g";
      inst.j = inst.g;
      return inst;
    }
    inst.family = "gl2+diagonal/j=central";
    Matrix z = random_complex(rng) * (unit(n, 0, 0) + unit(n, 1, 1));
    for (std::size_t k = 4; k < gens.size(); ++k) z += random_complex(rng) * gens[k];
    const std::vector<Matrix> js{c(z)};
    inst.j = make_lie_subalgebra(js, n, tol);
    return inst;
  }
  inst.family = "diagonal";
  std::vector<Matrix> gens;
  const int k = uniform_int(1, std::min(cap, n), rng);
  for (int e = 0; e < k; ++e) {
    Matrix d = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = small_integer(rng) + random_complex(rng);
    gens.push_back(c(d));
  }
  inst.g = make_lie_subalgebra(gens, n, tol);
  const int take = uniform_int(1, k, rng);
  const std::vector<Matrix> js(gens.begin(), gens.begin() + take);
  inst.j = make_lie_subalgebra(js, n, tol);
  return inst;
}

KsTriple gen_ks_triple(int n, Rng& rng, const Tolerances& tol) {
  if (n < 3) throw UsageError("Heisenberg triples need n >= 3");
  const Tolerances ct = construction(tol);
  const Conjugation c = random_conjugation(n, rng);
  KsTriple t;
  Matrix a0 = Matrix::Zero(n, n), b0 = Matrix::Zero(n, n);
  if (coin(rng, 0.1)) {
    t.family = "commuting";
    for (int i = 0; i < n; ++i) {
      a0(i, i) = random_complex(rng);
      b0(i, i) = random_complex(rng);
    }
  } else {
    const int copies = (n >= 6 && coin(rng, 0.3)) ? 2 : 1;
    t.family = copies == 1 ? "heisenberg" : "heisenberg-x2";
    const double ra = uniform_real(0.5, 1.5, rng), rb = uniform_real(0.5, 1.5, rng);
    const Complex alpha = ra * std::polar(1.0, uniform_real(0.0, 2.0 * std::numbers::pi, rng));
    const Complex beta = rb * std::polar(1.0, uniform_real(0.0, 2.0 * std::numbers::pi, rng));
    const Complex gamma = random_complex(rng);
    const Complex sa = 0.5 * random_complex(rng), sb = 0.5 * random_complex(rng);
    const Complex delta = 0.3 * random_complex(rng);
    for (int copy = 0; copy < copies; ++copy) {
      const int o = 3 * copy;
      a0(o, o + 1) = alpha;
      b0(o + 1, o + 2) = beta;
      b0(o, o + 2) = gamma;
    }
    for (int i = 0; i < 3 * copies; ++i) {
      a0(i, i) = sa;
      b0(i, i) = sb;
    }
    for (int i = 3 * copies; i < n; ++i) {
      a0(i, i) = 0.5 * random_complex(rng);
      b0(i, i) = 0.5 * random_complex(rng);
    }
    b0 += delta * a0;
  }
  t.a = c(a0);
  t.b = c(b0);
  t.c = commutator(t.a, t.b);
  const double scale = std::max(1.0, t.a.norm() * t.b.norm());
  if (commutator(t.a, t.c).norm() > ct.residual_tol * scale * std::max(1.0, t.c.norm()) ||
      commutator(t.b, t.c).norm() > ct.residual_tol * scale * std::max(1.0, t.c.norm()))
    throw NumericalFailure("gen_ks_triple: constructed triple misses the commutation hypotheses");
  return t;
}

namespace {

// Jordan matrix with eigenvalues drawn from a few lattice points.
Matrix random_jordan(int n, Rng& rng) {
  const int q = uniform_int(1, std::min(3, n), rng);
  std::vector<Complex> values;
  while (static_cast<int>(values.size()) < q) {
    const Complex v(small_integer(rng), static_cast<double>(uniform_int(-1, 1, rng)));
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  Matrix j = Matrix::Zero(n, n);
  int i = 0;
  while (i < n) {
    const int size = uniform_int(1, n - i, rng);
    const Complex v = values[static_cast<std::size_t>(uniform_int(0, q - 1, rng))];
    for (int k = 0; k < size; ++k) {
      j(i + k, i + k) = v;
      if (k + 1 < size) j(i + k, i + k + 1) = 1.0;
    }
    i += size;
  }
  return j;
}

std::vector<Matrix> incidence_spanning(int n, Rng& rng) {
  const int groups = uniform_int(1, n, rng);
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i < groups ? i : uniform_int(0, groups - 1, rng);
  std::vector<Matrix> span;
  for (int g = 0; g < groups; ++g) {
    Matrix q = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      if (label[static_cast<std::size_t>(i)] == g) q(i, i) = 1.0;
    span.push_back(q);
  }
  std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  const double p = uniform_real(0.1, 0.5, rng);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coin(rng, p);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
            rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
          rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) span.push_back(unit(n, i, j));
  return span;
}

std::vector<Matrix> local_block_spanning(int n, int at, int m) {
  std::vector<Matrix> span{embed(n, at, Matrix::Identity(m, m))};
  Matrix p = Matrix::Identity(m, m);
  const Matrix s = shift(m);
  for (int k = 1; k < m; ++k) {
    p = p * s;
    span.push_back(embed(n, at, p));
  }
  return span;
}

AlgebraInstance finish_algebra(std::string family, const std::vector<Matrix>& spanning, int n, Rng& rng,
                               const Tolerances& tol) {
  const Conjugation c = random_conjugation(n, rng);
  AlgebraInstance inst;
  inst.family = std::move(family);
  inst.algebra = generate_algebra(conjugate_all(c, spanning), n, tol);
  return inst;
}

}  // namespace

AlgebraInstance gen_algebra_instance(int n, int cap, Rng& rng, const Tolerances& tol) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    try {
      const int pick = uniform_int(0, 2, rng);
      AlgebraInstance inst;
      if (pick == 0) {
        inst = finish_algebra("polynomial", {random_jordan(n, rng)}, n, rng, tol);
      } else if (pick == 1) {
        std::vector<Matrix> span = incidence_spanning(n, rng);
        if (coin(rng)) {
          // Subalgebra generated by two random elements of the incidence algebra.
          std::vector<Matrix> two;
          for (int e = 0; e < 2; ++e) {
            Matrix x = Matrix::Zero(n, n);
            for (const Matrix& s : span) x += small_integer(rng) * s;
            two.push_back(x);
          }
          inst = finish_algebra("incidence/generated", two, n, rng, tol);
        } else {
          inst = finish_algebra("incidence", span, n, rng, tol);
        }
      } else {
        if (n < 3) continue;
        std::vector<Matrix> span{unit(n, 0, 0), unit(n, 0, 1), unit(n, 1, 0), unit(n, 1, 1)};
        const auto local = local_block_spanning(n, 2, n - 2);
        span.insert(span.end(), local.begin(), local.end());
        inst = finish_algebra("matrix-block+local", span, n, rng, tol);
      }
      if (inst.algebra.dim() > cap) continue;
      return inst;
    } catch (const NumericalFailure&) {
    } catch (const PreconditionError&) {
    }
  }
  return finish_algebra("scalars", {}, n, rng, tol);
}

AlgebraInstance gen_commutative_instance(int n, Rng& rng, const Tolerances& tol) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    try {
      const int pick = uniform_int(0, 2, rng);
      if (pick == 0) return finish_algebra("polynomial", {random_jordan(n, rng)}, n, rng, tol);
      if (pick == 1) {
        Matrix d = Matrix::Zero(n, n);
        for (int i = 0; i < n; ++i) d(i, i) = small_integer(rng) + Complex(0.0, small_integer(rng));
        return finish_algebra("diagonal", {d}, n, rng, tol);
      }
      std::vector<Matrix> span;
      int at = 0;
      while (at < n) {
        const int m = uniform_int(1, n - at, rng);
        const auto local = local_block_spanning(n, at, m);
        span.insert(span.end(), local.begin(), local.end());
        at += m;
      }
      return finish_algebra("local-sum", span, n, rng, tol);
    } catch (const NumericalFailure&) {
    } catch (const PreconditionError&) {
    }
  }
  return finish_algebra("scalars", {}, n, rng, tol);
}

SylvesterPair gen_sylvester_pair(int n, Rng& rng) {
  SylvesterPair p;
  const double u = uniform_real(0.0, 1.0, rng);
  auto dense = [&](void) {
    const double s = uniform_real(0.5, 2.0, rng) / std::sqrt(2.0 * n);
    Matrix a = s * random_gaussian(n, n, rng);
    a.diagonal().array() += random_complex(rng);
    return a;
  };
  if (u < 0.8) {
    p.family = "dense";
    p.a1 = dense();
    p.a2 = dense();
  } else if (u < 0.9) {
    p.family = "equal";
    p.a1 = dense();
    p.a2 = p.a1;
  } else {
    p.family = "diagonal";
    p.a1 = Matrix::Zero(n, n);
    p.a2 = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      p.a1(i, i) = random_complex(rng);
      p.a2(i, i) = random_complex(rng);
    }
  }
  auto extent = [](const Matrix& a) {
    const auto eigs = eigenvalues(a);
    Complex c = 0.0;
    for (const Complex& z : eigs) c += z;
    c /= static_cast<double>(eigs.size());
    double r = 0.0;
    for (const Complex& z : eigs) r = std::max(r, std::abs(z - c));
    return std::pair{c, r};
  };
  const auto [c1, r1] = extent(p.a1);
  const auto [c2, r2] = extent(p.a2);
  for (int k = 0; k < 3; ++k) {
    const double dist = (r1 + r2 + 0.1) * uniform_real(1.2, 2.2, rng);
    p.lambdas.push_back((c1 - c2) + std::polar(dist, uniform_real(0.0, 2.0 * std::numbers::pi, rng)));
  }
  return p;
}

AdEigenInstance gen_ad_eigen_instance(int n, Rng& rng) {
  if (n < 2) throw UsageError("ad-eigenvector instances need n >= 2");
  AdEigenInstance inst;
  inst.lambda = std::polar(uniform_real(0.5, 2.0, rng), uniform_real(0.0, 2.0 * std::numbers::pi, rng));
  const int top = uniform_int(1, std::min(3, n - 1), rng);
  std::vector<int> level(static_cast<std::size_t>(n));
  level[0] = 0;
  level[1] = 1;
  for (int i = 2; i < n; ++i) level[static_cast<std::size_t>(i)] = uniform_int(0, top, rng);
  const Complex s = 0.5 * random_complex(rng);

  Matrix d = Matrix::Zero(n, n), nil = Matrix::Zero(n, n), b = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = s + static_cast<double>(level[static_cast<std::size_t>(i)]) * inst.lambda;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int li = level[static_cast<std::size_t>(i)], lj = level[static_cast<std::size_t>(j)];
      if (li == lj && i < j && coin(rng)) nil(i, j) = random_complex(rng);
      if (li == lj + 1 && coin(rng, 0.6)) b(i, j) = random_complex(rng);
    }
  b(1, 0) = random_complex(rng);

  // Structural zeros stay exactly zero, so the vanishing power is exact here.
  inst.m = 1;
  Matrix x = commutator(nil, b);
  while (x.cwiseAbs().maxCoeff() > 0.0 && inst.m < 2 * n) {
    x = commutator(nil, x);
    ++inst.m;
  }
  const Conjugation c = random_conjugation(n, rng);
  inst.a = c(d + nil);
  inst.b = c(b);
  inst.b /= inst.b.norm();
  return inst;
}

Matrix gen_nilpotent_element(int n, Rng& rng) {
  if (n < 2) throw UsageError("nilpotent elements need n >= 2");
  Matrix x = Matrix::Zero(n, n);
  const double p = uniform_real(0.2, 1.0, rng);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng, p)) x(i, j) = random_complex(rng);
  if (x.norm() == 0.0) x(0, n - 1) = random_complex(rng);
  const Conjugation c = random_conjugation(n, rng);
  const Matrix y = c(x);
  return y / y.norm();
}

}  // namespace radlie
