#include <doctest.h>

#include "oracles.hpp"
#include "radlie/lab.hpp"

using namespace radlie;

namespace {
const Tolerances tol;

InstanceSpec small_spec(int trials = 10) {
  InstanceSpec s;
  s.trials = trials;
  s.seed = 12345;
  return s;
}
}  // namespace

TEST_CASE("trial seeds are deterministic and distinct") {
  CHECK(trial_seed(1, 0) == trial_seed(1, 0));
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) != trial_seed(2, 0));
}

TEST_CASE("random conjugators have condition number at most 10") {
  Rng rng(5);
  for (int n = 1; n <= 8; ++n) {
    const Matrix p = random_conjugator(n, rng);
    Eigen::JacobiSVD<Matrix> svd(p);
    const auto& s = svd.singularValues();
    CHECK(s(0) / s(n - 1) <= 10.0 + 1e-9);
  }
}

TEST_CASE("generators meet their stated properties") {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = uniform_int(2, 6, rng);
    const LieInstance s = gen_solvable_instance(n, 5, rng, tol);
    CHECK(s.g.dim() <= 5);
    CHECK(is_solvable(s.g, tol));
    CHECK(is_lie_ideal(s.g, s.j.basis, tol));

    const LieInstance z = gen_nilpotent_instance(n, 5, rng, tol);
    for (const Matrix& x : z.g.basis) CHECK(oracle::power(x, n).norm() < 1e-8);

    const KsTriple k = gen_ks_triple(std::max(3, n), rng, tol);
    CHECK((k.a * k.b - k.b * k.a - k.c).norm() < 1e-8 * std::max(1.0, k.c.norm()));
    CHECK((k.a * k.c - k.c * k.a).norm() < 1e-8 * std::max(1.0, k.c.norm()));
    CHECK((k.b * k.c - k.c * k.b).norm() < 1e-8 * std::max(1.0, k.c.norm()));

    const Matrix x = gen_nilpotent_element(n, rng);
    CHECK(std::abs(x.norm() - 1.0) < 1e-12);
    CHECK(oracle::power(x, n).norm() < 1e-10);
  }
  const LieInstance m = gen_mixed_instance(5, 5, rng, tol);
  CHECK_FALSE(is_solvable(m.g, tol));
  CHECK(m.j.dim() > 0);
  CHECK(is_solvable(m.j, tol));
}

TEST_CASE("the same seed gives the same instance") {
  Rng a(7), b(7);
  const LieInstance x = gen_solvable_instance(5, 5, a, tol);
  const LieInstance y = gen_solvable_instance(5, 5, b, tol);
  REQUIRE(x.g.dim() == y.g.dim());
  for (std::size_t i = 0; i < x.g.basis.size(); ++i) CHECK((x.g.basis[i] - y.g.basis[i]).norm() == 0.0);
}

TEST_CASE("verifiers on hand-built instances") {
  const Matrix e11 = oracle::E(2, 1, 1), e12 = oracle::E(2, 1, 2);
  LieInstance inst;
  inst.family = "hand";
  inst.g = make_lie_subalgebra(std::vector<Matrix>{e11, e12}, 2, tol);
  inst.j = inst.g;
  inst.conjugator = Matrix::Identity(2, 2);
  CHECK_FALSE(verify_t43(inst, tol).failed);
  CHECK_FALSE(verify_prop42(inst, 1, tol).failed);
  CHECK_FALSE(verify_prop26(inst, 1, tol).failed);

  KsTriple ks{"heisenberg", oracle::E(3, 1, 2), oracle::E(3, 2, 3), oracle::E(3, 1, 3)};
  CHECK_FALSE(verify_kleinecke_shirokov(ks, tol).failed);
  KsTriple flat{"commuting", oracle::diag({1.0, 2.0, 3.0}), oracle::diag({0.0, 1.0, 0.0}), Matrix::Zero(3, 3)};
  CHECK_FALSE(verify_kleinecke_shirokov(flat, tol).failed);

  Rng rng(1);
  const TrialOutcome u = verify_unbounded_exp(oracle::E(2, 1, 2), rng, tol);
  CHECK_FALSE(u.failed);
  CHECK(u.witness["growth"].get<double>() == doctest::Approx(std::sqrt(2.0 + 1e6)).epsilon(1e-9));
  CHECK_THROWS_AS(verify_unbounded_exp(Matrix::Zero(2, 2), rng, tol), PreconditionError);

  AdEigenInstance ad{oracle::diag({1.0, 0.0}), e12, 1.0, 1};
  CHECK_FALSE(verify_ad_eigen_nilpotent(ad, tol).failed);
}

TEST_CASE("definitional radical agrees with the trace form on small algebras") {
  Rng rng(3);
  const FiniteAlgebra a = generate_algebra(std::vector<Matrix>{oracle::E(3, 1, 1), oracle::E(3, 1, 2), oracle::E(3, 2, 3)}, 3, tol);
  const DefinitionalRadical d = definitional_radical(a, rng, 50, tol);
  CHECK(subspace_distance(d.radical, radical(a, tol)) < 1e-8);
  CHECK(d.witnesses_found);
  CHECK(d.invertibility_residual < 1e-8);
}

TEST_CASE("suite runs are deterministic regardless of thread count") {
  for (const std::string& name : suite_names()) {
    InstanceSpec one = small_spec(6), many = small_spec(6);
    one.jobs = 1;
    many.jobs = 4;
    const Report a = run_suite(name, one);
    const Report b = run_suite(name, many);
    CHECK_MESSAGE(a.to_json(false).dump() == b.to_json(false).dump(), name);
    CHECK_MESSAGE(a.passed(), name);
  }
}

TEST_CASE("reports survive a JSON round trip") {
  Report r = run_suite("t43", small_spec(4));
  r.failures.push_back({2, 77, 1.5e-3, Json{{"family", "x"}}});
  const Json j = r.to_json();
  const Report back = Report::from_json(j);
  CHECK(back.to_json().dump(2) == j.dump(2));
  CHECK(Json::parse(j.dump(2)).dump(2) == j.dump(2));
  CHECK_FALSE(back.passed());
}

TEST_CASE("spec validation") {
  InstanceSpec s;
  s.trials = 0;
  CHECK_THROWS_AS(s.validate(), UsageError);
  s = {};
  s.ambient_n = 0;
  CHECK_THROWS_AS(s.validate(), UsageError);
  CHECK_THROWS_AS(run_suite("no-such-suite", InstanceSpec{}), UsageError);
}
