// Seeded random instances, one verifier per structural result, and the suite
// runner that turns trials into reports.
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <json.hpp>

#include "radlie/algebra.hpp"
#include "radlie/lie.hpp"

namespace radlie {

using Json = nlohmann::json;
using Rng = std::mt19937_64;

/// Bad suite name or instance parameters.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct InstanceSpec {
  int ambient_n = 6;    ///< largest ambient size drawn
  int lie_dim_cap = 5;  ///< largest Lie (and algebra) dimension requested
  int trials = 100;
  std::uint64_t seed = 0;
  Tolerances tol;
  int jobs = 0;  ///< worker threads; 0 means all available

  void validate() const;
};

/// Seed of trial `trial` in a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

// ---------------------------------------------------------------------------
// Random building blocks

Complex random_complex(Rng& rng);
Matrix random_gaussian(int rows, int cols, Rng& rng);
Matrix random_unitary(int n, Rng& rng);
/// U diag(s) V^* with singular values in [1, 10]: condition number at most 10,
/// well inside the cap of 100.
Matrix random_conjugator(int n, Rng& rng);
int uniform_int(int lo, int hi, Rng& rng);
double uniform_real(double lo, double hi, Rng& rng);
Matrix conjugate(const Matrix& p, const Matrix& p_inv, const Matrix& x);

// ---------------------------------------------------------------------------
// Generators

struct LieInstance {
  std::string family;
  LieSubalgebra g;
  LieSubalgebra j;  ///< a solvable ideal of g
  Matrix conjugator;
};

LieInstance gen_solvable_instance(int n, int cap, Rng& rng, const Tolerances& tol);
/// sl2 in an irreducible 2- or 3-dimensional block beside a solvable block;
/// j is the solvable radical. Falls back to gen_solvable_instance when n < 4
/// or cap < 4.
LieInstance gen_mixed_instance(int n, int cap, Rng& rng, const Tolerances& tol);
/// Closure of strictly upper-triangular matrices; j = g.
LieInstance gen_nilpotent_instance(int n, int cap, Rng& rng, const Tolerances& tol);
/// Families with semisimple A(g) and j central in g; occasionally j = g for
/// gl2 blocks, which does not meet the hypothesis of the lemma.
LieInstance gen_commuting_semisimple_instance(int n, int cap, Rng& rng, const Tolerances& tol);

struct KsTriple {
  std::string family;
  Matrix a, b, c;
};
KsTriple gen_ks_triple(int n, Rng& rng, const Tolerances& tol);

struct AlgebraInstance {
  std::string family;
  FiniteAlgebra algebra;
};
/// Unital algebras of dimension at most cap: polynomial algebras of one
/// matrix, generated subalgebras of incidence algebras, and matrix blocks
/// beside local blocks; all conjugated.
AlgebraInstance gen_algebra_instance(int n, int cap, Rng& rng, const Tolerances& tol);
/// Commutative algebras: C[x] and direct sums of local algebras C[J].
AlgebraInstance gen_commutative_instance(int n, Rng& rng, const Tolerances& tol);

struct SylvesterPair {
  std::string family;
  Matrix a1, a2;
  std::vector<Complex> lambdas;  ///< separated from sigma(a1) - sigma(a2) by a circle
};
SylvesterPair gen_sylvester_pair(int n, Rng& rng);

struct AdEigenInstance {
  Matrix a, b;
  Complex lambda;
  int m = 1;
};
/// a = P (D + N) P^{-1} with D on an arithmetic ladder of step lambda and N
/// nilpotent inside each rung; b raises the ladder by one rung.
AdEigenInstance gen_ad_eigen_instance(int n, Rng& rng);

/// Nonzero nilpotent matrix of Frobenius norm 1.
Matrix gen_nilpotent_element(int n, Rng& rng);

// ---------------------------------------------------------------------------
// Verifiers

struct TrialOutcome {
  bool hypothesis_met = true;
  bool failed = false;
  double residual = 0.0;
  Json witness = Json::object();
};

/// Family and dimensions of a Lie instance, for failure witnesses.
Json describe(const LieInstance& inst);

TrialOutcome verify_t43(const LieInstance& inst, const Tolerances& tol);
TrialOutcome verify_prop42(const LieInstance& inst, std::uint64_t seed, const Tolerances& tol);
TrialOutcome verify_prop26(const LieInstance& inst, std::uint64_t seed, const Tolerances& tol);
TrialOutcome verify_lemma27(const LieInstance& inst, Rng& rng, const Tolerances& tol);
TrialOutcome verify_lemma41(const LieInstance& inst, const Tolerances& tol);
TrialOutcome verify_lemma32(const AlgebraInstance& inst, Rng& rng, const Tolerances& tol);
TrialOutcome verify_kleinecke_shirokov(const KsTriple& t, const Tolerances& tol);
TrialOutcome verify_rosenblum(const SylvesterPair& p, Rng& rng, const Tolerances& tol);
TrialOutcome verify_ad_eigen_nilpotent(const AdEigenInstance& inst, const Tolerances& tol);
TrialOutcome verify_quotient_spectrum(const AlgebraInstance& inst, Rng& rng, const Tolerances& tol);
TrialOutcome verify_radical_oracle(const AlgebraInstance& inst, Rng& rng, const Tolerances& tol);
TrialOutcome verify_radii(const AlgebraInstance& inst, Rng& rng, const Tolerances& tol);
TrialOutcome verify_unbounded_exp(const Matrix& x, Rng& rng, const Tolerances& tol);
TrialOutcome verify_funcalc(const Matrix& a, const std::vector<Complex>& coeffs, const Tolerances& tol);
TrialOutcome verify_equispectral(const AlgebraInstance& inst, Rng& rng, const Tolerances& tol);

/// Radical from its definition: a with b a quasi-nilpotent for every b in A,
/// tested through traces of the left-regular representation over the basis
/// and `samples` random b, with explicit witnesses b for which 1 - b x is
/// singular on the complement.
struct DefinitionalRadical {
  Basis radical;
  /// Every complement direction got a witness b with 1 - b x singular.
  bool witnesses_found = false;
  /// max |1 - det(1 - b r)| over radical basis r and sampled b.
  double invertibility_residual = 0.0;
};
DefinitionalRadical definitional_radical(const FiniteAlgebra& a, Rng& rng, int samples, const Tolerances& tol);

// ---------------------------------------------------------------------------
// Reports

struct Failure {
  int trial = 0;
  std::uint64_t seed = 0;
  double residual = 0.0;
  Json witness = Json::object();
};

struct Report {
  std::string suite;
  int trials = 0;
  std::vector<Failure> failures;
  double max_residual = 0.0;
  int hypothesis_not_met = 0;
  Tolerances tolerances;
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty(); }
  Json to_json(bool with_elapsed = true) const;
  static Report from_json(const Json& j);
};

/// Suite names accepted by run_suite, in the order run by run_all.
const std::vector<std::string>& suite_names();

/// Runs one trial of a suite; exposed so failures can be replayed.
TrialOutcome run_trial(const std::string& suite, const InstanceSpec& spec, int trial);

Report run_suite(const std::string& suite, const InstanceSpec& spec);
std::vector<Report> run_all(const InstanceSpec& spec);

}  // namespace radlie
