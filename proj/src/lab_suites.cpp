#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>

#include <omp.h>

#include "radlie/lab.hpp"

namespace radlie {

namespace {

using TrialFn = std::function<TrialOutcome(int n, int cap, Rng& rng, std::uint64_t seed, const Tolerances& tol)>;

struct SuiteDef {
  std::string name;
  int min_n;
  TrialFn run;
};

LieInstance t43_instance(int n, int cap, Rng& rng, const Tolerances& tol) {
  if (n >= 4 && cap >= 4 && uniform_int(0, 2, rng) == 0) return gen_mixed_instance(n, cap, rng, tol);
  return gen_solvable_instance(n, cap, rng, tol);
}

int algebra_cap(int n, int cap) { return std::max(cap, n); }

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> table = {
      {"t43", 1,
       [](int n, int cap, Rng& rng, std::uint64_t, const Tolerances& tol) {
         return verify_t43(t43_instance(n, cap, rng, tol), tol);
       }},
      {"prop42", 1,
       [](int n, int cap, Rng& rng, std::uint64_t seed, const Tolerances& tol) {
         return verify_prop42(t43_instance(n, cap, rng, tol), seed, tol);
       }},
      {"prop26", 2,
       [](int n, int cap, Rng& rng, std::uint64_t seed, const Tolerances& tol) {
         const LieInstance inst = uniform_int(0, 4, rng) == 0 ? gen_nilpotent_instance(n, cap, rng, tol)
                                                              : gen_solvable_instance(n, cap, rng, tol);
         return verify_prop26(inst, seed, tol);
       }},
      {"lemma27", 2,
       [](int n, int cap, Rng& rng, std::uint64_t, const Tolerances& tol) {
         const LieInstance inst = gen_nilpotent_instance(n, cap, rng, tol);
         return verify_lemma27(inst, rng, tol);
       }},
      {"lemma32", 1,
       [](int n, int cap, Rng& rng, std::uint64_t, const Tolerances& tol) {
         const AlgebraInstance inst = gen_algebra_instance(n, algebra_cap(n, cap), rng, tol);
         return verify_lemma32(inst, rng, tol);
       }},
      {"lemma41", 1,
       [](int n, int cap, Rng& rng, std::uint64_t, const Tolerances& tol) {
         return verify_lemma41(gen_commuting_semisimple_instance(n, cap, rng, tol), tol);
       }},
      {"ks", 3,
       [](int n, int, Rng& rng, std::uint64_t, const Tolerances& tol) {
         return verify_kleinecke_shirokov(gen_ks_triple(n, rng, tol), tol);
       }},
      {"rosenblum", 1,
       [](int n, int, Rng& rng, std::uint64_t, const Tolerances& tol) {
         const SylvesterPair p = gen_sylvester_pair(n, rng);
         return verify_rosenblum(p, rng, tol);
       }},
      {"cor34", 2,
       [](int n, int, Rng& rng, std::uint64_t, const Tolerances& tol) {
         return verify_ad_eigen_nilpotent(gen_ad_eigen_instance(n, rng), tol);
       }},
      {"quotient-spectrum", 1,
       [](int n, int cap, Rng& rng, std::uint64_t, const Tolerances& tol) {
         const AlgebraInstance inst = gen_algebra_instance(n, algebra_cap(n, cap), rng, tol);
         return verify_quotient_spectrum(inst, rng, tol);
       }},
      {"radical-oracle", 1,
       [](int n, int cap, Rng& rng, std::uint64_t, const Tolerances& tol) {
         const AlgebraInstance inst = gen_algebra_instance(n, algebra_cap(n, cap), rng, tol);
         return verify_radical_oracle(inst, rng, tol);
       }},
      {"radii", 1,
       [](int n, int, Rng& rng, std::uint64_t, const Tolerances& tol) {
         const AlgebraInstance inst = gen_commutative_instance(n, rng, tol);
         return verify_radii(inst, rng, tol);
       }},
      {"unbounded-exp", 2,
       [](int n, int, Rng& rng, std::uint64_t, const Tolerances& tol) {
         const Matrix x = gen_nilpotent_element(n, rng);
         return verify_unbounded_exp(x, rng, tol);
       }},
      {"funcalc", 1,
       [](int n, int, Rng& rng, std::uint64_t, const Tolerances& tol) {
         Matrix a;
         if (uniform_int(0, 4, rng) == 0) {
           // Diagonalizable with repeated eigenvalues.
           Matrix d = Matrix::Zero(n, n);
           const Complex v0 = random_complex(rng), v1 = random_complex(rng);
           for (int i = 0; i < n; ++i) d(i, i) = uniform_int(0, 1, rng) == 0 ? v0 : v1;
           const Matrix p = random_conjugator(n, rng);
           a = p * d * p.inverse();
           a /= std::max(1.0, norm2(a) / 2.0);
         } else {
           a = random_gaussian(n, n, rng) / std::sqrt(2.0 * n);
         }
         std::vector<Complex> coeffs(static_cast<std::size_t>(uniform_int(1, 6, rng)));
         for (Complex& c : coeffs) c = random_complex(rng);
         return verify_funcalc(a, coeffs, tol);
       }},
      {"equispectral", 1,
       [](int n, int cap, Rng& rng, std::uint64_t, const Tolerances& tol) {
         const AlgebraInstance inst = gen_algebra_instance(n, algebra_cap(n, cap), rng, tol);
         return verify_equispectral(inst, rng, tol);
       }},
  };
  return table;
}

const SuiteDef& find_suite(const std::string& name) {
  for (const SuiteDef& s : suites())
    if (s.name == name) return s;
  throw UsageError("unknown suite: " + name);
}

// The radical oracle compares against algebras in a fixed ambient size.
int draw_ambient(const SuiteDef& s, const InstanceSpec& spec, Rng& rng) {
  if (spec.ambient_n < s.min_n)
    throw UsageError("suite " + s.name + " needs --dim >= " + std::to_string(s.min_n));
  if (s.name == "radical-oracle") return spec.ambient_n;
  return uniform_int(std::max(s.min_n, std::min(2, spec.ambient_n)), spec.ambient_n, rng);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteDef& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

TrialOutcome run_trial(const std::string& suite, const InstanceSpec& spec, int trial) {
  const SuiteDef& s = find_suite(suite);
  const std::uint64_t seed = trial_seed(spec.seed, trial);
  Rng rng(seed);
  const int n = draw_ambient(s, spec, rng);
  TrialOutcome out = s.run(n, spec.lie_dim_cap, rng, seed, spec.tol);
  if (!out.witness.contains("n")) out.witness["n"] = n;
  return out;
}

Report run_suite(const std::string& suite, const InstanceSpec& spec) {
  spec.validate();
  const SuiteDef& s = find_suite(suite);
  if (spec.ambient_n < s.min_n)
    throw UsageError("suite " + s.name + " needs --dim >= " + std::to_string(s.min_n));
  const auto start = std::chrono::steady_clock::now();

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(spec.trials));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(spec.trials));
  const int threads = spec.jobs > 0 ? spec.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int t = 0; t < spec.trials; ++t) {
    try {
      outcomes[static_cast<std::size_t>(t)] = run_trial(suite, spec, t);
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Report r;
  r.suite = suite;
  r.trials = spec.trials;
  r.tolerances = spec.tol;
  for (int t = 0; t < spec.trials; ++t) {
    const TrialOutcome& o = outcomes[static_cast<std::size_t>(t)];
    if (!o.hypothesis_met) {
      ++r.hypothesis_not_met;
      continue;
    }
    r.max_residual = std::max(r.max_residual, o.residual);
    if (o.failed) r.failures.push_back({t, trial_seed(spec.seed, t), o.residual, o.witness});
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Report> run_all(const InstanceSpec& spec) {
  std::vector<Report> out;
  for (const std::string& name : suite_names()) out.push_back(run_suite(name, spec));
  return out;
}

Json Report::to_json(bool with_elapsed) const {
  Json failures_json = Json::array();
  for (const Failure& f : failures)
    failures_json.push_back({{"trial", f.trial}, {"seed", f.seed}, {"residual", f.residual}, {"witness", f.witness}});
  Json j = {{"suite", suite},
            {"trials", trials},
            {"failures", failures_json},
            {"max_residual", max_residual},
            {"hypothesis_not_met", hypothesis_not_met},
            {"tolerances",
             {{"rank_tol", tolerances.rank_tol},
              {"spec_tol", tolerances.spec_tol},
              {"residual_tol", tolerances.residual_tol}}}};
  if (with_elapsed) j["elapsed_ms"] = elapsed_ms;
  return j;
}

Report Report::from_json(const Json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.trials = j.at("trials").get<int>();
  for (const Json& f : j.at("failures"))
    r.failures.push_back({f.at("trial").get<int>(), f.at("seed").get<std::uint64_t>(), f.at("residual").get<double>(),
                          f.at("witness")});
  r.max_residual = j.at("max_residual").get<double>();
  r.hypothesis_not_met = j.at("hypothesis_not_met").get<int>();
  const Json& t = j.at("tolerances");
  r.tolerances.rank_tol = t.at("rank_tol").get<double>();
  r.tolerances.spec_tol = t.at("spec_tol").get<double>();
  r.tolerances.residual_tol = t.at("residual_tol").get<double>();
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

}  // namespace radlie
