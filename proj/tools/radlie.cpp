// radlie: analysis and verification front end.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "radlie/algebra.hpp"
#include "radlie/algebra_file.hpp"
#include "radlie/lab.hpp"
#include "radlie/lie.hpp"
#include "radlie/spectral.hpp"
#include "radlie/sylvester.hpp"

using namespace radlie;

namespace {

enum Exit { kPass = 0, kViolation = 1, kUsage = 2, kNumerical = 3 };

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.13g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string fmt(Complex z, double chop = 0.0) {
  const double re = std::abs(z.real()) <= chop ? 0.0 : z.real();
  const double im = std::abs(z.imag()) <= chop ? 0.0 : z.imag();
  if (im == 0.0) return fmt(re);
  if (re == 0.0) return fmt(im) + "i";
  return fmt(re) + (im < 0 ? "-" : "+") + fmt(std::abs(im)) + "i";
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

void print_matrix(std::ostream& out, const Matrix& m, const std::string& indent) {
  const double chop = 1e-13 * std::max(1.0, m.norm());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << indent << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << fmt(m(i, j), chop);
    out << "]\n";
  }
}

Json basis_json(const Basis& b) {
  Json out = Json::array();
  for (const Matrix& m : b) out.push_back(matrix_to_json(m));
  return out;
}

struct Common {
  std::string file;
  std::string format = "text";
};

void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_analyze(const Common& c, const Tolerances& tol) {
  const AlgebraFile f = load_algebra_file(c.file);
  const auto gens = f.generator_matrices();
  const FiniteAlgebra a = generate_algebra(gens, f.ambient_dim, tol);
  const Basis rad = radical(a, tol);
  const Basis z = center(a, tol);
  if (c.format == "json") {
    Json nil = Json::object();
    for (const NamedMatrix& g : f.generators) nil[g.name] = is_nilpotent(g.matrix, tol);
    emit({{"algebra_dim", a.dim()},
          {"radical_dim", static_cast<int>(rad.size())},
          {"radical_basis", basis_json(rad)},
          {"center_dim", static_cast<int>(z.size())},
          {"nilpotent", nil}});
    return kPass;
  }
  std::cout << "algebra dimension: " << a.dim() << "\n";
  std::cout << "radical dimension: " << rad.size() << "\n";
  for (std::size_t k = 0; k < rad.size(); ++k) {
    std::cout << "radical basis " << k << ":\n";
    print_matrix(std::cout, rad[k], "  ");
  }
  std::cout << "center dimension: " << z.size() << "\n";
  for (const NamedMatrix& g : f.generators)
    std::cout << "generator " << g.name << ": " << (is_nilpotent(g.matrix, tol) ? "nilpotent" : "not nilpotent") << "\n";
  return kPass;
}

std::vector<Complex> parse_coeffs(const std::string& s) {
  std::vector<Complex> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.emplace_back(v, 0.0);
    } catch (const std::exception&) {
      throw UsageError("--coeffs must be a comma-separated list of numbers");
    }
  }
  if (out.empty()) throw UsageError("--coeffs needs at least one coefficient");
  return out;
}

int cmd_funcalc(const Common& c, const std::string& element, const std::string& fn, const std::string& coeffs,
                const Tolerances& tol) {
  const AlgebraFile f = load_algebra_file(c.file);
  const Matrix& a = f.element(element);
  Matrix value;
  if (fn == "exp") {
    value = exp_matrix(a, tol);
  } else if (fn == "log") {
    const Matrix shifted = a - identity(f.ambient_dim);
    value = is_nilpotent(shifted, tol) ? log_unipotent(a, tol) : holo_calc(HoloFunction::log(), a, tol);
  } else if (fn == "inv") {
    value = holo_calc(HoloFunction::inv(), a, tol);
  } else {
    if (coeffs.empty()) throw UsageError("--fn poly needs --coeffs");
    value = holo_calc(HoloFunction::polynomial(parse_coeffs(coeffs)), a, tol);
  }
  if (c.format == "json") {
    emit({{"element", element}, {"fn", fn}, {"matrix", matrix_to_json(value)}});
  } else {
    std::cout << fn << "(" << element << "):\n";
    print_matrix(std::cout, value, "  ");
  }
  return kPass;
}

int cmd_spectrum(const Common& c, const std::string& element, const Tolerances& tol) {
  const AlgebraFile f = load_algebra_file(c.file);
  const SpectrumReport s = spectrum(f.element(element), tol);
  if (c.format == "json") {
    Json eig = Json::array(), clusters = Json::array();
    for (const Complex& z : s.eigenvalues) eig.push_back(complex_json(z));
    for (const Cluster& k : s.clusters)
      clusters.push_back({{"centroid", complex_json(k.centroid)}, {"multiplicity", k.multiplicity}});
    emit({{"element", element}, {"eigenvalues", eig}, {"clusters", clusters}, {"spectral_radius", s.spectral_radius}});
    return kPass;
  }
  std::cout << "spectrum of " << element << ":\n";
  for (const Cluster& k : s.clusters) std::cout << "  " << fmt(k.centroid, 1e-13) << " (multiplicity " << k.multiplicity << ")\n";
  std::cout << "spectral radius: " << fmt(s.spectral_radius) << "\n";
  return kPass;
}

int cmd_cartan(const Common& c, std::uint64_t seed, const Tolerances& tol) {
  const AlgebraFile f = load_algebra_file(c.file);
  if (!f.has_lie_basis) throw InputError("cartan needs a lie_basis in the algebra file");
  const LieSubalgebra g = make_lie_subalgebra(f.lie_basis, f.ambient_dim, tol);
  const LieSubalgebra h = cartan_subalgebra(g, seed, tol);
  const CartanDecomposition d = root_decomposition(g, h, seed + 1, tol);
  if (c.format == "json") {
    Json roots = Json::array();
    for (const Root& r : d.roots) {
      Json values = Json::array();
      for (const Complex& v : r.values) values.push_back(complex_json(v));
      roots.push_back({{"values", values}, {"dim", static_cast<int>(r.space.size())}, {"space", basis_json(r.space)}});
    }
    emit({{"lie_dim", g.dim()},
          {"cartan_dim", h.dim()},
          {"cartan_basis", basis_json(h.basis)},
          {"roots", roots},
          {"fitting_plus_dim", static_cast<int>(d.fitting_plus.size())},
          {"ad_nilpotent_dim", static_cast<int>(d.ad_nilpotent_part.size())},
          {"ad_nilpotent_is_subspace", d.ad_nilpotent_is_subspace}});
    return kPass;
  }
  std::cout << "Lie algebra dimension: " << g.dim() << "\n";
  std::cout << "Cartan subalgebra dimension: " << h.dim() << "\n";
  for (std::size_t k = 0; k < h.basis.size(); ++k) {
    std::cout << "cartan basis " << k << ":\n";
    print_matrix(std::cout, h.basis[k], "  ");
  }
  std::cout << "roots: " << d.roots.size() << "\n";
  for (const Root& r : d.roots) {
    std::cout << "  values [";
    for (std::size_t i = 0; i < r.values.size(); ++i) std::cout << (i ? ", " : "") << fmt(r.values[i], 1e-10);
    std::cout << "] root space dimension " << r.space.size() << "\n";
  }
  std::cout << "fitting g+ dimension: " << d.fitting_plus.size() << "\n";
  std::cout << "ad-nilpotent part dimension: " << d.ad_nilpotent_part.size()
            << (d.ad_nilpotent_is_subspace ? " (subspace)" : " (basis directions only)") << "\n";
  return kPass;
}

Complex parse_complex(const std::string& s) {
  std::stringstream in(s);
  std::string re, im;
  std::getline(in, re, ',');
  std::getline(in, im, ',');
  try {
    return {std::stod(re), im.empty() ? 0.0 : std::stod(im)};
  } catch (const std::exception&) {
    throw UsageError("--lambda must be RE or RE,IM");
  }
}

int cmd_sylvester(const Common& c, const std::string& a1, const std::string& a2, const std::string& lambda,
                  const std::string& rhs, const Tolerances& tol) {
  const AlgebraFile f = load_algebra_file(c.file);
  const SylvesterOperator op(f.element(a1), f.element(a2));
  const auto sd = sylvester_spectrum(op);
  const auto clusters = cluster_eigenvalues(sd, spectral_scale(op.matrix_form()), tol);
  Json out = {{"a1", a1}, {"a2", a2}};
  Json spec = Json::array();
  for (const Complex& z : sd) spec.push_back(complex_json(z));
  out["spectrum"] = spec;
  if (c.format != "json") {
    std::cout << "spectrum of x -> " << a1 << " x - x " << a2 << ":\n";
    for (const Cluster& k : clusters) std::cout << "  " << fmt(k.centroid, 1e-13) << " (multiplicity " << k.multiplicity << ")\n";
  }
  if (!lambda.empty() || !rhs.empty()) {
    if (lambda.empty() || rhs.empty()) throw UsageError("--lambda and --rhs go together");
    const Complex l = parse_complex(lambda);
    const Matrix& y = f.element(rhs);
    const Matrix x = rosenblum_resolve(op, l, y, tol);
    const double residual = (l * x - op.apply(x) - y).norm() / std::max(1.0, y.norm());
    out["lambda"] = complex_json(l);
    out["solution"] = matrix_to_json(x);
    out["residual"] = residual;
    if (c.format != "json") {
      std::cout << "solution of (lambda - Delta) x = " << rhs << ":\n";
      print_matrix(std::cout, x, "  ");
      std::cout << "residual: " << fmt(residual) << "\n";
    }
  }
  if (c.format == "json") emit(out);
  return kPass;
}

void print_report_text(const Report& r) {
  std::cout << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " trials=" << r.trials
            << " failures=" << r.failures.size() << " max_residual=" << fmt(r.max_residual)
            << " hypothesis_not_met=" << r.hypothesis_not_met << " elapsed_ms=" << fmt(r.elapsed_ms) << "\n";
  for (const Failure& f : r.failures)
    std::cout << "  trial " << f.trial << " seed " << f.seed << " residual " << fmt(f.residual) << " "
              << f.witness.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radicals, spectra and structure of matrix algebras and Lie subalgebras"};
  app.require_subcommand(1);
  Common common;
  Tolerances tol;

  auto* analyze = app.add_subcommand("analyze", "Dimension, radical and center of the generated algebra");
  analyze->add_option("file", common.file, "Algebra file")->required();
  add_format(analyze, common);

  std::string element, fn, coeffs;
  auto* funcalc = app.add_subcommand("funcalc", "Holomorphic functional calculus of one element");
  funcalc->add_option("file", common.file, "Algebra file")->required();
  funcalc->add_option("--element", element, "Generator name")->required();
  funcalc->add_option("--fn", fn, "Function")->required()->check(CLI::IsMember({"exp", "log", "inv", "poly"}));
  funcalc->add_option("--coeffs", coeffs, "Polynomial coefficients c0,c1,...");
  add_format(funcalc, common);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues and spectral radius of one element");
  spectrum_cmd->add_option("file", common.file, "Algebra file")->required();
  spectrum_cmd->add_option("--element", element, "Generator name")->required();
  add_format(spectrum_cmd, common);

  std::uint64_t seed = 0;
  auto* cartan = app.add_subcommand("cartan", "Cartan subalgebra and root decomposition of the Lie basis");
  cartan->add_option("file", common.file, "Algebra file")->required();
  auto* cartan_seed = cartan->add_option("--seed", seed, "Seed for the regular element");
  add_format(cartan, common);

  std::string a1 = "a1", a2 = "a2", lambda, rhs;
  auto* sylvester = app.add_subcommand("sylvester", "Spectrum and resolvent of x -> a1 x - x a2");
  sylvester->add_option("file", common.file, "Algebra file")->required();
  sylvester->add_option("--a1", a1, "Name of a1");
  sylvester->add_option("--a2", a2, "Name of a2");
  sylvester->add_option("--lambda", lambda, "Resolvent point RE or RE,IM");
  sylvester->add_option("--rhs", rhs, "Name of the right-hand side");
  add_format(sylvester, common);

  InstanceSpec spec;
  std::string suite;
  double residual_tol = tol.residual_tol;
  auto* verify = app.add_subcommand("verify", "Run seeded verification suites");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", suite, "Suite name or all")->required()->check(CLI::IsMember(choices));
  verify->add_option("--trials", spec.trials, "Trials per suite");
  verify->add_option("--dim", spec.ambient_n, "Largest ambient dimension");
  verify->add_option("--max-lie-dim", spec.lie_dim_cap, "Largest Lie or algebra dimension");
  auto* verify_seed = verify->add_option("--seed", spec.seed, "Base seed");
  verify->add_option("--tol", residual_tol, "Residual tolerance");
  verify->add_option("--jobs", spec.jobs, "Worker threads (0: all available)");
  add_format(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  auto env_seed = [](std::uint64_t& target) {
    if (const char* s = std::getenv("RADLIE_SEED")) {
      try {
        std::size_t used = 0;
        target = std::stoull(s, &used);
        if (used != std::string(s).size()) throw std::invalid_argument(s);
      } catch (const std::exception&) {
        throw UsageError("RADLIE_SEED must be a non-negative integer");
      }
    }
  };

  try {
    if (*analyze) return cmd_analyze(common, tol);
    if (*funcalc) return cmd_funcalc(common, element, fn, coeffs, tol);
    if (*spectrum_cmd) return cmd_spectrum(common, element, tol);
    if (*cartan) {
      if (cartan_seed->count() == 0) env_seed(seed);
      return cmd_cartan(common, seed, tol);
    }
    if (*sylvester) return cmd_sylvester(common, a1, a2, lambda, rhs, tol);
    if (*verify) {
      if (verify_seed->count() == 0) env_seed(spec.seed);
      spec.tol.residual_tol = residual_tol;
      spec.validate();
      std::vector<Report> reports;
      if (suite == "all") {
        reports = run_all(spec);
      } else {
        reports.push_back(run_suite(suite, spec));
      }
      if (common.format == "json") {
        if (suite == "all") {
          Json arr = Json::array();
          for (const Report& r : reports) arr.push_back(r.to_json());
          emit(arr);
        } else {
          emit(reports.front().to_json());
        }
      } else {
        for (const Report& r : reports) print_report_text(r);
      }
      const bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
      return ok ? kPass : kViolation;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}
