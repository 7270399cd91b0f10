#include "radlie/algebra_file.hpp"

#include <fstream>
#include <set>

namespace radlie {

using nlohmann::json;

const Matrix& AlgebraFile::element(const std::string& name) const {
  for (const NamedMatrix& g : generators)
    if (g.name == name) return g.matrix;
  throw InputError("no generator named '" + name + "'");
}

std::vector<Matrix> AlgebraFile::generator_matrices() const {
  std::vector<Matrix> out;
  for (const NamedMatrix& g : generators) out.push_back(g.matrix);
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw InputError("matrix must have " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InputError("matrix row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (int k = 0; k < n; ++k) {
      const json& e = row[static_cast<std::size_t>(k)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw InputError("matrix entries must be [re, im] pairs");
      m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  if (!m.allFinite()) throw InputError("matrix entries must be finite");
  return m;
}

AlgebraFile parse_algebra_file(const json& j) {
  if (!j.is_object()) throw InputError("algebra file must be a JSON object");
  if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer())
    throw InputError("ambient_dim must be an integer");
  AlgebraFile f;
  f.ambient_dim = j["ambient_dim"].get<int>();
  if (f.ambient_dim < 1 || f.ambient_dim > kMaxAmbient) throw InputError("ambient_dim must be between 1 and 64");
  if (!j.contains("generators") || !j["generators"].is_array()) throw InputError("generators must be an array");
  std::set<std::string> names;
  for (const json& g : j["generators"]) {
    if (!g.is_object() || !g.contains("name") || !g["name"].is_string() || !g.contains("matrix"))
      throw InputError("each generator needs a name and a matrix");
    NamedMatrix nm{g["name"].get<std::string>(), matrix_from_json(g["matrix"], f.ambient_dim)};
    if (!names.insert(nm.name).second) throw InputError("duplicate generator name '" + nm.name + "'");
    f.generators.push_back(std::move(nm));
  }
  if (j.contains("lie_basis")) {
    if (!j["lie_basis"].is_array()) throw InputError("lie_basis must be an array");
    f.has_lie_basis = true;
    for (const json& e : j["lie_basis"]) {
      if (e.is_string()) {
        f.lie_basis.push_back(f.element(e.get<std::string>()));
      } else {
        f.lie_basis.push_back(matrix_from_json(e, f.ambient_dim));
      }
    }
  }
  return f;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_algebra_file(j);
}

}  // namespace radlie
