// JSON algebra files: named generators with complex entries as [re, im]
// pairs and an optional Lie basis given by names or inline matrices.
#pragma once

#include <string>

#include <json.hpp>

#include "radlie/numeric.hpp"

namespace radlie {

/// Malformed or inconsistent input file.
class InputError : public Error {
 public:
  using Error::Error;
};

struct NamedMatrix {
  std::string name;
  Matrix matrix;
};

struct AlgebraFile {
  int ambient_dim = 0;
  std::vector<NamedMatrix> generators;
  bool has_lie_basis = false;
  std::vector<Matrix> lie_basis;

  /// Throws InputError for unknown names.
  const Matrix& element(const std::string& name) const;
  std::vector<Matrix> generator_matrices() const;
};

AlgebraFile parse_algebra_file(const nlohmann::json& j);
AlgebraFile load_algebra_file(const std::string& path);

nlohmann::json matrix_to_json(const Matrix& m);
/// Expects n rows of n [re, im] pairs.
Matrix matrix_from_json(const nlohmann::json& j, int n);

}  // namespace radlie
