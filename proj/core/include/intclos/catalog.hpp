#pragma once

// Built-in worked examples: matrices, vectors, arcs and supplied ideals.

#include <map>
#include <string>
#include <vector>

#include "intclos/matrix.hpp"

namespace intclos {

struct CatalogExample {
  std::string id;
  std::string summary;
  std::vector<std::string> vars;
  std::vector<std::vector<std::string>> matrix;
  /// Named column vectors (test vectors, expected closure members).
  std::map<std::string, std::vector<std::string>> vectors;
  /// Named ideals (supplied closures, expected Fitting ideals).
  std::map<std::string, std::vector<std::string>> ideals;
  /// Named matrices (expected closures, Z(M) generators).
  std::map<std::string, std::vector<std::vector<std::string>>> matrices;
  /// Arc in the variable "t", one entry per ring variable.
  std::vector<std::string> phi;

  RingPtr ring() const;
  Submodule module(const RingPtr& ring) const;
  Vector vector(const std::string& name, const RingPtr& ring) const;
  Ideal ideal(const std::string& name, const RingPtr& ring) const;
  Submodule named_matrix(const std::string& name, const RingPtr& ring) const;
};

const std::vector<CatalogExample>& example_catalog();
/// Throws InvalidArgument for an unknown id.
const CatalogExample& find_example(const std::string& id);

}  // namespace intclos
