#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liemarkov/cayley.hpp"
#include "liemarkov/modelgen.hpp"
#include "liemarkov/symmetry.hpp"

namespace liemarkov {

/// Classification of one model. State indices are 0-based here; renderers
/// print them 1-based.
struct ModelReport {
  ModelSubspace subspace;
  int dimension = 0;
  std::vector<int> absorbing_states;
  bool reducible = false;
  SymmetryGroup symmetry;
  long variant_count = 0;
  bool lie_closed = false;
  bool matrix_algebra_closed = false;
  std::optional<std::string> known_label;
  std::vector<CayleyTable> provenance;
};

ModelReport classify_model(const ModelSubspace& m, std::vector<CayleyTable> provenance = {});

bool operator==(const ModelSubspace& a, const ModelSubspace& b);
bool operator==(const SymmetryGroup& a, const SymmetryGroup& b);
bool operator==(const ModelReport& a, const ModelReport& b);

}  // namespace liemarkov
