#pragma once

#include <vector>

#include "liemarkov/cayley.hpp"
#include "liemarkov/scalar.hpp"

namespace liemarkov {

/// Left regular representation of a semigroup: matrices[i] is the 0/1 matrix
/// A_i with A_i e_j = e_{t[i][j]}.
struct RegularRep {
  int order = 0;
  std::vector<IntMatrix> matrices;
};

/// Throws MalformedTable when t is not associative.
RegularRep regular_rep(const CayleyTable& t);

/// True iff the k matrices are pairwise distinct.
bool rep_is_injective(const RegularRep& r);

}  // namespace liemarkov
