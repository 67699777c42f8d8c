#include "liemarkov/representation.hpp"

#include "liemarkov/errors.hpp"

namespace liemarkov {

RegularRep regular_rep(const CayleyTable& t) {
  if (!is_associative(t)) {
    throw MalformedTable("regular representation requires an associative table");
  }
  const int k = t.order();
  RegularRep rep{k, {}};
  rep.matrices.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    IntMatrix a = IntMatrix::Zero(k, k);
    for (int j = 0; j < k; ++j) a(t.at(i, j), j) = 1;
    rep.matrices.push_back(std::move(a));
  }
  return rep;
}

bool rep_is_injective(const RegularRep& r) {
  for (std::size_t i = 0; i < r.matrices.size(); ++i) {
    for (std::size_t j = i + 1; j < r.matrices.size(); ++j) {
      if (r.matrices[i] == r.matrices[j]) return false;
    }
  }
  return true;
}

}  // namespace liemarkov
