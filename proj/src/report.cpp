#include "liemarkov/report.hpp"

#include "liemarkov/closure.hpp"

namespace liemarkov {

ModelReport classify_model(const ModelSubspace& m, std::vector<CayleyTable> provenance) {
  ModelReport r;
  r.subspace = m;
  r.dimension = m.dim;
  r.absorbing_states = absorbing_states(m);
  r.reducible = is_reducible(m);
  r.symmetry = symmetry_group(m);
  r.variant_count = variant_count(r.symmetry);
  r.lie_closed = check_lie_closed(m).closed;
  r.matrix_algebra_closed = check_algebra_closed(m).closed;
  r.provenance = std::move(provenance);
  return r;
}

namespace {

template <typename M>
bool same_matrix(const M& a, const M& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}

}  // namespace

bool operator==(const ModelSubspace& a, const ModelSubspace& b) {
  if (a.order != b.order || a.dim != b.dim || a.labels != b.labels || a.pivots != b.pivots ||
      a.dropped != b.dropped || a.basis.size() != b.basis.size() || !same_matrix(a.rref, b.rref)) {
    return false;
  }
  for (std::size_t n = 0; n < a.basis.size(); ++n) {
    if (!same_matrix(a.basis[n], b.basis[n])) return false;
  }
  return true;
}

bool operator==(const SymmetryGroup& a, const SymmetryGroup& b) {
  return a.order_k == b.order_k && a.elements == b.elements && a.name == b.name;
}

bool operator==(const ModelReport& a, const ModelReport& b) {
  return a.subspace == b.subspace && a.dimension == b.dimension &&
         a.absorbing_states == b.absorbing_states && a.reducible == b.reducible &&
         a.symmetry == b.symmetry && a.variant_count == b.variant_count &&
         a.lie_closed == b.lie_closed && a.matrix_algebra_closed == b.matrix_algebra_closed &&
         a.known_label == b.known_label && a.provenance == b.provenance;
}

}  // namespace liemarkov
