#pragma once

#include <string>
#include <vector>

#include "liemarkov/modelgen.hpp"
#include "liemarkov/perm.hpp"
#include "liemarkov/scalar.hpp"

namespace liemarkov {

/// K_p with entry (p(j), j) = 1, so perm_matrix(p * q) = K_p K_q.
IntMatrix perm_matrix(const Perm& p);

/// K_p M K_p^T, i.e. result(p(i), p(j)) = m(i, j).
template <typename Derived>
Matrix<typename Derived::Scalar> conjugate(const Eigen::MatrixBase<Derived>& m, const Perm& p) {
  Matrix<typename Derived::Scalar> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(p(static_cast<int>(i)), p(static_cast<int>(j))) = m(i, j);
    }
  }
  return out;
}

struct SymmetryGroup {
  int order_k = 0;
  std::vector<Perm> elements;  // sorted by image array
  std::string name;

  int size() const { return static_cast<int>(elements.size()); }
};

/// All state permutations whose conjugation action preserves span(m).
SymmetryGroup symmetry_group(const ModelSubspace& m);

/// k! / |g|: the number of distinct relabeled copies of the model.
long variant_count(const SymmetryGroup& g);

/// trivial, Z2, Z3, Z4, V4, S3, D4, A4, S4, or "order-n subgroup".
std::string name_group(const std::vector<Perm>& elements);

/// True iff the set contains the identity and is closed under composition
/// (finite, so inverses follow).
bool is_closed_group(const std::vector<Perm>& elements);

/// The group generated by `generators` on `order` points, sorted.
std::vector<Perm> generated_group(const std::vector<Perm>& generators, int order);

}  // namespace liemarkov
