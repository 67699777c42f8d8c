#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liemarkov/perm.hpp"
#include "liemarkov/representation.hpp"
#include "liemarkov/scalar.hpp"

namespace liemarkov {

/// A linear model R = span(generators) of k x k zero-column-sum matrices.
///
/// `basis` keeps the distinct nonzero generators in the order supplied;
/// `labels[n]` is the 1-based index of the generator that produced basis[n]
/// (so L_3 stays L_3 after L_1 = 0 is dropped). `rref` holds the reduced row
/// echelon form of the row-major vectorized generators and is the canonical
/// description of the span.
struct ModelSubspace {
  int order = 0;
  std::vector<IntMatrix> basis;
  std::vector<int> labels;
  RatMatrix rref;
  std::vector<int> pivots;
  int dim = 0;
  int dropped = 0;  // zero or repeated generators removed from the input

  bool same_span(const ModelSubspace& other) const {
    return order == other.order && rref == other.rref;
  }
};

/// Builds the span of `generators` (all k x k with zero column sums; throws
/// Error otherwise). Labels default to 1..n.
ModelSubspace make_subspace(int order, const std::vector<IntMatrix>& generators,
                            std::vector<int> labels = {});

/// Generators L_i = -I + A_i of the semigroup-based model.
ModelSubspace rate_basis(const RegularRep& r);

/// Coefficients of x with respect to the rows of m.rref when x lies in the
/// span, nullopt otherwise. Exact.
std::optional<RatVector> contains(const ModelSubspace& m, const RatMatrix& x);
std::optional<RatVector> contains(const ModelSubspace& m, const IntMatrix& x);

/// Coefficients of x with respect to m.basis itself (free directions set to
/// zero when the generators are dependent).
std::optional<RatVector> generator_coefficients(const ModelSubspace& m, const RatMatrix& x);

using SupportMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Off-diagonal support of a generic interior rate matrix sum_i a_i B_i with
/// every a_i > 0, i.e. the union of the generators' positive entries.
SupportMatrix generic_support(const ModelSubspace& m);

/// 0-based states with no exit rate: column j of the generic support is
/// empty (columns index the source state).
std::vector<int> absorbing_states(const ModelSubspace& m);

/// True iff the transition digraph (edge j -> i for each supported (i, j))
/// is not strongly connected.
bool is_reducible(const ModelSubspace& m);

/// Permutation-invariant fingerprint of a model: the lexicographically
/// smallest rref over all simultaneous row/column relabelings.
struct SubspaceKey {
  int order = 0;
  int dim = 0;
  std::vector<Rational> entries;  // row-major rref, dim * k^2 values

  friend bool operator==(const SubspaceKey&, const SubspaceKey&) = default;
  friend bool operator<(const SubspaceKey& a, const SubspaceKey& b);

  /// "k=4;d=2;1,0,-1/2,...;0,1,..." -- the byte string model ids hash.
  std::string serialize() const;
};

/// The span conjugated by K_p: every generator B becomes K_p B K_p^T.
ModelSubspace conjugate_subspace(const ModelSubspace& m, const Perm& p);

SubspaceKey canonical_subspace(const ModelSubspace& m);

/// Stable 16-hex-digit identifier: leading bytes of SHA-256 of the
/// serialized canonical key.
std::string model_id(const SubspaceKey& key);

struct ModelClass {
  SubspaceKey key;
  std::vector<std::size_t> members;  // indices into the input list
};

/// Groups models by canonical key, in order of first appearance.
std::vector<ModelClass> dedup_models(const std::vector<ModelSubspace>& models);

}  // namespace liemarkov
