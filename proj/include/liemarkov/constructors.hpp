#pragma once

#include <string>
#include <vector>

#include "liemarkov/cayley.hpp"
#include "liemarkov/modelgen.hpp"
#include "liemarkov/perm.hpp"
#include "liemarkov/scalar.hpp"

namespace liemarkov {

/// A finite group given by its Cayley table. Validated on construction.
class GroupSpec {
 public:
  /// Throws NotAGroup naming the first violated axiom (associativity,
  /// identity, inverses).
  explicit GroupSpec(CayleyTable table, std::vector<std::string> element_names = {});

  const CayleyTable& table() const { return table_; }
  const std::vector<std::string>& element_names() const { return names_; }
  int order() const { return table_.order(); }
  int identity() const { return identity_; }
  int inverse(int g) const { return inverses_[static_cast<std::size_t>(g)]; }
  int multiply(int a, int b) const { return table_.at(a, b); }
  bool is_abelian() const;

 private:
  CayleyTable table_;
  std::vector<std::string> names_;
  int identity_ = 0;
  std::vector<int> inverses_;
};

GroupSpec cyclic_group(int n);
GroupSpec klein_group();
/// S3 on six elements in the order of Perm::all(3); names are cycle strings.
GroupSpec symmetric_group_s3();

/// span{-I + K(g)} where K(g) is the permutation matrix of x -> g x.
ModelSubspace group_based_model(const GroupSpec& g);

/// Rate matrix with off-diagonal entry (r, c) = f(r c^-1), i.e. Q_ij = f(i - j)
/// in additive notation; diagonal from zero column sums. `rates` is indexed
/// by element. Throws NotAGroup for a non-abelian group.
RatMatrix abelian_rate_pattern(const GroupSpec& g, const std::vector<Rational>& rates);

/// Rate matrices fixed by K_s Q K_s^T = Q for every s in `group`: one 0/1
/// generator per orbit of off-diagonal cells. Throws Error when `group` is
/// not closed under composition.
ModelSubspace equivariant_model(const std::vector<Perm>& group, int order);

/// Model from a symbolic pattern: rows of whitespace-separated cells, '*' on
/// the diagonal, '0' for a fixed zero, any other token names a free rate.
/// One generator per distinct name, in order of first appearance.
ModelSubspace pattern_model(const std::vector<std::string>& rows);

struct FixtureModel {
  std::string name;
  ModelSubspace subspace;
  bool in_cone = true;  // every generator has nonnegative off-diagonals
};

/// "SYM" (4-state symmetric model), "GM2" (2-state general Markov model) or
/// "JJ3" (3-state model isomorphic to GM2 as a Lie algebra). Throws Error
/// for any other name.
FixtureModel fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace liemarkov
