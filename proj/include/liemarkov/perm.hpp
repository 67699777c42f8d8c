#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace liemarkov {

/// A permutation of {0..k-1}, stored as its image array.
///
/// Composition follows function notation: (p * q)(x) = p(q(x)).
class Perm {
 public:
  /// Identity on {0..order-1}.
  explicit Perm(int order = 1);

  /// Throws std::invalid_argument when `images` is not a bijection.
  explicit Perm(std::vector<int> images);

  /// Parses 1-based cycle notation such as "(1 2)(3 4)" or "e".
  static Perm from_cycles(const std::string& cycles, int order);

  /// All k! permutations of {0..k-1} in lexicographic order of images.
  static std::vector<Perm> all(int order);

  int order() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Multiplicative order of the element, e.g. 2 for a transposition.
  int element_order() const;

  /// 1-based disjoint cycle notation with fixed points omitted; "e" for
  /// the identity.
  std::string to_cycles() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// Parses a comma-separated list of permutations in cycle notation, e.g.
/// "(1 2)(3 4),(1 3)(2 4)".
std::vector<Perm> parse_perm_list(const std::string& text, int order);

}  // namespace liemarkov
