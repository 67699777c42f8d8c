#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "liemarkov/perm.hpp"

namespace liemarkov {

/// Multiplication table of a finite magma on {0..k-1}: at(i, j) is the index
/// of the product a_i a_j. Entries are range-checked on construction;
/// associativity is not (see is_associative).
class CayleyTable {
 public:
  CayleyTable() = default;

  /// Row-major entries, 0-based. Throws MalformedTable on wrong size or an
  /// out-of-range entry.
  CayleyTable(int order, std::vector<int> entries);

  /// Nested rows, 0-based.
  static CayleyTable from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return order_; }
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i * order_ + j)]; }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
  friend auto operator<=>(const CayleyTable&, const CayleyTable&) = default;

 private:
  int order_ = 0;
  std::vector<int> entries_;
};

inline constexpr int kMaxEnumerationOrder = 4;

bool is_associative(const CayleyTable& t);

/// Relabels elements by p: result r satisfies r[p(i)][p(j)] = p(t[i][j]).
CayleyTable apply_perm(const CayleyTable& t, const Perm& p);

/// The anti-isomorphic copy, r[i][j] = t[j][i].
CayleyTable reverse(const CayleyTable& t);

/// Lexicographically smallest relabeling of t (row-major comparison).
CayleyTable canonical_form(const CayleyTable& t);

/// One canonical representative per isomorphism class of semigroups of the
/// given order, sorted. Anti-isomorphic classes are kept apart.
/// Throws UnsupportedOrder unless 1 <= order <= kMaxEnumerationOrder.
std::vector<CayleyTable> enumerate_semigroups(int order);

struct AntiIsoCensus {
  int self_dual = 0;
  int pairs = 0;
};

/// Splits canonical class representatives into self-dual classes and
/// {class, reversed class} pairs.
AntiIsoCensus anti_iso_census(const std::vector<CayleyTable>& tables);

/// Reads blocks of k lines of k whitespace-separated 1-based entries,
/// separated by blank lines; '#' starts a comment line. Throws ParseError
/// naming the block and line of the first problem.
std::vector<CayleyTable> read_tables(std::istream& in);
std::vector<CayleyTable> read_tables_file(const std::string& path);

/// Writes tables in the format accepted by read_tables.
void write_tables(std::ostream& out, const std::vector<CayleyTable>& tables);
std::string format_table(const CayleyTable& t);

}  // namespace liemarkov
