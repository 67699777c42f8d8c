#include "liemarkov/constructors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "liemarkov/errors.hpp"
#include "liemarkov/symmetry.hpp"

namespace liemarkov {

GroupSpec::GroupSpec(CayleyTable table, std::vector<std::string> element_names)
    : table_(std::move(table)), names_(std::move(element_names)) {
  const int n = table_.order();
  if (!names_.empty() && static_cast<int>(names_.size()) != n) {
    throw NotAGroup("expected one name per group element");
  }
  if (!is_associative(table_)) throw NotAGroup("not a group: multiplication is not associative");

  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool two_sided = true;
    for (int x = 0; x < n; ++x) two_sided = two_sided && table_.at(e, x) == x && table_.at(x, e) == x;
    if (two_sided) identity_ = e;
  }
  if (identity_ < 0) throw NotAGroup("not a group: no two-sided identity element");

  inverses_.assign(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (table_.at(g, h) == identity_ && table_.at(h, g) == identity_) {
        inverses_[static_cast<std::size_t>(g)] = h;
        break;
      }
    }
    if (inverses_[static_cast<std::size_t>(g)] < 0) {
      throw NotAGroup("not a group: element " + std::to_string(g + 1) + " has no inverse");
    }
  }
}

bool GroupSpec::is_abelian() const { return table_ == reverse(table_); }

GroupSpec cyclic_group(int n) {
  std::vector<int> entries;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) entries.push_back((i + j) % n);
  }
  return GroupSpec(CayleyTable(n, std::move(entries)));
}

GroupSpec klein_group() {
  std::vector<int> entries;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) entries.push_back(i ^ j);
  }
  return GroupSpec(CayleyTable(4, std::move(entries)));
}

GroupSpec symmetric_group_s3() {
  const std::vector<Perm> elements = Perm::all(3);
  std::vector<int> entries;
  std::vector<std::string> names;
  for (const Perm& a : elements) {
    names.push_back(a.to_cycles());
    for (const Perm& b : elements) {
      const auto it = std::find(elements.begin(), elements.end(), a * b);
      entries.push_back(static_cast<int>(it - elements.begin()));
    }
  }
  return GroupSpec(CayleyTable(6, std::move(entries)), std::move(names));
}

ModelSubspace group_based_model(const GroupSpec& g) {
  const int n = g.order();
  const IntMatrix identity = IntMatrix::Identity(n, n);
  std::vector<IntMatrix> generators;
  for (int e = 0; e < n; ++e) {
    std::vector<int> left_translation(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) left_translation[static_cast<std::size_t>(x)] = g.multiply(e, x);
    generators.push_back(perm_matrix(Perm(std::move(left_translation))) - identity);
  }
  return make_subspace(n, generators);
}

RatMatrix abelian_rate_pattern(const GroupSpec& g, const std::vector<Rational>& rates) {
  if (!g.is_abelian()) throw NotAGroup("abelian_rate_pattern needs an abelian group");
  const int n = g.order();
  if (static_cast<int>(rates.size()) != n) throw OrderMismatch("one rate per group element required");
  RatMatrix q = RatMatrix::Constant(n, n, Rational(0));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (r != c) q(r, c) = rates[static_cast<std::size_t>(g.multiply(r, g.inverse(c)))];
    }
  }
  for (int c = 0; c < n; ++c) {
    Rational exit(0);
    for (int r = 0; r < n; ++r) exit += q(r, c);
    q(c, c) = -exit;
  }
  return q;
}

namespace {

IntMatrix indicator_generator(int order, const std::vector<std::pair<int, int>>& cells) {
  IntMatrix b = IntMatrix::Zero(order, order);
  for (auto [i, j] : cells) {
    b(i, j) += 1;
    b(j, j) -= 1;
  }
  return b;
}

}  // namespace

ModelSubspace equivariant_model(const std::vector<Perm>& group, int order) {
  for (const Perm& p : group) {
    if (p.order() != order) throw OrderMismatch("permutation degree differs from model order");
  }
  if (!is_closed_group(group)) {
    throw Error("equivariant_model: permutations are not closed under composition");
  }
  std::vector<bool> seen(static_cast<std::size_t>(order * order), false);
  std::vector<IntMatrix> generators;
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      if (i == j || seen[static_cast<std::size_t>(i * order + j)]) continue;
      std::vector<std::pair<int, int>> orbit;
      for (const Perm& p : group) {
        const int a = p(i);
        const int b = p(j);
        if (!seen[static_cast<std::size_t>(a * order + b)]) {
          seen[static_cast<std::size_t>(a * order + b)] = true;
          orbit.emplace_back(a, b);
        }
      }
      generators.push_back(indicator_generator(order, orbit));
    }
  }
  return make_subspace(order, generators);
}

ModelSubspace pattern_model(const std::vector<std::string>& rows) {
  const int k = static_cast<int>(rows.size());
  std::vector<std::string> names;
  std::map<std::string, std::vector<std::pair<int, int>>> cells;
  for (int i = 0; i < k; ++i) {
    std::istringstream in(rows[static_cast<std::size_t>(i)]);
    std::string token;
    int j = 0;
    while (in >> token) {
      if (j >= k) throw ParseError("pattern row " + std::to_string(i + 1) + " is too long");
      if (i == j) {
        if (token != "*") throw ParseError("pattern diagonal must be '*'");
      } else if (token != "0") {
        if (!cells.contains(token)) names.push_back(token);
        cells[token].emplace_back(i, j);
      }
      ++j;
    }
    if (j != k) throw ParseError("pattern row " + std::to_string(i + 1) + " is too short");
  }
  std::vector<IntMatrix> generators;
  for (const auto& name : names) generators.push_back(indicator_generator(k, cells[name]));
  return make_subspace(k, generators);
}

namespace {

IntMatrix int_matrix(int k, std::initializer_list<std::int64_t> values) {
  IntMatrix m(k, k);
  auto it = values.begin();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m(i, j) = *it++;
  }
  return m;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"GM2", "JJ3", "SYM"}; }

FixtureModel fixture(const std::string& name) {
  if (name == "SYM") {
    return {name,
            pattern_model({"* s1 s2 s3", "s1 * s4 s5", "s2 s4 * s6", "s3 s5 s6 *"}), true};
  }
  if (name == "GM2") {
    return {name, make_subspace(2, {int_matrix(2, {-1, 0, 1, 0}), int_matrix(2, {0, 1, 0, -1})}),
            true};
  }
  if (name == "JJ3") {
    return {name,
            make_subspace(3, {int_matrix(3, {-2, 0, 0, 2, -1, 0, 0, 1, 0}),
                              int_matrix(3, {0, 1, 0, 0, -1, 2, 0, 0, -2})}),
            true};
  }
  throw Error("unknown fixture '" + name + "' (known: GM2, JJ3, SYM)");
}

}  // namespace liemarkov
