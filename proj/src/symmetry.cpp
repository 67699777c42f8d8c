#include "liemarkov/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace liemarkov {

IntMatrix perm_matrix(const Perm& p) {
  IntMatrix k = IntMatrix::Zero(p.order(), p.order());
  for (int j = 0; j < p.order(); ++j) k(p(j), j) = 1;
  return k;
}

SymmetryGroup symmetry_group(const ModelSubspace& m) {
  SymmetryGroup g{m.order, {}, {}};
  for (const Perm& p : Perm::all(m.order)) {
    const bool preserved = std::all_of(m.basis.begin(), m.basis.end(), [&](const IntMatrix& b) {
      return contains(m, conjugate(b, p)).has_value();
    });
    if (preserved) g.elements.push_back(p);
  }
  g.name = name_group(g.elements);
  return g;
}

long variant_count(const SymmetryGroup& g) {
  long factorial = 1;
  for (int n = 2; n <= g.order_k; ++n) factorial *= n;
  return factorial / static_cast<long>(g.elements.size());
}

bool is_closed_group(const std::vector<Perm>& elements) {
  if (elements.empty()) return false;
  const std::set<Perm> set(elements.begin(), elements.end());
  if (!set.contains(Perm(elements.front().order()))) return false;
  for (const Perm& a : set) {
    for (const Perm& b : set) {
      if (!set.contains(a * b)) return false;
    }
  }
  return true;
}

std::vector<Perm> generated_group(const std::vector<Perm>& generators, int order) {
  std::set<Perm> group{Perm(order)};
  std::vector<Perm> frontier{Perm(order)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& a : frontier) {
      for (const Perm& g : generators) {
        if (group.insert(g * a).second) next.push_back(g * a);
      }
    }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

std::string name_group(const std::vector<Perm>& elements) {
  std::map<int, int> by_order;
  for (const Perm& p : elements) ++by_order[p.element_order()];
  const auto n = elements.size();
  switch (n) {
    case 1:
      return "trivial";
    case 2:
      return "Z2";
    case 3:
      return "Z3";
    case 4:
      return by_order[4] > 0 ? "Z4" : "V4";
    case 6:
      if (by_order[3] == 2 && by_order[2] == 3) return "S3";
      break;
    case 8:
      if (by_order[4] == 2 && by_order[2] == 5) return "D4";
      break;
    case 12:
      if (by_order[3] == 8 && by_order[2] == 3) return "A4";
      break;
    case 24:
      if (elements.front().order() == 4) return "S4";
      break;
    default:
      break;
  }
  return "order-" + std::to_string(n) + " subgroup";
}

}  // namespace liemarkov
