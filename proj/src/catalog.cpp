#include "liemarkov/catalog.hpp"

#include <algorithm>

#include "liemarkov/closure.hpp"
#include "liemarkov/constructors.hpp"
#include "liemarkov/errors.hpp"
#include "liemarkov/linalg.hpp"
#include "liemarkov/representation.hpp"

namespace liemarkov {

namespace {

CayleyTable left_zero_table(int k) {
  std::vector<int> entries;
  for (int i = 0; i < k; ++i) entries.insert(entries.end(), static_cast<std::size_t>(k), i);
  return CayleyTable(k, std::move(entries));
}

KnownModelRegistry build_standard_registry() {
  KnownModelRegistry registry;
  registry.add("equal-input-2", rate_basis(regular_rep(left_zero_table(2))));
  registry.add("equal-input-3", rate_basis(regular_rep(left_zero_table(3))));
  registry.add("F81", rate_basis(regular_rep(left_zero_table(4))));
  registry.add("K3ST", group_based_model(klein_group()));
  registry.add("K2ST", equivariant_model(parse_perm_list("e,(1 2),(3 4),(1 2)(3 4),(1 3)(2 4),"
                                                         "(1 4)(2 3),(1 3 2 4),(1 4 2 3)",
                                                         4),
                                         4));
  // The usual multiplication table for this model is not associative,
  // so it is registered from its rate pattern.
  registry.add("Model-3.3b",
               pattern_model({"* a b c", "a * c b", "c b * a", "b c a *"}));
  registry.add("New-4.1",
               rate_basis(regular_rep(CayleyTable::from_rows(
                   {{0, 0, 2, 2}, {1, 1, 3, 3}, {2, 2, 0, 0}, {3, 3, 1, 1}}))));
  registry.add("binary-symmetric", group_based_model(cyclic_group(2)));
  registry.add("C3-group-based", group_based_model(cyclic_group(3)));
  return registry;
}

}  // namespace

const KnownModelRegistry& KnownModelRegistry::standard() {
  static const KnownModelRegistry registry = build_standard_registry();
  return registry;
}

void KnownModelRegistry::add(const std::string& name, const ModelSubspace& m) {
  SubspaceKey key = canonical_subspace(m);
  if (by_key_.contains(key)) {
    throw InvariantViolation("registry models '" + by_key_.at(key) + "' and '" + name +
                             "' coincide");
  }
  by_key_.emplace(std::move(key), name);
  by_name_.insert_or_assign(name, m);
}

std::optional<std::string> KnownModelRegistry::lookup(const SubspaceKey& key) const {
  const auto it = by_key_.find(key);
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

const ModelSubspace& KnownModelRegistry::model(const std::string& name) const {
  const auto it = by_name_.find(name);
  if (it == by_name_.end()) throw Error("no registered model named '" + name + "'");
  return it->second;
}

std::vector<std::string> KnownModelRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, m] : by_name_) out.push_back(name);
  return out;
}

void require_lie_closed(const ModelSubspace& m, const std::string& context) {
  const ExactClosure lie = check_lie_closed(m);
  if (!lie.closed) {
    throw InvariantViolation(context + ": semigroup-derived model is not Lie-closed ([L_" +
                             std::to_string(lie.witness->i) + ", L_" +
                             std::to_string(lie.witness->j) + "] leaves the span)");
  }
}

CatalogEntry make_entry(const ModelSubspace& representative, std::vector<CayleyTable> sources,
                        std::vector<int> source_ids) {
  CatalogEntry entry;
  const SubspaceKey key = canonical_subspace(representative);
  entry.model_id = model_id(key);
  entry.order = representative.order;
  entry.report = classify_model(representative, std::move(sources));
  entry.known_label = KnownModelRegistry::standard().lookup(key);
  entry.report.known_label = entry.known_label;
  entry.source_semigroup_ids = std::move(source_ids);
  return entry;
}

Catalog run_pipeline(const std::vector<CayleyTable>& tables) {
  Catalog catalog;
  if (tables.empty()) return catalog;
  catalog.order = tables.front().order();

  std::vector<ModelSubspace> models;
  models.reserve(tables.size());
  for (std::size_t n = 0; n < tables.size(); ++n) {
    const std::string where = "table " + std::to_string(n + 1);
    if (tables[n].order() != catalog.order) {
      throw OrderMismatch(where + " has order " + std::to_string(tables[n].order()) +
                          ", expected " + std::to_string(catalog.order));
    }
    if (!is_associative(tables[n])) throw MalformedTable(where + " is not associative");
    ModelSubspace m = rate_basis(regular_rep(tables[n]));
    require_lie_closed(m, where);
    models.push_back(std::move(m));
  }

  for (const ModelClass& cls : dedup_models(models)) {
    std::vector<CayleyTable> sources;
    std::vector<int> ids;
    for (std::size_t member : cls.members) {
      sources.push_back(tables[member]);
      ids.push_back(static_cast<int>(member) + 1);
    }
    catalog.entries.push_back(make_entry(models[cls.members.front()], std::move(sources),
                                         std::move(ids)));
  }

  catalog.stats.tables = static_cast<int>(tables.size());
  catalog.stats.models = static_cast<int>(models.size());
  catalog.stats.classes = static_cast<int>(catalog.entries.size());
  catalog.stats.irreducible_nonabsorbing = static_cast<int>(
      std::count_if(catalog.entries.begin(), catalog.entries.end(), [](const CatalogEntry& e) {
        return !e.report.reducible && e.report.absorbing_states.empty();
      }));
  return catalog;
}

Catalog run_pipeline(int order) {
  if (order < 2 || order > kMaxEnumerationOrder) {
    throw UnsupportedOrder("the enumeration pipeline supports orders 2.." +
                           std::to_string(kMaxEnumerationOrder) + ", got " +
                           std::to_string(order));
  }
  return run_pipeline(enumerate_semigroups(order));
}

std::vector<CommutatorRelation> commutator_table(const ModelSubspace& m) {
  std::vector<CommutatorRelation> table;
  for (std::size_t a = 0; a < m.basis.size(); ++a) {
    for (std::size_t b = a + 1; b < m.basis.size(); ++b) {
      const RatMatrix bracket = to_rational(IntMatrix(commutator(m.basis[a], m.basis[b])));
      auto coeffs = generator_coefficients(m, bracket);
      if (!coeffs) {
        throw InvariantViolation("[L_" + std::to_string(m.labels[a]) + ", L_" +
                                 std::to_string(m.labels[b]) + "] is not in the model span");
      }
      table.push_back({m.labels[a], m.labels[b], std::move(*coeffs)});
    }
  }
  return table;
}

std::string format_combination(const RatVector& coefficients, const std::vector<int>& labels) {
  const Rational kZero(0), kOne(1);
  std::string out;
  for (Eigen::Index n = 0; n < coefficients.size(); ++n) {
    const Rational c = coefficients(n);
    if (c == kZero) continue;
    const Rational magnitude = c < kZero ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != kOne) out += to_string(magnitude) + " ";
    out += "L_" + std::to_string(labels[static_cast<std::size_t>(n)]);
  }
  return out.empty() ? "0" : out;
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "md" || name == "markdown") return Format::markdown;
  throw Error("unknown output format '" + name + "' (expected json, csv or md)");
}

}  // namespace liemarkov
