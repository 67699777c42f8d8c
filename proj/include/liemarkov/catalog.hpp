#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liemarkov/cayley.hpp"
#include "liemarkov/modelgen.hpp"
#include "liemarkov/report.hpp"

namespace liemarkov {

struct CatalogEntry {
  std::string model_id;
  int order = 0;
  ModelReport report;
  std::vector<int> source_semigroup_ids;  // 1-based positions in the input list
  std::optional<std::string> known_label;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Canonical keys of the named models the catalog recognizes.
class KnownModelRegistry {
 public:
  /// The built-in registry: equal-input-2, equal-input-3, F81, K3ST, K2ST,
  /// Model-3.3b, New-4.1, binary-symmetric, C3-group-based.
  static const KnownModelRegistry& standard();

  /// Throws InvariantViolation if the key of `m` is already registered.
  void add(const std::string& name, const ModelSubspace& m);

  std::optional<std::string> lookup(const SubspaceKey& key) const;

  /// The registered model itself (in the labelling it was built with).
  const ModelSubspace& model(const std::string& name) const;

  std::vector<std::string> names() const;

 private:
  std::map<SubspaceKey, std::string> by_key_;
  std::map<std::string, ModelSubspace> by_name_;
};

struct PipelineStats {
  int tables = 0;
  int models = 0;             // derived subspaces, one per table
  int classes = 0;            // after dedup up to state permutation
  int irreducible_nonabsorbing = 0;
};

struct Catalog {
  int order = 0;
  std::vector<CatalogEntry> entries;
  PipelineStats stats;
};

/// Throws InvariantViolation when a semigroup-derived model is not
/// Lie-closed; `context` names the source in the message.
void require_lie_closed(const ModelSubspace& m, const std::string& context);

/// Builds a catalog entry for one model class.
CatalogEntry make_entry(const ModelSubspace& representative, std::vector<CayleyTable> sources,
                        std::vector<int> source_ids);

/// enumerate -> represent -> derive -> classify -> dedup -> label, for
/// 2 <= order <= 4.
Catalog run_pipeline(int order);

/// Same pipeline over caller-supplied tables (all of one order). Entries are
/// reported in the labelling of the first table of each class.
Catalog run_pipeline(const std::vector<CayleyTable>& tables);

/// Coefficients of [B_i, B_j] in the generator set, for i < j.
struct CommutatorRelation {
  int i = 0;  // generator labels, 1-based
  int j = 0;
  RatVector coefficients;  // one per basis element
};

/// Throws InvariantViolation when a bracket leaves the span.
std::vector<CommutatorRelation> commutator_table(const ModelSubspace& m);

/// "L_1 - L_2", "0", "2 L_3 + 1/2 L_4".
std::string format_combination(const RatVector& coefficients, const std::vector<int>& labels);

enum class Format { json, csv, markdown };

/// Throws Error for anything but "json", "csv", "md"/"markdown".
Format parse_format(const std::string& name);

nlohmann::ordered_json to_json(const Catalog& catalog);
/// Inverse of to_json for the entries; stats are not serialized.
Catalog catalog_from_json(const nlohmann::ordered_json& doc);

std::string render(const Catalog& catalog, Format format);

}  // namespace liemarkov
