// Command-line front end: enumerate semigroups, derive and classify
// semigroup-based Markov models, verify closure, and build reference models.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liemarkov/catalog.hpp"
#include "liemarkov/closure.hpp"
#include "liemarkov/constructors.hpp"
#include "liemarkov/symmetry.hpp"
#include "liemarkov/errors.hpp"

namespace {

using namespace liemarkov;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

struct Settings {
  double tolerance = 1e-6;
  int trials = 100;
  std::uint64_t seed = 0;
  std::string output_dir;
};

Settings load_settings(const std::string& path) {
  Settings s;
  if (path.empty()) return s;
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("config file " + path + ": " + e.what());
  }
  s.tolerance = j.value("tolerance", s.tolerance);
  s.trials = j.value("trials", s.trials);
  s.seed = j.value("seed", s.seed);
  s.output_dir = j.value("output_dir", s.output_dir);
  return s;
}

void emit(const std::string& text, const std::string& out, const Settings& settings) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path path(out);
  if (path.is_relative() && !settings.output_dir.empty()) {
    std::filesystem::create_directories(settings.output_dir);
    path = std::filesystem::path(settings.output_dir) / path;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write " + path.string());
  file << text;
}

void log_stats(const Catalog& c) {
  std::cerr << "[derive] order=" << c.order << " tables=" << c.stats.tables
            << " models=" << c.stats.models << " classes=" << c.stats.classes
            << " irreducible_nonabsorbing=" << c.stats.irreducible_nonabsorbing << '\n';
}

Catalog single_entry_catalog(const ModelSubspace& m) {
  Catalog c;
  c.order = m.order;
  c.entries.push_back(make_entry(m, {}, {}));
  c.stats = {0, 1, 1, 0};
  return c;
}

std::optional<CatalogEntry> find_entry(const std::string& id, std::optional<int> order) {
  for (int k = 2; k <= kMaxEnumerationOrder; ++k) {
    if (order && *order != k) continue;
    for (CatalogEntry& e : run_pipeline(k).entries) {
      if (e.model_id == id) return std::move(e);
    }
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semigroup-based Lie-Markov models: enumeration, derivation and classification"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config: tolerance, trials, seed, output_dir");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List semigroups up to isomorphism");
  int enum_order = 0;
  std::string enum_out;
  enumerate->add_option("--order", enum_order, "Semigroup order (1-4)")->required();
  enumerate->add_option("--out", enum_out, "Output file (default stdout)");

  // derive
  auto* derive = app.add_subcommand("derive", "Derive and classify the models of order k");
  int derive_order = 0;
  std::string derive_tables, derive_out, derive_format = "json";
  derive->add_option("--order", derive_order, "Number of states (2-4)");
  derive->add_option("--tables", derive_tables, "Read Cayley tables from FILE instead of enumerating");
  derive->add_option("--out", derive_out, "Output file (default stdout)");
  derive->add_option("--format", derive_format, "json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md", "markdown"}));

  // classify
  auto* classify = app.add_subcommand("classify", "Report a catalog entry by model id");
  std::string classify_id, classify_format = "json";
  std::optional<int> classify_order;
  classify->add_option("--model-id", classify_id, "Model id from a derive run")->required();
  classify->add_option("--order", classify_order, "Restrict the search to one order");
  classify->add_option("--format", classify_format, "json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md", "markdown"}));

  // verify-closure
  auto* verify = app.add_subcommand("verify-closure", "Numerically test multiplicative closure");
  std::optional<int> verify_order;
  std::string verify_id, verify_fixture;
  std::optional<int> verify_trials;
  std::optional<double> verify_tol;
  std::optional<std::uint64_t> verify_seed;
  verify->add_option("--order", verify_order, "Order of the catalog to search");
  auto* id_opt = verify->add_option("--model-id", verify_id, "Catalog model id");
  auto* fixture_opt = verify->add_option("--fixture", verify_fixture, "Named fixture (GM2, JJ3, SYM)");
  id_opt->excludes(fixture_opt);
  verify->add_option("--trials", verify_trials, "Number of random trials");
  verify->add_option("--tol", verify_tol, "Residual tolerance");
  verify->add_option("--seed", verify_seed, "Random seed");

  // construct
  auto* construct = app.add_subcommand("construct", "Build group-based, equivariant or fixture models");
  construct->require_subcommand(1);
  auto* group_based = construct->add_subcommand("group-based", "Model of a group's regular representation");
  std::string group_table;
  group_based->add_option("--table", group_table, "Cayley table file of a group")->required();
  auto* equivariant = construct->add_subcommand("equivariant", "Model fixed by a permutation group");
  std::string perms_text;
  int equivariant_order = 0;
  equivariant->add_option("--perms", perms_text, "Comma-separated cycle notation")->required();
  equivariant->add_option("--order", equivariant_order, "Number of states")->required();
  auto* fixture_cmd = construct->add_subcommand("fixture", "Named reference model");
  std::string fixture_name;
  fixture_cmd->add_option("--name", fixture_name, "GM2, JJ3 or SYM")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Settings settings = load_settings(config_path);

    if (*enumerate) {
      const auto tables = enumerate_semigroups(enum_order);
      const AntiIsoCensus census = anti_iso_census(tables);
      std::cerr << "[enumerate] order=" << enum_order << " classes=" << tables.size()
                << " self_dual=" << census.self_dual << " anti_iso_pairs=" << census.pairs << '\n';
      std::ostringstream out;
      out << "# " << tables.size() << " semigroups of order " << enum_order
          << " up to isomorphism\n";
      write_tables(out, tables);
      emit(out.str(), enum_out, settings);
    } else if (*derive) {
      Catalog catalog;
      if (!derive_tables.empty()) {
        catalog = run_pipeline(read_tables_file(derive_tables));
        if (derive_order != 0 && catalog.order != derive_order) {
          throw OrderMismatch("--order does not match the tables file");
        }
      } else {
        if (derive_order == 0) throw UnsupportedOrder("derive needs --order or --tables");
        catalog = run_pipeline(derive_order);
      }
      log_stats(catalog);
      emit(render(catalog, parse_format(derive_format)), derive_out, settings);
    } else if (*classify) {
      auto entry = find_entry(classify_id, classify_order);
      if (!entry) throw Error("no model with id " + classify_id);
      Catalog c;
      c.order = entry->order;
      c.entries.push_back(std::move(*entry));
      std::cout << render(c, parse_format(classify_format));
    } else if (*verify) {
      ClosureOptions options;
      options.trials = verify_trials.value_or(settings.trials);
      options.tolerance = verify_tol.value_or(settings.tolerance);
      options.seed = verify_seed.value_or(settings.seed);
      ModelSubspace model;
      std::string name;
      if (!verify_fixture.empty()) {
        model = fixture(verify_fixture).subspace;
        name = verify_fixture;
      } else if (!verify_id.empty()) {
        auto entry = find_entry(verify_id, verify_order);
        if (!entry) throw Error("no model with id " + verify_id);
        model = entry->report.subspace;
        name = verify_id;
      } else {
        throw Error("verify-closure needs --model-id or --fixture");
      }
      const ClosureReport r = verify_multiplicative_closure(model, options);
      std::ostringstream residual;
      residual << std::scientific << std::setprecision(3) << r.max_residual;
      std::cout << to_string(r.status) << ' ' << name << " trials=" << r.numeric_trials
                << " max_residual=" << residual.str() << " tol=" << r.tolerance << '\n';
      ordered_json detail;
      detail["model"] = name;
      detail["status"] = to_string(r.status);
      detail["lie_closed"] = r.lie_closed;
      detail["algebra_closed"] = r.algebra_closed;
      if (r.lie_witness) detail["lie_witness"] = {r.lie_witness->i, r.lie_witness->j};
      if (r.algebra_witness) detail["algebra_witness"] = {r.algebra_witness->i, r.algebra_witness->j};
      detail["numeric_trials"] = r.numeric_trials;
      detail["discarded"] = r.discarded;
      detail["max_residual"] = r.max_residual;
      detail["tolerance"] = r.tolerance;
      detail["seed"] = options.seed;
      std::cout << detail.dump(2) << '\n';
    } else if (*construct) {
      ModelSubspace model;
      if (*group_based) {
        const auto tables = read_tables_file(group_table);
        if (tables.size() != 1) throw ParseError(group_table + ": expected exactly one table");
        model = group_based_model(GroupSpec(tables.front()));
      } else if (*equivariant) {
        model = equivariant_model(generated_group(parse_perm_list(perms_text, equivariant_order),
                                                  equivariant_order),
                                  equivariant_order);
      } else {
        model = fixture(fixture_name).subspace;
      }
      std::cout << render(single_entry_catalog(model), Format::json);
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
