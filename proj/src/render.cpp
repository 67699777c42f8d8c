#include <iomanip>
#include <sstream>

#include "liemarkov/catalog.hpp"
#include "liemarkov/errors.hpp"

namespace liemarkov {

using nlohmann::ordered_json;

namespace {

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(std::to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const ordered_json& rows, int k) {
  IntMatrix m(k, k);
  if (!rows.is_array() || static_cast<int>(rows.size()) != k) throw ParseError("bad generator matrix");
  for (int i = 0; i < k; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != k) throw ParseError("bad generator row");
    for (int j = 0; j < k; ++j) {
      const Rational v = parse_rational(row[static_cast<std::size_t>(j)].get<std::string>());
      if (v.denominator() != 1) throw ParseError("generators must have integer entries");
      m(i, j) = v.numerator();
    }
  }
  return m;
}

ordered_json table_json(const CayleyTable& t) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < t.order(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < t.order(); ++j) row.push_back(t.at(i, j) + 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

CayleyTable table_from_json(const ordered_json& rows) {
  std::vector<std::vector<int>> parsed;
  for (const auto& row : rows) {
    std::vector<int> r;
    for (const auto& v : row) r.push_back(v.get<int>() - 1);
    parsed.push_back(std::move(r));
  }
  return CayleyTable::from_rows(parsed);
}

ordered_json entry_json(const CatalogEntry& e) {
  const ModelReport& r = e.report;
  ordered_json j;
  j["model_id"] = e.model_id;
  j["dimension"] = r.dimension;
  j["reducible"] = r.reducible;
  ordered_json absorbing = ordered_json::array();
  for (int s : r.absorbing_states) absorbing.push_back(s + 1);
  j["absorbing_states"] = std::move(absorbing);
  ordered_json elements = ordered_json::array();
  for (const Perm& p : r.symmetry.elements) elements.push_back(p.to_cycles());
  j["symmetry"] = {{"order", r.symmetry.size()},
                   {"name", r.symmetry.name},
                   {"elements", std::move(elements)}};
  j["variant_count"] = r.variant_count;
  j["lie_closed"] = r.lie_closed;
  j["algebra_closed"] = r.matrix_algebra_closed;
  j["known_label"] = e.known_label ? ordered_json(*e.known_label) : ordered_json(nullptr);
  j["generator_labels"] = r.subspace.labels;
  ordered_json generators = ordered_json::array();
  for (const IntMatrix& b : r.subspace.basis) generators.push_back(matrix_json(b));
  j["generators"] = std::move(generators);
  j["dropped_generators"] = r.subspace.dropped;
  j["source_ids"] = e.source_semigroup_ids;
  ordered_json sources = ordered_json::array();
  for (const CayleyTable& t : r.provenance) sources.push_back(table_json(t));
  j["sources"] = std::move(sources);
  return j;
}

}  // namespace

ordered_json to_json(const Catalog& catalog) {
  ordered_json doc;
  doc["order"] = catalog.order;
  doc["entries"] = ordered_json::array();
  for (const CatalogEntry& e : catalog.entries) doc["entries"].push_back(entry_json(e));
  return doc;
}

Catalog catalog_from_json(const ordered_json& doc) {
  Catalog catalog;
  try {
    catalog.order = doc.at("order").get<int>();
    for (const auto& j : doc.at("entries")) {
      CatalogEntry e;
      e.model_id = j.at("model_id").get<std::string>();
      e.order = catalog.order;
      if (!j.at("known_label").is_null()) e.known_label = j.at("known_label").get<std::string>();
      e.source_semigroup_ids = j.at("source_ids").get<std::vector<int>>();

      std::vector<IntMatrix> generators;
      for (const auto& g : j.at("generators")) generators.push_back(matrix_from_json(g, catalog.order));
      ModelReport& r = e.report;
      r.subspace = make_subspace(catalog.order, generators,
                                 j.at("generator_labels").get<std::vector<int>>());
      r.subspace.dropped = j.at("dropped_generators").get<int>();
      r.dimension = j.at("dimension").get<int>();
      r.reducible = j.at("reducible").get<bool>();
      for (int s : j.at("absorbing_states")) r.absorbing_states.push_back(s - 1);
      const auto& sym = j.at("symmetry");
      r.symmetry.order_k = catalog.order;
      r.symmetry.name = sym.at("name").get<std::string>();
      for (const auto& c : sym.at("elements")) {
        r.symmetry.elements.push_back(Perm::from_cycles(c.get<std::string>(), catalog.order));
      }
      r.variant_count = j.at("variant_count").get<long>();
      r.lie_closed = j.at("lie_closed").get<bool>();
      r.matrix_algebra_closed = j.at("algebra_closed").get<bool>();
      r.known_label = e.known_label;
      for (const auto& t : j.at("sources")) r.provenance.push_back(table_from_json(t));
      catalog.entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed catalog JSON: ") + ex.what());
  }
  return catalog;
}

namespace {

std::string join_states(const std::vector<int>& states, const char* sep) {
  std::string out;
  for (std::size_t n = 0; n < states.size(); ++n) {
    if (n > 0) out += sep;
    out += std::to_string(states[n] + 1);
  }
  return out;
}

std::string render_csv(const Catalog& catalog) {
  std::ostringstream out;
  out << "model_id,order,dimension,reducible,absorbing_states,symmetry_order,symmetry_name,"
         "variant_count,lie_closed,algebra_closed,known_label,source_count\n";
  for (const CatalogEntry& e : catalog.entries) {
    const ModelReport& r = e.report;
    out << e.model_id << ',' << e.order << ',' << r.dimension << ','
        << (r.reducible ? "true" : "false") << ',' << join_states(r.absorbing_states, ";") << ','
        << r.symmetry.size() << ',' << r.symmetry.name << ',' << r.variant_count << ','
        << (r.lie_closed ? "true" : "false") << ',' << (r.matrix_algebra_closed ? "true" : "false")
        << ',' << e.known_label.value_or("") << ',' << r.provenance.size() << '\n';
  }
  return out.str();
}

void markdown_table(std::ostream& out, const CayleyTable& t) {
  out << "|   |";
  for (int j = 0; j < t.order(); ++j) out << " a" << j + 1 << " |";
  out << "\n|---|";
  for (int j = 0; j < t.order(); ++j) out << "---|";
  out << '\n';
  for (int i = 0; i < t.order(); ++i) {
    out << "| a" << i + 1 << " |";
    for (int j = 0; j < t.order(); ++j) out << " a" << t.at(i, j) + 1 << " |";
    out << '\n';
  }
}

void markdown_matrix(std::ostream& out, const IntMatrix& m) {
  out << "```\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << std::setw(3) << m(i, j);
    out << '\n';
  }
  out << "```\n";
}

std::string render_markdown(const Catalog& catalog) {
  std::ostringstream out;
  out << "# Semigroup-based models on " << catalog.order << " states\n\n"
      << catalog.entries.size() << " model classes.\n";
  for (const CatalogEntry& e : catalog.entries) {
    const ModelReport& r = e.report;
    out << "\n## Model " << e.model_id;
    if (e.known_label) out << " (" << *e.known_label << ")";
    out << "\n\n"
        << "| property | value |\n|---|---|\n"
        << "| dimension | " << r.dimension << " |\n"
        << "| reducible | " << (r.reducible ? "yes" : "no") << " |\n"
        << "| absorbing states | "
        << (r.absorbing_states.empty() ? "none" : join_states(r.absorbing_states, ", ")) << " |\n"
        << "| symmetry | " << r.symmetry.name << " (order " << r.symmetry.size() << ") |\n"
        << "| variants | " << r.variant_count << " |\n"
        << "| Lie algebra | " << (r.lie_closed ? "yes" : "no") << " |\n"
        << "| matrix algebra | " << (r.matrix_algebra_closed ? "yes" : "no") << " |\n";

    if (!r.provenance.empty()) {
      out << "\n### Source semigroups\n";
      for (std::size_t n = 0; n < r.provenance.size(); ++n) {
        out << "\nSemigroup " << e.source_semigroup_ids[n] << ":\n\n";
        markdown_table(out, r.provenance[n]);
      }
    }

    out << "\n### Generators\n";
    if (r.subspace.basis.empty()) out << "\nAll rate matrices are zero.\n";
    for (std::size_t n = 0; n < r.subspace.basis.size(); ++n) {
      out << "\nL_" << r.subspace.labels[n] << " =\n";
      markdown_matrix(out, r.subspace.basis[n]);
    }

    if (r.lie_closed) {
      const auto relations = commutator_table(r.subspace);
      if (!relations.empty()) {
        out << "\n### Commutators\n\n";
        for (const CommutatorRelation& rel : relations) {
          out << "- [L_" << rel.i << ", L_" << rel.j
              << "] = " << format_combination(rel.coefficients, r.subspace.labels) << '\n';
        }
      }
    }

    out << "\n### Symmetry group\n\n" << r.symmetry.name << " = {";
    for (std::size_t n = 0; n < r.symmetry.elements.size(); ++n) {
      out << (n ? ", " : "") << r.symmetry.elements[n].to_cycles();
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace

std::string render(const Catalog& catalog, Format format) {
  switch (format) {
    case Format::json:
      return to_json(catalog).dump(2) + "\n";
    case Format::csv:
      return render_csv(catalog);
    case Format::markdown:
      return render_markdown(catalog);
  }
  throw Error("unknown output format");
}

}  // namespace liemarkov
