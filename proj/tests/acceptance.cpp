// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance          run every criterion
//   acceptance N ...    run the listed criteria only
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "liemarkov/catalog.hpp"
#include "liemarkov/closure.hpp"
#include "liemarkov/constructors.hpp"
#include "liemarkov/errors.hpp"
#include "liemarkov/linalg.hpp"
#include "liemarkov/symmetry.hpp"

using namespace liemarkov;

namespace {

// Tolerances and trial counts.
constexpr double kEnumerationSeconds = 60.0;
constexpr int kClosureTrials = 100;
constexpr double kClosureTolerance = 1e-6;
constexpr std::uint64_t kClosureSeed = 20240601;
constexpr double kSymFailResidual = 1e-3;
constexpr int kRoundTripSamples = 1000;
constexpr double kRoundTripTolerance = 1e-8;
constexpr double kColumnSumTolerance = 1e-12;
constexpr std::uint64_t kRoundTripSeed = 7;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

const Catalog& catalog(int k) {
  static std::map<int, Catalog> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, run_pipeline(k)).first;
  return it->second;
}

CayleyTable rows(const std::vector<std::vector<int>>& r) { return CayleyTable::from_rows(r); }

IntMatrix square(int k, std::initializer_list<std::int64_t> values) {
  IntMatrix m(k, k);
  auto it = values.begin();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = *it++;
  return m;
}

const CatalogEntry* labelled(const Catalog& c, const std::string& label) {
  for (const CatalogEntry& e : c.entries)
    if (e.known_label == label) return &e;
  return nullptr;
}

// Distinct nonzero generator sets up to state relabelling. Reported next to
// the span-based class count.
int generator_set_classes(const std::vector<CayleyTable>& tables, bool drop_trivial) {
  std::set<std::vector<std::vector<std::int64_t>>> seen;
  const int k = tables.front().order();
  const auto perms = Perm::all(k);
  for (const CayleyTable& t : tables) {
    const ModelSubspace m = rate_basis(regular_rep(t));
    if (drop_trivial && m.dim == 0) continue;
    std::vector<std::vector<std::int64_t>> best;
    for (const Perm& p : perms) {
      std::vector<std::vector<std::int64_t>> gens;
      for (const IntMatrix& b : m.basis) {
        const IntMatrix c = conjugate(b, p);
        gens.emplace_back(c.data(), c.data() + c.size());
      }
      std::sort(gens.begin(), gens.end());
      if (best.empty() || gens < best) best = gens;
    }
    seen.insert(best);
  }
  return static_cast<int>(seen.size());
}

Outcome criterion1() {
  Outcome o;
  const std::vector<std::size_t> expected{1, 5, 24, 188};
  for (int k = 1; k <= 4; ++k) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = enumerate_semigroups(k).size();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream s;
    s << "k=" << k << " classes=" << n << " (" << seconds << " s)";
    o.note(s.str());
    o.expect(n == expected[static_cast<std::size_t>(k - 1)], "count at k=" + std::to_string(k));
    o.expect(seconds < kEnumerationSeconds, "runtime at k=" + std::to_string(k));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Catalog& c = catalog(4);
  std::vector<const CatalogEntry*> picked;
  for (const CatalogEntry& e : c.entries)
    if (!e.report.reducible && e.report.absorbing_states.empty()) picked.push_back(&e);

  o.note("tables=" + std::to_string(c.stats.tables) + " classes=" + std::to_string(c.entries.size()) +
         " irreducible_nonabsorbing=" + std::to_string(picked.size()));
  o.expect(c.entries.size() == 131, "131 model classes (got " + std::to_string(c.entries.size()) + ")");
  o.expect(picked.size() == 4, "4 non-reducible, non-absorbing classes");

  const KnownModelRegistry& reg = KnownModelRegistry::standard();
  std::set<std::string> labels;
  for (const CatalogEntry* e : picked) {
    const std::string label = e->known_label.value_or("?");
    labels.insert(label);
    if (label != "?") o.expect(e->report.subspace.same_span(reg.model(label)) ||
                                   canonical_subspace(e->report.subspace) ==
                                       canonical_subspace(reg.model(label)),
                               "fingerprint of " + label);
  }
  o.expect(labels == std::set<std::string>{"F81", "K3ST", "Model-3.3b", "New-4.1"},
           "labels F81, K3ST, Model-3.3b, New-4.1");

  const auto tables = enumerate_semigroups(4);
  o.note("for comparison: distinct generator sets up to relabelling=" +
         std::to_string(generator_set_classes(tables, false)) +
         ", excluding the zero model=" + std::to_string(generator_set_classes(tables, true)));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Catalog& c = catalog(3);
  std::set<std::string> labels;
  int non_reducible = 0;
  for (const CatalogEntry& e : c.entries) {
    if (e.report.reducible) continue;
    ++non_reducible;
    labels.insert(e.known_label.value_or("?"));
  }
  o.note("classes=" + std::to_string(c.entries.size()) + " non_reducible=" + std::to_string(non_reducible));
  o.expect(non_reducible == 2, "exactly 2 non-reducible classes");
  o.expect(labels == std::set<std::string>{"equal-input-3", "C3-group-based"}, "labels equal-input-3, C3-group-based");

  const Catalog ex = run_pipeline(std::vector<CayleyTable>{rows({{0, 0, 2}, {1, 1, 2}, {2, 2, 2}})});
  const ModelReport& r = ex.entries.at(0).report;
  o.expect(r.reducible, "Example 3 reducible");
  o.expect(r.absorbing_states == std::vector<int>{2}, "Example 3 absorbing state 3");
  o.expect(r.symmetry.elements == std::vector<Perm>{Perm(3), Perm::from_cycles("(1 2)", 3)},
           "Example 3 symmetry {e,(12)}");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const std::vector<CayleyTable> five{rows({{0, 0}, {0, 0}}), rows({{0, 0}, {0, 1}}), rows({{0, 0}, {1, 1}}),
                                      rows({{0, 1}, {0, 1}}), rows({{0, 1}, {1, 0}})};
  const Catalog c = run_pipeline(five);
  o.expect(c.entries.size() == 4, "four model outcomes");
  o.expect(catalog(2).entries.size() == 4, "enumerated k=2 catalog has four classes");
  std::map<int, const CatalogEntry*> of;
  for (const CatalogEntry& e : c.entries)
    for (int id : e.source_semigroup_ids) of[id] = &e;
  o.expect(of.size() == 5, "every semigroup placed");
  if (of.size() != 5) return o;
  o.expect(of[1] == of[2], "Semigroups 1 and 2 deduplicated together");
  o.expect(of[1]->report.dimension == 1 && of[1]->report.absorbing_states.size() == 1,
           "Semigroups 1, 2 give the absorbing 1-dim model");
  o.expect(of[3]->report.dimension == 2 && of[3]->report.symmetry.size() == 2,
           "Semigroup 3 gives the 2-dim model with full S2 symmetry");
  o.expect(of[4]->report.dimension == 0, "Semigroup 4 gives dim 0");
  o.expect(of[5]->known_label == "binary-symmetric", "Semigroup 5 gives binary symmetric");
  std::set<const CatalogEntry*> distinct{of[1], of[3], of[4], of[5]};
  o.expect(distinct.size() == 4, "outcomes pairwise distinct");
  return o;
}

Outcome criterion5() {
  Outcome o;
  int checked = 0, closed = 0;
  for (int k = 2; k <= 4; ++k) {
    for (const CayleyTable& t : enumerate_semigroups(k)) {
      ++checked;
      closed += check_lie_closed(rate_basis(regular_rep(t))).closed;
    }
  }
  o.note("semigroup-derived models checked=" + std::to_string(checked) + " lie_closed=" + std::to_string(closed));
  o.expect(checked == closed, "every semigroup-derived model Lie-closed");
  bool aborts = false;
  try {
    require_lie_closed(fixture("SYM").subspace, "SYM");
  } catch (const InvariantViolation&) {
    aborts = true;
  }
  o.expect(aborts, "pipeline assertion raises the invariant-violation error (CLI exit code 2)");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const ExactClosure sym = check_lie_closed(fixture("SYM").subspace);
  o.expect(!sym.closed, "SYM not Lie-closed");
  o.expect(sym.witness && !sym.witness->matrix.isZero() &&
               IntMatrix(sym.witness->matrix.transpose()) == IntMatrix(-sym.witness->matrix),
           "SYM witness antisymmetric");

  const ModelSubspace jj3 = fixture("JJ3").subspace;
  o.expect(check_lie_closed(jj3).closed, "JJ3 Lie-closed");
  const ExactClosure alg = check_algebra_closed(jj3);
  o.expect(!alg.closed, "JJ3 not a matrix algebra");
  o.expect(alg.witness && alg.witness->i == 1 && alg.witness->j == 2, "JJ3 witness is L'1 L'2");
  o.expect(alg.witness && alg.witness->matrix == square(3, {0, -2, 0, 0, 3, -2, 0, -1, 2}),
           "JJ3 witness equals the displayed product");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const Catalog& c = catalog(4);
  struct Want {
    const char* label;
    std::size_t order;
    const char* name;
    long variants;
  };
  for (const Want& w : {Want{"F81", 24, "S4", 1}, Want{"Model-3.3b", 8, "D4", 3}, Want{"New-4.1", 4, "V4", 6}}) {
    const CatalogEntry* e = labelled(c, w.label);
    o.expect(e != nullptr, std::string(w.label) + " present");
    if (!e) continue;
    const SymmetryGroup& g = e->report.symmetry;
    o.note(std::string(w.label) + ": " + g.name + " order " + std::to_string(g.size()) + ", variants " +
           std::to_string(e->report.variant_count));
    o.expect(g.size() == w.order && g.name == w.name && e->report.variant_count == w.variants,
             std::string(w.label) + " symmetry");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const KnownModelRegistry& reg = KnownModelRegistry::standard();
  o.expect(group_based_model(cyclic_group(2)).same_span(reg.model("binary-symmetric")), "C2 = binary symmetric");
  o.expect(group_based_model(klein_group()).same_span(reg.model("K3ST")), "V4 = K3ST");

  const GroupSpec s3 = symmetric_group_s3();
  const ModelSubspace m = group_based_model(s3);
  o.expect(m.dim == 5, "S3 model dim 5");
  std::vector<IntMatrix> l(6, IntMatrix::Zero(6, 6));
  for (std::size_t n = 0; n < m.basis.size(); ++n) l[static_cast<std::size_t>(m.labels[n] - 1)] = m.basis[n];
  int pairs = 0, holding = 0;
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      if (a == s3.identity() || b == s3.identity()) continue;
      ++pairs;
      holding += commutator(l[static_cast<std::size_t>(a)], l[static_cast<std::size_t>(b)]) ==
                 IntMatrix(l[static_cast<std::size_t>(s3.multiply(a, b))] -
                           l[static_cast<std::size_t>(s3.multiply(b, a))]);
    }
  }
  o.note("S3 bracket relation holds for " + std::to_string(holding) + " of " + std::to_string(pairs) + " pairs");
  o.expect(pairs == 25 && holding == 25, "S3 bracket relation on 25 pairs");

  const auto d4 = parse_perm_list("e,(1 2),(3 4),(1 2)(3 4),(1 3)(2 4),(1 4)(2 3),(1 3 2 4),(1 4 2 3)", 4);
  const ModelSubspace k2st = equivariant_model(d4, 4);
  o.expect(k2st.dim == 2 && k2st.same_span(reg.model("K2ST")), "equivariant D4 = K2ST");

  const std::vector<std::pair<std::string, GroupSpec>> groups{
      {"C2", cyclic_group(2)}, {"C3", cyclic_group(3)}, {"C4", cyclic_group(4)}, {"V4", klein_group()}, {"S3", s3}};
  for (const auto& [name, g] : groups) {
    const ModelSubspace direct = group_based_model(g);
    const ModelSubspace via = rate_basis(regular_rep(g.table()));
    o.expect(direct.basis == via.basis && direct.rref == via.rref, name + " group-based = semigroup pipeline");
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  ClosureOptions options;
  options.trials = kClosureTrials;
  options.tolerance = kClosureTolerance;
  options.seed = kClosureSeed;

  std::vector<std::pair<std::string, ModelSubspace>> passing;
  for (const char* label : {"F81", "K3ST", "Model-3.3b", "New-4.1"}) {
    const CatalogEntry* e = labelled(catalog(4), label);
    o.expect(e != nullptr, std::string(label) + " present");
    if (e) passing.emplace_back(label, e->report.subspace);
  }
  const KnownModelRegistry& reg = KnownModelRegistry::standard();
  passing.emplace_back("equal-input-2", reg.model("equal-input-2"));
  passing.emplace_back("equal-input-3", reg.model("equal-input-3"));
  passing.emplace_back("equal-input-4", reg.model("F81"));

  for (const auto& [name, m] : passing) {
    const ClosureReport r = verify_multiplicative_closure(m, options);
    std::ostringstream s;
    s << name << ": " << to_string(r.status) << " max_residual=" << r.max_residual
      << " trials=" << r.numeric_trials;
    o.note(s.str());
    o.expect(r.status == ClosureStatus::pass, name + " passes");
  }
  const ClosureReport sym = verify_multiplicative_closure(fixture("SYM").subspace, options);
  std::ostringstream s;
  s << "SYM: " << to_string(sym.status) << " max_residual=" << sym.max_residual;
  o.note(s.str());
  o.expect(sym.status == ClosureStatus::fail && sym.max_residual > kSymFailResidual, "SYM fails with residual > 1e-3");
  return o;
}

Outcome criterion10() {
  Outcome o;
  // Cone samples: nonnegative combinations of semigroup generators, drawn
  // across every model class at k = 2, 3, 4.
  std::vector<const ModelSubspace*> models;
  for (int k = 2; k <= 4; ++k)
    for (const CatalogEntry& e : catalog(k).entries)
      if (e.report.subspace.dim > 0) models.push_back(&e.report.subspace);

  std::mt19937_64 rng(kRoundTripSeed);
  std::uniform_int_distribution<std::size_t> pick(0, models.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto open_unit = [&] { return 1.0 - unit(rng); };  // (0, 1]

  double worst_log = 0.0, worst_sum = 0.0;
  for (int sample = 0; sample < kRoundTripSamples; ++sample) {
    const ModelSubspace& m = *models[pick(rng)];
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(m.order, m.order);
    for (const IntMatrix& b : m.basis) q += open_unit() * to_double(b);
    const double t = open_unit();
    const Eigen::MatrixXd p = expm(q, t);
    worst_sum = std::max(worst_sum, (p.colwise().sum().array() - 1.0).abs().maxCoeff());
    worst_log = std::max(worst_log, (logm(p) - q * t).cwiseAbs().maxCoeff());
  }
  std::ostringstream s;
  s << "samples=" << kRoundTripSamples << " max |logm(expm(Qt)) - Qt|=" << worst_log
    << " max |column sum - 1|=" << worst_sum;
  o.note(s.str());
  o.expect(worst_log <= kRoundTripTolerance, "log round trip within 1e-8");
  o.expect(worst_sum <= kColumnSumTolerance, "column sums within 1e-12");
  return o;
}

Outcome criterion11() {
  Outcome o;
  const std::string first = render(run_pipeline(4), Format::json);
  const std::string second = render(run_pipeline(4), Format::json);
  o.note("catalog bytes=" + std::to_string(first.size()));
  o.expect(first == second, "byte-identical JSON");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "semigroup counts 1, 5, 24, 188", criterion1},
      {2, "k=4 funnel: 131 classes, 4 interesting models", criterion2},
      {3, "k=3: two non-reducible classes; Example 3 classification", criterion3},
      {4, "k=2: five semigroups, four model outcomes", criterion4},
      {5, "Lie closure of every semigroup-derived model", criterion5},
      {6, "counterexamples SYM and JJ3", criterion6},
      {7, "symmetry groups and variant counts", criterion7},
      {8, "constructor cross-checks", criterion8},
      {9, "numerical multiplicative closure", criterion9},
      {10, "expm/logm round trips", criterion10},
      {11, "deterministic k=4 catalog", criterion11},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int a = 1; a < argc; ++a) wanted.insert(std::stoi(argv[a]));

  int failed = 0;
  for (const Criterion& c : criteria()) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << '\n';
    for (const std::string& n : o.notes) std::cout << "    " << n << '\n';
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
