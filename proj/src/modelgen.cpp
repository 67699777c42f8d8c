#include "liemarkov/modelgen.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>

#include <openssl/sha.h>

#include "liemarkov/errors.hpp"
#include "liemarkov/linalg.hpp"
#include "liemarkov/symmetry.hpp"

namespace liemarkov {

ModelSubspace make_subspace(int order, const std::vector<IntMatrix>& generators,
                            std::vector<int> labels) {
  if (labels.empty()) {
    for (std::size_t n = 0; n < generators.size(); ++n) labels.push_back(static_cast<int>(n) + 1);
  }
  if (labels.size() != generators.size()) throw Error("one label per generator required");

  ModelSubspace m;
  m.order = order;
  for (std::size_t n = 0; n < generators.size(); ++n) {
    const IntMatrix& g = generators[n];
    if (g.rows() != order || g.cols() != order) {
      throw OrderMismatch("generator is " + std::to_string(g.rows()) + "x" +
                          std::to_string(g.cols()) + ", expected " + std::to_string(order) +
                          "x" + std::to_string(order));
    }
    if (!g.colwise().sum().isZero()) {
      throw Error("generator L_" + std::to_string(labels[n]) + " has a nonzero column sum");
    }
    const bool repeated = std::find(m.basis.begin(), m.basis.end(), g) != m.basis.end();
    if (g.isZero() || repeated) {
      ++m.dropped;
      continue;
    }
    m.basis.push_back(g);
    m.labels.push_back(labels[n]);
  }

  RatMatrix stacked(static_cast<Eigen::Index>(m.basis.size()), order * order);
  for (std::size_t n = 0; n < m.basis.size(); ++n) {
    stacked.row(static_cast<Eigen::Index>(n)) = vectorize(to_rational(m.basis[n]));
  }
  auto echelon = reduced_row_echelon<Rational>(std::move(stacked));
  m.rref = std::move(echelon.rows);
  m.pivots = std::move(echelon.pivots);
  m.dim = static_cast<int>(m.pivots.size());
  return m;
}

ModelSubspace rate_basis(const RegularRep& r) {
  const IntMatrix identity = IntMatrix::Identity(r.order, r.order);
  std::vector<IntMatrix> generators;
  generators.reserve(r.matrices.size());
  for (const IntMatrix& a : r.matrices) generators.push_back(a - identity);
  return make_subspace(r.order, generators);
}

std::optional<RatVector> contains(const ModelSubspace& m, const RatMatrix& x) {
  if (x.rows() != m.order || x.cols() != m.order) {
    throw OrderMismatch("membership test on a matrix of the wrong size");
  }
  const RatMatrix flat = vectorize(x);
  // Each rref row has a 1 in its pivot column and zeros in the others, so
  // the only candidate coefficients are x's entries at the pivots.
  RatVector coeffs(m.dim);
  RatMatrix reconstructed = RatMatrix::Constant(1, m.order * m.order, Rational(0));
  for (int r = 0; r < m.dim; ++r) {
    coeffs(r) = flat(0, m.pivots[static_cast<std::size_t>(r)]);
    reconstructed += coeffs(r) * m.rref.row(r);
  }
  if (reconstructed != flat) return std::nullopt;
  return coeffs;
}

std::optional<RatVector> contains(const ModelSubspace& m, const IntMatrix& x) {
  return contains(m, to_rational(x));
}

std::optional<RatVector> generator_coefficients(const ModelSubspace& m, const RatMatrix& x) {
  const int k2 = m.order * m.order;
  RatMatrix columns(k2, static_cast<Eigen::Index>(m.basis.size()));
  for (std::size_t n = 0; n < m.basis.size(); ++n) {
    columns.col(static_cast<Eigen::Index>(n)) =
        vectorize(to_rational(m.basis[n])).transpose();
  }
  const RatVector rhs = vectorize(x).transpose();
  return solve_exact<Rational>(columns, rhs);
}

SupportMatrix generic_support(const ModelSubspace& m) {
  SupportMatrix s = SupportMatrix::Constant(m.order, m.order, false);
  for (const IntMatrix& b : m.basis) {
    for (int i = 0; i < m.order; ++i) {
      for (int j = 0; j < m.order; ++j) {
        if (i != j && b(i, j) > 0) s(i, j) = true;
      }
    }
  }
  return s;
}

std::vector<int> absorbing_states(const ModelSubspace& m) {
  const SupportMatrix s = generic_support(m);
  std::vector<int> states;
  for (int j = 0; j < m.order; ++j) {
    if (!s.col(j).any()) states.push_back(j);
  }
  return states;
}

namespace {

// Number of states reachable from `start` following edges src -> dst where
// adjacency(dst, src) is true (or the transpose when `backwards`).
int reachable_count(const SupportMatrix& adjacency, int start, bool backwards) {
  const auto k = static_cast<int>(adjacency.rows());
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  int count = 1;
  while (!stack.empty()) {
    const int from = stack.back();
    stack.pop_back();
    for (int to = 0; to < k; ++to) {
      const bool edge = backwards ? adjacency(from, to) : adjacency(to, from);
      if (edge && !seen[static_cast<std::size_t>(to)]) {
        seen[static_cast<std::size_t>(to)] = true;
        stack.push_back(to);
        ++count;
      }
    }
  }
  return count;
}

}  // namespace

bool is_reducible(const ModelSubspace& m) {
  if (m.order <= 1) return false;
  const SupportMatrix s = generic_support(m);
  return reachable_count(s, 0, false) != m.order || reachable_count(s, 0, true) != m.order;
}

bool operator<(const SubspaceKey& a, const SubspaceKey& b) {
  if (a.order != b.order) return a.order < b.order;
  if (a.dim != b.dim) return a.dim < b.dim;
  return std::lexicographical_compare(a.entries.begin(), a.entries.end(), b.entries.begin(),
                                      b.entries.end());
}

std::string SubspaceKey::serialize() const {
  std::string out = "k=" + std::to_string(order) + ";d=" + std::to_string(dim);
  const std::size_t width = static_cast<std::size_t>(order * order);
  for (std::size_t n = 0; n < entries.size(); ++n) {
    out += (n % width == 0) ? ';' : ',';
    out += to_string(entries[n]);
  }
  return out;
}

ModelSubspace conjugate_subspace(const ModelSubspace& m, const Perm& p) {
  std::vector<IntMatrix> generators;
  generators.reserve(m.basis.size());
  for (const IntMatrix& b : m.basis) generators.push_back(conjugate(b, p));
  return make_subspace(m.order, generators, m.labels);
}

namespace {

SubspaceKey key_of_rref(const ModelSubspace& m) {
  SubspaceKey key{m.order, m.dim, {}};
  key.entries.reserve(static_cast<std::size_t>(m.rref.size()));
  for (Eigen::Index r = 0; r < m.rref.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.rref.cols(); ++c) key.entries.push_back(m.rref(r, c));
  }
  return key;
}

}  // namespace

SubspaceKey canonical_subspace(const ModelSubspace& m) {
  std::optional<SubspaceKey> best;
  for (const Perm& p : Perm::all(m.order)) {
    SubspaceKey candidate = key_of_rref(conjugate_subspace(m, p));
    if (!best || candidate < *best) best = std::move(candidate);
  }
  return *best;
}

std::string model_id(const SubspaceKey& key) {
  const std::string bytes = key.serialize();
  std::array<unsigned char, SHA256_DIGEST_LENGTH> digest{};
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), digest.data());
  std::string hex;
  char buf[3];
  for (std::size_t n = 0; n < 8; ++n) {
    std::snprintf(buf, sizeof buf, "%02x", digest[n]);
    hex += buf;
  }
  return hex;
}

std::vector<ModelClass> dedup_models(const std::vector<ModelSubspace>& models) {
  std::vector<ModelClass> classes;
  std::map<SubspaceKey, std::size_t> index;
  for (std::size_t n = 0; n < models.size(); ++n) {
    if (n > 0 && models[n].order != models[0].order) {
      throw OrderMismatch("dedup_models requires models of a single order");
    }
    SubspaceKey key = canonical_subspace(models[n]);
    auto [it, inserted] = index.try_emplace(key, classes.size());
    if (inserted) classes.push_back(ModelClass{std::move(key), {}});
    classes[it->second].members.push_back(n);
  }
  return classes;
}

}  // namespace liemarkov
