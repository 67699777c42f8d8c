#include "liemarkov/cayley.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "liemarkov/errors.hpp"

namespace liemarkov {

CayleyTable::CayleyTable(int order, std::vector<int> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ < 1) throw MalformedTable("table order must be at least 1");
  if (entries_.size() != static_cast<std::size_t>(order_ * order_)) {
    throw MalformedTable("table of order " + std::to_string(order_) + " needs " +
                         std::to_string(order_ * order_) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  for (std::size_t n = 0; n < entries_.size(); ++n) {
    if (entries_[n] < 0 || entries_[n] >= order_) {
      throw MalformedTable("entry at row " + std::to_string(n / order_ + 1) + ", column " +
                           std::to_string(n % order_ + 1) + " is out of range");
    }
  }
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<int>>& rows) {
  const int k = static_cast<int>(rows.size());
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(k * k));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != k) throw MalformedTable("table is not square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return CayleyTable(k, std::move(entries));
}

bool is_associative(const CayleyTable& t) {
  const int k = t.order();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int ij = t.at(i, j);
      for (int m = 0; m < k; ++m) {
        if (t.at(ij, m) != t.at(i, t.at(j, m))) return false;
      }
    }
  }
  return true;
}

CayleyTable apply_perm(const CayleyTable& t, const Perm& p) {
  const int k = t.order();
  if (p.order() != k) {
    throw OrderMismatch("permutation of degree " + std::to_string(p.order()) +
                        " applied to table of order " + std::to_string(k));
  }
  std::vector<int> entries(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      entries[static_cast<std::size_t>(p(i) * k + p(j))] = p(t.at(i, j));
    }
  }
  return CayleyTable(k, std::move(entries));
}

CayleyTable reverse(const CayleyTable& t) {
  const int k = t.order();
  std::vector<int> entries(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) entries[static_cast<std::size_t>(i * k + j)] = t.at(j, i);
  }
  return CayleyTable(k, std::move(entries));
}

CayleyTable canonical_form(const CayleyTable& t) {
  CayleyTable best = t;
  for (const Perm& p : Perm::all(t.order())) {
    CayleyTable candidate = apply_perm(t, p);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

namespace {

constexpr int kUnset = -1;

// Depth-first fill of a k*k table in row-major order. After each placement
// every triple whose products are all defined is checked.
class SemigroupSearch {
 public:
  explicit SemigroupSearch(int order)
      : k_(order), cells_(static_cast<std::size_t>(order * order), kUnset) {}

  std::vector<CayleyTable> run() {
    fill(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  int get(int i, int j) const { return cells_[static_cast<std::size_t>(i * k_ + j)]; }

  bool consistent() const {
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) {
        const int ij = get(i, j);
        if (ij == kUnset) continue;
        for (int m = 0; m < k_; ++m) {
          const int jm = get(j, m);
          if (jm == kUnset) continue;
          const int left = get(ij, m);
          const int right = get(i, jm);
          if (left != kUnset && right != kUnset && left != right) return false;
        }
      }
    }
    return true;
  }

  void fill(int cell) {
    if (cell == k_ * k_) {
      CayleyTable t(k_, cells_);
      if (canonical_form(t) == t) found_.push_back(std::move(t));
      return;
    }
    for (int v = 0; v < k_; ++v) {
      cells_[static_cast<std::size_t>(cell)] = v;
      if (consistent()) fill(cell + 1);
    }
    cells_[static_cast<std::size_t>(cell)] = kUnset;
  }

  int k_;
  std::vector<int> cells_;
  std::vector<CayleyTable> found_;
};

}  // namespace

std::vector<CayleyTable> enumerate_semigroups(int order) {
  if (order < 1 || order > kMaxEnumerationOrder) {
    throw UnsupportedOrder("semigroup enumeration supports orders 1.." +
                           std::to_string(kMaxEnumerationOrder) + ", got " +
                           std::to_string(order));
  }
  return SemigroupSearch(order).run();
}

AntiIsoCensus anti_iso_census(const std::vector<CayleyTable>& tables) {
  AntiIsoCensus census;
  int paired = 0;
  for (const CayleyTable& t : tables) {
    if (canonical_form(reverse(t)) == canonical_form(t)) {
      ++census.self_dual;
    } else {
      ++paired;
    }
  }
  census.pairs = paired / 2;
  return census;
}

std::vector<CayleyTable> read_tables(std::istream& in) {
  std::vector<CayleyTable> tables;
  std::vector<std::vector<int>> rows;
  int block_start_line = 0;
  int line_no = 0;

  auto finish_block = [&] {
    if (rows.empty()) return;
    const std::string where = "block " + std::to_string(tables.size() + 1) +
                              " (starting at line " + std::to_string(block_start_line) + ")";
    const auto k = rows.size();
    for (std::size_t r = 0; r < k; ++r) {
      if (rows[r].size() != k) {
        throw ParseError(where + ": line " + std::to_string(block_start_line + r) + " has " +
                         std::to_string(rows[r].size()) + " entries, expected " +
                         std::to_string(k));
      }
      for (int& v : rows[r]) {
        if (v < 1 || v > static_cast<int>(k)) {
          throw ParseError(where + ": line " + std::to_string(block_start_line + r) +
                           " has entry " + std::to_string(v) + " outside 1.." +
                           std::to_string(k));
        }
        --v;
      }
    }
    tables.push_back(CayleyTable::from_rows(rows));
    rows.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    if (first == std::string::npos) {
      finish_block();
      continue;
    }
    if (rows.empty()) block_start_line = line_no;
    std::istringstream fields(line);
    std::vector<int> row;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        row.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("block " + std::to_string(tables.size() + 1) + ": line " +
                         std::to_string(line_no) + " has non-integer entry '" + token + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  finish_block();
  return tables;
}

std::vector<CayleyTable> read_tables_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tables file " + path);
  return read_tables(in);
}

std::string format_table(const CayleyTable& t) {
  std::string out;
  for (int i = 0; i < t.order(); ++i) {
    for (int j = 0; j < t.order(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(t.at(i, j) + 1);
    }
    out += '\n';
  }
  return out;
}

void write_tables(std::ostream& out, const std::vector<CayleyTable>& tables) {
  for (std::size_t n = 0; n < tables.size(); ++n) {
    if (n > 0) out << '\n';
    out << format_table(tables[n]);
  }
}

}  // namespace liemarkov
