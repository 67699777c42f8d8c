#include "liemarkov/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "liemarkov/errors.hpp"

namespace liemarkov {

Perm::Perm(int order) : images_(static_cast<std::size_t>(order)) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= order() || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("image array is not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::from_cycles(const std::string& cycles, int order) {
  std::vector<int> images(static_cast<std::size_t>(order));
  std::iota(images.begin(), images.end(), 0);

  std::string compact;
  for (char c : cycles) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty() || compact == "e" || compact == "()") return Perm(std::move(images));

  std::vector<bool> moved(static_cast<std::size_t>(order), false);
  std::istringstream in(cycles);
  char c;
  while (in >> c) {
    if (c != '(') throw ParseError("expected '(' in cycle notation: " + cycles);
    std::vector<int> cycle;
    while (true) {
      in >> std::ws;
      if (in.peek() == ')') {
        in.get();
        break;
      }
      int point;
      if (!(in >> point)) throw ParseError("bad point in cycle notation: " + cycles);
      if (point < 1 || point > order) {
        throw ParseError("point " + std::to_string(point) + " outside 1.." +
                         std::to_string(order) + " in: " + cycles);
      }
      cycle.push_back(point - 1);
      in >> std::ws;
      if (in.peek() == ',') in.get();
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto from = static_cast<std::size_t>(cycle[i]);
      if (moved[from]) throw ParseError("cycles are not disjoint: " + cycles);
      moved[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

std::vector<Perm> Perm::all(int order) {
  std::vector<int> images(static_cast<std::size_t>(order));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Perm> result;
  do {
    result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

bool Perm::is_identity() const {
  for (int i = 0; i < order(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < order(); ++i) inv[static_cast<std::size_t>((*this)(i))] = i;
  return Perm(std::move(inv));
}

int Perm::element_order() const {
  int n = 1;
  Perm power = *this;
  while (!power.is_identity()) {
    power = power * *this;
    ++n;
  }
  return n;
}

std::string Perm::to_cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (int start = 0; start < order(); ++start) {
    if (done[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      done[static_cast<std::size_t>(x)] = true;
      x = (*this)(x);
      first = false;
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.order() != q.order()) throw OrderMismatch("composing permutations of different degree");
  std::vector<int> images(p.images_.size());
  for (int x = 0; x < p.order(); ++x) images[static_cast<std::size_t>(x)] = p(q(x));
  return Perm(std::move(images));
}

std::vector<Perm> parse_perm_list(const std::string& text, int order) {
  std::vector<Perm> perms;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    if (current.find_first_not_of(" \t") != std::string::npos) {
      perms.push_back(Perm::from_cycles(current, order));
    }
    current.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  return perms;
}

}  // namespace liemarkov
