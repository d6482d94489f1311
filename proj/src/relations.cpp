#include "cbr/relations.hpp"

#include <algorithm>
#include <stdexcept>

namespace cbr {

std::vector<Alt> mask_alts(Mask m) {
  std::vector<Alt> out;
  out.reserve(static_cast<size_t>(mask_size(m)));
  while (m) {
    out.push_back(lowest_alt(m));
    m &= m - 1;
  }
  return out;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || labels_.size() > kMaxUniverse) {
    throw std::invalid_argument("universe size must be between 1 and 16");
  }
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw std::invalid_argument("universe labels must be nonempty");
    for (size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) {
        throw std::invalid_argument("universe labels must be distinct: " + labels_[i]);
      }
    }
  }
}

std::optional<Alt> Universe::index_of(std::string_view label) const {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Alt>(i);
  }
  return std::nullopt;
}

std::string Universe::menu_label(Mask menu) const {
  std::string out = "{";
  bool first = true;
  for (Alt a : mask_alts(menu)) {
    if (!first) out += ",";
    out += label(a);
    first = false;
  }
  out += "}";
  return out;
}

Universe default_universe(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return Universe(std::move(labels));
}

BinaryRelation::BinaryRelation(int n, std::initializer_list<std::pair<Alt, Alt>> pairs)
    : BinaryRelation(n) {
  for (auto [a, b] : pairs) add(a, b);
}

bool BinaryRelation::empty() const {
  for (int a = 0; a < n_; ++a) {
    if (rows_[static_cast<size_t>(a)]) return false;
  }
  return true;
}

int BinaryRelation::pair_count() const {
  int total = 0;
  for (int a = 0; a < n_; ++a) total += mask_size(rows_[static_cast<size_t>(a)]);
  return total;
}

std::vector<std::pair<Alt, Alt>> BinaryRelation::pairs() const {
  std::vector<std::pair<Alt, Alt>> out;
  out.reserve(static_cast<size_t>(pair_count()));
  for (Alt a = 0; a < n_; ++a) {
    for (Alt b : mask_alts(row(a))) out.emplace_back(a, b);
  }
  return out;
}

std::uint64_t BinaryRelation::packed() const {
  assert(n_ <= 8);
  std::uint64_t key = 0;
  for (int a = 0; a < n_; ++a) {
    key |= static_cast<std::uint64_t>(rows_[static_cast<size_t>(a)]) << (8 * a);
  }
  return key;
}

bool BinaryRelation::operator==(const BinaryRelation& other) const {
  if (n_ != other.n_) return false;
  for (int a = 0; a < n_; ++a) {
    if (rows_[static_cast<size_t>(a)] != other.rows_[static_cast<size_t>(a)]) return false;
  }
  return true;
}

bool BinaryRelation::operator<(const BinaryRelation& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  for (int a = 0; a < n_; ++a) {
    Mask lhs = rows_[static_cast<size_t>(a)];
    Mask rhs = other.rows_[static_cast<size_t>(a)];
    if (lhs != rhs) return lhs < rhs;
  }
  return false;
}

BinaryRelation transitive_closure(const BinaryRelation& rel) {
  const int n = rel.size();
  std::array<Mask, kMaxUniverse> reach{};
  for (Alt a = 0; a < n; ++a) reach[static_cast<size_t>(a)] = rel.row(a);
  for (Alt k = 0; k < n; ++k) {
    for (Alt a = 0; a < n; ++a) {
      if (mask_contains(reach[static_cast<size_t>(a)], k)) {
        reach[static_cast<size_t>(a)] |= reach[static_cast<size_t>(k)];
      }
    }
  }
  BinaryRelation out(n);
  for (Alt a = 0; a < n; ++a) out.set_row(a, reach[static_cast<size_t>(a)] & ~alt_bit(a));
  return out;
}

bool is_transitive(const BinaryRelation& rel) {
  const int n = rel.size();
  for (Alt a = 0; a < n; ++a) {
    for (Alt b : mask_alts(rel.row(a))) {
      // Needs row(b) subset of row(a); b's edge back to a cannot be absorbed
      // because (a,a) is unrepresentable, so it correctly fails here.
      if (rel.row(b) & ~rel.row(a)) return false;
    }
  }
  return true;
}

bool is_asymmetric(const BinaryRelation& rel) {
  const int n = rel.size();
  for (Alt a = 0; a < n; ++a) {
    for (Alt b = a + 1; b < n; ++b) {
      if (rel.contains(a, b) && rel.contains(b, a)) return false;
    }
  }
  return true;
}

bool is_complete(const BinaryRelation& rel) {
  const int n = rel.size();
  for (Alt a = 0; a < n; ++a) {
    for (Alt b = a + 1; b < n; ++b) {
      if (!rel.contains(a, b) && !rel.contains(b, a)) return false;
    }
  }
  return true;
}

bool is_acyclic(const BinaryRelation& rel) {
  const int n = rel.size();
  std::array<Mask, kMaxUniverse> reach{};
  for (Alt a = 0; a < n; ++a) reach[static_cast<size_t>(a)] = rel.row(a);
  for (Alt k = 0; k < n; ++k) {
    for (Alt a = 0; a < n; ++a) {
      if (mask_contains(reach[static_cast<size_t>(a)], k)) {
        reach[static_cast<size_t>(a)] |= reach[static_cast<size_t>(k)];
      }
    }
  }
  for (Alt a = 0; a < n; ++a) {
    if (mask_contains(reach[static_cast<size_t>(a)], a)) return false;
  }
  return true;
}

Mask minimal_set(Mask menu, const BinaryRelation& rel) {
  Mask dominated = 0;
  Mask dominates_none = 0;
  for (Mask rest = menu; rest; rest &= rest - 1) {
    const Alt a = lowest_alt(rest);
    const Mask in_menu = rel.row(a) & menu;
    dominated |= in_menu;
    if (!in_menu) dominates_none |= alt_bit(a);
  }
  return dominated & dominates_none;
}

Mask maximal_set(Mask menu, const BinaryRelation& rel) {
  Mask dominated = 0;
  for (Mask rest = menu; rest; rest &= rest - 1) {
    dominated |= rel.row(lowest_alt(rest)) & menu;
  }
  return menu & ~dominated;
}

BinaryRelation restrict(const BinaryRelation& rel, Mask menu) {
  BinaryRelation out(rel.size());
  for (Mask rest = menu; rest; rest &= rest - 1) {
    const Alt a = lowest_alt(rest);
    out.set_row(a, rel.row(a) & menu);
  }
  return out;
}

BinaryRelation relation_union(const BinaryRelation& a, const BinaryRelation& b) {
  assert(a.size() == b.size());
  BinaryRelation out(a.size());
  for (Alt i = 0; i < a.size(); ++i) out.set_row(i, a.row(i) | b.row(i));
  return out;
}

BinaryRelation relation_difference(const BinaryRelation& a, const BinaryRelation& b) {
  assert(a.size() == b.size());
  BinaryRelation out(a.size());
  for (Alt i = 0; i < a.size(); ++i) out.set_row(i, a.row(i) & ~b.row(i));
  return out;
}

BinaryRelation relation_inverse(const BinaryRelation& a) {
  BinaryRelation out(a.size());
  for (auto [x, y] : a.pairs()) out.add(y, x);
  return out;
}

bool relation_subset(const BinaryRelation& a, const BinaryRelation& b) {
  assert(a.size() == b.size());
  for (Alt i = 0; i < a.size(); ++i) {
    if (a.row(i) & ~b.row(i)) return false;
  }
  return true;
}

}  // namespace cbr
