#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cbr {

/// Alternatives are small integer indices into a Universe; menus are bitmasks
/// over those indices. Everything in the library is sized for universes of at
/// most 16 alternatives, so a menu always fits a machine word.
using Alt = int;
using Mask = std::uint32_t;

inline constexpr int kMaxUniverse = 16;
inline constexpr int kMaxOracle = 5;

constexpr Mask alt_bit(Alt a) { return Mask{1} << a; }
constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }
constexpr bool mask_contains(Mask m, Alt a) { return (m >> a) & 1u; }
constexpr int mask_size(Mask m) { return std::popcount(m); }
constexpr Alt lowest_alt(Mask m) { return std::countr_zero(m); }

/// Members of a mask in ascending index order.
std::vector<Alt> mask_alts(Mask m);

/// The set of alternatives: an ordered list of distinct labels.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask all() const { return full_mask(size()); }
  const std::string& label(Alt a) const { return labels_[static_cast<size_t>(a)]; }
  std::optional<Alt> index_of(std::string_view label) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Renders a menu as "{x,y,z}" in universe order.
  std::string menu_label(Mask menu) const;

  bool operator==(const Universe& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
};

/// Labels "a", "b", "c", ... for enumerated objects without a data file.
Universe default_universe(int n);

/// A set of ordered pairs (a,b), a != b, over indices < size(). Stored as one
/// successor bitmask per alternative. The container is irreflexive by
/// construction; asymmetry, transitivity and the like are checked predicates,
/// not construction invariants, so that revealed relations of inconsistent
/// data remain representable.
class BinaryRelation {
 public:
  BinaryRelation() : n_(0) {}
  explicit BinaryRelation(int n) : n_(n) { assert(n >= 0 && n <= kMaxUniverse); }
  BinaryRelation(int n, std::initializer_list<std::pair<Alt, Alt>> pairs);

  int size() const { return n_; }
  bool contains(Alt a, Alt b) const { return mask_contains(rows_[static_cast<size_t>(a)], b); }
  Mask row(Alt a) const { return rows_[static_cast<size_t>(a)]; }

  void add(Alt a, Alt b) {
    assert(a != b && a >= 0 && b >= 0 && a < n_ && b < n_);
    rows_[static_cast<size_t>(a)] |= alt_bit(b);
  }
  void remove(Alt a, Alt b) { rows_[static_cast<size_t>(a)] &= ~alt_bit(b); }
  void set_row(Alt a, Mask successors) {
    assert(!mask_contains(successors, a));
    rows_[static_cast<size_t>(a)] = successors;
  }

  bool empty() const;
  int pair_count() const;
  std::vector<std::pair<Alt, Alt>> pairs() const;

  /// Packs the rows into one word; requires size() <= 8.
  std::uint64_t packed() const;

  bool operator==(const BinaryRelation& other) const;
  bool operator<(const BinaryRelation& other) const;

 private:
  int n_;
  std::array<Mask, kMaxUniverse> rows_{};
};

/// Smallest transitive superset restricted to distinct endpoints: (a,b) is in
/// the result iff b is reachable from a by a nonempty path and a != b. For
/// acyclic inputs this is the usual transitive closure; for cyclic inputs the
/// diagonal is dropped so the result stays a valid (irreflexive) relation.
BinaryRelation transitive_closure(const BinaryRelation& rel);

bool is_transitive(const BinaryRelation& rel);
bool is_asymmetric(const BinaryRelation& rel);
bool is_complete(const BinaryRelation& rel);
bool is_acyclic(const BinaryRelation& rel);

/// min(S,R): alternatives of the menu dominated by some in-menu alternative
/// while dominating none. Only in-menu pairs count.
Mask minimal_set(Mask menu, const BinaryRelation& rel);

/// max(S,R): alternatives of the menu dominated by nobody in the menu.
Mask maximal_set(Mask menu, const BinaryRelation& rel);

/// Pairs with both endpoints inside the menu.
BinaryRelation restrict(const BinaryRelation& rel, Mask menu);

BinaryRelation relation_union(const BinaryRelation& a, const BinaryRelation& b);
BinaryRelation relation_difference(const BinaryRelation& a, const BinaryRelation& b);
BinaryRelation relation_inverse(const BinaryRelation& a);
bool relation_subset(const BinaryRelation& a, const BinaryRelation& b);

}  // namespace cbr
