#include "doctest.h"

#include <random>

#include "cbr/relations.hpp"

#include "fixtures.hpp"

using namespace cbr;

namespace {

BinaryRelation random_relation(int n, std::mt19937& rng, int density_percent = 30) {
  BinaryRelation rel(n);
  std::uniform_int_distribution<int> dice(0, 99);
  for (Alt a = 0; a < n; ++a) {
    for (Alt b = 0; b < n; ++b) {
      if (a != b && dice(rng) < density_percent) rel.add(a, b);
    }
  }
  return rel;
}

Mask random_menu(int n, std::mt19937& rng) {
  std::uniform_int_distribution<Mask> dice(1, full_mask(n));
  return dice(rng);
}

}  // namespace

TEST_CASE("universe validation") {
  CHECK_THROWS_AS(Universe({}), std::invalid_argument);
  CHECK_THROWS_AS(Universe({"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(Universe({""}), std::invalid_argument);
  const Universe u({"x", "y", "z"});
  CHECK(u.size() == 3);
  CHECK(*u.index_of("z") == 2);
  CHECK(!u.index_of("q"));
  CHECK(u.menu_label(0b101) == "{x,z}");
}

TEST_CASE("transitive closure on a two-step chain") {
  // {(z,x),(x,w)} over x,y,z,w gains exactly (z,w).
  const Universe u({"x", "y", "z", "w"});
  const auto rel = test::rel_of(u, {"zx", "xw"});
  const auto closed = transitive_closure(rel);
  CHECK(closed == test::rel_of(u, {"zx", "xw", "zw"}));
}

TEST_CASE("transitive closure of the empty relation is empty") {
  CHECK(transitive_closure(BinaryRelation(4)).empty());
}

TEST_CASE("transitive closure of a chain yields all forward pairs") {
  BinaryRelation chain(4);
  chain.add(0, 1);
  chain.add(1, 2);
  chain.add(2, 3);
  const auto closed = transitive_closure(chain);
  CHECK(closed.pair_count() == 6);
  for (Alt a = 0; a < 4; ++a) {
    for (Alt b = a + 1; b < 4; ++b) CHECK(closed.contains(a, b));
  }
}

TEST_CASE("order predicates") {
  const Universe u({"x", "y", "z"});
  CHECK_FALSE(is_asymmetric(test::rel_of(u, {"xy", "yx"})));
  const auto missing = test::rel_of(u, {"xy", "yz"});
  CHECK_FALSE(is_transitive(missing));
  CHECK(is_acyclic(missing));
  const auto cycle = test::rel_of(u, {"xy", "yz", "zx"});
  CHECK(is_complete(cycle));
  CHECK_FALSE(is_acyclic(cycle));
  CHECK(is_asymmetric(cycle));
  CHECK_FALSE(is_transitive(cycle));
}

TEST_CASE("minimal set excludes dominated alternatives that still dominate") {
  const Universe u({"x", "y", "z", "w"});
  const auto rel = test::rel_of(u, {"zx", "zw", "xw"});
  CHECK(minimal_set(test::menu_of(u, "xyzw"), rel) == test::menu_of(u, "w"));
  CHECK(minimal_set(test::menu_of(u, "xyzw"), BinaryRelation(4)) == 0);
  // w outside the menu: x dominates nothing in-menu, so x is minimal.
  const auto rel2 = test::rel_of(u, {"zx", "xw"});
  CHECK(minimal_set(test::menu_of(u, "xyz"), rel2) == test::menu_of(u, "x"));
}

TEST_CASE("maximal set") {
  const Universe u({"x", "y", "z", "w"});
  CHECK(maximal_set(test::menu_of(u, "xyz"), test::rel_of(u, {"xy", "yz", "xz"})) ==
        test::menu_of(u, "x"));
  CHECK(maximal_set(test::menu_of(u, "xyz"), test::rel_of(u, {"xy", "yz", "zx"})) == 0);
  CHECK(maximal_set(test::menu_of(u, "xyzw"), test::rel_of(u, {"zx", "zw", "xw"})) ==
        test::menu_of(u, "yz"));
}

TEST_CASE("restrict keeps in-menu pairs only") {
  const Universe u({"x", "y", "z", "w"});
  const auto rel = test::rel_of(u, {"zx", "xw"});
  CHECK(restrict(rel, test::menu_of(u, "xz")) == test::rel_of(u, {"zx"}));
  CHECK(restrict(rel, test::menu_of(u, "x")).empty());
  BinaryRelation full(4);
  for (Alt a = 0; a < 4; ++a) {
    for (Alt b = a + 1; b < 4; ++b) full.add(a, b);
  }
  CHECK(restrict(full, test::menu_of(u, "xyz")).pair_count() == 3);
}

TEST_CASE("closure is extensive and idempotent on random relations") {
  std::mt19937 rng(7);
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto rel = random_relation(n, rng);
    const auto once = transitive_closure(rel);
    CHECK(relation_subset(rel, once));
    CHECK(transitive_closure(once) == once);
    if (is_acyclic(rel)) CHECK(is_transitive(once));
  }
}

TEST_CASE("maximal set avoids the minimal set on random inputs") {
  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto rel = random_relation(n, rng);
    const Mask menu = random_menu(n, rng);
    const Mask max = maximal_set(menu, rel);
    const Mask min = minimal_set(menu, rel);
    CHECK((max & min) == 0);
    CHECK((max & ~menu) == 0);
  }
}

TEST_CASE("complete asymmetric relations have at most one maximal element") {
  std::mt19937 rng(13);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(rng() % 5);
    BinaryRelation tournament(n);
    for (Alt a = 0; a < n; ++a) {
      for (Alt b = a + 1; b < n; ++b) {
        if (rng() & 1) tournament.add(a, b);
        else tournament.add(b, a);
      }
    }
    CHECK(mask_size(maximal_set(random_menu(n, rng), tournament)) <= 1);
  }
}

TEST_CASE("min and max depend only on the restricted relation") {
  std::mt19937 rng(17);
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto rel = random_relation(n, rng);
    const Mask menu = random_menu(n, rng);
    const auto restricted = restrict(rel, menu);
    CHECK(minimal_set(menu, rel) == minimal_set(menu, restricted));
    CHECK(maximal_set(menu, rel) == maximal_set(menu, restricted));
  }
}

TEST_CASE("relation helpers") {
  const Universe u({"x", "y", "z"});
  const auto a = test::rel_of(u, {"xy", "yz"});
  const auto b = test::rel_of(u, {"yz", "zx"});
  CHECK(relation_union(a, b) == test::rel_of(u, {"xy", "yz", "zx"}));
  CHECK(relation_difference(a, b) == test::rel_of(u, {"xy"}));
  CHECK(relation_inverse(a) == test::rel_of(u, {"yx", "zy"}));
  CHECK(relation_subset(test::rel_of(u, {"yz"}), a));
  CHECK_FALSE(relation_subset(b, a));
}
