#include "doctest.h"

#include <random>

#include "cbr/choice.hpp"

#include "fixtures.hpp"

using namespace cbr;

TEST_CASE("parses the four-alternative fixture") {
  const ChoiceFunction c = test::load_fixture("example3.json");
  const Universe& u = c.universe();
  CHECK(c.size() == 4);
  CHECK(c.choice(test::menu_of(u, "xyzw")) == *u.index_of("x"));
  CHECK(c.choice(test::menu_of(u, "xyz")) == *u.index_of("y"));
  CHECK(c.choice(test::menu_of(u, "x")) == *u.index_of("x"));
}

TEST_CASE("parse errors name the offending menu") {
  const std::string base = R"({"alternatives":["x","y"],"choices":[)";
  SUBCASE("choice outside the menu") {
    try {
      parse_choice_document(base + R"({"menu":["x","y"],"choice":"z"}]})");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseErrorKind::UnknownAlternative);
    }
  }
  SUBCASE("choice is a member of the universe but not the menu") {
    try {
      parse_choice_document(
          R"({"alternatives":["x","y","z"],"choices":[{"menu":["x","y"],"choice":"z"},)"
          R"({"menu":["x","z"],"choice":"x"},{"menu":["y","z"],"choice":"y"},)"
          R"({"menu":["x","y","z"],"choice":"x"}]})");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseErrorKind::ChoiceNotInMenu);
      CHECK(e.menu() == "{x,y}");
    }
  }
  SUBCASE("duplicate menu") {
    try {
      parse_choice_document(base +
                            R"({"menu":["x","y"],"choice":"x"},{"menu":["y","x"],"choice":"y"}]})");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseErrorKind::DuplicateMenu);
    }
  }
  SUBCASE("missing menu") {
    try {
      parse_choice_document(R"({"alternatives":["x","y","z"],"choices":[)"
                            R"({"menu":["x","y"],"choice":"x"}]})");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseErrorKind::MissingMenu);
      CHECK(e.menu() == "{x,z}");
    }
  }
  SUBCASE("unknown top-level key") {
    try {
      parse_choice_document(R"({"alternatives":["x"],"choices":[],"notes":"hi"})");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseErrorKind::MalformedDocument);
    }
  }
  SUBCASE("unknown alternative in a menu") {
    try {
      parse_choice_document(base + R"({"menu":["x","q"],"choice":"x"}]})");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseErrorKind::UnknownAlternative);
    }
  }
}

TEST_CASE("pair-only document on two alternatives is valid") {
  const ChoiceFunction c = parse_choice_document(
      R"({"alternatives":["x","y"],"choices":[{"menu":["x","y"],"choice":"x"}]})");
  const Universe& u = c.universe();
  CHECK(c.choice(test::menu_of(u, "x")) == *u.index_of("x"));
  CHECK(c.choice(test::menu_of(u, "xy")) == *u.index_of("x"));
}

TEST_CASE("singleton entries must be self-choices") {
  CHECK_NOTHROW(parse_choice_document(
      R"({"alternatives":["x","y"],"choices":[{"menu":["x"],"choice":"x"},)"
      R"({"menu":["x","y"],"choice":"y"}]})"));
  CHECK_THROWS_AS(parse_choice_document(
                      R"({"alternatives":["x","y"],"choices":[{"menu":["x"],"choice":"y"},)"
                      R"({"menu":["x","y"],"choice":"y"}]})"),
                  ParseError);
}

TEST_CASE("serialize is canonical and round-trips") {
  const ChoiceFunction c = test::load_fixture("example3.json");
  const std::string text = serialize_choice_document(c);
  CHECK(parse_choice_document(text) == c);
  // Menus appear by size then lexicographically; {w,x} precedes {x,y}.
  CHECK(text.find("\"w\"") < text.find("\"y\""));
  const ChoiceFunction ex4 = test::load_fixture("appendix_ex4.json");
  const auto doc = nlohmann::json::parse(serialize_choice_document(ex4));
  CHECK(doc["choices"].size() == 11);
}

TEST_CASE("serializing a one-element universe gives an empty choices list") {
  const ChoiceFunction c = parse_choice_document(R"({"alternatives":["x"],"choices":[]})");
  const auto doc = nlohmann::json::parse(serialize_choice_document(c));
  CHECK(doc["choices"].empty());
}

TEST_CASE("round trip holds for random functions up to five alternatives") {
  std::mt19937 rng(23);
  const std::vector<std::string> names = {"a", "b", "c", "d", "e"};
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 5);
    auto universe = std::make_shared<const Universe>(
        Universe(std::vector<std::string>(names.begin(), names.begin() + n)));
    const Mask all = universe->all();
    std::vector<std::uint8_t> assignment(static_cast<size_t>(all) + 1, 0);
    for (Mask m = 1; m <= all; ++m) {
      const auto members = mask_alts(m);
      assignment[m] = static_cast<std::uint8_t>(members[rng() % members.size()]);
    }
    const ChoiceFunction c(universe, std::move(assignment));
    CHECK(parse_choice_document(serialize_choice_document(c)) == c);
  }
}

TEST_CASE("pairwise relation is complete and asymmetric") {
  const ChoiceFunction c = test::load_fixture("example3.json");
  const BinaryRelation pc = pairwise(c);
  CHECK(is_complete(pc));
  CHECK(is_asymmetric(pc));
  const Universe& u = c.universe();
  CHECK(pc == test::rel_of(u, {"xy", "zx", "xw", "yz", "yw", "zw"}));
}

TEST_CASE("appendix example 3 has a cyclic pairwise triangle") {
  const ChoiceFunction c = test::load_fixture("appendix_ex3.json");
  const Universe& u = c.universe();
  const BinaryRelation pc = pairwise(c);
  CHECK(pc == test::rel_of(u, {"xy", "zx", "xw", "yz", "yw", "zw"}));
  CHECK_FALSE(is_acyclic(pc));
}

TEST_CASE("totality: n alternatives need exactly 2^n - n - 1 entries") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(static_cast<long>(menus_in_order(n).size()) == (1l << n) - n - 1);
  }
}

TEST_CASE("choice function constructor rejects bad assignments") {
  auto u = std::make_shared<const Universe>(Universe({"x", "y"}));
  CHECK_THROWS_AS(ChoiceFunction(u, std::vector<std::uint8_t>{0, 0, 0, 1}),
                  std::invalid_argument);  // singleton {y} mapped to x
  CHECK_THROWS_AS(ChoiceFunction(u, std::vector<std::uint8_t>{0, 0, 1}), std::invalid_argument);
}
