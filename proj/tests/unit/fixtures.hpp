#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "cbr/choice.hpp"

namespace cbr::test {

inline std::string read_file(const std::string& name) {
  std::ifstream in(std::string(CBR_TEST_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline ChoiceFunction load_fixture(const std::string& name) {
  return parse_choice_document(read_file(name));
}

/// Builds a choice function from rows like {"xyz", "y"} over single-character
/// labels; singletons are implied.
inline ChoiceFunction table(const std::vector<std::string>& labels,
                            const std::map<std::string, std::string>& rows) {
  auto universe = std::make_shared<const Universe>(Universe(labels));
  const Mask all = universe->all();
  std::vector<std::uint8_t> assignment(static_cast<size_t>(all) + 1, 0);
  for (Mask m = 1; m <= all; ++m) {
    if (mask_size(m) == 1) assignment[m] = static_cast<std::uint8_t>(lowest_alt(m));
  }
  for (const auto& [menu, choice] : rows) {
    Mask m = 0;
    for (char ch : menu) m |= alt_bit(*universe->index_of(std::string(1, ch)));
    assignment[m] = static_cast<std::uint8_t>(*universe->index_of(choice));
  }
  return ChoiceFunction(universe, std::move(assignment));
}

inline Mask menu_of(const Universe& u, const std::string& members) {
  Mask m = 0;
  for (char ch : members) m |= alt_bit(*u.index_of(std::string(1, ch)));
  return m;
}

inline BinaryRelation rel_of(const Universe& u, const std::vector<std::string>& pairs) {
  BinaryRelation rel(u.size());
  for (const std::string& p : pairs) {
    REQUIRE(p.size() == 2);
    rel.add(*u.index_of(p.substr(0, 1)), *u.index_of(p.substr(1, 1)));
  }
  return rel;
}

/// The choice function maximizing a linear order given by label positions
/// (first label most preferred).
inline ChoiceFunction warp_rational(const std::vector<std::string>& ranked) {
  auto universe = std::make_shared<const Universe>(Universe(ranked));
  const Mask all = universe->all();
  std::vector<std::uint8_t> assignment(static_cast<size_t>(all) + 1, 0);
  for (Mask m = 1; m <= all; ++m) {
    assignment[m] = static_cast<std::uint8_t>(lowest_alt(m));  // lowest index = best
  }
  return ChoiceFunction(universe, std::move(assignment));
}

}  // namespace cbr::test
