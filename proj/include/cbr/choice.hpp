#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cbr/relations.hpp"

namespace cbr {

/// A total single-valued choice function: one chosen member for every
/// nonempty menu of the universe. Singleton menus always choose their only
/// member. Immutable once constructed.
class ChoiceFunction {
 public:
  ChoiceFunction(std::shared_ptr<const Universe> universe, std::vector<std::uint8_t> assignment);
  ChoiceFunction(Universe universe, std::vector<std::uint8_t> assignment);

  const Universe& universe() const { return *universe_; }
  std::shared_ptr<const Universe> universe_ptr() const { return universe_; }
  int size() const { return universe_->size(); }
  Mask all_menu() const { return universe_->all(); }

  Alt choice(Mask menu) const {
    assert(menu != 0 && (menu & ~universe_->all()) == 0);
    return static_cast<Alt>(assignment_[menu]);
  }

  bool operator==(const ChoiceFunction& other) const;

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<std::uint8_t> assignment_;  // indexed by menu mask; [0] unused
};

/// The base pairwise relation: (a,b) iff C({a,b}) = a. Complete and
/// asymmetric for every valid choice function.
BinaryRelation pairwise(const ChoiceFunction& c);

enum class ParseErrorKind {
  MalformedDocument,
  UnknownAlternative,
  ChoiceNotInMenu,
  DuplicateMenu,
  MissingMenu,
};

std::string to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::string menu, const std::string& message);
  ParseErrorKind kind() const { return kind_; }
  /// Canonical rendering of the offending menu, or "" when none applies.
  const std::string& menu() const { return menu_; }

 private:
  ParseErrorKind kind_;
  std::string menu_;
};

/// Parses a choice-data document:
///   { "alternatives": ["x","y"], "choices": [ {"menu":["x","y"],"choice":"x"} ] }
/// Every non-singleton menu must appear exactly once; singleton entries are
/// optional and must be self-choices. Unknown top-level keys are rejected.
ChoiceFunction parse_choice_document(std::string_view text);

/// Canonical document: menus sorted by size then lexicographically, members
/// sorted lexicographically, singletons omitted. Round-trips through
/// parse_choice_document.
std::string serialize_choice_document(const ChoiceFunction& c);

/// Packs the non-singleton choices into one word; requires size() <= 4.
std::uint64_t choice_key(const ChoiceFunction& c);

/// Same packing restricted to menus of size 2 and 3.
std::uint64_t small_menu_key(const ChoiceFunction& c);

/// Menus of a given universe size in canonical scan order: ascending size,
/// then ascending mask value. Cached per size; do not mutate.
const std::vector<Mask>& menus_in_order(int n);

}  // namespace cbr
