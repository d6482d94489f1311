#include "cbr/choice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "json.hpp"

namespace cbr {

namespace {

std::string render_menu(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

}  // namespace

ChoiceFunction::ChoiceFunction(std::shared_ptr<const Universe> universe,
                               std::vector<std::uint8_t> assignment)
    : universe_(std::move(universe)), assignment_(std::move(assignment)) {
  const int n = universe_->size();
  const Mask all = full_mask(n);
  if (assignment_.size() != static_cast<size_t>(all) + 1) {
    throw std::invalid_argument("choice assignment must cover every menu mask");
  }
  for (Mask menu = 1; menu <= all; ++menu) {
    const Alt c = static_cast<Alt>(assignment_[menu]);
    if (c < 0 || c >= n || !mask_contains(menu, c)) {
      throw std::invalid_argument("choice must belong to its menu");
    }
    if (mask_size(menu) == 1 && c != lowest_alt(menu)) {
      throw std::invalid_argument("singleton menus choose their member");
    }
  }
}

ChoiceFunction::ChoiceFunction(Universe universe, std::vector<std::uint8_t> assignment)
    : ChoiceFunction(std::make_shared<const Universe>(std::move(universe)), std::move(assignment)) {}

bool ChoiceFunction::operator==(const ChoiceFunction& other) const {
  return (universe_ == other.universe_ || *universe_ == *other.universe_) &&
         assignment_ == other.assignment_;
}

BinaryRelation pairwise(const ChoiceFunction& c) {
  const int n = c.size();
  BinaryRelation rel(n);
  for (Alt a = 0; a < n; ++a) {
    for (Alt b = a + 1; b < n; ++b) {
      const Mask menu = alt_bit(a) | alt_bit(b);
      const Alt winner = c.choice(menu);
      rel.add(winner, winner == a ? b : a);
    }
  }
  return rel;
}

std::string to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedDocument: return "MalformedDocument";
    case ParseErrorKind::UnknownAlternative: return "UnknownAlternative";
    case ParseErrorKind::ChoiceNotInMenu: return "ChoiceNotInMenu";
    case ParseErrorKind::DuplicateMenu: return "DuplicateMenu";
    case ParseErrorKind::MissingMenu: return "MissingMenu";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::string menu, const std::string& message)
    : std::runtime_error(to_string(kind) + (menu.empty() ? "" : " " + menu) + ": " + message),
      kind_(kind),
      menu_(std::move(menu)) {}

ChoiceFunction parse_choice_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ParseErrorKind::MalformedDocument, "", e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(ParseErrorKind::MalformedDocument, "", "document must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "alternatives" && key != "choices") {
      throw ParseError(ParseErrorKind::MalformedDocument, "", "unknown top-level key: " + key);
    }
  }
  if (!doc.contains("alternatives") || !doc["alternatives"].is_array()) {
    throw ParseError(ParseErrorKind::MalformedDocument, "", "missing \"alternatives\" array");
  }
  if (!doc.contains("choices") || !doc["choices"].is_array()) {
    throw ParseError(ParseErrorKind::MalformedDocument, "", "missing \"choices\" array");
  }

  std::vector<std::string> labels;
  for (const auto& item : doc["alternatives"]) {
    if (!item.is_string()) {
      throw ParseError(ParseErrorKind::MalformedDocument, "", "alternatives must be strings");
    }
    labels.push_back(item.get<std::string>());
  }
  std::shared_ptr<const Universe> universe;
  try {
    universe = std::make_shared<const Universe>(labels);
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseErrorKind::MalformedDocument, "", e.what());
  }
  const int n = universe->size();
  const Mask all = full_mask(n);

  std::vector<std::uint8_t> assignment(static_cast<size_t>(all) + 1, 0);
  std::vector<bool> listed(static_cast<size_t>(all) + 1, false);
  for (Mask menu = 1; menu <= all; ++menu) {
    if (mask_size(menu) == 1) assignment[menu] = static_cast<std::uint8_t>(lowest_alt(menu));
  }

  for (const auto& entry : doc["choices"]) {
    if (!entry.is_object() || !entry.contains("menu") || !entry.contains("choice") ||
        entry.size() != 2 || !entry["menu"].is_array() || !entry["choice"].is_string()) {
      throw ParseError(ParseErrorKind::MalformedDocument, "",
                       "each choice entry needs a \"menu\" array and a \"choice\" string");
    }
    std::vector<std::string> menu_labels;
    for (const auto& m : entry["menu"]) {
      if (!m.is_string()) {
        throw ParseError(ParseErrorKind::MalformedDocument, "", "menu members must be strings");
      }
      menu_labels.push_back(m.get<std::string>());
    }
    std::vector<std::string> sorted = menu_labels;
    std::sort(sorted.begin(), sorted.end());
    const std::string rendered = render_menu(sorted);
    if (menu_labels.empty()) {
      throw ParseError(ParseErrorKind::MalformedDocument, rendered, "menus must be nonempty");
    }
    Mask menu = 0;
    for (const auto& label : menu_labels) {
      const auto idx = universe->index_of(label);
      if (!idx) {
        throw ParseError(ParseErrorKind::UnknownAlternative, rendered,
                         "menu member \"" + label + "\" is not an alternative");
      }
      if (mask_contains(menu, *idx)) {
        throw ParseError(ParseErrorKind::MalformedDocument, rendered,
                         "menu repeats member \"" + label + "\"");
      }
      menu |= alt_bit(*idx);
    }
    const std::string choice_label = entry["choice"].get<std::string>();
    const auto choice_idx = universe->index_of(choice_label);
    if (!choice_idx) {
      throw ParseError(ParseErrorKind::UnknownAlternative, rendered,
                       "choice \"" + choice_label + "\" is not an alternative");
    }
    if (!mask_contains(menu, *choice_idx)) {
      throw ParseError(ParseErrorKind::ChoiceNotInMenu, rendered,
                       "choice \"" + choice_label + "\" is not a member of the menu");
    }
    if (listed[menu]) {
      throw ParseError(ParseErrorKind::DuplicateMenu, rendered, "menu listed twice");
    }
    listed[menu] = true;
    assignment[menu] = static_cast<std::uint8_t>(*choice_idx);
  }

  for (Mask menu : menus_in_order(n)) {
    if (!listed[menu]) {
      std::vector<std::string> menu_labels;
      for (Alt a : mask_alts(menu)) menu_labels.push_back(universe->label(a));
      std::sort(menu_labels.begin(), menu_labels.end());
      throw ParseError(ParseErrorKind::MissingMenu, render_menu(menu_labels),
                       "no entry for this menu");
    }
  }

  return ChoiceFunction(universe, std::move(assignment));
}

std::string serialize_choice_document(const ChoiceFunction& c) {
  const Universe& u = c.universe();
  nlohmann::json doc;
  doc["alternatives"] = u.labels();

  struct Entry {
    std::vector<std::string> menu;
    std::string choice;
  };
  std::vector<Entry> entries;
  for (Mask menu : menus_in_order(u.size())) {
    Entry e;
    for (Alt a : mask_alts(menu)) e.menu.push_back(u.label(a));
    std::sort(e.menu.begin(), e.menu.end());
    e.choice = u.label(c.choice(menu));
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.menu.size() != b.menu.size()) return a.menu.size() < b.menu.size();
    return a.menu < b.menu;
  });

  doc["choices"] = nlohmann::json::array();
  for (const auto& e : entries) {
    doc["choices"].push_back({{"menu", e.menu}, {"choice", e.choice}});
  }
  return doc.dump(2) + "\n";
}

std::uint64_t choice_key(const ChoiceFunction& c) {
  assert(c.size() <= 4);
  std::uint64_t key = 0;
  int slot = 0;
  for (Mask menu : menus_in_order(c.size())) {
    key |= static_cast<std::uint64_t>(c.choice(menu)) << (2 * slot);
    ++slot;
  }
  return key;
}

std::uint64_t small_menu_key(const ChoiceFunction& c) {
  assert(c.size() <= 4);
  std::uint64_t key = 0;
  int slot = 0;
  for (Mask menu : menus_in_order(c.size())) {
    if (mask_size(menu) > 3) continue;
    key |= static_cast<std::uint64_t>(c.choice(menu)) << (2 * slot);
    ++slot;
  }
  return key;
}

const std::vector<Mask>& menus_in_order(int n) {
  static std::array<std::vector<Mask>, kMaxUniverse + 1> cache;
  static std::once_flag flags[kMaxUniverse + 1];
  assert(n >= 0 && n <= kMaxUniverse);
  std::call_once(flags[n], [n] {
    std::vector<Mask> menus;
    for (Mask m = 1; m <= full_mask(n); ++m) {
      if (mask_size(m) >= 2) menus.push_back(m);
    }
    std::stable_sort(menus.begin(), menus.end(), [](Mask a, Mask b) {
      if (mask_size(a) != mask_size(b)) return mask_size(a) < mask_size(b);
      return a < b;
    });
    cache[n] = std::move(menus);
  });
  return cache[n];
}

}  // namespace cbr
