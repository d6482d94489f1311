#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cbr/choice.hpp"

namespace cbr {

enum class ReversalKind { Weak, Strong };

/// A witnessed (x,y) reversal due to `trigger` on `base`:
///   C({x,y}) = C(base) = x and C(base | trigger) = y,
/// weak when x pairwise-beats the trigger, strong when the trigger beats x.
struct Reversal {
  Alt x = 0;
  Alt y = 0;
  Mask base = 0;
  Alt trigger = 0;
  ReversalKind kind = ReversalKind::Weak;

  bool operator==(const Reversal&) const = default;
};

/// Every reversal of the choice function, ordered by (pair, base size, base
/// mask, trigger).
std::vector<Reversal> find_reversals(const ChoiceFunction& c);

enum class RevealedMode { FullMenu, SmallMenu };

/// The revealed relation over the first rationale. FullMenu reads it off the
/// reversal patterns on arbitrary menus; SmallMenu evaluates the four
/// pair/triple/quadruple patterns. Both keep the invariant that a revealed
/// pair agrees with the pairwise choice. The two modes coincide on
/// CBR-representable data.
BinaryRelation revealed_r(const ChoiceFunction& c, RevealedMode mode);

/// Nested menus witnessing reversal patterns for a fixed pair. For a single
/// reversal the chain is [{x,y}, S] with C(S)=y; for a double reversal
/// [{x,y}, S, S'] with C(S)=y and C(S')=x.
struct MenuChain {
  std::vector<Mask> menus;
};

std::optional<MenuChain> has_single_reversal(const ChoiceFunction& c, Alt x, Alt y);
std::optional<MenuChain> has_double_reversal(const ChoiceFunction& c, Alt x, Alt y);

class NotDecomposableError : public std::runtime_error {
 public:
  explicit NotDecomposableError(const std::string& what) : std::runtime_error(what) {}
};

/// Splits a double reversal into the strong (x,y) reversal and the weak
/// (z1,x) reversal that compose it. Throws NotDecomposableError when no such
/// pair of reversals exists, which cannot happen on representable data.
struct DoubleDecomposition {
  Reversal strong;
  Reversal weak;
};
DoubleDecomposition decompose_double(const ChoiceFunction& c, const MenuChain& witness);

/// Small menu property: every weak reversal shows up as its pair-to-triple
/// pattern and every strong reversal as either the cyclic-triple pattern or
/// the triple-plus-quadruple pattern.
struct SmpVerdict {
  bool pass = true;
  std::optional<Reversal> offender;
};
SmpVerdict check_smp(const ChoiceFunction& c);

/// Exclusivity: no ordered pair has both a weak and a strong reversal.
struct ExclusivityVerdict {
  bool pass = true;
  std::optional<Reversal> weak;
  std::optional<Reversal> strong;
};
ExclusivityVerdict check_exclusivity(const ChoiceFunction& c);

struct ReversalSummary {
  int weak_count = 0;
  int strong_count = 0;
  std::vector<std::pair<Alt, Alt>> double_pairs;
};
ReversalSummary summarize_reversals(const ChoiceFunction& c);

}  // namespace cbr
