#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbr/axioms.hpp"

namespace cbr {

enum class Flavor { CBR, TCBR, RSM, TSM, EPH };

std::string to_string(Flavor flavor);
std::optional<Flavor> flavor_from_string(const std::string& name);

/// An ordered pair of rationales with the structural requirements of its
/// flavor:
///   CBR:  first transitive+asymmetric, second complete+asymmetric
///   TCBR: CBR with the second rationale also transitive (a linear order)
///   RSM:  both asymmetric
///   TSM:  both transitive+asymmetric
///   EPH:  both linear orders
struct RepresentationPair {
  BinaryRelation first;
  BinaryRelation second;
  Flavor flavor = Flavor::CBR;
};

bool flavor_valid(const RepresentationPair& rep);

/// One menu under the pair's procedure, or nullopt when the procedure does
/// not pin down a unique choice there (which marks the pair invalid as a
/// representation, not a fault).
///   CBR/TCBR: sole max(menu minus min(menu, first), second)
///   RSM/TSM:  sole max(max(menu, first), second)
///   EPH:      drop the unique first-worst member (menus of size >= 2), then
///             take the sole second-maximum
std::optional<Alt> eval(Mask menu, const RepresentationPair& rep);

/// Totalization of eval over every nonempty menu.
struct InducedChoice {
  std::optional<ChoiceFunction> choice;
  std::vector<Mask> failing_menus;

  bool ok() const { return choice.has_value(); }
};
InducedChoice induced_choice(const RepresentationPair& rep,
                             std::shared_ptr<const Universe> universe);

/// Thrown when a construction contradicts one of the structural guarantees
/// its theorem promises; always a bug or a genuine gap, never data-dependent.
class InternalInvariantBreach : public std::logic_error {
 public:
  explicit InternalInvariantBreach(const std::string& what) : std::logic_error(what) {}
};

struct SynthesisOutcome {
  std::optional<RepresentationPair> rep;
  std::optional<AxiomVerdict> failure;   // the failing axiom when !rep
  std::optional<std::string> breach;     // only with downgrade_breach set

  bool ok() const { return rep.has_value(); }
};

/// Canonical representation from choice data: the closed revealed relation as
/// the first rationale and the two-block second rationale built from it.
/// Fails with the first failing axiom verdict when the data is not
/// representable.
SynthesisOutcome synthesize_cbr(const ChoiceFunction& c);

/// Variant with a transitive (linear order) second rationale. The order
/// checks on the result are hard postconditions; a violation throws
/// InternalInvariantBreach unless downgrade_breach is set, in which case it
/// is reported in the outcome.
SynthesisOutcome synthesize_tcbr(const ChoiceFunction& c, bool downgrade_breach = false);

struct Mismatch {
  Mask menu = 0;
  Alt expected = 0;
  std::optional<Alt> got;  // nullopt: no unique choice
};

struct VerifyResult {
  bool ok = true;
  std::vector<Mismatch> mismatches;
};

/// Does the pair reproduce the data menu for menu?
VerifyResult verify(const ChoiceFunction& c, const RepresentationPair& rep);

}  // namespace cbr
