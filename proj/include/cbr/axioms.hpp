#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cbr/reversals.hpp"

namespace cbr {

enum class AxiomId {
  NC,
  WCC_STAR,
  NBC_STAR,
  R_WARP,
  R_SARP,
  R_WARP_STAR,
  WWARP,
  WARP,
  EXPANSION,
  NEGATIVE_EXPANSION,
  ALWAYS_CHOSEN,
  NBC,
  EXCLUSIVITY,
};

inline constexpr std::array<AxiomId, 13> kAllAxioms = {
    AxiomId::NC,         AxiomId::WCC_STAR,  AxiomId::NBC_STAR,
    AxiomId::R_WARP,     AxiomId::R_SARP,    AxiomId::R_WARP_STAR,
    AxiomId::WWARP,      AxiomId::WARP,      AxiomId::EXPANSION,
    AxiomId::NEGATIVE_EXPANSION, AxiomId::ALWAYS_CHOSEN, AxiomId::NBC,
    AxiomId::EXCLUSIVITY,
};

std::string to_string(AxiomId id);
std::optional<AxiomId> axiom_from_string(const std::string& name);

/// Structured counterexample. Field roles per axiom:
///   NC:             menus=[S], alternatives=[x]
///   WCC_STAR:       menus=[S], alternatives=[x,y]
///   NBC_STAR:       chain=[x1..xk] with consecutive revealed links, C(x1 xk) != x1
///   R_WARP:         menus=[S,S'], alternatives=[x,y]
///   R_SARP:         menus=[S1..Sk], chain=[x1..xk], Si witnessing xi over x(i+1 mod k)
///   R_WARP_STAR:    menus=[S',S,S''], alternatives=[x,y]
///   WWARP:          menus=[S',S], alternatives=[x,y]
///   WARP:           menus=[S,S'], alternatives=[x,y]
///   EXPANSION:      menus=[S,S'], alternatives=[x]
///   NEGATIVE_EXPANSION: menus=[S,S'], alternatives=[x,y]
///   ALWAYS_CHOSEN:  menus=[S], alternatives=[x]
///   NBC:            chain=[x1..xk] pairwise cycle
///   EXCLUSIVITY:    reversals=[weak,strong], alternatives=[x,y]
struct AxiomWitness {
  std::vector<Mask> menus;
  std::vector<Alt> alternatives;
  std::vector<Alt> chain;
  std::vector<Reversal> reversals;
};

struct AxiomVerdict {
  AxiomId axiom = AxiomId::NC;
  bool pass = true;
  std::optional<AxiomWitness> witness;
};

/// Exhaustive check of one axiom; fails with the first witness in canonical
/// scan order (menus by size then mask value).
AxiomVerdict check_axiom(const ChoiceFunction& c, AxiomId id);

/// Every witness instead of the first one.
std::vector<AxiomWitness> check_axiom_all(const ChoiceFunction& c, AxiomId id);

/// Re-evaluates a failing verdict's witness against the data. True when the
/// witness still falsifies the axiom.
bool replay_witness(const ChoiceFunction& c, const AxiomVerdict& verdict);

bool cbr_axioms_pass(const ChoiceFunction& c);   // A1-A4
bool tcbr_axioms_pass(const ChoiceFunction& c);  // A1-A3 + A4'

struct AnalysisReport {
  std::vector<AxiomVerdict> verdicts;  // in kAllAxioms order
  ReversalSummary reversals;
  bool cbr_representable = false;
  bool tcbr_representable = false;

  const AxiomVerdict& verdict(AxiomId id) const;
};

AnalysisReport analyze(const ChoiceFunction& c);

}  // namespace cbr
