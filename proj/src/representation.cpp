#include "cbr/representation.hpp"

namespace cbr {

std::string to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::CBR: return "cbr";
    case Flavor::TCBR: return "tcbr";
    case Flavor::RSM: return "rsm";
    case Flavor::TSM: return "tsm";
    case Flavor::EPH: return "eph";
  }
  return "?";
}

std::optional<Flavor> flavor_from_string(const std::string& name) {
  for (Flavor f : {Flavor::CBR, Flavor::TCBR, Flavor::RSM, Flavor::TSM, Flavor::EPH}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

bool flavor_valid(const RepresentationPair& rep) {
  if (rep.first.size() != rep.second.size()) return false;
  const bool first_asym = is_asymmetric(rep.first);
  const bool second_asym = is_asymmetric(rep.second);
  switch (rep.flavor) {
    case Flavor::CBR:
      return first_asym && is_transitive(rep.first) && second_asym && is_complete(rep.second);
    case Flavor::TCBR:
      return first_asym && is_transitive(rep.first) && second_asym &&
             is_complete(rep.second) && is_transitive(rep.second);
    case Flavor::RSM:
      return first_asym && second_asym;
    case Flavor::TSM:
      return first_asym && is_transitive(rep.first) && second_asym && is_transitive(rep.second);
    case Flavor::EPH:
      return first_asym && is_transitive(rep.first) && is_complete(rep.first) && second_asym &&
             is_transitive(rep.second) && is_complete(rep.second);
  }
  return false;
}

std::optional<Alt> eval(Mask menu, const RepresentationPair& rep) {
  assert(menu != 0);
  Mask shortlist = 0;
  switch (rep.flavor) {
    case Flavor::CBR:
    case Flavor::TCBR:
      shortlist = menu & ~minimal_set(menu, rep.first);
      break;
    case Flavor::RSM:
    case Flavor::TSM:
      shortlist = maximal_set(menu, rep.first);
      break;
    case Flavor::EPH: {
      if (mask_size(menu) == 1) return lowest_alt(menu);
      // The worst member beats nobody in the menu; unique for a linear order.
      Mask worst = 0;
      for (Alt a : mask_alts(menu)) {
        if (!(rep.first.row(a) & menu)) worst |= alt_bit(a);
      }
      if (mask_size(worst) != 1) return std::nullopt;
      shortlist = menu & ~worst;
      break;
    }
  }
  if (!shortlist) return std::nullopt;
  const Mask winners = maximal_set(shortlist, rep.second);
  if (mask_size(winners) != 1) return std::nullopt;
  return lowest_alt(winners);
}

InducedChoice induced_choice(const RepresentationPair& rep,
                             std::shared_ptr<const Universe> universe) {
  assert(universe->size() == rep.first.size());
  const Mask all = universe->all();
  InducedChoice out;
  std::vector<std::uint8_t> assignment(static_cast<size_t>(all) + 1, 0);
  for (Mask menu = 1; menu <= all; ++menu) {
    const auto pick = eval(menu, rep);
    if (!pick) {
      out.failing_menus.push_back(menu);
    } else {
      assignment[menu] = static_cast<std::uint8_t>(*pick);
    }
  }
  if (out.failing_menus.empty()) {
    out.choice = ChoiceFunction(std::move(universe), std::move(assignment));
  }
  return out;
}

namespace {

// P1: the chooser over every non-minimal co-member, given a first rationale.
BinaryRelation first_block(const ChoiceFunction& c, const BinaryRelation& r) {
  BinaryRelation p1(c.size());
  for (Mask s : menus_in_order(c.size())) {
    const Alt x = c.choice(s);
    const Mask minset = minimal_set(s, r);
    for (Alt y : mask_alts(s & ~minset & ~alt_bit(x))) p1.add(x, y);
  }
  return p1;
}

std::optional<AxiomVerdict> first_failure(const ChoiceFunction& c,
                                          std::initializer_list<AxiomId> axioms) {
  for (AxiomId id : axioms) {
    AxiomVerdict v = check_axiom(c, id);
    if (!v.pass) return v;
  }
  return std::nullopt;
}

}  // namespace

SynthesisOutcome synthesize_cbr(const ChoiceFunction& c) {
  SynthesisOutcome out;
  out.failure = first_failure(c, {AxiomId::NC, AxiomId::WCC_STAR, AxiomId::NBC_STAR,
                                  AxiomId::R_WARP});
  if (out.failure) return out;

  const BinaryRelation r_c = transitive_closure(revealed_r(c, RevealedMode::FullMenu));
  const BinaryRelation p1 = first_block(c, r_c);
  const BinaryRelation p2 =
      relation_difference(r_c, relation_union(p1, relation_inverse(p1)));
  const BinaryRelation p_c = relation_union(p1, p2);
  if (!is_complete(p_c) || !is_asymmetric(p_c)) {
    throw InternalInvariantBreach("synthesized second rationale is not a complete asymmetric relation");
  }
  out.rep = RepresentationPair{r_c, p_c, Flavor::CBR};
  return out;
}

SynthesisOutcome synthesize_tcbr(const ChoiceFunction& c, bool downgrade_breach) {
  SynthesisOutcome out;
  out.failure = first_failure(c, {AxiomId::NC, AxiomId::WCC_STAR, AxiomId::NBC_STAR,
                                  AxiomId::R_SARP});
  if (out.failure) return out;

  const BinaryRelation r_c = transitive_closure(revealed_r(c, RevealedMode::FullMenu));
  const BinaryRelation p1_bar = transitive_closure(first_block(c, r_c));
  const BinaryRelation p2_hat =
      relation_difference(r_c, relation_union(p1_bar, relation_inverse(p1_bar)));
  const BinaryRelation p_c = relation_union(p1_bar, p2_hat);
  std::string breach;
  if (!is_complete(p_c)) breach = "not complete";
  else if (!is_asymmetric(p_c)) breach = "not asymmetric";
  else if (!is_transitive(p_c)) breach = "not transitive";
  if (!breach.empty()) {
    const std::string what = "synthesized second rationale is " + breach +
                             "; the order guarantee failed";
    if (!downgrade_breach) throw InternalInvariantBreach(what);
    out.breach = what;
    return out;
  }
  out.rep = RepresentationPair{r_c, p_c, Flavor::TCBR};
  return out;
}

VerifyResult verify(const ChoiceFunction& c, const RepresentationPair& rep) {
  assert(rep.first.size() == c.size());
  VerifyResult result;
  const Mask all = c.all_menu();
  for (Mask menu = 1; menu <= all; ++menu) {
    const auto got = eval(menu, rep);
    const Alt expected = c.choice(menu);
    if (!got || *got != expected) {
      result.ok = false;
      result.mismatches.push_back(Mismatch{menu, expected, got});
    }
  }
  return result;
}

}  // namespace cbr
