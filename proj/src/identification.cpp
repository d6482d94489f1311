#include "cbr/identification.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cbr {

namespace {

void require_representable(const ChoiceFunction& c) {
  for (AxiomId id : {AxiomId::NC, AxiomId::WCC_STAR, AxiomId::NBC_STAR, AxiomId::R_WARP}) {
    AxiomVerdict v = check_axiom(c, id);
    if (!v.pass) throw NotRepresentableError(std::move(v));
  }
}

}  // namespace

BinaryRelation p_hat(const ChoiceFunction& c, const BinaryRelation& r) {
  if (r.size() != c.size() || !is_asymmetric(r) || !is_transitive(r)) {
    throw std::invalid_argument("p_hat needs a transitive asymmetric relation over the universe");
  }
  BinaryRelation out(c.size());
  for (Mask s : menus_in_order(c.size())) {
    const Alt x = c.choice(s);
    const Mask minset = minimal_set(s, r);
    for (Alt y : mask_alts(s & ~minset & ~alt_bit(x))) out.add(x, y);
  }
  return out;
}

BinaryRelation q_hat(const ChoiceFunction& c) {
  const int n = c.size();
  BinaryRelation out(n);
  const auto reversals = find_reversals(c);
  for (const Reversal& r : reversals) {
    if (r.kind != ReversalKind::Strong) continue;
    // A strong (x,w) reversal on S excludes x over every other member of S,
    // and every other member of S over x.
    for (Alt u : mask_alts(r.base & ~alt_bit(r.x))) {
      out.add(r.x, u);
      out.add(u, r.x);
    }
  }
  std::set<std::pair<Alt, Alt>> weak_pairs;
  for (const Reversal& r : reversals) {
    if (r.kind == ReversalKind::Weak) weak_pairs.insert({r.x, r.y});
  }
  for (const auto& [w, x] : weak_pairs) {
    // A weak (w,x) reversal excludes x over everything co-present wherever w
    // is chosen with both around.
    for (Mask s : menus_in_order(n)) {
      if (c.choice(s) != w || !mask_contains(s, x)) continue;
      for (Alt y : mask_alts(s & ~alt_bit(x))) out.add(x, y);
    }
  }
  return out;
}

RMaxResult r_max(const ChoiceFunction& c, const RMaxOptions& options) {
  require_representable(c);
  const int n = c.size();
  const BinaryRelation base = transitive_closure(revealed_r(c, RevealedMode::SmallMenu));
  BinaryRelation allowed = relation_difference(pairwise(c), q_hat(c));
  if (!relation_subset(base, allowed)) {
    throw InternalInvariantBreach("minimal first rationale escapes the admissible pair set");
  }

  const std::vector<std::pair<Alt, Alt>> candidates = relation_difference(allowed, base).pairs();
  std::set<BinaryRelation> found;

  // Grow transitively closed supersets of the base, adding candidate pairs in
  // ascending index only; a leaf counts when no candidate at all still fits.
  auto fits = [&](const BinaryRelation& current, size_t idx, BinaryRelation* closed) {
    const auto [a, b] = candidates[idx];
    if (current.contains(a, b)) return false;
    BinaryRelation next = current;
    next.add(a, b);
    next = transitive_closure(next);
    if (!is_asymmetric(next) || !relation_subset(next, allowed)) return false;
    *closed = std::move(next);
    return true;
  };

  std::function<void(const BinaryRelation&, size_t)> grow = [&](const BinaryRelation& current,
                                                                size_t start) {
    bool extended = false;
    for (size_t i = start; i < candidates.size(); ++i) {
      BinaryRelation next(n);
      if (fits(current, i, &next)) {
        extended = true;
        grow(next, i + 1);
      }
    }
    if (extended) return;
    for (size_t i = 0; i < start; ++i) {
      BinaryRelation next(n);
      if (fits(current, i, &next)) return;  // extendable by an earlier pair: not maximal
    }
    found.insert(current);
  };
  grow(transitive_closure(base), 0);

  RMaxResult result;
  for (const BinaryRelation& rel : found) {
    if (static_cast<int>(result.relations.size()) >= options.cap) {
      result.truncated = true;
      break;
    }
    result.relations.push_back(rel);
  }
  return result;
}

MinimalRepresentationResult minimal_representation(const ChoiceFunction& c,
                                                   bool cross_check_modes) {
  require_representable(c);
  const BinaryRelation small = revealed_r(c, RevealedMode::SmallMenu);
  if (cross_check_modes) {
    const BinaryRelation full = revealed_r(c, RevealedMode::FullMenu);
    if (!(small == full)) {
      throw InternalInvariantBreach("revealed relation modes disagree on representable data");
    }
  }
  MinimalRepresentationResult out;
  out.r_min = transitive_closure(small);
  out.p_min = p_hat(c, out.r_min);
  return out;
}

ClassMembershipContext class_membership_context(const ChoiceFunction& c) {
  require_representable(c);
  ClassMembershipContext context;
  context.pc = pairwise(c);
  context.r_min = transitive_closure(revealed_r(c, RevealedMode::SmallMenu));
  context.upper = relation_difference(context.pc, q_hat(c));
  return context;
}

bool in_class(const ChoiceFunction& c, const ClassMembershipContext& context,
              const BinaryRelation& r, const BinaryRelation& p) {
  if (r.size() != c.size() || p.size() != c.size()) return false;
  if (!is_transitive(r) || !is_asymmetric(r)) return false;
  if (!relation_subset(context.r_min, r) || !relation_subset(r, context.upper)) return false;
  if (!is_complete(p) || !is_asymmetric(p)) return false;
  const BinaryRelation lower =
      relation_union(p_hat(c, r), relation_difference(context.pc, r));
  return relation_subset(lower, p);
}

bool in_class(const ChoiceFunction& c, const BinaryRelation& r, const BinaryRelation& p) {
  return in_class(c, class_membership_context(c), r, p);
}

IdentificationReport identify(const ChoiceFunction& c, const RMaxOptions& options) {
  IdentificationReport report;
  const MinimalRepresentationResult minimal = minimal_representation(c);
  report.r_min = minimal.r_min;
  report.p_min = minimal.p_min;
  report.q_hat = q_hat(c);
  RMaxResult max = r_max(c, options);
  report.r_max = std::move(max.relations);
  report.truncated = max.truncated;
  return report;
}

}  // namespace cbr
