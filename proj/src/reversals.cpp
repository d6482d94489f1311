#include "cbr/reversals.hpp"

#include <algorithm>

namespace cbr {

std::vector<Reversal> find_reversals(const ChoiceFunction& c) {
  const int n = c.size();
  const Mask all = c.all_menu();
  const BinaryRelation pc = pairwise(c);
  std::vector<Reversal> out;
  for (Alt x = 0; x < n; ++x) {
    for (Alt y = 0; y < n; ++y) {
      if (x == y) continue;
      const Mask pair = alt_bit(x) | alt_bit(y);
      if (c.choice(pair) != x) continue;
      std::vector<Reversal> for_pair;
      for (Mask base = pair; base <= all; ++base) {
        if ((base & pair) != pair) continue;
        if (c.choice(base) != x) continue;
        for (Alt z = 0; z < n; ++z) {
          if (mask_contains(base, z)) continue;
          if (c.choice(base | alt_bit(z)) != y) continue;
          Reversal r;
          r.x = x;
          r.y = y;
          r.base = base;
          r.trigger = z;
          r.kind = pc.contains(x, z) ? ReversalKind::Weak : ReversalKind::Strong;
          for_pair.push_back(r);
        }
      }
      std::sort(for_pair.begin(), for_pair.end(), [](const Reversal& a, const Reversal& b) {
        if (mask_size(a.base) != mask_size(b.base)) return mask_size(a.base) < mask_size(b.base);
        if (a.base != b.base) return a.base < b.base;
        return a.trigger < b.trigger;
      });
      out.insert(out.end(), for_pair.begin(), for_pair.end());
    }
  }
  return out;
}

namespace {

BinaryRelation revealed_full(const ChoiceFunction& c) {
  const BinaryRelation pc = pairwise(c);
  BinaryRelation rel(c.size());
  auto reveal = [&](Alt a, Alt b) {
    // A revealed pair must agree with the pairwise choice; contributions that
    // do not are inconsistent data, not information about the rationale.
    if (pc.contains(a, b)) rel.add(a, b);
  };
  for (const Reversal& r : find_reversals(c)) {
    if (r.kind == ReversalKind::Weak) {
      reveal(r.x, r.y);        // weak (x,y) reversal
      reveal(r.y, r.trigger);  // weak (w,x) reversal due to y, read for (x,y)=(r.y, trigger)
    } else {
      reveal(r.trigger, r.x);  // strong (y,w) reversal due to x, read for (x,y)=(trigger, r.x)
    }
  }
  return rel;
}

BinaryRelation revealed_small(const ChoiceFunction& c) {
  const int n = c.size();
  const BinaryRelation pc = pairwise(c);
  BinaryRelation rel(n);
  for (Alt a = 0; a < n; ++a) {
    for (Alt b = 0; b < n; ++b) {
      if (a == b || !pc.contains(a, b)) continue;
      bool found = false;
      for (Alt z = 0; z < n && !found; ++z) {
        if (z == a || z == b) continue;
        const Mask triple = alt_bit(a) | alt_bit(b) | alt_bit(z);
        const Alt t = c.choice(triple);
        // (i) a >c b >c z, C(abz)=b, guarded by a >c z.
        if (pc.contains(b, z) && t == b && pc.contains(a, z)) found = true;
        // (ii) z >c a >c b, C(abz)=a, guarded by z >c b.
        else if (pc.contains(z, a) && t == a && pc.contains(z, b)) found = true;
        // (iii) b >c z >c a >c b cyclic, C(abz)=z.
        else if (pc.contains(b, z) && pc.contains(z, a) && t == z) found = true;
        // (iv) a >c b >c z, C(abz)=a, C(bzw)=b, C(abzw)=z: the strong
        // reversal seen from a triple to the quadruple.
        else if (pc.contains(b, z) && t == a) {
          for (Alt w = 0; w < n && !found; ++w) {
            if (w == a || w == b || w == z) continue;
            const Mask bzw = alt_bit(b) | alt_bit(z) | alt_bit(w);
            if (c.choice(bzw) == b && c.choice(triple | alt_bit(w)) == z) found = true;
          }
        }
      }
      if (found) rel.add(a, b);
    }
  }
  return rel;
}

}  // namespace

BinaryRelation revealed_r(const ChoiceFunction& c, RevealedMode mode) {
  return mode == RevealedMode::FullMenu ? revealed_full(c) : revealed_small(c);
}

std::optional<MenuChain> has_single_reversal(const ChoiceFunction& c, Alt x, Alt y) {
  assert(x != y);
  const Mask pair = alt_bit(x) | alt_bit(y);
  if (c.choice(pair) != x) return std::nullopt;
  for (Mask s : menus_in_order(c.size())) {
    if ((s & pair) != pair || s == pair) continue;
    if (c.choice(s) == y) return MenuChain{{pair, s}};
  }
  return std::nullopt;
}

std::optional<MenuChain> has_double_reversal(const ChoiceFunction& c, Alt x, Alt y) {
  assert(x != y);
  const Mask pair = alt_bit(x) | alt_bit(y);
  if (c.choice(pair) != x) return std::nullopt;
  const auto& menus = menus_in_order(c.size());
  for (Mask s : menus) {
    if ((s & pair) != pair || s == pair || c.choice(s) != y) continue;
    for (Mask s2 : menus) {
      if ((s2 & s) != s || s2 == s) continue;
      if (c.choice(s2) == x) return MenuChain{{pair, s, s2}};
    }
  }
  return std::nullopt;
}

DoubleDecomposition decompose_double(const ChoiceFunction& c, const MenuChain& witness) {
  assert(witness.menus.size() == 3);
  const Mask pair = witness.menus[0];
  const Alt x = c.choice(pair);
  const Alt y = c.choice(witness.menus[1]);
  const auto reversals = find_reversals(c);
  for (const Reversal& strong : reversals) {
    if (strong.kind != ReversalKind::Strong || strong.x != x || strong.y != y) continue;
    for (const Reversal& weak : reversals) {
      if (weak.kind != ReversalKind::Weak || weak.x != strong.trigger || weak.y != x) continue;
      return DoubleDecomposition{strong, weak};
    }
  }
  throw NotDecomposableError("no strong (x,y) plus weak (z1,x) reversal pair explains the double reversal");
}

SmpVerdict check_smp(const ChoiceFunction& c) {
  const int n = c.size();
  const BinaryRelation pc = pairwise(c);
  for (const Reversal& r : find_reversals(c)) {
    const Mask pair = alt_bit(r.x) | alt_bit(r.y);
    const Mask triple = pair | alt_bit(r.trigger);
    bool ok = false;
    if (r.kind == ReversalKind::Weak) {
      ok = pc.contains(r.y, r.trigger) && c.choice(triple) == r.y;
    } else {
      // Cyclic triple: x >c y >c z >c x with C(xyz)=y.
      if (pc.contains(r.y, r.trigger) && pc.contains(r.trigger, r.x) && c.choice(triple) == r.y) {
        ok = true;
      } else if (pc.contains(r.trigger, r.x) && pc.contains(r.x, r.y) &&
                 c.choice(triple) == r.trigger) {
        for (Alt w = 0; w < n && !ok; ++w) {
          if (mask_contains(triple, w)) continue;
          if (c.choice(pair | alt_bit(w)) == r.x && c.choice(triple | alt_bit(w)) == r.y) ok = true;
        }
      }
    }
    if (!ok) return SmpVerdict{false, r};
  }
  return SmpVerdict{};
}

ExclusivityVerdict check_exclusivity(const ChoiceFunction& c) {
  const auto reversals = find_reversals(c);
  const int n = c.size();
  for (Alt x = 0; x < n; ++x) {
    for (Alt y = 0; y < n; ++y) {
      if (x == y) continue;
      std::optional<Reversal> weak, strong;
      for (const Reversal& r : reversals) {
        if (r.x != x || r.y != y) continue;
        if (r.kind == ReversalKind::Weak && !weak) weak = r;
        if (r.kind == ReversalKind::Strong && !strong) strong = r;
      }
      if (weak && strong) return ExclusivityVerdict{false, weak, strong};
    }
  }
  return ExclusivityVerdict{};
}

ReversalSummary summarize_reversals(const ChoiceFunction& c) {
  ReversalSummary summary;
  for (const Reversal& r : find_reversals(c)) {
    if (r.kind == ReversalKind::Weak) {
      ++summary.weak_count;
    } else {
      ++summary.strong_count;
    }
  }
  const int n = c.size();
  for (Alt x = 0; x < n; ++x) {
    for (Alt y = 0; y < n; ++y) {
      if (x != y && has_double_reversal(c, x, y)) summary.double_pairs.emplace_back(x, y);
    }
  }
  return summary;
}

}  // namespace cbr
