#include "cbr/axioms.hpp"

#include <algorithm>
#include <functional>

namespace cbr {

namespace {

// A sink receives each witness in canonical order and returns true to keep
// scanning. check_axiom stops at the first; check_axiom_all collects all.
using Sink = std::function<bool(AxiomWitness)>;

void scan_nc(const ChoiceFunction& c, const BinaryRelation& pc, const Sink& sink) {
  for (Mask s : menus_in_order(c.size())) {
    const Alt x = c.choice(s);
    bool wins_once = (pc.row(x) & s) != 0;
    if (!wins_once) {
      AxiomWitness w;
      w.menus = {s};
      w.alternatives = {x};
      if (!sink(std::move(w))) return;
    }
  }
}

void scan_wcc_star(const ChoiceFunction& c, const Sink& sink) {
  for (Mask s : menus_in_order(c.size())) {
    if (mask_size(s) < 3) continue;
    const Alt x = c.choice(s);
    for (Alt y : mask_alts(s)) {
      if (y == x) continue;
      const Mask keep = alt_bit(x) | alt_bit(y);
      bool path = false;
      for (Alt z : mask_alts(s & ~keep)) {
        const Alt dropped = c.choice(s & ~alt_bit(z));
        if (dropped == x || dropped == y) {
          path = true;
          break;
        }
      }
      if (!path) {
        AxiomWitness w;
        w.menus = {s};
        w.alternatives = {x, y};
        if (!sink(std::move(w))) return;
      }
    }
  }
}

// Shortest path a -> b inside rel, ties broken by ascending index.
std::vector<Alt> revealed_chain(const BinaryRelation& rel, Alt from, Alt to) {
  const int n = rel.size();
  std::vector<Alt> parent(static_cast<size_t>(n), -1);
  std::vector<Alt> queue{from};
  std::vector<bool> visited(static_cast<size_t>(n), false);
  visited[static_cast<size_t>(from)] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    const Alt at = queue[head];
    for (Alt next : mask_alts(rel.row(at))) {
      if (visited[static_cast<size_t>(next)]) continue;
      visited[static_cast<size_t>(next)] = true;
      parent[static_cast<size_t>(next)] = at;
      queue.push_back(next);
    }
  }
  std::vector<Alt> chain;
  for (Alt at = to; at != -1; at = parent[static_cast<size_t>(at)]) chain.push_back(at);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

void scan_nbc_star(const ChoiceFunction& c, const BinaryRelation& pc, const Sink& sink) {
  const BinaryRelation rr = revealed_r(c, RevealedMode::FullMenu);
  const BinaryRelation rbar = transitive_closure(rr);
  const int n = c.size();
  for (Alt a = 0; a < n; ++a) {
    for (Alt b = 0; b < n; ++b) {
      if (a == b || !rbar.contains(a, b) || pc.contains(a, b)) continue;
      AxiomWitness w;
      w.chain = revealed_chain(rr, a, b);
      if (!sink(std::move(w))) return;
    }
  }
}

struct Dominance {
  BinaryRelation edges;
  std::array<std::array<Mask, kMaxUniverse>, kMaxUniverse> via{};
};

// x dominates y when some menu chooses x while y sits in it outside the
// minimal set of the closed revealed relation.
Dominance build_dominance(const ChoiceFunction& c, const BinaryRelation& rbar) {
  Dominance d;
  d.edges = BinaryRelation(c.size());
  for (Mask s : menus_in_order(c.size())) {
    const Alt x = c.choice(s);
    const Mask minset = minimal_set(s, rbar);
    for (Alt y : mask_alts(s & ~minset & ~alt_bit(x))) {
      if (!d.edges.contains(x, y)) {
        d.edges.add(x, y);
        d.via[static_cast<size_t>(x)][static_cast<size_t>(y)] = s;
      }
    }
  }
  return d;
}

void scan_r_warp(const ChoiceFunction& c, const Sink& sink) {
  const BinaryRelation rbar = transitive_closure(revealed_r(c, RevealedMode::FullMenu));
  const Dominance d = build_dominance(c, rbar);
  const int n = c.size();
  for (Alt a = 0; a < n; ++a) {
    for (Alt b = a + 1; b < n; ++b) {
      if (d.edges.contains(a, b) && d.edges.contains(b, a)) {
        AxiomWitness w;
        w.menus = {d.via[static_cast<size_t>(a)][static_cast<size_t>(b)],
                   d.via[static_cast<size_t>(b)][static_cast<size_t>(a)]};
        w.alternatives = {a, b};
        if (!sink(std::move(w))) return;
      }
    }
  }
}

// First cycle in the dominance digraph by DFS with ascending starts and
// neighbors; empty when acyclic.
std::vector<Alt> first_cycle(const BinaryRelation& rel) {
  const int n = rel.size();
  std::vector<int> color(static_cast<size_t>(n), 0);
  std::vector<Alt> stack;
  std::vector<Alt> cycle;
  std::function<bool(Alt)> dfs = [&](Alt at) {
    color[static_cast<size_t>(at)] = 1;
    stack.push_back(at);
    for (Alt next : mask_alts(rel.row(at))) {
      if (color[static_cast<size_t>(next)] == 1) {
        auto it = std::find(stack.begin(), stack.end(), next);
        cycle.assign(it, stack.end());
        return true;
      }
      if (color[static_cast<size_t>(next)] == 0 && dfs(next)) return true;
    }
    stack.pop_back();
    color[static_cast<size_t>(at)] = 2;
    return false;
  };
  for (Alt a = 0; a < n; ++a) {
    if (color[static_cast<size_t>(a)] == 0 && dfs(a)) return cycle;
  }
  return {};
}

void scan_r_sarp(const ChoiceFunction& c, const Sink& sink) {
  const BinaryRelation rbar = transitive_closure(revealed_r(c, RevealedMode::FullMenu));
  const Dominance d = build_dominance(c, rbar);
  const std::vector<Alt> cycle = first_cycle(d.edges);
  if (cycle.empty()) return;
  AxiomWitness w;
  w.chain = cycle;
  for (size_t i = 0; i < cycle.size(); ++i) {
    const Alt from = cycle[i];
    const Alt to = cycle[(i + 1) % cycle.size()];
    w.menus.push_back(d.via[static_cast<size_t>(from)][static_cast<size_t>(to)]);
  }
  sink(std::move(w));
}

void scan_r_warp_star(const ChoiceFunction& c, const BinaryRelation& pc, const Sink& sink) {
  const int n = c.size();
  const Mask all = c.all_menu();
  std::vector<char> below(static_cast<size_t>(all) + 1);
  std::vector<char> above(static_cast<size_t>(all) + 1);
  for (Alt x = 0; x < n; ++x) {
    for (Alt y = 0; y < n; ++y) {
      if (x == y || !pc.contains(x, y)) continue;
      const Mask pair = alt_bit(x) | alt_bit(y);
      // below[m]: some strictly intermediate menu between the pair and m
      // chooses y. Ascending mask order is a valid subset order.
      for (Mask m = pair; m <= all; ++m) {
        if ((m & pair) != pair) continue;
        char hit = 0;
        for (Alt a : mask_alts(m & ~pair)) {
          const Mask sub = m & ~alt_bit(a);
          if (below[sub] || (sub != pair && c.choice(sub) == y)) {
            hit = 1;
            break;
          }
        }
        below[m] = hit;
      }
      for (Mask m = all; m >= pair; --m) {
        if ((m & pair) != pair) continue;
        char hit = 0;
        for (Alt a : mask_alts(all & ~m)) {
          const Mask super = m | alt_bit(a);
          if (above[super] || c.choice(super) == y) {
            hit = 1;
            break;
          }
        }
        above[m] = hit;
        if (m == pair) break;
      }
      for (Mask s : menus_in_order(n)) {
        if ((s & pair) != pair || c.choice(s) != x || s == pair) continue;
        if (!below[s] || !above[s]) continue;
        Mask s_lo = 0, s_hi = 0;
        for (Mask m : menus_in_order(n)) {
          if (!s_lo && (m & pair) == pair && m != pair && (m & s) == m && m != s &&
              c.choice(m) == y) {
            s_lo = m;
          }
          if (!s_hi && (m & s) == s && m != s && c.choice(m) == y) s_hi = m;
        }
        AxiomWitness w;
        w.menus = {s_lo, s, s_hi};
        w.alternatives = {x, y};
        if (!sink(std::move(w))) return;
      }
    }
  }
}

void scan_wwarp(const ChoiceFunction& c, const BinaryRelation& pc, const Sink& sink) {
  const int n = c.size();
  const Mask all = c.all_menu();
  std::vector<char> sub_y(static_cast<size_t>(all) + 1);
  for (Alt x = 0; x < n; ++x) {
    for (Alt y = 0; y < n; ++y) {
      if (x == y || !pc.contains(x, y)) continue;
      const Mask pair = alt_bit(x) | alt_bit(y);
      for (Mask m = pair; m <= all; ++m) {
        if ((m & pair) != pair) continue;
        char hit = c.choice(m) == y ? 1 : 0;
        for (Alt a : mask_alts(m & ~pair)) {
          if (hit) break;
          hit = sub_y[m & ~alt_bit(a)];
        }
        sub_y[m] = hit;
      }
      for (Mask s : menus_in_order(n)) {
        if ((s & pair) != pair || c.choice(s) != x || !sub_y[s]) continue;
        Mask s_lo = 0;
        for (Mask m : menus_in_order(n)) {
          if ((m & pair) == pair && (m & s) == m && c.choice(m) == y) {
            s_lo = m;
            break;
          }
        }
        AxiomWitness w;
        w.menus = {s_lo, s};
        w.alternatives = {x, y};
        if (!sink(std::move(w))) return;
      }
    }
  }
}

void scan_warp(const ChoiceFunction& c, const Sink& sink) {
  const int n = c.size();
  std::array<std::array<Mask, kMaxUniverse>, kMaxUniverse> via{};
  for (Mask s : menus_in_order(n)) {
    const Alt x = c.choice(s);
    for (Alt y : mask_alts(s & ~alt_bit(x))) {
      if (!via[static_cast<size_t>(x)][static_cast<size_t>(y)]) {
        via[static_cast<size_t>(x)][static_cast<size_t>(y)] = s;
      }
    }
  }
  for (Alt a = 0; a < n; ++a) {
    for (Alt b = a + 1; b < n; ++b) {
      const Mask s_ab = via[static_cast<size_t>(a)][static_cast<size_t>(b)];
      const Mask s_ba = via[static_cast<size_t>(b)][static_cast<size_t>(a)];
      if (s_ab && s_ba) {
        AxiomWitness w;
        w.menus = {s_ab, s_ba};
        w.alternatives = {a, b};
        if (!sink(std::move(w))) return;
      }
    }
  }
}

void scan_expansion(const ChoiceFunction& c, const Sink& sink) {
  const auto& menus = menus_in_order(c.size());
  for (size_t i = 0; i < menus.size(); ++i) {
    const Alt x = c.choice(menus[i]);
    for (size_t j = i + 1; j < menus.size(); ++j) {
      if (c.choice(menus[j]) != x) continue;
      if (c.choice(menus[i] | menus[j]) != x) {
        AxiomWitness w;
        w.menus = {menus[i], menus[j]};
        w.alternatives = {x};
        if (!sink(std::move(w))) return;
      }
    }
  }
}

void scan_negative_expansion(const ChoiceFunction& c, const Sink& sink) {
  const auto& menus = menus_in_order(c.size());
  for (size_t i = 0; i < menus.size(); ++i) {
    const Alt x = c.choice(menus[i]);
    for (size_t j = i + 1; j < menus.size(); ++j) {
      if (c.choice(menus[j]) != x) continue;
      const Alt u = c.choice(menus[i] | menus[j]);
      if (u != x && mask_contains(menus[i] & menus[j], u)) {
        AxiomWitness w;
        w.menus = {menus[i], menus[j]};
        w.alternatives = {x, u};
        if (!sink(std::move(w))) return;
      }
    }
  }
}

void scan_always_chosen(const ChoiceFunction& c, const BinaryRelation& pc, const Sink& sink) {
  for (Mask s : menus_in_order(c.size())) {
    const Mask kings = maximal_set(s, pc);
    if (!kings) continue;
    const Alt king = lowest_alt(kings);
    if (c.choice(s) != king) {
      AxiomWitness w;
      w.menus = {s};
      w.alternatives = {king};
      if (!sink(std::move(w))) return;
    }
  }
}

void scan_nbc(const ChoiceFunction& c, const BinaryRelation& pc, const Sink& sink) {
  const int n = c.size();
  for (Alt a = 0; a < n; ++a) {
    for (Alt b = a + 1; b < n; ++b) {
      for (Alt d = b + 1; d < n; ++d) {
        Alt u = -1, v = -1;
        if (pc.contains(a, b) && pc.contains(b, d) && pc.contains(d, a)) {
          u = b;
          v = d;
        } else if (pc.contains(a, d) && pc.contains(d, b) && pc.contains(b, a)) {
          u = d;
          v = b;
        }
        if (u != -1) {
          AxiomWitness w;
          w.chain = {a, u, v};
          if (!sink(std::move(w))) return;
        }
      }
    }
  }
}

void scan_exclusivity(const ChoiceFunction& c, const Sink& sink) {
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
      if (weak && strong) {
        AxiomWitness w;
        w.reversals = {*weak, *strong};
        w.alternatives = {x, y};
        if (!sink(std::move(w))) return;
      }
    }
  }
}

void scan(const ChoiceFunction& c, AxiomId id, const Sink& sink) {
  const BinaryRelation pc = pairwise(c);
  switch (id) {
    case AxiomId::NC: return scan_nc(c, pc, sink);
    case AxiomId::WCC_STAR: return scan_wcc_star(c, sink);
    case AxiomId::NBC_STAR: return scan_nbc_star(c, pc, sink);
    case AxiomId::R_WARP: return scan_r_warp(c, sink);
    case AxiomId::R_SARP: return scan_r_sarp(c, sink);
    case AxiomId::R_WARP_STAR: return scan_r_warp_star(c, pc, sink);
    case AxiomId::WWARP: return scan_wwarp(c, pc, sink);
    case AxiomId::WARP: return scan_warp(c, sink);
    case AxiomId::EXPANSION: return scan_expansion(c, sink);
    case AxiomId::NEGATIVE_EXPANSION: return scan_negative_expansion(c, sink);
    case AxiomId::ALWAYS_CHOSEN: return scan_always_chosen(c, pc, sink);
    case AxiomId::NBC: return scan_nbc(c, pc, sink);
    case AxiomId::EXCLUSIVITY: return scan_exclusivity(c, sink);
  }
}

}  // namespace

std::string to_string(AxiomId id) {
  switch (id) {
    case AxiomId::NC: return "NC";
    case AxiomId::WCC_STAR: return "WCC_STAR";
    case AxiomId::NBC_STAR: return "NBC_STAR";
    case AxiomId::R_WARP: return "R_WARP";
    case AxiomId::R_SARP: return "R_SARP";
    case AxiomId::R_WARP_STAR: return "R_WARP_STAR";
    case AxiomId::WWARP: return "WWARP";
    case AxiomId::WARP: return "WARP";
    case AxiomId::EXPANSION: return "EXPANSION";
    case AxiomId::NEGATIVE_EXPANSION: return "NEGATIVE_EXPANSION";
    case AxiomId::ALWAYS_CHOSEN: return "ALWAYS_CHOSEN";
    case AxiomId::NBC: return "NBC";
    case AxiomId::EXCLUSIVITY: return "EXCLUSIVITY";
  }
  return "?";
}

std::optional<AxiomId> axiom_from_string(const std::string& name) {
  for (AxiomId id : kAllAxioms) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

AxiomVerdict check_axiom(const ChoiceFunction& c, AxiomId id) {
  AxiomVerdict verdict;
  verdict.axiom = id;
  scan(c, id, [&](AxiomWitness w) {
    verdict.pass = false;
    verdict.witness = std::move(w);
    return false;
  });
  return verdict;
}

std::vector<AxiomWitness> check_axiom_all(const ChoiceFunction& c, AxiomId id) {
  std::vector<AxiomWitness> all;
  scan(c, id, [&](AxiomWitness w) {
    all.push_back(std::move(w));
    return true;
  });
  return all;
}

bool replay_witness(const ChoiceFunction& c, const AxiomVerdict& verdict) {
  if (verdict.pass || !verdict.witness) return false;
  const AxiomWitness& w = *verdict.witness;
  const BinaryRelation pc = pairwise(c);
  const auto menu_choice = [&](size_t i) { return c.choice(w.menus[i]); };
  switch (verdict.axiom) {
    case AxiomId::NC: {
      const Mask s = w.menus[0];
      const Alt x = w.alternatives[0];
      return c.choice(s) == x && (pc.row(x) & s) == 0;
    }
    case AxiomId::WCC_STAR: {
      const Mask s = w.menus[0];
      const Alt x = w.alternatives[0];
      const Alt y = w.alternatives[1];
      if (c.choice(s) != x || !mask_contains(s, y)) return false;
      for (Alt z : mask_alts(s & ~(alt_bit(x) | alt_bit(y)))) {
        const Alt dropped = c.choice(s & ~alt_bit(z));
        if (dropped == x || dropped == y) return false;
      }
      return mask_size(s) >= 3;
    }
    case AxiomId::NBC_STAR: {
      const BinaryRelation rr = revealed_r(c, RevealedMode::FullMenu);
      for (size_t i = 0; i + 1 < w.chain.size(); ++i) {
        if (!rr.contains(w.chain[i], w.chain[i + 1])) return false;
      }
      return !pc.contains(w.chain.front(), w.chain.back());
    }
    case AxiomId::R_WARP:
    case AxiomId::R_SARP: {
      const BinaryRelation rbar = transitive_closure(revealed_r(c, RevealedMode::FullMenu));
      if (verdict.axiom == AxiomId::R_WARP) {
        const Alt x = w.alternatives[0];
        const Alt y = w.alternatives[1];
        const Mask s = w.menus[0];
        const Mask s2 = w.menus[1];
        return c.choice(s) == x && mask_contains(s, y) && !mask_contains(minimal_set(s, rbar), y) &&
               c.choice(s2) == y && mask_contains(s2, x) && !mask_contains(minimal_set(s2, rbar), x);
      }
      const size_t k = w.chain.size();
      for (size_t i = 0; i < k; ++i) {
        const Alt from = w.chain[i];
        const Alt to = w.chain[(i + 1) % k];
        const Mask s = w.menus[i];
        if (c.choice(s) != from || !mask_contains(s, to) ||
            mask_contains(minimal_set(s, rbar), to)) {
          return false;
        }
      }
      return true;
    }
    case AxiomId::R_WARP_STAR: {
      const Alt x = w.alternatives[0];
      const Alt y = w.alternatives[1];
      const Mask pair = alt_bit(x) | alt_bit(y);
      const Mask lo = w.menus[0], mid = w.menus[1], hi = w.menus[2];
      return c.choice(pair) == x && (lo & pair) == pair && lo != pair && (mid & lo) == lo &&
             mid != lo && (hi & mid) == mid && hi != mid && c.choice(lo) == y &&
             c.choice(mid) == x && c.choice(hi) == y;
    }
    case AxiomId::WWARP: {
      const Alt x = w.alternatives[0];
      const Alt y = w.alternatives[1];
      const Mask pair = alt_bit(x) | alt_bit(y);
      const Mask lo = w.menus[0], hi = w.menus[1];
      return c.choice(pair) == x && (lo & pair) == pair && (hi & lo) == lo &&
             c.choice(lo) == y && c.choice(hi) == x;
    }
    case AxiomId::WARP: {
      const Alt x = w.alternatives[0];
      const Alt y = w.alternatives[1];
      return menu_choice(0) == x && mask_contains(w.menus[0], y) && menu_choice(1) == y &&
             mask_contains(w.menus[1], x);
    }
    case AxiomId::EXPANSION: {
      const Alt x = w.alternatives[0];
      return menu_choice(0) == x && menu_choice(1) == x &&
             c.choice(w.menus[0] | w.menus[1]) != x;
    }
    case AxiomId::NEGATIVE_EXPANSION: {
      const Alt x = w.alternatives[0];
      const Alt y = w.alternatives[1];
      return menu_choice(0) == x && menu_choice(1) == x && y != x &&
             mask_contains(w.menus[0] & w.menus[1], y) && c.choice(w.menus[0] | w.menus[1]) == y;
    }
    case AxiomId::ALWAYS_CHOSEN: {
      const Mask s = w.menus[0];
      const Alt x = w.alternatives[0];
      return (pc.row(x) & s) == (s & ~alt_bit(x)) && c.choice(s) != x;
    }
    case AxiomId::NBC: {
      const size_t k = w.chain.size();
      for (size_t i = 0; i < k; ++i) {
        if (!pc.contains(w.chain[i], w.chain[(i + 1) % k])) return false;
      }
      return true;
    }
    case AxiomId::EXCLUSIVITY: {
      for (const Reversal& r : w.reversals) {
        const Mask pair = alt_bit(r.x) | alt_bit(r.y);
        if (c.choice(pair) != r.x || c.choice(r.base) != r.x ||
            c.choice(r.base | alt_bit(r.trigger)) != r.y) {
          return false;
        }
        const bool weak = pc.contains(r.x, r.trigger);
        if ((r.kind == ReversalKind::Weak) != weak) return false;
      }
      return w.reversals.size() == 2 && w.reversals[0].kind == ReversalKind::Weak &&
             w.reversals[1].kind == ReversalKind::Strong;
    }
  }
  return false;
}

bool cbr_axioms_pass(const ChoiceFunction& c) {
  return check_axiom(c, AxiomId::NC).pass && check_axiom(c, AxiomId::WCC_STAR).pass &&
         check_axiom(c, AxiomId::NBC_STAR).pass && check_axiom(c, AxiomId::R_WARP).pass;
}

bool tcbr_axioms_pass(const ChoiceFunction& c) {
  return check_axiom(c, AxiomId::NC).pass && check_axiom(c, AxiomId::WCC_STAR).pass &&
         check_axiom(c, AxiomId::NBC_STAR).pass && check_axiom(c, AxiomId::R_SARP).pass;
}

const AxiomVerdict& AnalysisReport::verdict(AxiomId id) const {
  for (const AxiomVerdict& v : verdicts) {
    if (v.axiom == id) return v;
  }
  throw std::logic_error("verdict missing from report");
}

AnalysisReport analyze(const ChoiceFunction& c) {
  AnalysisReport report;
  report.verdicts.reserve(kAllAxioms.size());
  for (AxiomId id : kAllAxioms) report.verdicts.push_back(check_axiom(c, id));
  report.reversals = summarize_reversals(c);
  report.cbr_representable = report.verdict(AxiomId::NC).pass &&
                             report.verdict(AxiomId::WCC_STAR).pass &&
                             report.verdict(AxiomId::NBC_STAR).pass &&
                             report.verdict(AxiomId::R_WARP).pass;
  report.tcbr_representable = report.verdict(AxiomId::NC).pass &&
                              report.verdict(AxiomId::WCC_STAR).pass &&
                              report.verdict(AxiomId::NBC_STAR).pass &&
                              report.verdict(AxiomId::R_SARP).pass;
  return report;
}

}  // namespace cbr
