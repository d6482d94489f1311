#include "cbr/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <tuple>
#include <unordered_map>

namespace cbr {

namespace {

std::vector<std::pair<Alt, Alt>> unordered_pairs(int n) {
  std::vector<std::pair<Alt, Alt>> slots;
  for (Alt a = 0; a < n; ++a) {
    for (Alt b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  return slots;
}

// Every orientation assignment: trit 0 leaves the pair unrelated, 1 orients
// low->high, 2 high->low.
std::vector<BinaryRelation> orientations(int n, bool allow_unrelated,
                                         const std::function<bool(const BinaryRelation&)>& keep) {
  const auto slots = unordered_pairs(n);
  const int radix = allow_unrelated ? 3 : 2;
  long total = 1;
  for (size_t i = 0; i < slots.size(); ++i) total *= radix;
  std::vector<BinaryRelation> out;
  for (long code = 0; code < total; ++code) {
    BinaryRelation rel(n);
    long rest = code;
    for (const auto& [a, b] : slots) {
      const int trit = static_cast<int>(rest % radix);
      rest /= radix;
      if (allow_unrelated) {
        if (trit == 1) rel.add(a, b);
        if (trit == 2) rel.add(b, a);
      } else {
        if (trit == 0) rel.add(a, b);
        else rel.add(b, a);
      }
    }
    if (keep(rel)) out.push_back(rel);
  }
  return out;
}

}  // namespace

std::vector<BinaryRelation> enumerate_rationales(int n, RationaleKind kind) {
  if (n < 1 || n > kMaxOracle) {
    throw SizeCapError("rationale enumeration supports 1 <= n <= 5");
  }
  switch (kind) {
    case RationaleKind::Asymmetric:
      return orientations(n, true, [](const BinaryRelation&) { return true; });
    case RationaleKind::PartialOrder:
      return orientations(n, true, [](const BinaryRelation& r) { return is_transitive(r); });
    case RationaleKind::Tournament:
      return orientations(n, false, [](const BinaryRelation&) { return true; });
    case RationaleKind::LinearOrder: {
      std::vector<Alt> perm(static_cast<size_t>(n));
      for (Alt a = 0; a < n; ++a) perm[static_cast<size_t>(a)] = a;
      std::vector<BinaryRelation> out;
      do {
        BinaryRelation rel(n);
        for (size_t i = 0; i < perm.size(); ++i) {
          for (size_t j = i + 1; j < perm.size(); ++j) rel.add(perm[i], perm[j]);
        }
        out.push_back(rel);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return out;
    }
  }
  return {};
}

long choice_function_count(int n) {
  if (n < 2 || n > 4) throw SizeCapError("choice function enumeration supports 2 <= n <= 4");
  long total = 1;
  for (Mask menu : menus_in_order(n)) total *= mask_size(menu);
  return total;
}

ChoiceFunction choice_function_at(int n, long index) {
  if (n < 2 || n > 4) throw SizeCapError("choice function enumeration supports 2 <= n <= 4");
  static std::shared_ptr<const Universe> universes[kMaxOracle + 1];
  static std::once_flag flags[kMaxOracle + 1];
  std::call_once(flags[n], [n] {
    universes[n] = std::make_shared<const Universe>(default_universe(n));
  });
  const auto universe = universes[n];
  const Mask all = universe->all();
  std::vector<std::uint8_t> assignment(static_cast<size_t>(all) + 1, 0);
  for (Mask menu = 1; menu <= all; ++menu) {
    if (mask_size(menu) == 1) assignment[menu] = static_cast<std::uint8_t>(lowest_alt(menu));
  }
  long rest = index;
  for (Mask menu : menus_in_order(n)) {
    const auto members = mask_alts(menu);
    assignment[menu] = static_cast<std::uint8_t>(members[static_cast<size_t>(
        rest % static_cast<long>(members.size()))]);
    rest /= static_cast<long>(members.size());
  }
  return ChoiceFunction(universe, std::move(assignment));
}

std::vector<ChoiceFunction> enumerate_choice_functions(int n) {
  const long total = choice_function_count(n);
  std::vector<ChoiceFunction> out;
  out.reserve(static_cast<size_t>(total));
  for (long i = 0; i < total; ++i) out.push_back(choice_function_at(n, i));
  return out;
}

namespace {

std::pair<std::vector<BinaryRelation>, std::vector<BinaryRelation>> flavor_spaces(int n,
                                                                                  Flavor flavor) {
  switch (flavor) {
    case Flavor::CBR:
      return {enumerate_rationales(n, RationaleKind::PartialOrder),
              enumerate_rationales(n, RationaleKind::Tournament)};
    case Flavor::TCBR:
      return {enumerate_rationales(n, RationaleKind::PartialOrder),
              enumerate_rationales(n, RationaleKind::LinearOrder)};
    case Flavor::RSM:
      return {enumerate_rationales(n, RationaleKind::Asymmetric),
              enumerate_rationales(n, RationaleKind::Asymmetric)};
    case Flavor::TSM:
      return {enumerate_rationales(n, RationaleKind::PartialOrder),
              enumerate_rationales(n, RationaleKind::PartialOrder)};
    case Flavor::EPH:
      return {enumerate_rationales(n, RationaleKind::LinearOrder),
              enumerate_rationales(n, RationaleKind::LinearOrder)};
  }
  return {};
}

bool reproduces(const ChoiceFunction& c, const RepresentationPair& rep) {
  for (Mask menu : menus_in_order(c.size())) {
    const auto got = eval(menu, rep);
    if (!got || *got != c.choice(menu)) return false;
  }
  return true;
}

void check_representation_size(const ChoiceFunction& c, Flavor flavor) {
  const int n = c.size();
  if (n > kMaxOracle) throw SizeCapError("representation search supports n <= 5");
  if (flavor == Flavor::RSM && n > 4) {
    throw SizeCapError("RSM exhaustion over asymmetric pairs is capped at n <= 4");
  }
}

}  // namespace

RepresentationsResult representations(const ChoiceFunction& c, Flavor flavor, int cap) {
  check_representation_size(c, flavor);
  const auto [firsts, seconds] = flavor_spaces(c.size(), flavor);
  RepresentationsResult result;
  for (const BinaryRelation& r1 : firsts) {
    for (const BinaryRelation& r2 : seconds) {
      RepresentationPair rep{r1, r2, flavor};
      if (!reproduces(c, rep)) continue;
      ++result.total_count;
      if (static_cast<int>(result.pairs.size()) < cap) {
        result.pairs.push_back(std::move(rep));
      } else {
        result.truncated = true;
      }
    }
  }
  return result;
}

namespace {

bool has_representation(const ChoiceFunction& c, Flavor flavor) {
  check_representation_size(c, flavor);
  const auto [firsts, seconds] = flavor_spaces(c.size(), flavor);
  for (const BinaryRelation& r1 : firsts) {
    for (const BinaryRelation& r2 : seconds) {
      if (reproduces(c, RepresentationPair{r1, r2, flavor})) return true;
    }
  }
  return false;
}

}  // namespace

ClassificationProfile classify(const ChoiceFunction& c) {
  if (c.size() > 4) throw SizeCapError("classification needs exhaustion and is capped at n <= 4");
  ClassificationProfile profile;
  profile.warp_rational = check_axiom(c, AxiomId::WARP).pass;
  profile.cbr = has_representation(c, Flavor::CBR);
  profile.tcbr = has_representation(c, Flavor::TCBR);
  if (profile.cbr != cbr_axioms_pass(c) || profile.tcbr != tcbr_axioms_pass(c)) {
    throw InternalInvariantBreach("axiomatic and exhaustive representability decisions disagree");
  }
  profile.rsm = has_representation(c, Flavor::RSM);
  profile.tsm = has_representation(c, Flavor::TSM);
  profile.eph = has_representation(c, Flavor::EPH);
  profile.reversals = summarize_reversals(c);
  return profile;
}

std::string to_string(SweepId id) {
  switch (id) {
    case SweepId::Theorem1: return "theorem1";
    case SweepId::Theorem2: return "theorem2";
    case SweepId::Smp: return "smp";
    case SweepId::Idencor: return "idencor";
    case SweepId::Iden1: return "iden1";
    case SweepId::Iden2: return "iden2";
    case SweepId::PropRsm: return "prop_rsm";
    case SweepId::PropTsm: return "prop_tsm";
    case SweepId::RWarpStar: return "rwarpstar";
    case SweepId::Exclusivity: return "exclusivity";
    case SweepId::Ne: return "ne";
    case SweepId::Dbl: return "dbl";
    case SweepId::LemmaRev: return "lemma_rev";
  }
  return "?";
}

std::optional<SweepId> sweep_from_string(const std::string& name) {
  for (SweepId id :
       {SweepId::Theorem1, SweepId::Theorem2, SweepId::Smp, SweepId::Idencor, SweepId::Iden1,
        SweepId::Iden2, SweepId::PropRsm, SweepId::PropTsm, SweepId::RWarpStar,
        SweepId::Exclusivity, SweepId::Ne, SweepId::Dbl, SweepId::LemmaRev}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::string compact_choices(const ChoiceFunction& c) {
  const Universe& u = c.universe();
  std::string out;
  for (Mask menu : menus_in_order(c.size())) {
    if (!out.empty()) out += " ";
    for (Alt a : mask_alts(menu)) out += u.label(a);
    out += "->";
    out += u.label(c.choice(menu));
  }
  return out;
}

namespace {

// Exhaustive pair index for one flavor: every flavor-valid pair that induces
// a total choice function, keyed by that function.
struct OracleIndex {
  std::vector<BinaryRelation> firsts;
  std::vector<BinaryRelation> seconds;
  Flavor flavor = Flavor::CBR;
  std::vector<std::pair<int, int>> valid;
  std::unordered_map<std::uint64_t, std::vector<long>> by_key;

  static OracleIndex build(int n, Flavor flavor) {
    OracleIndex index;
    index.flavor = flavor;
    std::tie(index.firsts, index.seconds) = flavor_spaces(n, flavor);
    const auto& menus = menus_in_order(n);
    for (size_t i = 0; i < index.firsts.size(); ++i) {
      for (size_t j = 0; j < index.seconds.size(); ++j) {
        const RepresentationPair rep{index.firsts[i], index.seconds[j], flavor};
        std::uint64_t key = 0;
        bool total = true;
        int slot = 0;
        for (Mask menu : menus) {
          const auto got = eval(menu, rep);
          if (!got) {
            total = false;
            break;
          }
          key |= static_cast<std::uint64_t>(*got) << (2 * slot);
          ++slot;
        }
        if (!total) continue;
        index.by_key[key].push_back(static_cast<long>(index.valid.size()));
        index.valid.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
    return index;
  }

  const std::vector<long>* lookup(const ChoiceFunction& c) const {
    const auto it = by_key.find(choice_key(c));
    return it == by_key.end() ? nullptr : &it->second;
  }

  RepresentationPair pair(long id) const {
    const auto [i, j] = valid[static_cast<size_t>(id)];
    return RepresentationPair{firsts[static_cast<size_t>(i)], seconds[static_cast<size_t>(j)],
                              flavor};
  }
};

struct Accum {
  std::vector<SweepCounterexample> counterexamples;
  std::map<std::string, long> counts;

  void bump(const std::string& key, long by = 1) { counts[key] += by; }
  void flag(long index, const ChoiceFunction& c, std::string detail) {
    counterexamples.push_back(SweepCounterexample{index, std::move(detail), compact_choices(c)});
  }
};

// Contiguous index ranges, one per worker; merged counts are sums and the
// counterexample list is re-sorted by index, so the result does not depend on
// the chunking.
void parallel_scan(long total, int threads, const std::function<void(long, Accum&)>& body,
                   Accum& out) {
  threads = std::max(1, threads);
  if (threads == 1 || total < 64) {
    for (long i = 0; i < total; ++i) body(i, out);
    return;
  }
  std::vector<Accum> parts(static_cast<size_t>(threads));
  std::vector<std::thread> workers;
  const long chunk = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const long begin = t * chunk;
    const long end = std::min(total, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&, t, begin, end] {
      for (long i = begin; i < end; ++i) body(i, parts[static_cast<size_t>(t)]);
    });
  }
  for (auto& w : workers) w.join();
  for (const Accum& part : parts) {
    for (const auto& [key, value] : part.counts) out.counts[key] += value;
    out.counterexamples.insert(out.counterexamples.end(), part.counterexamples.begin(),
                               part.counterexamples.end());
  }
}

bool has_weak_reversal(const ChoiceFunction& c) {
  for (const Reversal& r : find_reversals(c)) {
    if (r.kind == ReversalKind::Weak) return true;
  }
  return false;
}

BinaryRelation random_asymmetric(int n, std::mt19937_64& rng) {
  BinaryRelation rel(n);
  for (const auto& [a, b] : unordered_pairs(n)) {
    switch (rng() % 3) {
      case 1: rel.add(a, b); break;
      case 2: rel.add(b, a); break;
      default: break;
    }
  }
  return rel;
}

BinaryRelation random_partial_order(int n, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    const BinaryRelation closed = transitive_closure(random_asymmetric(n, rng));
    if (is_asymmetric(closed)) return closed;
  }
  return BinaryRelation(n);
}

BinaryRelation random_tournament(int n, std::mt19937_64& rng) {
  BinaryRelation rel(n);
  for (const auto& [a, b] : unordered_pairs(n)) {
    if (rng() & 1) rel.add(a, b);
    else rel.add(b, a);
  }
  return rel;
}

}  // namespace

SweepReport run_sweep(SweepId id, int n, const SweepOptions& options) {
  if (n < 2 || n > 4) throw SizeCapError("sweeps support 2 <= n <= 4");
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.sweep = id;
  report.n = n;
  const long population = choice_function_count(n);
  report.population = population;

  const std::vector<ChoiceFunction> functions = enumerate_choice_functions(n);
  Accum accum;

  switch (id) {
    case SweepId::Theorem1: {
      const OracleIndex index = OracleIndex::build(n, Flavor::CBR);
      parallel_scan(population, options.threads, [&](long i, Accum& acc) {
        const ChoiceFunction& c = functions[static_cast<size_t>(i)];
        const bool axioms = cbr_axioms_pass(c);
        const bool oracle = index.lookup(c) != nullptr;
        if (axioms) acc.bump("axioms_pass");
        if (oracle) acc.bump("cbr_representable");
        if (check_axiom(c, AxiomId::WARP).pass) acc.bump("warp_rational");
        if (axioms != oracle) {
          acc.flag(i, c, axioms ? "axioms pass but exhaustion finds no pair"
                                : "exhaustion finds a pair but an axiom fails");
        }
      }, accum);
      break;
    }
    case SweepId::Theorem2: {
      const OracleIndex index = OracleIndex::build(n, Flavor::TCBR);
      parallel_scan(population, options.threads, [&](long i, Accum& acc) {
        const ChoiceFunction& c = functions[static_cast<size_t>(i)];
        const bool axioms = tcbr_axioms_pass(c);
        const bool oracle = index.lookup(c) != nullptr;
        if (axioms) acc.bump("axioms_pass");
        if (oracle) acc.bump("tcbr_representable");
        if (axioms != oracle) {
          acc.flag(i, c, axioms ? "axioms pass but exhaustion finds no pair"
                                : "exhaustion finds a pair but an axiom fails");
        }
      }, accum);
      break;
    }
    case SweepId::Smp:
    case SweepId::Exclusivity:
    case SweepId::Ne: {
      const OracleIndex index = OracleIndex::build(n, Flavor::CBR);
      parallel_scan(population, options.threads, [&](long i, Accum& acc) {
        const ChoiceFunction& c = functions[static_cast<size_t>(i)];
        if (!index.lookup(c)) return;
        acc.bump("representable");
        bool ok = true;
        std::string what;
        if (id == SweepId::Smp) {
          ok = check_smp(c).pass;
          what = "a reversal escapes the small menu patterns";
        } else if (id == SweepId::Exclusivity) {
          ok = check_exclusivity(c).pass;
          what = "a pair has both weak and strong reversals";
        } else {
          ok = check_axiom(c, AxiomId::NEGATIVE_EXPANSION).pass;
          what = "negative expansion fails";
        }
        if (!ok) acc.flag(i, c, what);
      }, accum);
      break;
    }
    case SweepId::Dbl: {
      const OracleIndex index = OracleIndex::build(n, Flavor::CBR);
      parallel_scan(population, options.threads, [&](long i, Accum& acc) {
        const ChoiceFunction& c = functions[static_cast<size_t>(i)];
        if (!index.lookup(c)) return;
        acc.bump("representable");
        for (Alt x = 0; x < n; ++x) {
          for (Alt y = 0; y < n; ++y) {
            if (x == y) continue;
            const auto witness = has_double_reversal(c, x, y);
            if (!witness) continue;
            acc.bump("double_reversals");
            try {
              decompose_double(c, *witness);
            } catch (const NotDecomposableError&) {
              acc.flag(i, c, "double reversal fails to decompose");
            }
          }
        }
      }, accum);
      break;
    }
    case SweepId::LemmaRev: {
      const OracleIndex index = OracleIndex::build(n, Flavor::CBR);
      parallel_scan(population, options.threads, [&](long i, Accum& acc) {
        const ChoiceFunction& c = functions[static_cast<size_t>(i)];
        const auto* reps = index.lookup(c);
        if (!reps) return;
        acc.bump("representable");
        const auto reversals = find_reversals(c);
        if (reversals.empty()) return;
        for (long id_pair : *reps) {
          acc.bump("representations_checked");
          const RepresentationPair rep = index.pair(id_pair);
          for (const Reversal& r : reversals) {
            bool ok = true;
            if (r.kind == ReversalKind::Weak) {
              ok = rep.first.contains(r.x, r.y) && rep.first.contains(r.y, r.trigger) &&
                   rep.second.contains(r.y, r.x);
            } else {
              ok = !rep.first.contains(r.x, r.y) && rep.first.contains(r.trigger, r.x) &&
                   rep.second.contains(r.x, r.y) && rep.second.contains(r.y, r.trigger);
            }
            if (!ok) {
              acc.flag(i, c, "a representation misses the relations a reversal forces");
            }
          }
        }
      }, accum);
      break;
    }
    case SweepId::RWarpStar: {
      parallel_scan(population, options.threads, [&](long i, Accum& acc) {
        const ChoiceFunction& c = functions[static_cast<size_t>(i)];
        if (!check_axiom(c, AxiomId::R_WARP).pass || !check_axiom(c, AxiomId::WCC_STAR).pass) {
          return;
        }
        acc.bump("antecedent_holds");
        if (!check_axiom(c, AxiomId::R_WARP_STAR).pass) {
          acc.flag(i, c, "R-WARP and WCC* hold but R-WARP* fails");
        }
      }, accum);
      break;
    }
    case SweepId::Idencor: {
      const OracleIndex index = OracleIndex::build(n, Flavor::CBR);
      // Any two representable functions agreeing on pairs and triples must be
      // identical; grouping by the small-menu key decides it outright.
      std::map<std::uint64_t, std::pair<long, std::uint64_t>> groups;
      for (long i = 0; i < population; ++i) {
        const ChoiceFunction& c = functions[static_cast<size_t>(i)];
        if (!index.lookup(c)) continue;
        accum.bump("representable");
        const std::uint64_t small = small_menu_key(c);
        const std::uint64_t full = choice_key(c);
        const auto [it, inserted] = groups.emplace(small, std::make_pair(i, full));
        if (!inserted && it->second.second != full) {
          accum.flag(i, c, "agrees on small menus with function #" +
                               std::to_string(it->second.first) + " but differs on a larger menu");
        }
      }
      accum.bump("small_menu_groups", static_cast<long>(groups.size()));
      break;
    }
    case SweepId::Iden1: {
      const OracleIndex index = OracleIndex::build(n, Flavor::CBR);
      parallel_scan(population, options.threads, [&](long i, Accum& acc) {
        const ChoiceFunction& c = functions[static_cast<size_t>(i)];
        const auto* reps = index.lookup(c);
        if (!reps) return;
        acc.bump("representable");
        const MinimalRepresentationResult minimal = minimal_representation(c, true);
        BinaryRelation intersection(n);
        for (Alt a = 0; a < n; ++a) intersection.set_row(a, c.all_menu() & ~alt_bit(a));
        bool p_bound_ok = true;
        for (long id_pair : *reps) {
          const RepresentationPair rep = index.pair(id_pair);
          for (Alt a = 0; a < n; ++a) {
            intersection.set_row(a, intersection.row(a) & rep.first.row(a));
          }
          if (rep.first == minimal.r_min && !relation_subset(minimal.p_min, rep.second)) {
            p_bound_ok = false;
          }
        }
        if (!(intersection == minimal.r_min)) {
          acc.flag(i, c, "intersection of first rationales differs from the minimal one");
        }
        if (!p_bound_ok) {
          acc.flag(i, c, "second-rationale lower bound escapes a representation");
        }
      }, accum);
      break;
    }
    case SweepId::Iden2: {
      const OracleIndex index = OracleIndex::build(n, Flavor::CBR);
      long representable = 0;
      for (long i = 0; i < population; ++i) {
        if (index.lookup(functions[static_cast<size_t>(i)])) ++representable;
      }
      accum.bump("representable", representable);
      const bool exhaustive = n <= 3;
      const auto asymmetric = exhaustive
                                  ? enumerate_rationales(n, RationaleKind::Asymmetric)
                                  : std::vector<BinaryRelation>{};
      const long per_function =
          exhaustive ? 0 : std::max<long>(1, (options.sample + representable - 1) /
                                                 std::max<long>(1, representable));
      parallel_scan(population, options.threads, [&](long i, Accum& acc) {
        const ChoiceFunction& c = functions[static_cast<size_t>(i)];
        if (!index.lookup(c)) return;
        const ClassMembershipContext context = class_membership_context(c);
        const auto check_candidate = [&](const BinaryRelation& r, const BinaryRelation& p) {
          acc.bump("candidates");
          const RepresentationPair rep{r, p, Flavor::CBR};
          const bool represents = flavor_valid(rep) && verify(c, rep).ok;
          if (in_class(c, context, r, p) != represents) {
            acc.flag(i, c, "class membership and verification disagree");
          }
        };
        if (exhaustive) {
          for (const BinaryRelation& r : asymmetric) {
            for (const BinaryRelation& p : asymmetric) check_candidate(r, p);
          }
        } else {
          std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ULL +
                              static_cast<std::uint64_t>(i) * 0xBF58476D1CE4E5B9ULL + 1);
          for (long k = 0; k < per_function; ++k) {
            if (k % 2 == 0) {
              check_candidate(random_partial_order(n, rng), random_tournament(n, rng));
            } else {
              check_candidate(random_asymmetric(n, rng), random_asymmetric(n, rng));
            }
          }
        }
      }, accum);
      break;
    }
    case SweepId::PropRsm: {
      const OracleIndex cbr_index = OracleIndex::build(n, Flavor::CBR);
      const OracleIndex eph_index = OracleIndex::build(n, Flavor::EPH);
      const auto rsm_index = n <= 3 ? std::make_unique<OracleIndex>(OracleIndex::build(n, Flavor::RSM))
                                    : nullptr;
      parallel_scan(population, options.threads, [&](long i, Accum& acc) {
        const ChoiceFunction& c = functions[static_cast<size_t>(i)];
        const bool eph = eph_index.lookup(c) != nullptr;
        const bool weak = has_weak_reversal(c);
        if (eph) {
          acc.bump("eph_representable");
          if (weak) acc.bump("eph_with_weak_reversals");
          if (check_axiom(c, AxiomId::NBC).pass) acc.bump("eph_with_acyclic_pairs");
        }
        // The published shortlist characterization decides membership.
        const bool rsm = check_axiom(c, AxiomId::EXPANSION).pass &&
                         check_axiom(c, AxiomId::WWARP).pass;
        if (rsm_index && (rsm_index->lookup(c) != nullptr) != rsm) {
          acc.flag(i, c, "expansion plus WWARP disagrees with RSM exhaustion");
        }
        if (!cbr_index.lookup(c)) return;
        acc.bump("representable");
        if (rsm) acc.bump("rsm_representable");
        if (!weak) acc.bump("weak_free");
        if (rsm != !weak) {
          acc.flag(i, c, rsm ? "RSM representable despite a weak reversal"
                             : "weak-reversal-free but not RSM representable");
        }
      }, accum);
      break;
    }
    case SweepId::PropTsm: {
      const OracleIndex tcbr_index = OracleIndex::build(n, Flavor::TCBR);
      const OracleIndex tsm_index = OracleIndex::build(n, Flavor::TSM);
      parallel_scan(population, options.threads, [&](long i, Accum& acc) {
        const ChoiceFunction& c = functions[static_cast<size_t>(i)];
        if (!tcbr_index.lookup(c)) return;
        acc.bump("tcbr_representable");
        const bool tsm = tsm_index.lookup(c) != nullptr;
        const bool weak = has_weak_reversal(c);
        if (tsm) acc.bump("tsm_representable");
        if (!weak) acc.bump("weak_free");
        if (tsm != !weak) {
          acc.flag(i, c, tsm ? "TSM representable despite a weak reversal"
                             : "weak-reversal-free but not TSM representable");
        }
      }, accum);
      break;
    }
  }

  report.counterexamples = std::move(accum.counterexamples);
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const SweepCounterexample& a, const SweepCounterexample& b) {
              return a.index != b.index ? a.index < b.index : a.detail < b.detail;
            });
  report.counts = std::move(accum.counts);
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace cbr
