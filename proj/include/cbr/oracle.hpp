#pragma once

#include <cstdint>
#include <map>

#include "cbr/identification.hpp"

namespace cbr {

class SizeCapError : public std::runtime_error {
 public:
  explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

enum class RationaleKind { PartialOrder, Tournament, LinearOrder, Asymmetric };

/// Every relation of the requested kind over n alternatives, duplicate-free,
/// in a fixed deterministic order. n up to 5.
std::vector<BinaryRelation> enumerate_rationales(int n, RationaleKind kind);

/// Every choice function over the default universe of size n (2 <= n <= 4),
/// in odometer order over menus.
std::vector<ChoiceFunction> enumerate_choice_functions(int n);
long choice_function_count(int n);
ChoiceFunction choice_function_at(int n, long index);

/// Exhaustive search for flavor-valid pairs reproducing the data. The list is
/// capped but the count is always exact. RSM exhaustion is capped at n = 4;
/// other flavors run up to n = 5.
struct RepresentationsResult {
  std::vector<RepresentationPair> pairs;
  long total_count = 0;
  bool truncated = false;
};
RepresentationsResult representations(const ChoiceFunction& c, Flavor flavor, int cap = 64);

struct ClassificationProfile {
  bool warp_rational = false;
  bool cbr = false;
  bool tcbr = false;
  bool rsm = false;
  bool tsm = false;
  bool eph = false;
  ReversalSummary reversals;
};

/// Per-flavor representability at exhaustion-feasible sizes. The axiomatic
/// CBR/TCBR decisions are cross-checked against the exhaustive search; RSM,
/// TSM and EPH are decided purely by exhaustion.
ClassificationProfile classify(const ChoiceFunction& c);

enum class SweepId {
  Theorem1,
  Theorem2,
  Smp,
  Idencor,
  Iden1,
  Iden2,
  PropRsm,
  PropTsm,
  RWarpStar,
  Exclusivity,
  Ne,
  Dbl,
  LemmaRev,
};

std::string to_string(SweepId id);
std::optional<SweepId> sweep_from_string(const std::string& name);

struct SweepOptions {
  int threads = 1;
  std::uint64_t seed = 0;
  long sample = 10000;  // random candidate budget for the Iden2 sweep at n = 4
};

struct SweepCounterexample {
  long index = 0;        // choice function index in enumeration order
  std::string detail;
  std::string choices;   // compact rendering of the offending function
};

struct SweepReport {
  SweepId sweep = SweepId::Theorem1;
  int n = 0;
  long population = 0;
  std::vector<SweepCounterexample> counterexamples;
  std::map<std::string, long> counts;
  long runtime_ms = 0;
};

/// Checks one theorem/lemma/proposition over every choice function at size n
/// (2 <= n <= 4). Counterexample lists and counts are deterministic for fixed
/// (sweep, n, seed, sample) regardless of the thread count.
SweepReport run_sweep(SweepId id, int n, const SweepOptions& options = {});

/// Compact one-line rendering "xy->x xz->z ..." used in sweep reports.
std::string compact_choices(const ChoiceFunction& c);

}  // namespace cbr
