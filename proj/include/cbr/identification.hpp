#pragma once

#include "cbr/representation.hpp"

namespace cbr {

class NotRepresentableError : public std::runtime_error {
 public:
  explicit NotRepresentableError(AxiomVerdict failure)
      : std::runtime_error("choice data is not representable: " + to_string(failure.axiom) +
                           " fails"),
        failure_(std::move(failure)) {}
  const AxiomVerdict& failure() const { return failure_; }

 private:
  AxiomVerdict failure_;
};

/// The second-rationale lower bound relative to a first rationale R: chooser
/// over every co-member left outside min(S,R). Requires R transitive and
/// asymmetric.
BinaryRelation p_hat(const ChoiceFunction& c, const BinaryRelation& r);

/// Pairs excluded from the first rationale of every representation: read off
/// strong reversals (both orientations across the base) and menus where a
/// weakly-reversed alternative is chosen over the pair.
BinaryRelation q_hat(const ChoiceFunction& c);

struct RMaxOptions {
  int cap = 256;
};

struct RMaxResult {
  std::vector<BinaryRelation> relations;
  bool truncated = false;
};

/// All inclusion-maximal transitive subrelations of pairwise(C) minus q_hat
/// that contain the minimal first rationale. Deterministic order; capped with
/// an explicit truncation flag. Requires representable data.
RMaxResult r_max(const ChoiceFunction& c, const RMaxOptions& options = {});

struct MinimalRepresentationResult {
  BinaryRelation r_min;  // transitive closure of the small-menu revealed relation
  BinaryRelation p_min;  // p_hat at r_min; a lower bound, not itself complete
};

/// The minimal representation bounds. With cross_check_modes set, also
/// recomputes the full-menu revealed relation and insists the two modes
/// agree, which representability guarantees.
MinimalRepresentationResult minimal_representation(const ChoiceFunction& c,
                                                   bool cross_check_modes = false);

/// Precomputed bounds shared by repeated in_class queries on one function.
struct ClassMembershipContext {
  BinaryRelation pc;     // pairwise relation
  BinaryRelation r_min;  // minimal first rationale
  BinaryRelation upper;  // pairwise minus q_hat
};

/// Requires representable data.
ClassMembershipContext class_membership_context(const ChoiceFunction& c);

/// Membership test for the full representation class: R transitive and
/// asymmetric with r_min <= R <= pairwise(C) minus q_hat, and P complete and
/// asymmetric with P >= p_hat(C,R) plus the pairwise pairs R leaves
/// undecided. Requires representable data.
bool in_class(const ChoiceFunction& c, const BinaryRelation& r, const BinaryRelation& p);
bool in_class(const ChoiceFunction& c, const ClassMembershipContext& context,
              const BinaryRelation& r, const BinaryRelation& p);

struct IdentificationReport {
  BinaryRelation r_min;
  BinaryRelation p_min;
  BinaryRelation q_hat;
  std::vector<BinaryRelation> r_max;
  bool truncated = false;
};

IdentificationReport identify(const ChoiceFunction& c, const RMaxOptions& options = {});

}  // namespace cbr
