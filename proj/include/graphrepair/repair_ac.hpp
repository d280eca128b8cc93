#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphrepair/condition.hpp"
#include "graphrepair/overlap.hpp"
#include "graphrepair/shift.hpp"

namespace graphrepair {

enum class AcKind { Repair, Impairment };
enum class AcBranch { Premise, Conclusion };

// Universal application condition over a rule's left side. Evaluating it at
// a match counts the anchored occurrences of the overlap graph that fail the
// body; each such occurrence certifies one removed (repair) or one added
// (impairment) constraint violation.
//
// Mirror-image overlap classes whose conditions coincide up to a commuting
// isomorphism are merged into one entry with a multiplicity, so counts stay
// exact while the bundle mirrors the deduplicated sets.
struct ApplicationCondition {
    Morphism anchor;    // L -> PL
    ConditionPtr body;  // over PL, shape post => pre before folding
    AcKind kind = AcKind::Repair;
    AcBranch branch = AcBranch::Conclusion;
    std::string constraint_name;
    std::string overlap_signature;
    int multiplicity = 1;
};

struct AcBundle {
    std::string rule_name;
    std::string constraint_name;
    std::uint64_t rule_hash = 0;
    std::uint64_t constraint_hash = 0;
    std::vector<ApplicationCondition> repair;
    std::vector<ApplicationCondition> impairment;
    std::vector<std::string> pruned;  // overlap signatures whose condition folded to True
};

// Overlap-induced pre- and post-conditions of the rule w.r.t. the class and
// the conclusion d over the premise. post is True on premise-repair classes,
// otherwise the conclusion transported into the pre-state of the induced
// transformation. Both are passed through the hard-constraint simplification.
std::pair<ConditionPtr, ConditionPtr> induced_pre_post(const Rule& rule, const Overlap& o,
                                                       const ConditionPtr& d,
                                                       const std::vector<Constraint>& hard = {});

// One application condition per overlap class of the rule's left side with
// the constraint premise, simplified; entries folding to True are dropped
// and their class signatures recorded into pruned_out when given.
std::vector<ApplicationCondition> derive_repair_acs(const Rule& rule, const Constraint& c,
                                                    const std::vector<Constraint>& hard = {},
                                                    std::vector<std::string>* pruned_out = nullptr);

// Repair conditions of the inverted rule, transported back onto the rule's
// left side.
std::vector<ApplicationCondition> derive_impairment_acs(const Rule& rule, const Constraint& c,
                                                        const std::vector<Constraint>& hard = {},
                                                        std::vector<std::string>* pruned_out = nullptr);

// Removes pairs of mutually cancelling entries (equivalent anchor and body)
// one multiplicity unit at a time; the predicted gain is unchanged.
void cancel_mutual(std::vector<ApplicationCondition>& repair,
                   std::vector<ApplicationCondition>& impairment);

// Full derivation for one (rule, constraint) pair.
AcBundle derive_bundle(const Rule& rule, const Constraint& c,
                       const std::vector<Constraint>& hard = {}, bool cancel = true);

std::uint64_t rule_hash(const Rule& rule);
std::uint64_t constraint_hash(const Constraint& c);

// Equivalence of whole application conditions (commuting anchor isomorphism
// plus equivalent bodies).
bool acs_equivalent(const ApplicationCondition& a, const ApplicationCondition& b);

}  // namespace graphrepair
