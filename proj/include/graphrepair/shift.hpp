#pragma once

#include <vector>

#include "graphrepair/condition.hpp"
#include "graphrepair/overlap.hpp"
#include "graphrepair/rewrite.hpp"

namespace graphrepair {

// Transports a condition over P to an equivalent condition over the codomain
// of i_p: a morphism p' satisfies the result iff p' composed with i_p
// satisfies the original. Quantifier cases branch over the overlap classes of
// the codomain with the quantified graph whose correspondence extends the
// commuting square.
ConditionPtr shift_along(const Morphism& i_p, const ConditionPtr& c);

// Transports a condition over the rule's right side to an equivalent
// condition over its left side: for every transformation via the rule, the
// comatch satisfies c iff the match satisfies the result. Quantified graphs
// are rewritten backwards with the inverted rule; inapplicable embeddings
// collapse to the constant branch.
ConditionPtr shift_over_rule(const Rule& rule, const ConditionPtr& c);

// Replaces every existentially bound graph that violates one of the
// forbidden-pattern hard constraints by False (universal ones by True). The
// result is equivalent on all hosts satisfying the hard constraints.
// Constraints not of forbidden-pattern form are skipped with a warning.
ConditionPtr simplify_with_hard(const ConditionPtr& c, const std::vector<Constraint>& hard,
                                std::vector<std::string>* warnings = nullptr);

// Drops antecedent disjuncts that reappear (up to commuting isomorphism) in
// the consequent of an implication; applied recursively, iterated to a
// fixpoint per implication.
ConditionPtr simplify_implication(const ConditionPtr& c);

// Sound, incomplete equivalence: ASTs must match up to graph isomorphisms
// commuting with all embeddings and up to reordering of And/Or parts. base
// maps the over-graph of a onto the over-graph of b.
bool conditions_equivalent(const ConditionPtr& a, const ConditionPtr& b, const Morphism& base);

// Same, for conditions over the identical graph.
bool conditions_equivalent(const ConditionPtr& a, const ConditionPtr& b);

}  // namespace graphrepair
