#pragma once

#include "graphrepair/condition.hpp"

namespace graphrepair::oracle {

// Violation count by naive unanchored exhaustive enumeration and direct
// recursive semantics. Shares only the data types with the engine; the
// enumeration and the evaluator are reimplemented here so a bug in the
// engine's matcher or semantics cannot confirm itself.
int brute_violation_count(const GraphPtr& g, const Constraint& c);

// Direct semantics on a total injective morphism, same contract as the
// engine's satisfies.
bool brute_satisfies(const Morphism& p, const ConditionPtr& c);

// Every total injective morphism pattern -> host, by plain enumeration over
// node images and then edge images. No pruning beyond type equality.
std::vector<Morphism> brute_monomorphisms(const GraphPtr& pattern, const GraphPtr& host);

}  // namespace graphrepair::oracle
