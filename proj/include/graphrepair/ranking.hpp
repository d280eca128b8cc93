#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graphrepair/repair_ac.hpp"

namespace graphrepair {

// Exact per-constraint effect of applying a rule at a match, predicted from
// the application conditions alone. delta = sum of weights * (impairments -
// repairs) = the weighted change in violation counts, negative is better;
// reported "gain" is -delta.
struct RankedMatch {
    std::string rule_name;
    Morphism match;
    struct PerConstraint {
        std::string constraint_name;
        int repairs = 0;
        int impairments = 0;
    };
    std::vector<PerConstraint> per_constraint;
    double delta = 0.0;

    std::string match_signature() const { return match.signature(); }
};

enum class TieBreak { RuleThenMatch };

struct RepairConfig {
    std::map<std::string, double> weights;  // per constraint name; absent = 1
    int max_iterations = 1000;
    int restarts = 1;
    int initial_impair_budget = 0;  // steps at run start that may pick non-improving moves
    std::uint64_t rng_seed = 0;
    TieBreak tie_break = TieBreak::RuleThenMatch;
    bool verify_steps = true;  // recompute violation counts and compare with predictions
    bool check_hard = true;    // re-check hard constraints after every step
    bool cancel_mutual_acs = true;
    double weight_of(const std::string& constraint_name) const;
};

struct RepairStep {
    std::string rule_name;
    std::string match_description;
    double delta = 0.0;
    std::vector<RankedMatch::PerConstraint> per_constraint;
};

struct RepairTrace {
    std::vector<RepairStep> steps;
    std::map<std::string, int> initial_violations;  // per weak constraint
    std::map<std::string, int> final_violations;
    std::string termination_reason;
    GraphPtr final_graph;

    double weighted_total(const RepairConfig& config) const;
};

// Violations of one application condition at a match: anchored occurrences of
// the overlap graph that fail the body. Multiplicity not applied.
int ac_violation_count(const Morphism& m, const ApplicationCondition& ac);

// Multiplicity-weighted impairments minus repairs; equals the actual change
// in the violation count of the constraint, exactly.
int predicted_delta(const Rule& rule, const Morphism& m, const Constraint& c, const AcBundle& bundle);

struct PerConstraintCounts {
    int repairs = 0;
    int impairments = 0;
};

PerConstraintCounts predicted_counts(const Morphism& m, const AcBundle& bundle);

struct TransformationClass {
    bool sustaining = false;
    bool improving = false;
    bool direct_sustaining = false;
    bool direct_improving = false;
};

// Flags per the counting characterisation: sustaining iff delta <= 0,
// improving iff delta < 0; the direct variants additionally require all
// impairment counts zero (resp. a positive repair count) and are evaluated
// on an uncancelled bundle.
TransformationClass classify_transformation(const Rule& rule, const Morphism& m, const Constraint& c,
                                            const AcBundle& uncancelled_bundle);

// Write-once cache of derived bundles, one per (rule, weak constraint) pair;
// derivation happens once per rule set, not per match.
class AcBundleCache {
public:
    AcBundleCache(std::vector<Constraint> constraints, bool cancel);
    const std::vector<AcBundle>& bundles_for(const Rule& rule);
    const std::vector<Constraint>& weak() const { return weak_; }
    const std::vector<Constraint>& hard() const { return hard_; }

private:
    std::vector<Constraint> weak_;
    std::vector<Constraint> hard_;
    bool cancel_;
    std::map<std::string, std::vector<AcBundle>> cache_;  // keyed by rule name
    std::map<std::string, std::uint64_t> rule_hashes_;
};

std::vector<RankedMatch> rank_all(const GraphPtr& g, const std::vector<Rule>& rules,
                                  const std::vector<Constraint>& constraints,
                                  const RepairConfig& config);

// Greedy loop: rank, apply the best move, stop when no move improves (or the
// iteration cap is hit). During the initial budget a move is drawn uniformly
// from the top candidates with the seeded generator. Every applied step is
// cross-checked against recomputed violation counts when verify_steps is on.
RepairTrace greedy_repair(const GraphPtr& g, const std::vector<Rule>& rules,
                          const std::vector<Constraint>& constraints, const RepairConfig& config);

struct RestartOutcome {
    std::vector<RepairTrace> traces;  // one per restart
    std::size_t best_index = 0;

    const RepairTrace& best() const { return traces[best_index]; }
};

// Independent seeded runs; the trace with the lowest final weighted total
// wins, earlier restart on ties.
RestartOutcome repair_with_restarts(const GraphPtr& g, const std::vector<Rule>& rules,
                                    const std::vector<Constraint>& constraints,
                                    const RepairConfig& config);

}  // namespace graphrepair
