#pragma once

#include <memory>
#include <string>
#include <vector>

#include "graphrepair/graph.hpp"

namespace graphrepair {

class Condition;
using ConditionPtr = std::shared_ptr<const Condition>;

enum class ConditionKind { True, False, Exists, ForAll, Not, And, Or, Implies };

// Nested graph condition over a fixed graph. Core connectives are
// True/Exists/Not/Or; False, And, Implies and ForAll are kept as first-class
// nodes so derived application conditions stay readable, and evaluate by
// their usual equivalences.
class Condition {
public:
    static ConditionPtr make_true(GraphPtr over);
    static ConditionPtr make_false(GraphPtr over);
    // embedding: over -> Q, body over Q
    static ConditionPtr exists(Morphism embedding, ConditionPtr body);
    static ConditionPtr forall(Morphism embedding, ConditionPtr body);
    static ConditionPtr negation(ConditionPtr inner);
    static ConditionPtr disjunction(GraphPtr over, std::vector<ConditionPtr> parts);
    static ConditionPtr conjunction(GraphPtr over, std::vector<ConditionPtr> parts);
    static ConditionPtr implication(ConditionPtr antecedent, ConditionPtr consequent);

    ConditionKind kind() const { return kind_; }
    const GraphPtr& over() const { return over_; }
    const Morphism& embedding() const { return embedding_; }
    const ConditionPtr& body() const { return body_; }
    const std::vector<ConditionPtr>& parts() const { return parts_; }

    bool is_true() const { return kind_ == ConditionKind::True; }
    bool is_false() const { return kind_ == ConditionKind::False; }

private:
    ConditionKind kind_;
    GraphPtr over_;
    Morphism embedding_;            // Exists / ForAll
    ConditionPtr body_;             // Exists / ForAll / Not
    std::vector<ConditionPtr> parts_;  // And / Or (n-ary), Implies (2)

    Condition(ConditionKind kind, GraphPtr over, Morphism embedding, ConditionPtr body,
              std::vector<ConditionPtr> parts)
        : kind_(kind),
          over_(std::move(over)),
          embedding_(std::move(embedding)),
          body_(std::move(body)),
          parts_(std::move(parts)) {}

    static ConditionPtr build(ConditionKind kind, GraphPtr over, Morphism embedding,
                              ConditionPtr body, std::vector<ConditionPtr> parts);
};

// True/False absorption, double negation, empty and singleton connectives,
// exists-of-false and forall-of-true. Idempotent.
ConditionPtr fold_condition(const ConditionPtr& c);

// Canonical rendering used for hashes, sort keys and debug output.
std::string condition_signature(const ConditionPtr& c);

// p satisfies c; p must start at the graph c is over.
bool satisfies(const Morphism& p, const ConditionPtr& c);

enum class ConstraintKind { Hard, Weak };

// Constraint in universal form: forall(e : C -> P, conclusion). Hard
// constraints gate condition simplification and are never counted in gain.
struct Constraint {
    std::string name;
    ConstraintKind kind = ConstraintKind::Weak;
    double weight = 1.0;
    Morphism premise_embedding;  // e : C -> P (C is empty for ordinary constraints)
    ConditionPtr conclusion;     // over P

    const GraphPtr& premise() const { return premise_embedding.codomain; }
    const GraphPtr& context() const { return premise_embedding.domain; }

    // Whole constraint as a single condition over the context graph.
    ConditionPtr as_condition() const;

    // True when the shape is forall(empty -> P, False).
    bool forbidden_pattern() const;
};

struct ViolationSet {
    Morphism anchor;                 // p : C -> G
    std::vector<Morphism> witnesses;  // q : P -> G with p = q.e and q does not satisfy the conclusion
};

// Occurrences of the premise extending p that fail the conclusion,
// deterministically ordered.
ViolationSet violations_of(const Morphism& p, const Constraint& c);

// Number of violations of c in G (anchored at the unique map from the empty
// context).
int count_violations(const GraphPtr& g, const Constraint& c);

// Wraps a closed condition into universal form; a condition that is already
// a ForAll from the empty graph is kept as is, anything else becomes
// forall(id over the empty graph, c) so its count acts as a 0/1 property.
Constraint normalize_universal(const ConditionPtr& closed, ConstraintKind kind, double weight,
                               std::string name);

bool satisfies_graph(const GraphPtr& g, const Constraint& c);

}  // namespace graphrepair
