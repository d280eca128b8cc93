#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphrepair/graph.hpp"

namespace graphrepair {

// Span rule encoded by shared ids: the context K is exactly the set of
// elements present under the same id in both sides, so the two interface
// embeddings are id-identities and a comatch falls out of the match for free.
struct Rule {
    std::string name;
    GraphPtr lhs;
    GraphPtr rhs;

    std::vector<std::string> deleted_nodes() const;  // in lhs, not in rhs
    std::vector<std::string> deleted_edges() const;
    std::vector<std::string> created_nodes() const;  // in rhs, not in lhs
    std::vector<std::string> created_edges() const;

    bool is_identity() const;

    // K must be a well-formed subgraph of both sides: shared edges keep both
    // endpoints shared, and shared ids agree on types and endpoints.
    std::vector<std::string> validate() const;

    Rule inverted() const;  // swaps the two sides; involution
};

struct Transformation {
    Rule rule;
    Morphism match;    // m : L -> G
    GraphPtr original;  // G
    GraphPtr interface; // D = G minus the deleted images
    GraphPtr result;    // H = D plus fresh copies of the created elements
    Morphism interface_to_original;  // g : D -> G (id embedding)
    Morphism interface_to_result;    // h : D -> H (id embedding)
    Morphism comatch;  // n : R -> H
    Morphism track;    // partial G -> H, defined exactly on the surviving elements

    // Derived rule of the transformation as a span result <- D -> original,
    // i.e. the rule that undoes this step.
    Rule reversed_derived_rule() const;
    // Derived rule original <- D -> result.
    Rule derived_rule() const;
};

// True when deleting the match leaves no dangling edge.
bool is_applicable(const Rule& rule, const Morphism& m);

// All injective matches of the left side into g that pass the dangling
// check, deterministically ordered.
std::vector<Morphism> applicable_matches(const Rule& rule, const GraphPtr& g);

// Executes the rule at the match. Created elements get fresh ids derived
// from (rule name, right-side id, step), so repair traces replay bit-stably.
Transformation apply_rule(const Rule& rule, const Morphism& m, int step = 0);

// Neither match image touches the other's deleted elements. Both
// transformations must start from the same original graph.
bool parallel_independent(const Transformation& t1, const Transformation& t2);

// track composed with p when every image element survives the step.
std::optional<Morphism> track_total(const Transformation& t, const Morphism& p);

}  // namespace graphrepair
