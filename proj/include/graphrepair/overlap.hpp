#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphrepair/rewrite.hpp"

namespace graphrepair {

enum class OverlapClassKind { Pre, Con };

// One representative per equivalence class of jointly surjective embedding
// pairs of two graphs into a common gluing. For injective pairs the classes
// biject with the admissible partial correspondences, so the representatives
// are produced directly from correspondences and no isomorphism filtering
// pass is needed.
struct Overlap {
    Morphism left;   // A -> glue
    Morphism right;  // B -> glue
    GraphPtr glue;
    std::vector<std::pair<std::string, std::string>> node_pairs;  // identified (A,B) nodes
    std::vector<std::pair<std::string, std::string>> edge_pairs;  // identified (A,B) edges

    // pre: the induced transformations are parallel dependent (the right
    // image touches elements the rule deletes); con: independent.
    OverlapClassKind class_kind = OverlapClassKind::Con;
    std::optional<Morphism> witness;  // B -> D factorisation, present when con

    // Canonical correspondence key; doubles as the class identity.
    std::string signature() const;
};

// Forced identifications, e.g. the commuting-square side condition of the
// shift operator. Pairs are (A element, B element).
struct CorrespondenceBase {
    std::vector<std::pair<std::string, std::string>> node_pairs;
    std::vector<std::pair<std::string, std::string>> edge_pairs;
};

// One representative per class of overlaps of A and B whose correspondence
// extends the base. Edges may be identified only when both endpoints are and
// the types match. Deterministic order (by signature).
std::vector<Overlap> enumerate_overlap_classes(const GraphPtr& a, const GraphPtr& b,
                                               const CorrespondenceBase* base = nullptr);

struct RuleOverlapClasses {
    std::vector<Overlap> pre;
    std::vector<Overlap> con;
};

// Classes of overlaps of the rule's left side with p, keeping only overlaps
// where the rule is applicable at the left embedding, partitioned by whether
// the right image intersects the deleted elements. Con entries carry the
// factorisation witness through the interface.
RuleOverlapClasses rule_overlap_classes(const Rule& rule, const GraphPtr& p);

// Strict overlap equivalence: an isomorphism of the gluings commuting with
// both embedding pairs.
bool equivalent_overlaps(const Overlap& o1, const Overlap& o2);

// Every glue element lies in the image of one of the two embeddings.
bool jointly_surjective(const Overlap& o);

// Debug dump, one line per class: correspondence, kind, glue size.
std::string describe_overlap(const Overlap& o);

}  // namespace graphrepair
