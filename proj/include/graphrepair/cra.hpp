#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphrepair/condition.hpp"
#include "graphrepair/rewrite.hpp"

namespace graphrepair {

enum class CraVariant { Base, Extended };

// Bundled class-responsibility case study: class/method/attribute type
// graph, the two move rules, and the constraint sets.
//
// Base constraints: h1/h2 forbid features contained in two classes (hard);
// w1 wants same-class method pairs to share a same-class attribute, w2
// forbids cross-class attribute use (weak).
//
// Extended constraints (h1 hard): w3 wants same-class method pairs to depend
// on each other, w4 forbids cross-class method calls, w5 wants same-class
// method/attribute pairs connected by a use, w6 forbids cross-class
// attribute use. Their violation sum is the repair metric.
struct CraAssets {
    TypeGraphPtr type_graph;
    std::vector<Rule> rules;             // moveMethod, moveAttribute
    std::vector<Constraint> constraints;  // hard first, then weak
    GraphPtr fixture;                     // the three-class shopping model

    std::vector<Constraint> hard() const;
    std::vector<Constraint> weak() const;
    const Rule& rule(const std::string& name) const;
    const Constraint& constraint(const std::string& name) const;
};

CraAssets build_cra_assets(CraVariant variant);

// Class diagram with the published synthetic shape: every class owns five
// methods and five attributes; every method uses two attributes of its own
// class and three attributes of other classes, drawn with the seeded
// generator. 11 nodes per class, no container node.
GraphPtr generate_synthetic(int n_classes, std::uint64_t seed);

enum class FeatureKind { Method, Attribute };

struct FeatureModel {
    struct Feature {
        std::string name;
        FeatureKind kind;
    };
    std::vector<Feature> features;
    std::vector<std::pair<std::string, std::string>> deps;  // from method to feature
};

// Parses {"features":[{"name","kind"}], "deps":[{"from","to"}]}; dependency
// sources must be methods. Duplicate dependencies are collapsed.
FeatureModel parse_feature_model(const std::string& json_text);

// Bootstrap graph: one class per feature containing it, dependencies typed
// by their endpoint kinds.
GraphPtr load_feature_model(const FeatureModel& fm, const TypeGraphPtr& tg);

// Sum of violation counts of the extended weak constraints.
long cra_metric(const GraphPtr& g, const CraAssets& extended_assets);

// Seeded feature-model instances for experiments: half methods and half
// attributes, one to three dependencies per method.
FeatureModel generate_feature_model(int n_features, std::uint64_t seed);

}  // namespace graphrepair
