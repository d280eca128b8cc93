#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphrepair/oracle/brute.hpp"
#include "graphrepair/ranking.hpp"

namespace graphrepair {

// Predicted change of every weak constraint's violation count against the
// measured change, where measurement applies the rule and recounts with the
// independent brute-force path.
struct DeltaCheck {
    bool equal = true;
    std::map<std::string, int> predicted;
    std::map<std::string, int> actual;
};

DeltaCheck verify_delta_theorem(const GraphPtr& g, const Rule& rule, const Morphism& m,
                                const std::vector<Constraint>& weak,
                                const std::vector<Constraint>& hard = {});

// Occurrences of the premise in the original graph that fail the conclusion
// and are destroyed or fixed by the step; evaluated straight from the
// definitions via totality of the track morphism.
std::vector<Morphism> repaired_morphisms(const Transformation& t, const Constraint& c);

// Occurrences in the result graph that fail the conclusion and are created
// or broken by the step.
std::vector<Morphism> impaired_morphisms(const Transformation& t, const Constraint& c);

struct DirectFlags {
    bool direct_sustaining = false;
    bool direct_improving = false;
};

// The definitional characterisation, by exhaustive search.
DirectFlags direct_flags_brute(const Transformation& t, const Constraint& c);

// Seeded generator of small random instances over a three-edge-type test
// universe. Parameters are pinned here so any failure replays by seed.
struct GeneratorParams {
    int max_graph_nodes = 8;
    int max_graph_edges = 10;
    int max_premise_nodes = 3;
    int max_premise_edges = 3;
    int max_rule_nodes = 4;
    int max_rule_edges = 4;
    int max_deleted = 2;
    int max_created = 2;
    int max_conclusion_extra = 2;
};

class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed, GeneratorParams params = {});

    const TypeGraphPtr& type_graph() const { return tg_; }
    GraphPtr random_graph(int max_nodes, int max_edges);
    GraphPtr random_host() { return random_graph(params_.max_graph_nodes, params_.max_graph_edges); }
    Rule random_rule();
    Constraint random_constraint();
    // Condition over the given graph with bounded nesting.
    ConditionPtr random_condition(const GraphPtr& over, int depth);
    std::uint64_t next() { return rng_(); }
    std::size_t pick(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }

private:
    GeneratorParams params_;
    std::mt19937_64 rng_;
    TypeGraphPtr tg_;
    int name_counter_ = 0;
};

struct TheoremSuiteReport {
    int cases = 0;
    nlohmann::json failures = nlohmann::json::array();
};

// Runs the delta-theorem check on `cases` random applicable (graph, rule,
// match, constraint) instances. Derivation uses no hard constraints, so the
// identity must hold exactly on arbitrary hosts.
TheoremSuiteReport run_theorem_suite(int cases, std::uint64_t seed, GeneratorParams params = {});

}  // namespace graphrepair
