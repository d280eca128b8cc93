#include <doctest.h>

#include "graphrepair/oracle/brute.hpp"
#include "graphrepair/report_io.hpp"
#include "support.hpp"

using namespace graphrepair;
using testsupport::base_assets;
using testsupport::move_match;

TEST_CASE("condition violation counts at a concrete match") {
    const auto& assets = base_assets();
    auto g = assets.fixture;
    auto hard = assets.hard();
    const Rule& ma = assets.rule("moveAttribute");
    Morphism m = move_match(ma, g, "username", "Session", "Cart");

    auto rep = derive_repair_acs(ma, assets.constraint("w1"), hard);
    REQUIRE(rep.size() == 1);
    CHECK(ac_violation_count(m, rep.front()) == 2);  // print/checkout in both orders

    auto imp = derive_impairment_acs(ma, assets.constraint("w1"), hard);
    REQUIRE(imp.size() == 1);
    CHECK(ac_violation_count(m, imp.front()) == 0);  // the source class has a single method

    SUBCASE("a condition whose anchor graph cannot embed counts zero") {
        // Anchor the same condition at a match into a tiny host with no methods.
        auto tiny = TypedGraph::make(assets.type_graph,
                                     {{"c1", "Class"}, {"c2", "Class"}, {"a", "Attribute"}},
                                     {{"e", "contains-attribute", "c1", "a"}});
        auto matches = applicable_matches(ma, tiny);
        REQUIRE(!matches.empty());
        CHECK(ac_violation_count(matches.front(), rep.front()) == 0);
    }
}

TEST_CASE("predicted deltas equal the published gains") {
    const auto& assets = base_assets();
    auto g = assets.fixture;
    auto hard = assets.hard();
    const Rule& ma = assets.rule("moveAttribute");
    const Rule& mm = assets.rule("moveMethod");
    const Constraint& w1 = assets.constraint("w1");
    const Constraint& w2 = assets.constraint("w2");

    AcBundle ma_w1 = derive_bundle(ma, w1, hard);
    AcBundle ma_w2 = derive_bundle(ma, w2, hard);
    AcBundle mm_w1 = derive_bundle(mm, w1, hard);
    AcBundle mm_w2 = derive_bundle(mm, w2, hard);

    Morphism username = move_match(ma, g, "username", "Session", "Cart");
    CHECK(predicted_delta(ma, username, w1, ma_w1) == -2);
    CHECK(predicted_delta(ma, username, w2, ma_w2) == -1);

    Morphism checkout = move_match(mm, g, "checkout", "Cart", "Session");
    CHECK(predicted_delta(mm, checkout, w1, mm_w1) == -4);
    CHECK(predicted_delta(mm, checkout, w2, mm_w2) == -1);

    Morphism add_item = move_match(mm, g, "addItem", "Cart", "Session");
    CHECK(predicted_delta(mm, add_item, w1, mm_w1) == 0);
    CHECK(predicted_delta(mm, add_item, w2, mm_w2) == 1);

    SUBCASE("stale bundles are refused") {
        CHECK_THROWS_AS(predicted_delta(mm, checkout, w1, ma_w1), InputError);
    }
}

TEST_CASE("classification flags") {
    const auto& assets = base_assets();
    auto g = assets.fixture;
    auto hard = assets.hard();
    const Rule& mm = assets.rule("moveMethod");
    const Constraint& w1 = assets.constraint("w1");
    AcBundle uncancelled = derive_bundle(mm, w1, hard, false);

    Morphism checkout = move_match(mm, g, "checkout", "Cart", "Session");
    auto c1 = classify_transformation(mm, checkout, w1, uncancelled);
    CHECK(c1.sustaining);
    CHECK(c1.improving);
    CHECK(c1.direct_sustaining);
    CHECK(c1.direct_improving);

    Morphism add_item = move_match(mm, g, "addItem", "Cart", "Session");
    auto c2 = classify_transformation(mm, add_item, w1, uncancelled);
    CHECK(c2.sustaining);       // delta 0
    CHECK(!c2.improving);
    CHECK(!c2.direct_sustaining);  // two individual impairments
    CHECK(!c2.direct_improving);

    SUBCASE("identity steps sustain directly but improve nothing") {
        Rule identity{"noop", mm.lhs, mm.lhs};
        AcBundle b = derive_bundle(identity, w1, hard, false);
        auto matches = applicable_matches(identity, g);
        REQUIRE(!matches.empty());
        auto flags = classify_transformation(identity, matches.front(), w1, b);
        CHECK(flags.sustaining);
        CHECK(flags.direct_sustaining);
        CHECK(!flags.improving);
        CHECK(!flags.direct_improving);
    }
}

TEST_CASE("ranking sorts by weighted delta with a total tie-break") {
    const auto& assets = base_assets();
    auto g = assets.fixture;
    RepairConfig config;

    auto ranked = rank_all(g, assets.rules, assets.constraints, config);
    REQUIRE(!ranked.empty());
    CHECK(ranked.front().rule_name == "moveMethod");
    CHECK(ranked.front().match.node_map.at("m") == "checkout");
    CHECK(ranked.front().match.node_map.at("c2") == "Session");
    CHECK(ranked.front().delta == -5);
    for (std::size_t i = 1; i < ranked.size(); ++i) CHECK(ranked[i - 1].delta <= ranked[i].delta);

    SUBCASE("empty hosts rank nothing") {
        CHECK(rank_all(empty_graph(assets.type_graph), assets.rules, assets.constraints, config)
                  .empty());
    }

    SUBCASE("scaling every weight leaves the best move unchanged") {
        RepairConfig scaled;
        scaled.weights = {{"w1", 3.5}, {"w2", 3.5}};
        auto again = rank_all(g, assets.rules, assets.constraints, scaled);
        CHECK(again.front().rule_name == ranked.front().rule_name);
        CHECK(again.front().match.same_maps(ranked.front().match));
        CHECK(again.front().delta == doctest::Approx(-5 * 3.5));
    }
}

TEST_CASE("greedy repair walks the fixture to its local optimum") {
    const auto& assets = base_assets();
    auto g = assets.fixture;
    RepairConfig config;

    RepairTrace trace = greedy_repair(g, assets.rules, assets.constraints, config);
    REQUIRE(!trace.steps.empty());
    CHECK(trace.steps.front().rule_name == "moveMethod");
    CHECK(trace.steps.front().match_description.find("m->checkout") != std::string::npos);
    CHECK(trace.steps.front().match_description.find("c2->Session") != std::string::npos);
    CHECK(trace.termination_reason == "no improving move");

    SUBCASE("a consistent graph needs no steps") {
        RepairTrace done = greedy_repair(trace.final_graph, assets.rules, assets.constraints, config);
        CHECK(done.steps.empty());
        CHECK(done.termination_reason == "no improving move");
    }
}

TEST_CASE("the trace identity holds exactly along synthetic runs") {
    const auto& assets = base_assets();
    auto g = generate_synthetic(4, 99);
    RepairConfig config;
    config.max_iterations = 100;

    RepairTrace trace = greedy_repair(g, assets.rules, assets.constraints, config);
    std::map<std::string, int> tally = trace.initial_violations;
    double last_weighted = 0;
    for (const auto& [name, nv] : tally) last_weighted += nv;
    for (const auto& s : trace.steps) {
        for (const auto& pc : s.per_constraint)
            tally[pc.constraint_name] += pc.impairments - pc.repairs;
        double weighted = 0;
        for (const auto& [name, nv] : tally) weighted += nv;
        CHECK(weighted < last_weighted);  // budget 0: strictly decreasing
        last_weighted = weighted;
    }
    CHECK(tally == trace.final_violations);
}

TEST_CASE("restart repair is seeded, deterministic and no worse than one run") {
    const auto& assets = base_assets();
    auto g = generate_synthetic(3, 5);
    RepairConfig config;
    config.max_iterations = 60;

    SUBCASE("one restart with no budget is plain greedy") {
        config.restarts = 1;
        RestartOutcome outcome = repair_with_restarts(g, assets.rules, assets.constraints, config);
        RepairTrace plain = greedy_repair(g, assets.rules, assets.constraints, config);
        CHECK(trace_to_json(outcome.best()) == trace_to_json(plain));
    }

    SUBCASE("the same seed reproduces the same traces bit for bit") {
        config.restarts = 4;
        config.initial_impair_budget = 2;
        config.rng_seed = 1234;
        RestartOutcome a = repair_with_restarts(g, assets.rules, assets.constraints, config);
        RestartOutcome b = repair_with_restarts(g, assets.rules, assets.constraints, config);
        CHECK(restart_outcome_to_json(a, config) == restart_outcome_to_json(b, config));
        CHECK(a.best_index == b.best_index);
    }

    SUBCASE("more restarts never raise the best total") {
        config.restarts = 1;
        config.initial_impair_budget = 2;
        config.rng_seed = 77;
        double one = repair_with_restarts(g, assets.rules, assets.constraints, config)
                         .best()
                         .weighted_total(config);
        config.restarts = 6;
        double six = repair_with_restarts(g, assets.rules, assets.constraints, config)
                         .best()
                         .weighted_total(config);
        CHECK(six <= one + 1e-9);
    }
}

TEST_CASE("weighted prediction equals the weighted measured change") {
    const auto& assets = base_assets();
    auto g = assets.fixture;
    auto hard = assets.hard();
    std::mt19937_64 rng(2024);
    const std::vector<Constraint> weak = assets.weak();
    for (const auto& rule : assets.rules) {
        std::vector<AcBundle> bundles;
        for (const auto& c : weak) bundles.push_back(derive_bundle(rule, c, hard));
        for (const auto& m : applicable_matches(rule, g)) {
            Transformation t = apply_rule(rule, m);
            double w1_weight = 0.25 * static_cast<double>(rng() % 16 + 1);
            double w2_weight = 0.25 * static_cast<double>(rng() % 16 + 1);
            double predicted = 0;
            double actual = 0;
            for (std::size_t i = 0; i < bundles.size(); ++i) {
                const Constraint& c = weak[i];
                double w = c.name == "w1" ? w1_weight : w2_weight;
                predicted += w * predicted_delta(rule, m, c, bundles[i]);
                actual += w * (oracle::brute_violation_count(t.result, c) -
                               oracle::brute_violation_count(g, c));
            }
            CHECK(predicted == doctest::Approx(actual));
        }
    }
}
