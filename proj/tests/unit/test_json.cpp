#include <doctest.h>

#include "graphrepair/json_io.hpp"
#include "graphrepair/report_io.hpp"
#include "support.hpp"

using namespace graphrepair;
using testsupport::base_assets;

TEST_CASE("graph serialization round-trips bit-stably") {
    InstanceGenerator gen(113);
    for (int i = 0; i < 30; ++i) {
        GraphPtr g = gen.random_host();
        std::string once = dump_json(graph_to_json(*g));
        GraphPtr back = graph_from_json(nlohmann::json::parse(once));
        CHECK(graphs_identical(*g, *back));
        CHECK(dump_json(graph_to_json(*back)) == once);
    }
}

TEST_CASE("constraint and rule files round-trip") {
    const auto& assets = base_assets();
    std::string text = dump_json(constraints_file_to_json(assets.type_graph, assets.constraints));
    auto [tg, cs] = constraints_file_from_json(nlohmann::json::parse(text));
    REQUIRE(cs.size() == assets.constraints.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        CHECK(cs[i].name == assets.constraints[i].name);
        CHECK(cs[i].kind == assets.constraints[i].kind);
        CHECK(cs[i].weight == assets.constraints[i].weight);
        CHECK(condition_signature(cs[i].as_condition()) ==
              condition_signature(assets.constraints[i].as_condition()));
    }
    CHECK(dump_json(constraints_file_to_json(tg, cs)) == text);

    std::string rules_text = dump_json(rules_file_to_json(assets.type_graph, assets.rules));
    auto [tg2, rules] = rules_file_from_json(nlohmann::json::parse(rules_text));
    CHECK(dump_json(rules_file_to_json(tg2, rules)) == rules_text);
}

TEST_CASE("loaders reject malformed input") {
    const auto& assets = base_assets();
    nlohmann::json tg = type_graph_to_json(*assets.type_graph);

    SUBCASE("rules whose context changes an edge") {
        nlohmann::json j;
        j["name"] = "broken";
        j["lhs"] = {{"nodes", {{{"id", "c"}, {"type", "Class"}}, {{"id", "m"}, {"type", "Method"}}}},
                    {"edges", {{{"id", "e"}, {"type", "contains-method"}, {"src", "c"}, {"tgt", "m"}}}}};
        j["rhs"] = {{"nodes", {{{"id", "c"}, {"type", "Class"}}, {{"id", "m"}, {"type", "Method"}},
                               {{"id", "c2"}, {"type", "Class"}}}},
                    {"edges", {{{"id", "e"}, {"type", "contains-method"}, {"src", "c2"}, {"tgt", "m"}}}}};
        CHECK_THROWS_AS(rule_from_json(j, assets.type_graph), InputError);
    }

    SUBCASE("constraints with unknown kinds") {
        nlohmann::json j = constraint_to_json(assets.constraint("w1"));
        j["kind"] = "soft";
        CHECK_THROWS_AS(constraint_from_json(j, assets.type_graph), InputError);
    }

    SUBCASE("conditions with unknown nodes") {
        nlohmann::json j;
        j["xor"] = nlohmann::json::array();
        CHECK_THROWS_AS(condition_from_json(j, assets.type_graph, empty_graph(assets.type_graph)),
                        InputError);
    }

    SUBCASE("graphs with missing endpoints still parse but fail validation") {
        nlohmann::json j;
        j["typegraph"] = tg;
        j["nodes"] = {{{"id", "m"}, {"type", "Method"}}};
        j["edges"] = {{{"id", "e"}, {"type", "contains-method"}, {"src", "c"}, {"tgt", "m"}}};
        GraphPtr g = graph_from_json(j);
        CHECK(!g->validate().empty());
    }
}

TEST_CASE("closed conditions without explicit universal form are normalized") {
    const auto& assets = base_assets();
    nlohmann::json j;
    j["name"] = "some-method";
    j["kind"] = "weak";
    nlohmann::json q;
    q["graph"] = {{"nodes", {{{"id", "m"}, {"type", "Method"}}}}, {"edges", nlohmann::json::array()}};
    q["embedding"] = {{"nodeMap", nlohmann::json::object()}, {"edgeMap", nlohmann::json::object()}};
    q["body"] = {{"true", nlohmann::json::object()}};
    j["exists"] = q;
    Constraint c = constraint_from_json(j, assets.type_graph);
    CHECK(c.premise()->node_count() == 0);  // wrapped over the empty graph
    CHECK(count_violations(empty_graph(assets.type_graph), c) == 1);
    CHECK(count_violations(assets.fixture, c) == 0);
}

TEST_CASE("bundle serialization is ordered and carries the hashes") {
    const auto& assets = base_assets();
    AcBundle b = derive_bundle(assets.rule("moveAttribute"), assets.constraint("w2"), assets.hard(),
                               false);
    nlohmann::json j = bundle_to_json(b);
    CHECK(j.at("rule") == "moveAttribute");
    CHECK(j.at("repair").size() == 2);
    CHECK(j.at("impairment").size() == 2);
    CHECK(j.at("ruleHash").get<std::uint64_t>() == rule_hash(assets.rule("moveAttribute")));
    std::string once = dump_json(j);
    CHECK(dump_json(bundle_to_json(b)) == once);
}
