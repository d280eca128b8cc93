#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace graphrepair;
using testsupport::base_assets;
using testsupport::move_match;

TEST_CASE("applicable matches respect the dangling condition") {
    const auto& assets = base_assets();
    auto g = assets.fixture;
    const Rule& mm = assets.rule("moveMethod");
    CHECK(applicable_matches(mm, g).size() == 12);  // 6 methods x 2 other classes

    SUBCASE("deleting a node with a remaining incident edge is blocked") {
        auto tg = assets.type_graph;
        GraphPtr lhs = TypedGraph::make(tg, {{"x", "Attribute"}}, {});
        GraphPtr rhs = empty_graph(tg);
        Rule delete_attr{"deleteAttribute", lhs, rhs};
        // Every attribute in the fixture is contained somewhere, so deleting
        // any of them would leave its containment edge dangling.
        CHECK(applicable_matches(delete_attr, g).empty());
        auto loose = TypedGraph::make(tg, {{"a", "Attribute"}}, {});
        CHECK(applicable_matches(delete_attr, loose).size() == 1);
    }

    SUBCASE("the identity rule matches every occurrence") {
        Rule identity{"noop", mm.lhs, mm.lhs};
        CHECK(applicable_matches(identity, g).size() ==
              find_monomorphisms(mm.lhs, g).size());
    }
}

TEST_CASE("applying moveMethod produces the expected result graph") {
    const auto& assets = base_assets();
    auto g = assets.fixture;
    const Rule& mm = assets.rule("moveMethod");
    Morphism m = move_match(mm, g, "checkout", "Cart", "Session");
    Transformation t = apply_rule(mm, m);

    CHECK(t.result->validate().empty());
    CHECK(!t.result->has_edge("cm:checkout"));
    bool moved = false;
    for (const Edge* e : t.result->in_edges("checkout"))
        if (e->type == "contains-method" && e->src == "Session") moved = true;
    CHECK(moved);

    // Element accounting per kind.
    CHECK(t.result->node_count() == g->node_count());
    CHECK(t.result->edge_count() == g->edge_count());
    CHECK(t.interface->edge_count() == g->edge_count() - 1);

    // Track is the identity on survivors and undefined on the deleted edge.
    CHECK(t.track.node_image("checkout") != nullptr);
    CHECK(*t.track.node_image("checkout") == "checkout");
    CHECK(t.track.edge_image("cm:checkout") == nullptr);

    // No tracked element is newly created.
    std::set<std::string> created;
    for (const auto& id : t.rule.created_edges()) created.insert(t.comatch.edge_map.at(id));
    for (const auto& [from, to] : t.track.edge_map) CHECK(!created.count(to));

    SUBCASE("comatch agrees with the match on the context") {
        CHECK(t.comatch.node_map.at("c1") == m.node_map.at("c1"));
        CHECK(t.comatch.node_map.at("c2") == m.node_map.at("c2"));
        CHECK(t.comatch.node_map.at("m") == m.node_map.at("m"));
        CHECK(t.comatch.validate().empty());
    }

    SUBCASE("identity rule keeps the graph and a total track") {
        Rule identity{"noop", mm.lhs, mm.lhs};
        auto matches = applicable_matches(identity, g);
        REQUIRE(!matches.empty());
        Transformation ti = apply_rule(identity, matches.front());
        CHECK(graphs_identical(*ti.result, *g));
        CHECK(ti.track.node_map.size() == g->node_count());
        CHECK(ti.track.edge_map.size() == g->edge_count());
    }

    SUBCASE("fresh ids derive from rule name, right-side id and step") {
        Transformation t7 = apply_rule(mm, m, 7);
        CHECK(t7.comatch.edge_map.at("contains2") == "moveMethod#7:contains2");
        Transformation t7b = apply_rule(mm, m, 7);
        CHECK(graphs_identical(*t7.result, *t7b.result));
    }

    SUBCASE("inapplicable matches are rejected") {
        auto tg = assets.type_graph;
        GraphPtr lhs = TypedGraph::make(tg, {{"x", "Attribute"}}, {});
        Rule delete_attr{"deleteAttribute", lhs, empty_graph(tg)};
        Morphism bad;
        bad.domain = lhs;
        bad.codomain = g;
        bad.node_map["x"] = "items";
        CHECK_THROWS_AS(apply_rule(delete_attr, bad), InputError);
    }
}

TEST_CASE("rule inversion is an involution that undoes the move") {
    const auto& assets = base_assets();
    const Rule& ma = assets.rule("moveAttribute");
    Rule inv = ma.inverted();
    CHECK(inv.deleted_edges() == ma.created_edges());
    CHECK(inv.created_edges() == ma.deleted_edges());
    Rule twice = inv.inverted();
    CHECK(graphs_identical(*twice.lhs, *ma.lhs));
    CHECK(graphs_identical(*twice.rhs, *ma.rhs));

    Rule identity{"noop", ma.lhs, ma.lhs};
    Rule identity_inv = identity.inverted();
    CHECK(identity_inv.is_identity());
}

TEST_CASE("round trip through the inverse rule restores the graph") {
    InstanceGenerator gen(37);
    int done = 0;
    for (int i = 0; i < 1000 && done < 25; ++i) {
        Rule rule = gen.random_rule();
        if (!rule.validate().empty()) continue;
        GraphPtr host = gen.random_host();
        auto matches = applicable_matches(rule, host);
        if (matches.empty()) continue;
        Transformation t = apply_rule(rule, matches[gen.pick(matches.size())]);
        Transformation back = apply_rule(rule.inverted(), t.comatch);
        CHECK(graphs_isomorphic(back.result, host).has_value());
        CHECK(t.result->node_count() ==
              host->node_count() - rule.deleted_nodes().size() + rule.created_nodes().size());
        CHECK(t.result->edge_count() ==
              host->edge_count() - rule.deleted_edges().size() + rule.created_edges().size());
        ++done;
    }
    CHECK(done == 25);
}

TEST_CASE("parallel independence is the disjointness of matches and deletions") {
    const auto& assets = base_assets();
    auto g = assets.fixture;
    const Rule& mm = assets.rule("moveMethod");
    const Rule& ma = assets.rule("moveAttribute");
    Rule probe{"occurrence", assets.constraint("w1").premise(), assets.constraint("w1").premise()};

    Morphism m = move_match(mm, g, "checkout", "Cart", "Session");
    Transformation move_checkout = apply_rule(mm, m);

    int dependent = 0, independent = 0;
    for (const auto& q : applicable_matches(probe, g)) {
        Transformation occurrence = apply_rule(probe, q);
        if (parallel_independent(move_checkout, occurrence))
            ++independent;
        else
            ++dependent;
        CHECK(parallel_independent(move_checkout, occurrence) ==
              parallel_independent(occurrence, move_checkout));
    }
    CHECK(dependent == 4);  // the pairs that include checkout in Cart
    CHECK(independent == 4);

    SUBCASE("identity transformations never conflict") {
        auto qs = applicable_matches(probe, g);
        Transformation a = apply_rule(probe, qs[0]);
        Transformation b = apply_rule(probe, qs[1]);
        CHECK(parallel_independent(a, b));
    }

    SUBCASE("attribute moves never touch the method-pair premise") {
        for (const auto& am : applicable_matches(ma, g)) {
            Transformation move_attr = apply_rule(ma, am);
            for (const auto& q : applicable_matches(probe, g)) {
                Transformation occurrence = apply_rule(probe, q);
                CHECK(parallel_independent(move_attr, occurrence));
            }
        }
    }

    SUBCASE("different originals are rejected") {
        Transformation other = apply_rule(mm, move_match(mm, g, "print", "Cart", "Session"));
        Transformation after = apply_rule(
            mm, move_match(mm, move_checkout.result, "print", "Cart", "Session"));
        CHECK_THROWS_AS(parallel_independent(move_checkout, after), InputError);
        CHECK(parallel_independent(move_checkout, other));
    }
}

TEST_CASE("track composition is total exactly on surviving occurrences") {
    const auto& assets = base_assets();
    auto g = assets.fixture;
    const Rule& mm = assets.rule("moveMethod");
    Morphism m = move_match(mm, g, "checkout", "Cart", "Session");
    Transformation t = apply_rule(mm, m);

    auto premise = assets.constraint("w1").premise();
    int total = 0, destroyed = 0;
    for (const auto& q : find_monomorphisms(premise, g)) {
        auto tracked = track_total(t, q);
        if (!tracked) {
            ++destroyed;
            continue;
        }
        ++total;
        CHECK(tracked->validate().empty());
        // Surviving occurrences can be evaluated in the result graph.
        satisfies(*tracked, assets.constraint("w1").conclusion);
    }
    CHECK(destroyed == 4);
    CHECK(total == 4);
}
