#include "graphrepair/verify.hpp"

#include <algorithm>
#include <set>

#include "graphrepair/match.hpp"

namespace graphrepair {

DeltaCheck verify_delta_theorem(const GraphPtr& g, const Rule& rule, const Morphism& m,
                                const std::vector<Constraint>& weak,
                                const std::vector<Constraint>& hard) {
    DeltaCheck check;
    Transformation t = apply_rule(rule, m);
    for (const auto& c : weak) {
        AcBundle bundle = derive_bundle(rule, c, hard, /*cancel=*/true);
        int predicted = predicted_delta(rule, m, c, bundle);
        int actual = oracle::brute_violation_count(t.result, c) - oracle::brute_violation_count(g, c);
        check.predicted[c.name] = predicted;
        check.actual[c.name] = actual;
        if (predicted != actual) check.equal = false;
    }
    return check;
}

std::vector<Morphism> repaired_morphisms(const Transformation& t, const Constraint& c) {
    std::vector<Morphism> out;
    for (const auto& p : find_monomorphisms(c.premise(), t.original)) {
        if (satisfies(p, c.conclusion)) continue;
        auto tracked = track_total(t, p);
        if (!tracked) {
            out.push_back(p);  // destroyed
        } else if (satisfies(*tracked, c.conclusion)) {
            out.push_back(p);  // fixed by the step
        }
    }
    return out;
}

std::vector<Morphism> impaired_morphisms(const Transformation& t, const Constraint& c) {
    std::vector<Morphism> out;
    // Preimages under track of every occurrence in the result graph.
    std::vector<Morphism> before = find_monomorphisms(c.premise(), t.original);
    for (const auto& p : find_monomorphisms(c.premise(), t.result)) {
        if (satisfies(p, c.conclusion)) continue;
        std::optional<Morphism> preimage;
        for (const auto& q : before) {
            auto tracked = track_total(t, q);
            if (tracked && tracked->same_maps(p)) {
                preimage = q;
                break;
            }
        }
        if (!preimage) {
            out.push_back(p);  // created
        } else if (satisfies(*preimage, c.conclusion)) {
            out.push_back(p);  // broken by the step
        }
    }
    return out;
}

DirectFlags direct_flags_brute(const Transformation& t, const Constraint& c) {
    DirectFlags flags;
    flags.direct_sustaining = impaired_morphisms(t, c).empty();
    flags.direct_improving = flags.direct_sustaining && !repaired_morphisms(t, c).empty();
    return flags;
}

InstanceGenerator::InstanceGenerator(std::uint64_t seed, GeneratorParams params)
    : params_(params), rng_(seed) {
    tg_ = make_type_graph({"T", "U"}, {{"t-t", "T", "T"}, {"t-u", "T", "U"}, {"u-u", "U", "U"}});
}

GraphPtr InstanceGenerator::random_graph(int max_nodes, int max_edges) {
    int n = 1 + static_cast<int>(pick(static_cast<std::size_t>(max_nodes)));
    std::vector<Node> nodes;
    for (int i = 0; i < n; ++i) {
        std::string id = "n" + std::to_string(name_counter_++);
        nodes.push_back({id, pick(2) == 0 ? "T" : "U"});
    }
    std::vector<Edge> edges;
    int m = static_cast<int>(pick(static_cast<std::size_t>(max_edges + 1)));
    for (int i = 0; i < m; ++i) {
        const Node& a = nodes[pick(nodes.size())];
        const Node& b = nodes[pick(nodes.size())];
        std::string type;
        if (a.type == "T" && b.type == "T") type = "t-t";
        else if (a.type == "T" && b.type == "U") type = "t-u";
        else if (a.type == "U" && b.type == "U") type = "u-u";
        else continue;  // no U->T edge type
        edges.push_back({"e" + std::to_string(name_counter_++), type, a.id, b.id});
    }
    return TypedGraph::make(tg_, std::move(nodes), std::move(edges));
}

Rule InstanceGenerator::random_rule() {
    GraphPtr lhs = random_graph(params_.max_rule_nodes, params_.max_rule_edges);

    // Pick elements to delete; kept edges must keep their endpoints, so a
    // deleted node drags its incident lhs edges along.
    std::set<std::string> del_nodes, del_edges;
    int deletions = static_cast<int>(pick(static_cast<std::size_t>(params_.max_deleted + 1)));
    for (int i = 0; i < deletions; ++i) {
        if (!lhs->edge_count() || pick(2) == 0) {
            if (!lhs->node_count()) continue;
            const Node& n = lhs->nodes()[pick(lhs->node_count())];
            del_nodes.insert(n.id);
            for (const Edge* e : lhs->out_edges(n.id)) del_edges.insert(e->id);
            for (const Edge* e : lhs->in_edges(n.id)) del_edges.insert(e->id);
        } else {
            del_edges.insert(lhs->edges()[pick(lhs->edge_count())].id);
        }
    }

    std::vector<Node> rhs_nodes;
    std::vector<Edge> rhs_edges;
    for (const auto& n : lhs->nodes())
        if (!del_nodes.count(n.id)) rhs_nodes.push_back(n);
    for (const auto& e : lhs->edges())
        if (!del_edges.count(e.id)) rhs_edges.push_back(e);

    int creations = static_cast<int>(pick(static_cast<std::size_t>(params_.max_created + 1)));
    for (int i = 0; i < creations; ++i) {
        if (pick(2) == 0 || rhs_nodes.empty()) {
            rhs_nodes.push_back({"r" + std::to_string(name_counter_++), pick(2) == 0 ? "T" : "U"});
        } else {
            const Node& a = rhs_nodes[pick(rhs_nodes.size())];
            const Node& b = rhs_nodes[pick(rhs_nodes.size())];
            std::string type;
            if (a.type == "T" && b.type == "T") type = "t-t";
            else if (a.type == "T" && b.type == "U") type = "t-u";
            else if (a.type == "U" && b.type == "U") type = "u-u";
            else continue;
            rhs_edges.push_back({"r" + std::to_string(name_counter_++), type, a.id, b.id});
        }
    }
    return Rule{"rule" + std::to_string(name_counter_++), lhs,
                TypedGraph::make(tg_, std::move(rhs_nodes), std::move(rhs_edges))};
}

ConditionPtr InstanceGenerator::random_condition(const GraphPtr& over, int depth) {
    std::size_t choice = pick(depth > 0 ? 6 : 2);
    switch (choice) {
        case 0:
            return Condition::make_true(over);
        case 1:
            return Condition::make_false(over);
        default:
            break;
    }
    if (choice == 2 || choice == 3) {
        // Quantifier extending the graph by a small amount.
        std::vector<Node> nodes(over->nodes().begin(), over->nodes().end());
        std::vector<Edge> edges(over->edges().begin(), over->edges().end());
        int extra = 1 + static_cast<int>(pick(static_cast<std::size_t>(params_.max_conclusion_extra)));
        for (int i = 0; i < extra; ++i) {
            if (pick(2) == 0 || nodes.empty()) {
                nodes.push_back({"q" + std::to_string(name_counter_++), pick(2) == 0 ? "T" : "U"});
            } else {
                const Node& a = nodes[pick(nodes.size())];
                const Node& b = nodes[pick(nodes.size())];
                std::string type;
                if (a.type == "T" && b.type == "T") type = "t-t";
                else if (a.type == "T" && b.type == "U") type = "t-u";
                else if (a.type == "U" && b.type == "U") type = "u-u";
                else continue;
                edges.push_back({"q" + std::to_string(name_counter_++), type, a.id, b.id});
            }
        }
        GraphPtr q = TypedGraph::make(tg_, std::move(nodes), std::move(edges));
        Morphism e;
        e.domain = over;
        e.codomain = q;
        for (const auto& n : over->nodes()) e.node_map.emplace(n.id, n.id);
        for (const auto& ed : over->edges()) e.edge_map.emplace(ed.id, ed.id);
        ConditionPtr body = random_condition(q, depth - 1);
        return choice == 2 ? Condition::exists(e, body) : Condition::forall(e, body);
    }
    if (choice == 4) return Condition::negation(random_condition(over, depth - 1));
    return Condition::disjunction(over,
                                  {random_condition(over, depth - 1), random_condition(over, depth - 1)});
}

Constraint InstanceGenerator::random_constraint() {
    GraphPtr premise = random_graph(params_.max_premise_nodes, params_.max_premise_edges);
    Constraint c;
    c.name = "c" + std::to_string(name_counter_++);
    c.kind = ConstraintKind::Weak;
    c.premise_embedding.domain = empty_graph(tg_);
    c.premise_embedding.codomain = premise;
    c.conclusion = random_condition(premise, 2);
    return c;
}

TheoremSuiteReport run_theorem_suite(int cases, std::uint64_t seed, GeneratorParams params) {
    TheoremSuiteReport report;
    std::uint64_t draw = 0;
    while (report.cases < cases) {
        InstanceGenerator gen(seed + 0x9e3779b97f4a7c15ULL * draw++, params);
        GraphPtr host = gen.random_host();
        Rule rule = gen.random_rule();
        auto matches = applicable_matches(rule, host);
        if (matches.empty()) continue;
        const Morphism& m = matches[gen.pick(matches.size())];
        Constraint c = gen.random_constraint();
        DeltaCheck check = verify_delta_theorem(host, rule, m, {c});
        ++report.cases;
        if (!check.equal) {
            nlohmann::json f;
            f["draw"] = draw - 1;
            f["rule"] = rule.name;
            f["match"] = m.signature();
            f["constraint"] = c.name;
            f["predicted"] = check.predicted.at(c.name);
            f["actual"] = check.actual.at(c.name);
            report.failures.push_back(f);
        }
    }
    return report;
}

}  // namespace graphrepair
