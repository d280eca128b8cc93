#include "graphrepair/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace graphrepair {

using nlohmann::json;

namespace {

json sorted_object() { return json::object(); }

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

}  // namespace

json type_graph_to_json(const TypeGraph& tg) {
    json j = sorted_object();
    j["nodes"] = tg.node_types;
    json edges = json::array();
    for (const auto& et : tg.edge_types) {
        json e = sorted_object();
        e["type"] = et.name;
        e["src"] = et.src;
        e["tgt"] = et.tgt;
        edges.push_back(e);
    }
    j["edges"] = edges;
    return j;
}

TypeGraphPtr type_graph_from_json(const json& j) {
    if (!j.is_object()) bad("type graph: expected an object");
    std::vector<std::string> node_types;
    for (const auto& n : j.value("nodes", json::array())) node_types.push_back(n.get<std::string>());
    std::vector<TypeGraph::EdgeType> edge_types;
    for (const auto& e : j.value("edges", json::array()))
        edge_types.push_back({e.at("type").get<std::string>(), e.at("src").get<std::string>(),
                              e.at("tgt").get<std::string>()});
    auto tg = make_type_graph(std::move(node_types), std::move(edge_types));
    auto diags = tg->validate();
    if (!diags.empty()) bad("type graph: " + diags.front());
    return tg;
}

json graph_body_to_json(const TypedGraph& g) {
    json j = sorted_object();
    json nodes = json::array();
    for (const auto& n : g.nodes()) {
        json x = sorted_object();
        x["id"] = n.id;
        x["type"] = n.type;
        nodes.push_back(x);
    }
    json edges = json::array();
    for (const auto& e : g.edges()) {
        json x = sorted_object();
        x["id"] = e.id;
        x["type"] = e.type;
        x["src"] = e.src;
        x["tgt"] = e.tgt;
        edges.push_back(x);
    }
    j["nodes"] = nodes;
    j["edges"] = edges;
    return j;
}

json graph_to_json(const TypedGraph& g) {
    json j = graph_body_to_json(g);
    j["typegraph"] = type_graph_to_json(*g.type_graph());
    return j;
}

GraphPtr graph_body_from_json(const json& j, TypeGraphPtr tg) {
    if (!j.is_object()) bad("graph: expected an object");
    std::vector<Node> nodes;
    for (const auto& n : j.value("nodes", json::array()))
        nodes.push_back({n.at("id").get<std::string>(), n.at("type").get<std::string>()});
    std::vector<Edge> edges;
    for (const auto& e : j.value("edges", json::array()))
        edges.push_back({e.at("id").get<std::string>(), e.at("type").get<std::string>(),
                         e.at("src").get<std::string>(), e.at("tgt").get<std::string>()});
    return TypedGraph::make(std::move(tg), std::move(nodes), std::move(edges));
}

GraphPtr graph_from_json(const json& j) {
    if (!j.contains("typegraph")) bad("graph: missing \"typegraph\"");
    return graph_body_from_json(j, type_graph_from_json(j.at("typegraph")));
}

json morphism_maps_to_json(const Morphism& m) {
    json j = sorted_object();
    j["nodeMap"] = json::object();
    for (const auto& [a, b] : m.node_map) j["nodeMap"][a] = b;
    j["edgeMap"] = json::object();
    for (const auto& [a, b] : m.edge_map) j["edgeMap"][a] = b;
    return j;
}

namespace {

Morphism embedding_from_json(const json& j, const GraphPtr& from, const GraphPtr& to) {
    Morphism m;
    m.domain = from;
    m.codomain = to;
    if (j.is_object() && j.contains("embedding")) {
        const json& e = j.at("embedding");
        const json node_map = e.value("nodeMap", json::object());
        const json edge_map = e.value("edgeMap", json::object());
        for (const auto& [a, b] : node_map.items()) m.node_map.emplace(a, b.get<std::string>());
        for (const auto& [a, b] : edge_map.items()) m.edge_map.emplace(a, b.get<std::string>());
    } else {
        // Shared-id convention.
        for (const auto& n : from->nodes()) m.node_map.emplace(n.id, n.id);
        for (const auto& e : from->edges()) m.edge_map.emplace(e.id, e.id);
    }
    if (!m.total()) bad("embedding: not total on its domain");
    auto diags = m.validate();
    if (!diags.empty()) bad("embedding: " + diags.front());
    return m;
}

json quantifier_to_json(const ConditionPtr& c) {
    json j = sorted_object();
    j["graph"] = graph_body_to_json(*c->embedding().codomain);
    j["embedding"] = morphism_maps_to_json(c->embedding());
    j["body"] = condition_to_json(c->body());
    return j;
}

}  // namespace

json condition_to_json(const ConditionPtr& c) {
    json j = sorted_object();
    switch (c->kind()) {
        case ConditionKind::True:
            j["true"] = json::object();
            return j;
        case ConditionKind::False:
            j["false"] = json::object();
            return j;
        case ConditionKind::Exists:
            j["exists"] = quantifier_to_json(c);
            return j;
        case ConditionKind::ForAll:
            j["forall"] = quantifier_to_json(c);
            return j;
        case ConditionKind::Not:
            j["not"] = condition_to_json(c->body());
            return j;
        case ConditionKind::Or:
        case ConditionKind::And: {
            json parts = json::array();
            for (const auto& p : c->parts()) parts.push_back(condition_to_json(p));
            j[c->kind() == ConditionKind::Or ? "or" : "and"] = parts;
            return j;
        }
        case ConditionKind::Implies: {
            json pair = json::array();
            pair.push_back(condition_to_json(c->parts()[0]));
            pair.push_back(condition_to_json(c->parts()[1]));
            j["implies"] = pair;
            return j;
        }
    }
    bad("condition: unknown kind");
}

ConditionPtr condition_from_json(const json& j, const TypeGraphPtr& tg, const GraphPtr& over) {
    if (!j.is_object() || j.size() != 1) bad("condition: expected a one-key object");
    const std::string key = j.begin().key();
    const json& v = j.begin().value();
    if (key == "true") return Condition::make_true(over);
    if (key == "false") return Condition::make_false(over);
    if (key == "not") return Condition::negation(condition_from_json(v, tg, over));
    if (key == "or" || key == "and") {
        std::vector<ConditionPtr> parts;
        for (const auto& p : v) parts.push_back(condition_from_json(p, tg, over));
        return key == "or" ? Condition::disjunction(over, std::move(parts))
                           : Condition::conjunction(over, std::move(parts));
    }
    if (key == "implies") {
        if (!v.is_array() || v.size() != 2) bad("condition: \"implies\" takes [antecedent, consequent]");
        return Condition::implication(condition_from_json(v[0], tg, over),
                                      condition_from_json(v[1], tg, over));
    }
    if (key == "exists" || key == "forall") {
        GraphPtr q = graph_body_from_json(v.at("graph"), tg);
        auto diags = q->validate();
        if (!diags.empty()) bad("condition graph: " + diags.front());
        Morphism e = embedding_from_json(v, over, q);
        ConditionPtr body = condition_from_json(v.at("body"), tg, q);
        return key == "exists" ? Condition::exists(std::move(e), std::move(body))
                               : Condition::forall(std::move(e), std::move(body));
    }
    bad("condition: unknown node \"" + key + "\"");
}

json constraint_to_json(const Constraint& c) {
    json j = sorted_object();
    j["name"] = c.name;
    j["kind"] = c.kind == ConstraintKind::Hard ? "hard" : "weak";
    j["weight"] = c.weight;
    json q = sorted_object();
    q["graph"] = graph_body_to_json(*c.premise());
    q["embedding"] = morphism_maps_to_json(c.premise_embedding);
    q["body"] = condition_to_json(c.conclusion);
    j["forall"] = q;
    return j;
}

Constraint constraint_from_json(const json& j, const TypeGraphPtr& tg) {
    Constraint c;
    c.name = j.at("name").get<std::string>();
    std::string kind = j.value("kind", "weak");
    if (kind != "hard" && kind != "weak") bad("constraint '" + c.name + "': unknown kind");
    c.kind = kind == "hard" ? ConstraintKind::Hard : ConstraintKind::Weak;
    c.weight = j.value("weight", 1.0);
    if (!j.contains("forall")) {
        // Any closed condition; normalized to universal form.
        GraphPtr over = empty_graph(tg);
        json body = j;
        body.erase("name");
        body.erase("kind");
        if (body.contains("weight")) body.erase("weight");
        ConditionPtr closed = condition_from_json(body, tg, over);
        return normalize_universal(closed, c.kind, c.weight, c.name);
    }
    const json& q = j.at("forall");
    GraphPtr premise = graph_body_from_json(q.at("graph"), tg);
    auto diags = premise->validate();
    if (!diags.empty()) bad("constraint '" + c.name + "': " + diags.front());
    GraphPtr context = empty_graph(tg);
    c.premise_embedding = embedding_from_json(q, context, premise);
    c.conclusion = condition_from_json(q.at("body"), tg, premise);
    return c;
}

json constraints_file_to_json(const TypeGraphPtr& tg, const std::vector<Constraint>& cs) {
    json j = sorted_object();
    j["typegraph"] = type_graph_to_json(*tg);
    json arr = json::array();
    for (const auto& c : cs) arr.push_back(constraint_to_json(c));
    j["constraints"] = arr;
    return j;
}

std::pair<TypeGraphPtr, std::vector<Constraint>> constraints_file_from_json(const json& j) {
    TypeGraphPtr tg = type_graph_from_json(j.at("typegraph"));
    std::vector<Constraint> cs;
    std::set<std::string> names;
    for (const auto& c : j.value("constraints", json::array())) {
        cs.push_back(constraint_from_json(c, tg));
        if (!names.insert(cs.back().name).second)
            bad("duplicate constraint name '" + cs.back().name + "'");
    }
    return {tg, cs};
}

json rule_to_json(const Rule& r) {
    json j = sorted_object();
    j["name"] = r.name;
    j["lhs"] = graph_body_to_json(*r.lhs);
    j["rhs"] = graph_body_to_json(*r.rhs);
    return j;
}

Rule rule_from_json(const json& j, TypeGraphPtr tg) {
    Rule r;
    r.name = j.at("name").get<std::string>();
    r.lhs = graph_body_from_json(j.at("lhs"), tg);
    r.rhs = graph_body_from_json(j.at("rhs"), std::move(tg));
    for (const auto& side : {r.lhs, r.rhs}) {
        auto diags = side->validate();
        if (!diags.empty()) bad("rule '" + r.name + "': " + diags.front());
    }
    auto diags = r.validate();
    if (!diags.empty()) bad("rule '" + r.name + "': " + diags.front());
    return r;
}

json rules_file_to_json(const TypeGraphPtr& tg, const std::vector<Rule>& rules) {
    json j = sorted_object();
    j["typegraph"] = type_graph_to_json(*tg);
    json arr = json::array();
    for (const auto& r : rules) arr.push_back(rule_to_json(r));
    j["rules"] = arr;
    return j;
}

std::pair<TypeGraphPtr, std::vector<Rule>> rules_file_from_json(const json& j) {
    TypeGraphPtr tg = type_graph_from_json(j.at("typegraph"));
    std::vector<Rule> rules;
    std::set<std::string> names;
    for (const auto& r : j.value("rules", json::array())) {
        rules.push_back(rule_from_json(r, tg));
        if (!names.insert(rules.back().name).second)
            bad("duplicate rule name '" + rules.back().name + "'");
    }
    return {tg, rules};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
}

json parse_json_file(const std::string& path) {
    try {
        return json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace graphrepair
