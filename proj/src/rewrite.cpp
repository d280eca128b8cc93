#include "graphrepair/rewrite.hpp"

#include <algorithm>
#include <set>

#include "graphrepair/match.hpp"

namespace graphrepair {

namespace {

std::vector<std::string> ids_only_in(const TypedGraph& a, const TypedGraph& b, bool nodes) {
    std::vector<std::string> out;
    if (nodes) {
        for (const auto& n : a.nodes())
            if (!b.has_node(n.id)) out.push_back(n.id);
    } else {
        for (const auto& e : a.edges())
            if (!b.has_edge(e.id)) out.push_back(e.id);
    }
    return out;
}

}  // namespace

std::vector<std::string> Rule::deleted_nodes() const { return ids_only_in(*lhs, *rhs, true); }
std::vector<std::string> Rule::deleted_edges() const { return ids_only_in(*lhs, *rhs, false); }
std::vector<std::string> Rule::created_nodes() const { return ids_only_in(*rhs, *lhs, true); }
std::vector<std::string> Rule::created_edges() const { return ids_only_in(*rhs, *lhs, false); }

bool Rule::is_identity() const {
    return deleted_nodes().empty() && deleted_edges().empty() && created_nodes().empty() &&
           created_edges().empty();
}

std::vector<std::string> Rule::validate() const {
    std::vector<std::string> out;
    for (auto d : lhs->validate()) out.push_back("lhs: " + d);
    for (auto d : rhs->validate()) out.push_back("rhs: " + d);
    for (const auto& n : lhs->nodes()) {
        const Node* other = rhs->node(n.id);
        if (other && other->type != n.type)
            out.push_back("shared node '" + n.id + "' changes type between sides");
    }
    for (const auto& e : lhs->edges()) {
        const Edge* other = rhs->edge(e.id);
        if (!other) continue;
        if (other->type != e.type || other->src != e.src || other->tgt != e.tgt)
            out.push_back("shared edge '" + e.id + "' differs between sides");
        if (!rhs->has_node(e.src) || !rhs->has_node(e.tgt) || !lhs->has_node(e.src) ||
            !lhs->has_node(e.tgt))
            out.push_back("shared edge '" + e.id + "' has an endpoint outside the context");
    }
    // Endpoints of shared edges must be shared themselves.
    for (const auto& e : lhs->edges()) {
        if (!rhs->has_edge(e.id)) continue;
        if (!rhs->has_node(e.src)) out.push_back("context edge '" + e.id + "' loses its source");
        if (!rhs->has_node(e.tgt)) out.push_back("context edge '" + e.id + "' loses its target");
    }
    return out;
}

Rule Rule::inverted() const { return Rule{name, rhs, lhs}; }

Rule Transformation::reversed_derived_rule() const { return Rule{rule.name + "^der-rev", result, original}; }
Rule Transformation::derived_rule() const { return Rule{rule.name + "^der", original, result}; }

bool is_applicable(const Rule& rule, const Morphism& m) {
    const GraphPtr& g = m.codomain;
    std::set<std::string> deleted_host_edges;
    for (const auto& id : rule.deleted_edges()) deleted_host_edges.insert(m.edge_map.at(id));
    for (const auto& id : rule.deleted_nodes()) {
        const std::string& v = m.node_map.at(id);
        for (const Edge* e : g->out_edges(v))
            if (!deleted_host_edges.count(e->id)) return false;
        for (const Edge* e : g->in_edges(v))
            if (!deleted_host_edges.count(e->id)) return false;
    }
    return true;
}

std::vector<Morphism> applicable_matches(const Rule& rule, const GraphPtr& g) {
    std::vector<Morphism> out;
    for (auto& m : find_monomorphisms(rule.lhs, g))
        if (is_applicable(rule, m)) out.push_back(std::move(m));
    return out;
}

Transformation apply_rule(const Rule& rule, const Morphism& m, int step) {
    if (m.domain.get() != rule.lhs.get() && !graphs_identical(*m.domain, *rule.lhs))
        throw InputError("apply_rule: match domain is not the rule's left side");
    if (!m.total() || !m.valid()) throw InputError("apply_rule: match is not a total injective morphism");
    if (!is_applicable(rule, m))
        throw InputError("apply_rule: rule '" + rule.name + "' not applicable at " + m.signature());

    const GraphPtr& g = m.codomain;
    std::set<std::string> del_nodes, del_edges;
    for (const auto& id : rule.deleted_nodes()) del_nodes.insert(m.node_map.at(id));
    for (const auto& id : rule.deleted_edges()) del_edges.insert(m.edge_map.at(id));

    std::vector<Node> d_nodes;
    std::vector<Edge> d_edges;
    for (const auto& n : g->nodes())
        if (!del_nodes.count(n.id)) d_nodes.push_back(n);
    for (const auto& e : g->edges())
        if (!del_edges.count(e.id)) d_edges.push_back(e);
    GraphPtr interface = TypedGraph::make(g->type_graph(), d_nodes, d_edges);

    // Fresh ids: ruleName#step:rhsId, de-collided against the host.
    auto fresh = [&](const std::string& rid, const std::set<std::string>& taken) {
        std::string id = rule.name + "#" + std::to_string(step) + ":" + rid;
        while (g->has_node(id) || g->has_edge(id) || taken.count(id)) id += "~";
        return id;
    };

    std::set<std::string> taken;
    std::map<std::string, std::string> created_node_ids, created_edge_ids;
    std::vector<Node> h_nodes = d_nodes;
    std::vector<Edge> h_edges = d_edges;
    for (const auto& rid : rule.created_nodes()) {
        std::string id = fresh(rid, taken);
        taken.insert(id);
        created_node_ids[rid] = id;
        h_nodes.push_back(Node{id, rule.rhs->node(rid)->type});
    }
    auto host_node_for_rhs = [&](const std::string& rid) -> std::string {
        auto it = created_node_ids.find(rid);
        if (it != created_node_ids.end()) return it->second;
        return m.node_map.at(rid);  // context node: same id in lhs
    };
    for (const auto& rid : rule.created_edges()) {
        std::string id = fresh(rid, taken);
        taken.insert(id);
        created_edge_ids[rid] = id;
        const Edge* re = rule.rhs->edge(rid);
        h_edges.push_back(Edge{id, re->type, host_node_for_rhs(re->src), host_node_for_rhs(re->tgt)});
    }
    GraphPtr result = TypedGraph::make(g->type_graph(), h_nodes, h_edges);

    Transformation t;
    t.rule = rule;
    t.match = m;
    t.original = g;
    t.interface = interface;
    t.result = result;

    t.interface_to_original.domain = interface;
    t.interface_to_original.codomain = g;
    t.interface_to_result.domain = interface;
    t.interface_to_result.codomain = result;
    for (const auto& n : interface->nodes()) {
        t.interface_to_original.node_map.emplace(n.id, n.id);
        t.interface_to_result.node_map.emplace(n.id, n.id);
    }
    for (const auto& e : interface->edges()) {
        t.interface_to_original.edge_map.emplace(e.id, e.id);
        t.interface_to_result.edge_map.emplace(e.id, e.id);
    }

    t.comatch.domain = rule.rhs;
    t.comatch.codomain = result;
    for (const auto& n : rule.rhs->nodes()) t.comatch.node_map.emplace(n.id, host_node_for_rhs(n.id));
    for (const auto& e : rule.rhs->edges()) {
        auto it = created_edge_ids.find(e.id);
        t.comatch.edge_map.emplace(e.id, it != created_edge_ids.end() ? it->second : m.edge_map.at(e.id));
    }

    t.track.domain = g;
    t.track.codomain = result;
    t.track.node_map = t.interface_to_original.node_map;  // identity on survivors
    t.track.edge_map = t.interface_to_original.edge_map;
    return t;
}

bool parallel_independent(const Transformation& t1, const Transformation& t2) {
    if (t1.original.get() != t2.original.get() && !graphs_identical(*t1.original, *t2.original))
        throw InputError("parallel_independent: transformations have different originals");
    auto deleted_of = [](const Transformation& t, std::set<std::string>& nodes,
                         std::set<std::string>& edges) {
        for (const auto& id : t.rule.deleted_nodes()) nodes.insert(t.match.node_map.at(id));
        for (const auto& id : t.rule.deleted_edges()) edges.insert(t.match.edge_map.at(id));
    };
    std::set<std::string> dn1, de1, dn2, de2;
    deleted_of(t1, dn1, de1);
    deleted_of(t2, dn2, de2);
    for (const auto& [from, to] : t1.match.node_map)
        if (dn2.count(to)) return false;
    for (const auto& [from, to] : t1.match.edge_map)
        if (de2.count(to)) return false;
    for (const auto& [from, to] : t2.match.node_map)
        if (dn1.count(to)) return false;
    for (const auto& [from, to] : t2.match.edge_map)
        if (de1.count(to)) return false;
    return true;
}

std::optional<Morphism> track_total(const Transformation& t, const Morphism& p) {
    if (p.codomain.get() != t.original.get() && !graphs_identical(*p.codomain, *t.original))
        throw InputError("track_total: morphism does not land in the transformation's original graph");
    Morphism r;
    r.domain = p.domain;
    r.codomain = t.result;
    for (const auto& [from, to] : p.node_map) {
        const std::string* img = t.track.node_image(to);
        if (!img) return std::nullopt;
        r.node_map.emplace(from, *img);
    }
    for (const auto& [from, to] : p.edge_map) {
        const std::string* img = t.track.edge_image(to);
        if (!img) return std::nullopt;
        r.edge_map.emplace(from, *img);
    }
    return r;
}

}  // namespace graphrepair
