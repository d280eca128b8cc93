#include "graphrepair/oracle/brute.hpp"

#include <algorithm>

namespace graphrepair::oracle {

namespace {

void enumerate_node_maps(const TypedGraph& pattern, const TypedGraph& host, std::size_t idx,
                         std::map<std::string, std::string>& current,
                         std::vector<std::map<std::string, std::string>>& out) {
    if (idx == pattern.nodes().size()) {
        out.push_back(current);
        return;
    }
    const Node& pn = pattern.nodes()[idx];
    for (const auto& hn : host.nodes()) {
        if (hn.type != pn.type) continue;
        bool taken = false;
        for (const auto& [a, b] : current)
            if (b == hn.id) taken = true;
        if (taken) continue;
        current[pn.id] = hn.id;
        enumerate_node_maps(pattern, host, idx + 1, current, out);
        current.erase(pn.id);
    }
}

void enumerate_edge_maps(const TypedGraph& pattern, const TypedGraph& host,
                         const std::map<std::string, std::string>& node_map, std::size_t idx,
                         std::map<std::string, std::string>& current,
                         std::vector<std::map<std::string, std::string>>& out) {
    if (idx == pattern.edges().size()) {
        out.push_back(current);
        return;
    }
    const Edge& pe = pattern.edges()[idx];
    for (const auto& he : host.edges()) {
        if (he.type != pe.type) continue;
        if (node_map.at(pe.src) != he.src || node_map.at(pe.tgt) != he.tgt) continue;
        bool taken = false;
        for (const auto& [a, b] : current)
            if (b == he.id) taken = true;
        if (taken) continue;
        current[pe.id] = he.id;
        enumerate_edge_maps(pattern, host, node_map, idx + 1, current, out);
        current.erase(pe.id);
    }
}

}  // namespace

std::vector<Morphism> brute_monomorphisms(const GraphPtr& pattern, const GraphPtr& host) {
    std::vector<std::map<std::string, std::string>> node_maps;
    std::map<std::string, std::string> scratch;
    enumerate_node_maps(*pattern, *host, 0, scratch, node_maps);
    std::vector<Morphism> result;
    for (const auto& nm : node_maps) {
        std::vector<std::map<std::string, std::string>> edge_maps;
        std::map<std::string, std::string> escratch;
        enumerate_edge_maps(*pattern, *host, nm, 0, escratch, edge_maps);
        for (auto& em : edge_maps) {
            Morphism m;
            m.domain = pattern;
            m.codomain = host;
            m.node_map = nm;
            m.edge_map = std::move(em);
            result.push_back(std::move(m));
        }
    }
    std::sort(result.begin(), result.end(),
              [](const Morphism& a, const Morphism& b) { return a.signature() < b.signature(); });
    return result;
}

bool brute_satisfies(const Morphism& p, const ConditionPtr& c) {
    switch (c->kind()) {
        case ConditionKind::True:
            return true;
        case ConditionKind::False:
            return false;
        case ConditionKind::Not:
            return !brute_satisfies(p, c->body());
        case ConditionKind::Or: {
            for (const auto& part : c->parts())
                if (brute_satisfies(p, part)) return true;
            return false;
        }
        case ConditionKind::And: {
            for (const auto& part : c->parts())
                if (!brute_satisfies(p, part)) return false;
            return true;
        }
        case ConditionKind::Implies:
            return !brute_satisfies(p, c->parts()[0]) || brute_satisfies(p, c->parts()[1]);
        case ConditionKind::Exists:
        case ConditionKind::ForAll: {
            const Morphism& e = c->embedding();
            bool exists = c->kind() == ConditionKind::Exists;
            for (const auto& q : brute_monomorphisms(e.codomain, p.codomain)) {
                // Keep only extensions: q after e equals p.
                bool extends = true;
                for (const auto& [x, ex] : e.node_map)
                    if (q.node_map.at(ex) != p.node_map.at(x)) extends = false;
                for (const auto& [x, ex] : e.edge_map)
                    if (extends && q.edge_map.at(ex) != p.edge_map.at(x)) extends = false;
                if (!extends) continue;
                if (exists && brute_satisfies(q, c->body())) return true;
                if (!exists && !brute_satisfies(q, c->body())) return false;
            }
            return !exists;
        }
    }
    return false;
}

int brute_violation_count(const GraphPtr& g, const Constraint& c) {
    Morphism p;
    p.domain = c.context();
    p.codomain = g;
    int count = 0;
    for (const auto& q : brute_monomorphisms(c.premise(), g)) {
        bool extends = true;
        for (const auto& [x, ex] : c.premise_embedding.node_map)
            if (q.node_map.at(ex) != p.node_map.at(x)) extends = false;
        for (const auto& [x, ex] : c.premise_embedding.edge_map)
            if (extends && q.edge_map.at(ex) != p.edge_map.at(x)) extends = false;
        if (!extends) continue;
        if (!brute_satisfies(q, c.conclusion)) ++count;
    }
    return count;
}

}  // namespace graphrepair::oracle
