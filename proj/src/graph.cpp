#include "graphrepair/graph.hpp"

#include <algorithm>
#include <sstream>

namespace graphrepair {

bool TypeGraph::has_node_type(const std::string& t) const {
    return std::binary_search(node_types.begin(), node_types.end(), t);
}

const TypeGraph::EdgeType* TypeGraph::edge_type(const std::string& name) const {
    auto it = std::lower_bound(edge_types.begin(), edge_types.end(), name,
                               [](const EdgeType& et, const std::string& n) { return et.name < n; });
    if (it != edge_types.end() && it->name == name) return &*it;
    return nullptr;
}

std::vector<std::string> TypeGraph::validate() const {
    std::vector<std::string> out;
    for (std::size_t i = 1; i < node_types.size(); ++i)
        if (node_types[i - 1] == node_types[i]) out.push_back("duplicate node type '" + node_types[i] + "'");
    for (std::size_t i = 1; i < edge_types.size(); ++i)
        if (edge_types[i - 1].name == edge_types[i].name)
            out.push_back("duplicate edge type '" + edge_types[i].name + "'");
    for (const auto& et : edge_types) {
        if (!has_node_type(et.src))
            out.push_back("edge type '" + et.name + "' has unknown source type '" + et.src + "'");
        if (!has_node_type(et.tgt))
            out.push_back("edge type '" + et.name + "' has unknown target type '" + et.tgt + "'");
    }
    return out;
}

TypeGraphPtr make_type_graph(std::vector<std::string> node_types,
                             std::vector<TypeGraph::EdgeType> edge_types) {
    std::sort(node_types.begin(), node_types.end());
    std::sort(edge_types.begin(), edge_types.end(),
              [](const TypeGraph::EdgeType& a, const TypeGraph::EdgeType& b) { return a.name < b.name; });
    auto tg = std::make_shared<TypeGraph>();
    tg->node_types = std::move(node_types);
    tg->edge_types = std::move(edge_types);
    return tg;
}

const std::vector<const Edge*> TypedGraph::kNoEdges = {};

TypedGraph::TypedGraph(PrivateTag, TypeGraphPtr tg, std::vector<Node> nodes, std::vector<Edge> edges)
    : tg_(std::move(tg)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
    std::sort(nodes_.begin(), nodes_.end(), [](const Node& a, const Node& b) { return a.id < b.id; });
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < nodes_.size(); ++i) node_index_.emplace(nodes_[i].id, i);
    for (std::size_t i = 0; i < edges_.size(); ++i) edge_index_.emplace(edges_[i].id, i);
    for (const auto& e : edges_) {
        if (node_index_.count(e.src)) out_[e.src].push_back(&e);
        if (node_index_.count(e.tgt)) in_[e.tgt].push_back(&e);
    }
}

GraphPtr TypedGraph::make(TypeGraphPtr tg, std::vector<Node> nodes, std::vector<Edge> edges) {
    return std::make_shared<TypedGraph>(PrivateTag{}, std::move(tg), std::move(nodes), std::move(edges));
}

bool TypedGraph::has_node(const std::string& id) const { return node_index_.count(id) != 0; }
bool TypedGraph::has_edge(const std::string& id) const { return edge_index_.count(id) != 0; }

const Node* TypedGraph::node(const std::string& id) const {
    auto it = node_index_.find(id);
    return it == node_index_.end() ? nullptr : &nodes_[it->second];
}

const Edge* TypedGraph::edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    return it == edge_index_.end() ? nullptr : &edges_[it->second];
}

const std::vector<const Edge*>& TypedGraph::out_edges(const std::string& node_id) const {
    auto it = out_.find(node_id);
    return it == out_.end() ? kNoEdges : it->second;
}

const std::vector<const Edge*>& TypedGraph::in_edges(const std::string& node_id) const {
    auto it = in_.find(node_id);
    return it == in_.end() ? kNoEdges : it->second;
}

std::vector<std::string> TypedGraph::validate() const {
    std::vector<std::string> out;
    for (auto diag : tg_->validate()) out.push_back("type graph: " + diag);
    for (std::size_t i = 1; i < nodes_.size(); ++i)
        if (nodes_[i - 1].id == nodes_[i].id) out.push_back("duplicate node id '" + nodes_[i].id + "'");
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i - 1].id == edges_[i].id) out.push_back("duplicate edge id '" + edges_[i].id + "'");
    for (const auto& n : nodes_) {
        if (!tg_->has_node_type(n.type))
            out.push_back("node '" + n.id + "' has unknown type '" + n.type + "'");
    }
    for (const auto& e : edges_) {
        const auto* et = tg_->edge_type(e.type);
        if (!et) {
            out.push_back("edge '" + e.id + "' has unknown type '" + e.type + "'");
            continue;
        }
        const Node* s = node(e.src);
        const Node* t = node(e.tgt);
        if (!s)
            out.push_back("edge '" + e.id + "' has missing endpoint '" + e.src + "'");
        else if (s->type != et->src)
            out.push_back("edge '" + e.id + "' source '" + e.src + "' has type '" + s->type +
                          "', expected '" + et->src + "'");
        if (!t)
            out.push_back("edge '" + e.id + "' has missing endpoint '" + e.tgt + "'");
        else if (t->type != et->tgt)
            out.push_back("edge '" + e.id + "' target '" + e.tgt + "' has type '" + t->type +
                          "', expected '" + et->tgt + "'");
    }
    return out;
}

GraphPtr empty_graph(TypeGraphPtr tg) { return TypedGraph::make(std::move(tg), {}, {}); }

bool graphs_identical(const TypedGraph& a, const TypedGraph& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
    for (std::size_t i = 0; i < a.nodes().size(); ++i) {
        const Node& x = a.nodes()[i];
        const Node& y = b.nodes()[i];
        if (x.id != y.id || x.type != y.type) return false;
    }
    for (std::size_t i = 0; i < a.edges().size(); ++i) {
        const Edge& x = a.edges()[i];
        const Edge& y = b.edges()[i];
        if (x.id != y.id || x.type != y.type || x.src != y.src || x.tgt != y.tgt) return false;
    }
    return true;
}

const std::string* Morphism::node_image(const std::string& id) const {
    auto it = node_map.find(id);
    return it == node_map.end() ? nullptr : &it->second;
}

const std::string* Morphism::edge_image(const std::string& id) const {
    auto it = edge_map.find(id);
    return it == edge_map.end() ? nullptr : &it->second;
}

bool Morphism::total() const {
    return domain && node_map.size() == domain->node_count() && edge_map.size() == domain->edge_count();
}

std::vector<std::string> Morphism::validate() const {
    std::vector<std::string> out;
    if (!domain || !codomain) {
        out.push_back("morphism missing domain or codomain");
        return out;
    }
    std::set<std::string> node_images, edge_images;
    for (const auto& [from, to] : node_map) {
        const Node* d = domain->node(from);
        const Node* c = codomain->node(to);
        if (!d) out.push_back("node map source '" + from + "' not in domain");
        if (!c) out.push_back("node map target '" + to + "' not in codomain");
        if (d && c && d->type != c->type)
            out.push_back("node map '" + from + "'->'" + to + "' changes type");
        if (!node_images.insert(to).second) out.push_back("node map not injective at '" + to + "'");
    }
    for (const auto& [from, to] : edge_map) {
        const Edge* d = domain->edge(from);
        const Edge* c = codomain->edge(to);
        if (!d) out.push_back("edge map source '" + from + "' not in domain");
        if (!c) out.push_back("edge map target '" + to + "' not in codomain");
        if (!edge_images.insert(to).second) out.push_back("edge map not injective at '" + to + "'");
        if (!d || !c) continue;
        if (d->type != c->type) out.push_back("edge map '" + from + "'->'" + to + "' changes type");
        const std::string* src_img = node_image(d->src);
        const std::string* tgt_img = node_image(d->tgt);
        if (!src_img || *src_img != c->src)
            out.push_back("edge map '" + from + "' does not preserve source");
        if (!tgt_img || *tgt_img != c->tgt)
            out.push_back("edge map '" + from + "' does not preserve target");
    }
    return out;
}

std::string Morphism::signature() const {
    std::ostringstream os;
    os << "n{";
    bool first = true;
    for (const auto& [a, b] : node_map) {
        if (!first) os << ",";
        first = false;
        os << a << ">" << b;
    }
    os << "} e{";
    first = true;
    for (const auto& [a, b] : edge_map) {
        if (!first) os << ",";
        first = false;
        os << a << ">" << b;
    }
    os << "}";
    return os.str();
}

Morphism identity_morphism(const GraphPtr& g) {
    Morphism m;
    m.domain = g;
    m.codomain = g;
    for (const auto& n : g->nodes()) m.node_map.emplace(n.id, n.id);
    for (const auto& e : g->edges()) m.edge_map.emplace(e.id, e.id);
    return m;
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (!f.codomain || !g.domain || !graphs_identical(*f.codomain, *g.domain))
        throw InputError("compose: codomain of first morphism differs from domain of second");
    Morphism r;
    r.domain = f.domain;
    r.codomain = g.codomain;
    for (const auto& [a, b] : f.node_map) {
        const std::string* c = g.node_image(b);
        if (c) r.node_map.emplace(a, *c);
    }
    for (const auto& [a, b] : f.edge_map) {
        const std::string* c = g.edge_image(b);
        if (c) r.edge_map.emplace(a, *c);
    }
    return r;
}

bool surjective(const Morphism& m) {
    if (!m.codomain) return false;
    std::set<std::string> nodes, edges;
    for (const auto& [a, b] : m.node_map) nodes.insert(b);
    for (const auto& [a, b] : m.edge_map) edges.insert(b);
    return nodes.size() == m.codomain->node_count() && edges.size() == m.codomain->edge_count();
}

}  // namespace graphrepair
