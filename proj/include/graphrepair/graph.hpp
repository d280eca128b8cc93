#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graphrepair/errors.hpp"

namespace graphrepair {

// Declares the node types and the typed, directed edge kinds between them.
struct TypeGraph {
    struct EdgeType {
        std::string name;
        std::string src;
        std::string tgt;
    };

    std::vector<std::string> node_types;  // sorted, unique
    std::vector<EdgeType> edge_types;     // sorted by name, unique

    bool has_node_type(const std::string& t) const;
    const EdgeType* edge_type(const std::string& name) const;
    std::vector<std::string> validate() const;
};

using TypeGraphPtr = std::shared_ptr<const TypeGraph>;

TypeGraphPtr make_type_graph(std::vector<std::string> node_types,
                             std::vector<TypeGraph::EdgeType> edge_types);

struct Node {
    std::string id;
    std::string type;
};

struct Edge {
    std::string id;
    std::string type;
    std::string src;
    std::string tgt;
};

class TypedGraph;
using GraphPtr = std::shared_ptr<const TypedGraph>;

// Finite directed multigraph typed over a TypeGraph. Immutable after
// construction; parallel edges are permitted.
class TypedGraph {
public:
    static GraphPtr make(TypeGraphPtr tg, std::vector<Node> nodes, std::vector<Edge> edges);

    const TypeGraphPtr& type_graph() const { return tg_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_node(const std::string& id) const;
    bool has_edge(const std::string& id) const;
    const Node* node(const std::string& id) const;
    const Edge* edge(const std::string& id) const;

    // Edges incident to a node, sorted by edge id. Unknown node -> empty.
    const std::vector<const Edge*>& out_edges(const std::string& node_id) const;
    const std::vector<const Edge*>& in_edges(const std::string& node_id) const;

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Every dangling endpoint, endpoint-type mismatch, unknown type and
    // duplicate id; empty means the graph is well formed.
    std::vector<std::string> validate() const;

private:
    struct PrivateTag {};

public:
    TypedGraph(PrivateTag, TypeGraphPtr tg, std::vector<Node> nodes, std::vector<Edge> edges);

private:
    TypeGraphPtr tg_;
    std::vector<Node> nodes_;  // sorted by id
    std::vector<Edge> edges_;  // sorted by id
    std::map<std::string, std::size_t> node_index_;
    std::map<std::string, std::size_t> edge_index_;
    std::map<std::string, std::vector<const Edge*>> out_;
    std::map<std::string, std::vector<const Edge*>> in_;
    static const std::vector<const Edge*> kNoEdges;
};

GraphPtr empty_graph(TypeGraphPtr tg);

// Same ids, types and endpoints, element for element.
bool graphs_identical(const TypedGraph& a, const TypedGraph& b);

// Structure- and type-preserving mapping between typed graphs. The maps may
// be partial; functions that need totality or injectivity say so.
struct Morphism {
    GraphPtr domain;
    GraphPtr codomain;
    std::map<std::string, std::string> node_map;
    std::map<std::string, std::string> edge_map;

    const std::string* node_image(const std::string& id) const;
    const std::string* edge_image(const std::string& id) const;
    bool total() const;

    // Violations of the morphism laws (preservation of src/tgt and types,
    // injectivity, endpoints defined wherever an edge is mapped).
    std::vector<std::string> validate() const;
    bool valid() const { return validate().empty(); }

    // Canonical one-line rendering of the two maps; total order on morphisms
    // with equal domain/codomain.
    std::string signature() const;

    bool same_maps(const Morphism& other) const {
        return node_map == other.node_map && edge_map == other.edge_map;
    }
};

Morphism identity_morphism(const GraphPtr& g);

// Applies f first, then g; requires codomain(f) and domain(g) to coincide.
Morphism compose(const Morphism& f, const Morphism& g);

// True when the morphism maps onto every node and edge of its codomain.
bool surjective(const Morphism& m);

}  // namespace graphrepair
