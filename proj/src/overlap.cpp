#include "graphrepair/overlap.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "graphrepair/match.hpp"

namespace graphrepair {

namespace {

struct Correspondence {
    std::map<std::string, std::string> nodes;  // B node -> A node
    std::map<std::string, std::string> edges;  // B edge -> A edge
};

// Builds the gluing and both embeddings for one correspondence. Identified
// elements take the id "aId/bId"; unidentified ones keep their own id,
// de-collided with a '~' suffix where necessary.
Overlap glue_correspondence(const GraphPtr& a, const GraphPtr& b, const Correspondence& corr) {
    std::set<std::string> taken;
    auto claim = [&taken](std::string id) {
        while (taken.count(id)) id += "~";
        taken.insert(id);
        return id;
    };

    std::map<std::string, std::string> a_node_img, b_node_img, a_edge_img, b_edge_img;
    std::map<std::string, std::string> corr_nodes_by_a, corr_edges_by_a;
    for (const auto& [bn, an] : corr.nodes) corr_nodes_by_a[an] = bn;
    for (const auto& [be, ae] : corr.edges) corr_edges_by_a[ae] = be;

    std::vector<Node> nodes;
    std::vector<Edge> edges;
    for (const auto& n : a->nodes()) {
        auto it = corr_nodes_by_a.find(n.id);
        std::string id = claim(it == corr_nodes_by_a.end() ? n.id : n.id + "/" + it->second);
        a_node_img[n.id] = id;
        if (it != corr_nodes_by_a.end()) b_node_img[it->second] = id;
        nodes.push_back(Node{id, n.type});
    }
    for (const auto& n : b->nodes()) {
        if (corr.nodes.count(n.id)) continue;
        std::string id = claim(n.id);
        b_node_img[n.id] = id;
        nodes.push_back(Node{id, n.type});
    }
    for (const auto& e : a->edges()) {
        auto it = corr_edges_by_a.find(e.id);
        std::string id = claim(it == corr_edges_by_a.end() ? e.id : e.id + "/" + it->second);
        a_edge_img[e.id] = id;
        if (it != corr_edges_by_a.end()) b_edge_img[it->second] = id;
        edges.push_back(Edge{id, e.type, a_node_img.at(e.src), a_node_img.at(e.tgt)});
    }
    for (const auto& e : b->edges()) {
        if (corr.edges.count(e.id)) continue;
        std::string id = claim(e.id);
        b_edge_img[e.id] = id;
        edges.push_back(Edge{id, e.type, b_node_img.at(e.src), b_node_img.at(e.tgt)});
    }

    Overlap o;
    o.glue = TypedGraph::make(a->type_graph(), std::move(nodes), std::move(edges));
    o.left.domain = a;
    o.left.codomain = o.glue;
    o.left.node_map = std::move(a_node_img);
    o.left.edge_map = std::move(a_edge_img);
    o.right.domain = b;
    o.right.codomain = o.glue;
    o.right.node_map = std::move(b_node_img);
    o.right.edge_map = std::move(b_edge_img);
    for (const auto& [bn, an] : corr.nodes) o.node_pairs.emplace_back(an, bn);
    for (const auto& [be, ae] : corr.edges) o.edge_pairs.emplace_back(ae, be);
    std::sort(o.node_pairs.begin(), o.node_pairs.end());
    std::sort(o.edge_pairs.begin(), o.edge_pairs.end());
    return o;
}

class CorrespondenceEnum {
public:
    CorrespondenceEnum(const GraphPtr& a, const GraphPtr& b, const CorrespondenceBase* base)
        : a_(a), b_(b) {
        if (base) {
            for (const auto& [an, bn] : base->node_pairs) force_node(bn, an);
            for (const auto& [ae, be] : base->edge_pairs) {
                const Edge* ae_ptr = a_->edge(ae);
                const Edge* be_ptr = b_->edge(be);
                if (!ae_ptr || !be_ptr || ae_ptr->type != be_ptr->type)
                    throw InputError("overlap base identifies incompatible edges");
                force_node(be_ptr->src, ae_ptr->src);
                force_node(be_ptr->tgt, ae_ptr->tgt);
                forced_edges_[be] = ae;
            }
            std::set<std::string> used;
            for (const auto& [bn, an] : forced_nodes_) {
                const Node* bn_ptr = b_->node(bn);
                const Node* an_ptr = a_->node(an);
                if (!bn_ptr || !an_ptr || bn_ptr->type != an_ptr->type)
                    throw InputError("overlap base identifies incompatible nodes");
                if (!used.insert(an).second) throw InputError("overlap base is not injective");
            }
        }
        for (const auto& n : b_->nodes()) b_node_order_.push_back(n.id);
        for (const auto& e : b_->edges()) b_edge_order_.push_back(e.id);
    }

    std::vector<Overlap> run() {
        Correspondence corr;
        corr.nodes = forced_nodes_;
        corr.edges = forced_edges_;
        pick_node(0, corr);
        std::sort(results_.begin(), results_.end(),
                  [](const Overlap& x, const Overlap& y) { return x.signature() < y.signature(); });
        return std::move(results_);
    }

private:
    void force_node(const std::string& bn, const std::string& an) {
        auto it = forced_nodes_.find(bn);
        if (it != forced_nodes_.end() && it->second != an)
            throw InputError("overlap base maps node '" + bn + "' twice");
        forced_nodes_[bn] = an;
    }

    void pick_node(std::size_t idx, Correspondence& corr) {
        if (idx == b_node_order_.size()) {
            Correspondence with_edges = corr;
            pick_edge(0, with_edges);
            return;
        }
        const std::string& bn = b_node_order_[idx];
        if (forced_nodes_.count(bn)) {
            pick_node(idx + 1, corr);
            return;
        }
        pick_node(idx + 1, corr);  // unidentified
        const Node* b_node = b_->node(bn);
        std::set<std::string> used;
        for (const auto& [x, an] : corr.nodes) used.insert(an);
        for (const auto& an : a_->nodes()) {
            if (an.type != b_node->type || used.count(an.id)) continue;
            corr.nodes.emplace(bn, an.id);
            pick_node(idx + 1, corr);
            corr.nodes.erase(bn);
        }
    }

    void pick_edge(std::size_t idx, Correspondence& corr) {
        if (idx == b_edge_order_.size()) {
            results_.push_back(glue_correspondence(a_, b_, corr));
            return;
        }
        const std::string& be = b_edge_order_[idx];
        if (forced_edges_.count(be)) {  // already in corr
            pick_edge(idx + 1, corr);
            return;
        }
        pick_edge(idx + 1, corr);  // unidentified
        const Edge* b_edge = b_->edge(be);
        auto src_it = corr.nodes.find(b_edge->src);
        auto tgt_it = corr.nodes.find(b_edge->tgt);
        if (src_it == corr.nodes.end() || tgt_it == corr.nodes.end()) return;
        std::set<std::string> used;
        for (const auto& [x, ae] : corr.edges) used.insert(ae);
        for (const Edge* ae : a_->out_edges(src_it->second)) {
            if (ae->type != b_edge->type || ae->tgt != tgt_it->second || used.count(ae->id)) continue;
            corr.edges.emplace(be, ae->id);
            pick_edge(idx + 1, corr);
            corr.edges.erase(be);
        }
    }

    GraphPtr a_;
    GraphPtr b_;
    std::map<std::string, std::string> forced_nodes_;
    std::map<std::string, std::string> forced_edges_;
    std::vector<std::string> b_node_order_;
    std::vector<std::string> b_edge_order_;
    std::vector<Overlap> results_;
};

}  // namespace

std::string Overlap::signature() const {
    std::ostringstream os;
    os << "n:";
    for (const auto& [an, bn] : node_pairs) os << an << "=" << bn << ";";
    os << "e:";
    for (const auto& [ae, be] : edge_pairs) os << ae << "=" << be << ";";
    return os.str();
}

std::vector<Overlap> enumerate_overlap_classes(const GraphPtr& a, const GraphPtr& b,
                                               const CorrespondenceBase* base) {
    return CorrespondenceEnum(a, b, base).run();
}

RuleOverlapClasses rule_overlap_classes(const Rule& rule, const GraphPtr& p) {
    RuleOverlapClasses out;
    std::set<std::string> deleted_nodes, deleted_edges;
    for (auto& id : rule.deleted_nodes()) deleted_nodes.insert(id);
    for (auto& id : rule.deleted_edges()) deleted_edges.insert(id);

    for (auto& o : enumerate_overlap_classes(rule.lhs, p)) {
        if (!is_applicable(rule, o.left)) continue;

        // The right image intersects the deleted elements iff some identified
        // pair involves a deleted lhs element.
        bool dependent = false;
        for (const auto& [an, bn] : o.node_pairs)
            if (deleted_nodes.count(an)) dependent = true;
        for (const auto& [ae, be] : o.edge_pairs)
            if (deleted_edges.count(ae)) dependent = true;

        if (dependent) {
            o.class_kind = OverlapClassKind::Pre;
            out.pre.push_back(std::move(o));
        } else {
            o.class_kind = OverlapClassKind::Con;
            // Factorisation through the interface: every right-image element
            // survives, so the witness is the right embedding re-targeted.
            Transformation t = apply_rule(rule, o.left);
            Morphism witness;
            witness.domain = p;
            witness.codomain = t.interface;
            witness.node_map = o.right.node_map;
            witness.edge_map = o.right.edge_map;
            o.witness = std::move(witness);
            out.con.push_back(std::move(o));
        }
    }
    return out;
}

bool equivalent_overlaps(const Overlap& o1, const Overlap& o2) {
    if (o1.glue->node_count() != o2.glue->node_count() ||
        o1.glue->edge_count() != o2.glue->edge_count())
        return false;
    // The commuting requirement pins the isomorphism on both images; the
    // images are jointly surjective, so at most one candidate map exists.
    Morphism iso;
    iso.domain = o1.glue;
    iso.codomain = o2.glue;
    auto pin = [&iso](const std::string& from, const std::string& to, bool node) -> bool {
        auto& map = node ? iso.node_map : iso.edge_map;
        auto it = map.find(from);
        if (it != map.end()) return it->second == to;
        map.emplace(from, to);
        return true;
    };
    for (const auto& [x, img1] : o1.left.node_map)
        if (!pin(img1, o2.left.node_map.at(x), true)) return false;
    for (const auto& [x, img1] : o1.right.node_map)
        if (!pin(img1, o2.right.node_map.at(x), true)) return false;
    for (const auto& [x, img1] : o1.left.edge_map)
        if (!pin(img1, o2.left.edge_map.at(x), false)) return false;
    for (const auto& [x, img1] : o1.right.edge_map)
        if (!pin(img1, o2.right.edge_map.at(x), false)) return false;
    if (iso.node_map.size() != o1.glue->node_count() || iso.edge_map.size() != o1.glue->edge_count())
        return false;  // joint surjectivity violated somewhere upstream
    return iso.valid();
}

bool jointly_surjective(const Overlap& o) {
    std::set<std::string> nodes, edges;
    for (const auto& [x, img] : o.left.node_map) nodes.insert(img);
    for (const auto& [x, img] : o.right.node_map) nodes.insert(img);
    for (const auto& [x, img] : o.left.edge_map) edges.insert(img);
    for (const auto& [x, img] : o.right.edge_map) edges.insert(img);
    return nodes.size() == o.glue->node_count() && edges.size() == o.glue->edge_count();
}

std::string describe_overlap(const Overlap& o) {
    std::ostringstream os;
    os << (o.class_kind == OverlapClassKind::Pre ? "pre " : "con ") << o.signature() << " glue="
       << o.glue->node_count() << "n/" << o.glue->edge_count() << "e";
    return os.str();
}

}  // namespace graphrepair
