#include "graphrepair/match.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace graphrepair {

namespace {

struct EdgeBucket {
    std::vector<std::string> pattern_edges;  // sorted
    std::vector<std::string> host_edges;     // sorted candidates
    std::vector<std::string> forced;         // anchored image per pattern edge ("" = free)
};

class Search {
public:
    using Callback = std::function<bool(const Morphism&)>;

    Search(const GraphPtr& pattern, const GraphPtr& host, const Morphism* anchor)
        : pattern_(pattern), host_(host) {
        if (anchor) {
            if (anchor->domain.get() != pattern.get() && !graphs_identical(*anchor->domain, *pattern))
                throw InputError("find_monomorphisms: anchor domain is not the pattern");
            if (anchor->codomain.get() != host.get() && !graphs_identical(*anchor->codomain, *host))
                throw InputError("find_monomorphisms: anchor codomain is not the host");
            anchor_nodes_ = anchor->node_map;
            anchor_edges_ = anchor->edge_map;
            // Edge anchors pin their endpoints.
            for (const auto& [pe, he] : anchor_edges_) {
                const Edge* p = pattern_->edge(pe);
                const Edge* h = host_->edge(he);
                if (!p || !h || p->type != h->type)
                    throw InputError("find_monomorphisms: anchor maps edge '" + pe + "' inconsistently");
                pin_node(p->src, h->src);
                pin_node(p->tgt, h->tgt);
            }
            std::set<std::string> used;
            for (const auto& [pn, hn] : anchor_nodes_) {
                const Node* p = pattern_->node(pn);
                const Node* h = host_->node(hn);
                if (!p || !h || p->type != h->type)
                    throw InputError("find_monomorphisms: anchor maps node '" + pn + "' inconsistently");
                if (!used.insert(hn).second)
                    throw InputError("find_monomorphisms: anchor is not injective");
            }
        }
    }

    std::vector<Morphism> run() {
        std::vector<Morphism> results;
        stream([&results](const Morphism& m) {
            results.push_back(m);
            return true;
        });
        std::sort(results.begin(), results.end(), [](const Morphism& a, const Morphism& b) {
            if (a.node_map != b.node_map) return a.node_map < b.node_map;
            return a.edge_map < b.edge_map;
        });
        return results;
    }

    void stream(const Callback& callback) {
        callback_ = &callback;
        stopped_ = false;
        order_nodes();
        for (const auto& [pn, hn] : anchor_nodes_) {
            assign_[pn] = hn;
            used_.insert(hn);
        }
        place(0);
    }

private:
    void pin_node(const std::string& pn, const std::string& hn) {
        auto it = anchor_nodes_.find(pn);
        if (it != anchor_nodes_.end()) {
            if (it->second != hn)
                throw InputError("find_monomorphisms: anchor node and edge maps disagree at '" + pn + "'");
        } else {
            anchor_nodes_.emplace(pn, hn);
        }
    }

    void order_nodes() {
        std::set<std::string> placed;
        std::vector<std::string> rest;
        for (const auto& n : pattern_->nodes()) {
            if (anchor_nodes_.count(n.id)) {
                order_.push_back(n.id);
                placed.insert(n.id);
            } else {
                rest.push_back(n.id);
            }
        }
        // Most-connected-to-placed first; ties by id.
        while (!rest.empty()) {
            std::string best;
            int best_score = -1;
            for (const auto& id : rest) {
                int score = 0;
                for (const Edge* e : pattern_->out_edges(id)) score += placed.count(e->tgt) ? 1 : 0;
                for (const Edge* e : pattern_->in_edges(id)) score += placed.count(e->src) ? 1 : 0;
                if (score > best_score || (score == best_score && id < best)) {
                    best = id;
                    best_score = score;
                }
            }
            order_.push_back(best);
            placed.insert(best);
            rest.erase(std::find(rest.begin(), rest.end(), best));
        }
    }

    bool adjacent_consistent(const std::string& pn, const std::string& hn) {
        for (const Edge* e : pattern_->out_edges(pn)) {
            auto it = assign_.find(e->tgt);
            if (it == assign_.end() && e->tgt != pn) continue;
            const std::string& htgt = (e->tgt == pn) ? hn : it->second;
            if (!host_has_edge(e->type, hn, htgt)) return false;
        }
        for (const Edge* e : pattern_->in_edges(pn)) {
            if (e->src == pn) continue;  // loop handled above
            auto it = assign_.find(e->src);
            if (it == assign_.end()) continue;
            if (!host_has_edge(e->type, it->second, hn)) return false;
        }
        return true;
    }

    bool host_has_edge(const std::string& type, const std::string& src, const std::string& tgt) {
        for (const Edge* e : host_->out_edges(src))
            if (e->type == type && e->tgt == tgt) return true;
        return false;
    }

    void place(std::size_t idx) {
        if (stopped_) return;
        if (idx == order_.size()) {
            assign_edges();
            return;
        }
        const std::string& pn = order_[idx];
        if (assign_.count(pn)) {  // anchored
            place(idx + 1);
            return;
        }
        const Node* p = pattern_->node(pn);
        auto try_candidate = [&](const std::string& hid) {
            if (stopped_) return;
            if (used_.count(hid)) return;
            const Node* h = host_->node(hid);
            if (!h || h->type != p->type) return;
            if (!adjacent_consistent(pn, hid)) return;
            assign_[pn] = hid;
            used_.insert(hid);
            place(idx + 1);
            assign_.erase(pn);
            used_.erase(hid);
        };
        // Candidates come from a placed neighbour's incident edges when one
        // exists; only isolated-so-far pattern nodes scan the whole host.
        const Edge* via_out = nullptr;  // pattern edge placed -> pn
        const Edge* via_in = nullptr;   // pattern edge pn -> placed
        for (const Edge* e : pattern_->in_edges(pn))
            if (e->src != pn && assign_.count(e->src)) via_out = e;
        for (const Edge* e : pattern_->out_edges(pn))
            if (e->tgt != pn && assign_.count(e->tgt)) via_in = e;
        if (via_out || via_in) {
            std::set<std::string> candidates;
            if (via_out) {
                const std::string& anchor_host = assign_.at(via_out->src);
                for (const Edge* he : host_->out_edges(anchor_host))
                    if (he->type == via_out->type) candidates.insert(he->tgt);
            } else {
                const std::string& anchor_host = assign_.at(via_in->tgt);
                for (const Edge* he : host_->in_edges(anchor_host))
                    if (he->type == via_in->type) candidates.insert(he->src);
            }
            for (const auto& hid : candidates) try_candidate(hid);
        } else {
            for (const auto& h : host_->nodes()) try_candidate(h.id);
        }
    }

    void assign_edges() {
        // Group pattern edges by their mapped (type, src, tgt) bucket; buckets
        // over distinct host edge sets are independent.
        std::map<std::string, EdgeBucket> buckets;
        for (const auto& pe : pattern_->edges()) {
            const std::string& hsrc = assign_.at(pe.src);
            const std::string& htgt = assign_.at(pe.tgt);
            std::string key = pe.type + "\x1f" + hsrc + "\x1f" + htgt;
            auto& b = buckets[key];
            if (b.pattern_edges.empty() && b.host_edges.empty()) {
                for (const Edge* he : host_->out_edges(hsrc))
                    if (he->type == pe.type && he->tgt == htgt) b.host_edges.push_back(he->id);
                std::sort(b.host_edges.begin(), b.host_edges.end());
            }
            b.pattern_edges.push_back(pe.id);
        }
        for (auto& [key, b] : buckets) {
            std::sort(b.pattern_edges.begin(), b.pattern_edges.end());
            b.forced.assign(b.pattern_edges.size(), std::string());
            for (std::size_t i = 0; i < b.pattern_edges.size(); ++i) {
                auto it = anchor_edges_.find(b.pattern_edges[i]);
                if (it == anchor_edges_.end()) continue;
                if (std::find(b.host_edges.begin(), b.host_edges.end(), it->second) == b.host_edges.end())
                    return;  // anchored image not among candidates
                b.forced[i] = it->second;
            }
            if (b.pattern_edges.size() > b.host_edges.size()) return;
        }
        std::vector<const EdgeBucket*> list;
        for (const auto& [key, b] : buckets) list.push_back(&b);
        std::map<std::string, std::string> edge_assign;
        fill_bucket(list, 0, 0, edge_assign);
    }

    void fill_bucket(const std::vector<const EdgeBucket*>& list, std::size_t bi, std::size_t pi,
                     std::map<std::string, std::string>& edge_assign) {
        if (stopped_) return;
        if (bi == list.size()) {
            Morphism m;
            m.domain = pattern_;
            m.codomain = host_;
            m.node_map = assign_;
            m.edge_map = edge_assign;
            if (!(*callback_)(m)) stopped_ = true;
            return;
        }
        const EdgeBucket& b = *list[bi];
        if (pi == b.pattern_edges.size()) {
            fill_bucket(list, bi + 1, 0, edge_assign);
            return;
        }
        const std::string& pe = b.pattern_edges[pi];
        for (const auto& he : b.host_edges) {
            if (stopped_) return;
            if (!b.forced[pi].empty() && he != b.forced[pi]) continue;
            bool taken = false;
            for (std::size_t j = 0; j < pi; ++j)
                if (edge_assign.at(b.pattern_edges[j]) == he) taken = true;
            if (taken) continue;
            edge_assign[pe] = he;
            fill_bucket(list, bi, pi + 1, edge_assign);
            edge_assign.erase(pe);
        }
    }

    GraphPtr pattern_;
    GraphPtr host_;
    std::map<std::string, std::string> anchor_nodes_;
    std::map<std::string, std::string> anchor_edges_;
    std::vector<std::string> order_;
    std::map<std::string, std::string> assign_;
    std::set<std::string> used_;
    const Callback* callback_ = nullptr;
    bool stopped_ = false;
};

}  // namespace

std::vector<Morphism> find_monomorphisms(const GraphPtr& pattern, const GraphPtr& host,
                                         const Morphism* anchor) {
    Search search(pattern, host, anchor);  // validates the anchor first
    if (pattern->node_count() > host->node_count() || pattern->edge_count() > host->edge_count())
        return {};
    return search.run();
}

void for_each_monomorphism(const GraphPtr& pattern, const GraphPtr& host, const Morphism* anchor,
                           const std::function<bool(const Morphism&)>& callback) {
    Search search(pattern, host, anchor);
    if (pattern->node_count() > host->node_count() || pattern->edge_count() > host->edge_count())
        return;
    search.stream(callback);
}

bool embeds(const GraphPtr& pattern, const GraphPtr& host, const Morphism* anchor) {
    bool found = false;
    for_each_monomorphism(pattern, host, anchor, [&found](const Morphism&) {
        found = true;
        return false;
    });
    return found;
}

std::vector<Morphism> isomorphisms_extending(const GraphPtr& g1, const GraphPtr& g2,
                                             const Morphism* anchor) {
    if (g1->node_count() != g2->node_count() || g1->edge_count() != g2->edge_count()) return {};
    return find_monomorphisms(g1, g2, anchor);  // injective + equal sizes = bijective
}

std::optional<Morphism> graphs_isomorphic(const GraphPtr& g1, const GraphPtr& g2) {
    auto isos = isomorphisms_extending(g1, g2);
    if (isos.empty()) return std::nullopt;
    return isos.front();
}

}  // namespace graphrepair
