#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "graphrepair/graph.hpp"

namespace graphrepair {

// All injective morphisms pattern -> host extending the anchor (a partial
// injective assignment; null means unanchored). Output is sorted by the
// mapped-id maps, so every downstream count and tie-break is reproducible.
//
// Backtracks over pattern nodes ordered by connectivity with node-type and
// adjacency pruning; edges are assigned per parallel-edge bucket once all
// nodes are placed, so occurrences differing only in parallel-edge images
// count separately.
std::vector<Morphism> find_monomorphisms(const GraphPtr& pattern, const GraphPtr& host,
                                         const Morphism* anchor = nullptr);

// Streaming form, in discovery order; return false from the callback to stop.
void for_each_monomorphism(const GraphPtr& pattern, const GraphPtr& host, const Morphism* anchor,
                           const std::function<bool(const Morphism&)>& callback);

// Convenience: true iff at least one extension exists.
bool embeds(const GraphPtr& pattern, const GraphPtr& host, const Morphism* anchor = nullptr);

// All isomorphisms g1 -> g2 extending the anchor; empty when the graphs
// differ in size per element kind.
std::vector<Morphism> isomorphisms_extending(const GraphPtr& g1, const GraphPtr& g2,
                                             const Morphism* anchor = nullptr);

// One isomorphism if any exists.
std::optional<Morphism> graphs_isomorphic(const GraphPtr& g1, const GraphPtr& g2);

}  // namespace graphrepair
