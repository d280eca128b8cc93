#pragma once

#include <optional>
#include <string>

#include "graphrepair/cra.hpp"
#include "graphrepair/match.hpp"
#include "graphrepair/ranking.hpp"
#include "graphrepair/verify.hpp"

namespace testsupport {

using namespace graphrepair;

inline const CraAssets& base_assets() {
    static CraAssets assets = build_cra_assets(CraVariant::Base);
    return assets;
}

inline const CraAssets& extended_assets() {
    static CraAssets assets = build_cra_assets(CraVariant::Extended);
    return assets;
}

// Match of a move rule identified by (feature, source class, target class).
inline Morphism move_match(const Rule& rule, const GraphPtr& g, const std::string& feature,
                           const std::string& from, const std::string& to) {
    const std::string fid = rule.lhs->nodes().size() == 3 && rule.name == "moveMethod" ? "m" : "a";
    for (const auto& m : applicable_matches(rule, g)) {
        if (m.node_map.at(fid) == feature && m.node_map.at("c1") == from && m.node_map.at("c2") == to)
            return m;
    }
    throw InputError("no move match " + feature + " " + from + "->" + to);
}

inline Morphism from_empty_into(const GraphPtr& g) {
    Morphism m;
    m.domain = empty_graph(g->type_graph());
    m.codomain = g;
    return m;
}

inline std::string assets_dir() { return GRAPHREPAIR_ASSETS_DIR; }

}  // namespace testsupport
