#pragma once

#include <json.hpp>

#include "graphrepair/ranking.hpp"

namespace graphrepair {

// Application-condition bundles and repair traces as stable JSON, diffable
// against golden files. Entries are ordered by (constraint, kind,
// correspondence signature).
nlohmann::json bundle_to_json(const AcBundle& bundle);
nlohmann::json bundles_to_json(const std::vector<AcBundle>& bundles);

nlohmann::json trace_to_json(const RepairTrace& trace);
nlohmann::json restart_outcome_to_json(const RestartOutcome& outcome, const RepairConfig& config);

}  // namespace graphrepair
