#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "graphrepair/condition.hpp"
#include "graphrepair/rewrite.hpp"

namespace graphrepair {

// Wire formats. Graphs carry their type graph; constraint and rule files
// declare one type graph shared by every entry. Object keys are emitted
// sorted and payloads carry no timestamps, so equal inputs serialize to
// equal bytes.

nlohmann::json type_graph_to_json(const TypeGraph& tg);
TypeGraphPtr type_graph_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const TypedGraph& g);                      // with "typegraph"
nlohmann::json graph_body_to_json(const TypedGraph& g);                 // nodes/edges only
GraphPtr graph_from_json(const nlohmann::json& j);                      // reads "typegraph"
GraphPtr graph_body_from_json(const nlohmann::json& j, TypeGraphPtr tg);

nlohmann::json morphism_maps_to_json(const Morphism& m);  // {"nodeMap":…, "edgeMap":…}

// Conditions are one-key objects: "true" | "false" | "exists" | "forall" |
// "not" | "or" | "and" | "implies". Quantifiers carry {"graph", "embedding",
// "body"}; an omitted embedding means shared ids.
nlohmann::json condition_to_json(const ConditionPtr& c);
ConditionPtr condition_from_json(const nlohmann::json& j, const TypeGraphPtr& tg, const GraphPtr& over);

nlohmann::json constraint_to_json(const Constraint& c);
Constraint constraint_from_json(const nlohmann::json& j, const TypeGraphPtr& tg);

// {"typegraph":…, "constraints":[…]}
nlohmann::json constraints_file_to_json(const TypeGraphPtr& tg, const std::vector<Constraint>& cs);
std::pair<TypeGraphPtr, std::vector<Constraint>> constraints_file_from_json(const nlohmann::json& j);

// {"name","lhs","rhs"} with shared ids as the context; the loader validates
// context closure.
nlohmann::json rule_to_json(const Rule& r);
Rule rule_from_json(const nlohmann::json& j, TypeGraphPtr tg);
nlohmann::json rules_file_to_json(const TypeGraphPtr& tg, const std::vector<Rule>& rules);
std::pair<TypeGraphPtr, std::vector<Rule>> rules_file_from_json(const nlohmann::json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
nlohmann::json parse_json_file(const std::string& path);

// Canonical dump used by every command: sorted keys, two-space indent,
// trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace graphrepair
