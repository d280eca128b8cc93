#include "graphrepair/report_io.hpp"

#include <algorithm>
#include <cmath>

#include "graphrepair/json_io.hpp"

namespace graphrepair {

using nlohmann::json;

namespace {

json ac_to_json(const ApplicationCondition& ac) {
    json j;
    j["kind"] = ac.kind == AcKind::Repair ? "repair" : "impairment";
    j["branch"] = ac.branch == AcBranch::Premise ? "premise" : "conclusion";
    j["sourceConstraint"] = ac.constraint_name;
    j["overlapClass"] = ac.overlap_signature;
    j["multiplicity"] = ac.multiplicity;
    j["anchorGraph"] = graph_body_to_json(*ac.anchor.codomain);
    j["anchorEmbedding"] = morphism_maps_to_json(ac.anchor);
    j["body"] = condition_to_json(ac.body);
    return j;
}

}  // namespace

json bundle_to_json(const AcBundle& bundle) {
    json j;
    j["rule"] = bundle.rule_name;
    j["constraint"] = bundle.constraint_name;
    j["ruleHash"] = bundle.rule_hash;
    j["constraintHash"] = bundle.constraint_hash;
    auto emit = [](const std::vector<ApplicationCondition>& acs) {
        std::vector<const ApplicationCondition*> sorted;
        for (const auto& ac : acs) sorted.push_back(&ac);
        std::sort(sorted.begin(), sorted.end(),
                  [](const ApplicationCondition* a, const ApplicationCondition* b) {
                      if (a->constraint_name != b->constraint_name)
                          return a->constraint_name < b->constraint_name;
                      return a->overlap_signature < b->overlap_signature;
                  });
        json arr = json::array();
        for (const auto* ac : sorted) arr.push_back(ac_to_json(*ac));
        return arr;
    };
    j["repair"] = emit(bundle.repair);
    j["impairment"] = emit(bundle.impairment);
    j["pruned"] = bundle.pruned;
    return j;
}

json bundles_to_json(const std::vector<AcBundle>& bundles) {
    json arr = json::array();
    for (const auto& b : bundles) arr.push_back(bundle_to_json(b));
    return arr;
}

json trace_to_json(const RepairTrace& trace) {
    json j;
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json step;
        step["rule"] = s.rule_name;
        step["match"] = s.match_description;
        step["delta"] = s.delta;
        json pcs = json::array();
        for (const auto& pc : s.per_constraint) {
            json p;
            p["constraint"] = pc.constraint_name;
            p["repairs"] = pc.repairs;
            p["impairments"] = pc.impairments;
            pcs.push_back(p);
        }
        step["perConstraint"] = pcs;
        steps.push_back(step);
    }
    j["steps"] = steps;
    j["initialViolations"] = trace.initial_violations;
    j["finalViolations"] = trace.final_violations;
    j["terminationReason"] = trace.termination_reason;
    return j;
}

json restart_outcome_to_json(const RestartOutcome& outcome, const RepairConfig& config) {
    json j;
    j["best"] = trace_to_json(outcome.best());
    j["bestRestart"] = outcome.best_index;
    json runs = json::array();
    for (std::size_t i = 0; i < outcome.traces.size(); ++i) {
        json r;
        r["restart"] = i;
        r["finalViolations"] = outcome.traces[i].weighted_total(config);
        r["steps"] = outcome.traces[i].steps.size();
        runs.push_back(r);
    }
    j["restarts"] = runs;
    double mean = 0.0;
    for (const auto& t : outcome.traces) mean += t.weighted_total(config);
    mean /= static_cast<double>(outcome.traces.size());
    double var = 0.0;
    for (const auto& t : outcome.traces) {
        double d = t.weighted_total(config) - mean;
        var += d * d;
    }
    var /= static_cast<double>(outcome.traces.size());
    j["meanFinalViolations"] = mean;
    j["stddevFinalViolations"] = std::sqrt(var);
    return j;
}

}  // namespace graphrepair
