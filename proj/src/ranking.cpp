#include "graphrepair/ranking.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "graphrepair/match.hpp"

namespace graphrepair {

double RepairConfig::weight_of(const std::string& constraint_name) const {
    auto it = weights.find(constraint_name);
    return it == weights.end() ? 1.0 : it->second;
}

double RepairTrace::weighted_total(const RepairConfig& config) const {
    double total = 0.0;
    for (const auto& [name, nv] : final_violations) total += config.weight_of(name) * nv;
    return total;
}

int ac_violation_count(const Morphism& m, const ApplicationCondition& ac) {
    if (m.domain.get() != ac.anchor.domain.get() && !graphs_identical(*m.domain, *ac.anchor.domain))
        throw InputError("ac_violation_count: match domain differs from the condition's anchor domain");
    Morphism anchored;
    anchored.domain = ac.anchor.codomain;
    anchored.codomain = m.codomain;
    for (const auto& [x, img] : ac.anchor.node_map) anchored.node_map[img] = m.node_map.at(x);
    for (const auto& [x, img] : ac.anchor.edge_map) anchored.edge_map[img] = m.edge_map.at(x);
    int count = 0;
    for_each_monomorphism(ac.anchor.codomain, m.codomain, &anchored, [&](const Morphism& q) {
        if (!satisfies(q, ac.body)) ++count;
        return true;
    });
    return count;
}

PerConstraintCounts predicted_counts(const Morphism& m, const AcBundle& bundle) {
    PerConstraintCounts counts;
    for (const auto& ac : bundle.repair) counts.repairs += ac.multiplicity * ac_violation_count(m, ac);
    for (const auto& ac : bundle.impairment)
        counts.impairments += ac.multiplicity * ac_violation_count(m, ac);
    return counts;
}

int predicted_delta(const Rule& rule, const Morphism& m, const Constraint& c, const AcBundle& bundle) {
    if (bundle.rule_hash != rule_hash(rule) || bundle.constraint_hash != constraint_hash(c))
        throw InputError("predicted_delta: stale bundle for rule '" + rule.name + "' and constraint '" +
                         c.name + "'");
    PerConstraintCounts counts = predicted_counts(m, bundle);
    return counts.impairments - counts.repairs;
}

TransformationClass classify_transformation(const Rule& rule, const Morphism& m, const Constraint& c,
                                            const AcBundle& uncancelled_bundle) {
    int delta = predicted_delta(rule, m, c, uncancelled_bundle);
    TransformationClass tc;
    tc.sustaining = delta <= 0;
    tc.improving = delta < 0;
    bool any_impair = false;
    bool any_repair = false;
    for (const auto& ac : uncancelled_bundle.impairment)
        if (ac_violation_count(m, ac) > 0) any_impair = true;
    for (const auto& ac : uncancelled_bundle.repair)
        if (ac_violation_count(m, ac) > 0) any_repair = true;
    tc.direct_sustaining = !any_impair;
    tc.direct_improving = tc.direct_sustaining && any_repair;
    return tc;
}

AcBundleCache::AcBundleCache(std::vector<Constraint> constraints, bool cancel) : cancel_(cancel) {
    for (auto& c : constraints) {
        if (c.kind == ConstraintKind::Hard)
            hard_.push_back(std::move(c));
        else
            weak_.push_back(std::move(c));
    }
}

const std::vector<AcBundle>& AcBundleCache::bundles_for(const Rule& rule) {
    auto it = cache_.find(rule.name);
    if (it != cache_.end()) {
        if (rule_hashes_.at(rule.name) != rule_hash(rule))
            throw InputError("bundle cache: two different rules named '" + rule.name + "'");
        return it->second;
    }
    std::vector<AcBundle> bundles;
    for (const auto& c : weak_) bundles.push_back(derive_bundle(rule, c, hard_, cancel_));
    rule_hashes_[rule.name] = rule_hash(rule);
    return cache_.emplace(rule.name, std::move(bundles)).first->second;
}

namespace {

RankedMatch score_match(const Rule& rule, const Morphism& m, const std::vector<AcBundle>& bundles,
                        const RepairConfig& config) {
    RankedMatch rm;
    rm.rule_name = rule.name;
    rm.match = m;
    for (const auto& bundle : bundles) {
        PerConstraintCounts counts = predicted_counts(m, bundle);
        rm.per_constraint.push_back({bundle.constraint_name, counts.repairs, counts.impairments});
        rm.delta += config.weight_of(bundle.constraint_name) * (counts.impairments - counts.repairs);
    }
    return rm;
}

std::size_t scoring_threads() {
    if (const char* env = std::getenv("GRAPHREPAIR_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<std::size_t>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Scoring is pure per match, so the work splits freely; results land in a
// pre-sized vector, keeping the outcome independent of scheduling.
std::vector<RankedMatch> score_rules(const GraphPtr& g, const std::vector<Rule>& rules,
                                     AcBundleCache& cache, const RepairConfig& config) {
    struct Job {
        const Rule* rule;
        const std::vector<AcBundle>* bundles;
        Morphism match;
    };
    std::vector<Job> jobs;
    for (const auto& rule : rules) {
        const auto& bundles = cache.bundles_for(rule);
        for (auto& m : applicable_matches(rule, g)) jobs.push_back({&rule, &bundles, std::move(m)});
    }
    std::vector<RankedMatch> ranked(jobs.size());
    std::size_t workers = std::min(scoring_threads(), std::max<std::size_t>(jobs.size(), 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i)
            ranked[i] = score_match(*jobs[i].rule, jobs[i].match, *jobs[i].bundles, config);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
                    ranked[i] = score_match(*jobs[i].rule, jobs[i].match, *jobs[i].bundles, config);
            });
        for (auto& t : pool) t.join();
    }
    return ranked;
}

void sort_ranked(std::vector<RankedMatch>& ranked) {
    std::sort(ranked.begin(), ranked.end(), [](const RankedMatch& a, const RankedMatch& b) {
        if (a.delta != b.delta) return a.delta < b.delta;
        if (a.rule_name != b.rule_name) return a.rule_name < b.rule_name;
        return a.match_signature() < b.match_signature();
    });
}

std::map<std::string, int> weak_violations(const GraphPtr& g, const std::vector<Constraint>& weak) {
    std::map<std::string, int> out;
    for (const auto& c : weak) out[c.name] = count_violations(g, c);
    return out;
}

std::string describe_match(const Morphism& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [from, to] : m.node_map) {
        if (!first) os << " ";
        first = false;
        os << from << "->" << to;
    }
    return os.str();
}

}  // namespace

std::vector<RankedMatch> rank_all(const GraphPtr& g, const std::vector<Rule>& rules,
                                  const std::vector<Constraint>& constraints,
                                  const RepairConfig& config) {
    AcBundleCache cache(constraints, config.cancel_mutual_acs);
    std::vector<RankedMatch> ranked = score_rules(g, rules, cache, config);
    sort_ranked(ranked);
    return ranked;
}

RepairTrace greedy_repair(const GraphPtr& g, const std::vector<Rule>& rules,
                          const std::vector<Constraint>& constraints, const RepairConfig& config) {
    AcBundleCache cache(constraints, config.cancel_mutual_acs);

    RepairTrace trace;
    trace.initial_violations = weak_violations(g, cache.weak());
    std::map<std::string, int> current = trace.initial_violations;
    GraphPtr graph = g;

    std::mt19937_64 rng(config.rng_seed);
    constexpr int kExplorationPool = 8;  // budget-phase draws come from this many top moves

    int step = 0;
    for (; step < config.max_iterations; ++step) {
        std::vector<RankedMatch> ranked = score_rules(graph, rules, cache, config);
        sort_ranked(ranked);
        if (ranked.empty()) {
            trace.termination_reason = "no applicable match";
            break;
        }
        std::size_t pick = 0;
        if (step < config.initial_impair_budget) {
            std::size_t pool = std::min<std::size_t>(kExplorationPool, ranked.size());
            pick = static_cast<std::size_t>(rng() % pool);
        } else if (ranked.front().delta >= 0) {
            trace.termination_reason = "no improving move";
            break;
        }
        const RankedMatch& chosen = ranked[pick];
        const Rule* rule = nullptr;
        for (const auto& r : rules)
            if (r.name == chosen.rule_name) rule = &r;
        Transformation t = apply_rule(*rule, chosen.match, step);

        if (config.verify_steps) {
            std::map<std::string, int> after = weak_violations(t.result, cache.weak());
            for (const auto& pc : chosen.per_constraint) {
                int actual = after.at(pc.constraint_name) - current.at(pc.constraint_name);
                int predicted = pc.impairments - pc.repairs;
                if (actual != predicted) {
                    std::ostringstream os;
                    os << "predicted delta " << predicted << " but measured " << actual
                       << " for rule '" << chosen.rule_name << "' at " << describe_match(chosen.match)
                       << " and constraint '" << pc.constraint_name << "'";
                    throw InternalError(os.str());
                }
            }
            current = std::move(after);
        } else {
            for (const auto& pc : chosen.per_constraint)
                current[pc.constraint_name] += pc.impairments - pc.repairs;
        }
        if (config.check_hard) {
            for (const auto& h : cache.hard())
                if (count_violations(t.result, h) != 0)
                    throw InternalError("hard constraint '" + h.name + "' violated after applying '" +
                                        chosen.rule_name + "'");
        }

        RepairStep s;
        s.rule_name = chosen.rule_name;
        s.match_description = describe_match(chosen.match);
        s.delta = chosen.delta;
        s.per_constraint = chosen.per_constraint;
        trace.steps.push_back(std::move(s));
        graph = t.result;
    }
    if (trace.termination_reason.empty()) trace.termination_reason = "iteration limit";
    trace.final_violations = current;
    trace.final_graph = graph;
    return trace;
}

RestartOutcome repair_with_restarts(const GraphPtr& g, const std::vector<Rule>& rules,
                                    const std::vector<Constraint>& constraints,
                                    const RepairConfig& config) {
    if (config.restarts < 1) throw InputError("repair_with_restarts: restarts must be >= 1");
    RestartOutcome outcome;
    double best = 0.0;
    for (int r = 0; r < config.restarts; ++r) {
        RepairConfig run = config;
        // Distinct deterministic stream per restart.
        run.rng_seed = config.rng_seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r + 1);
        RepairTrace trace = greedy_repair(g, rules, constraints, run);
        double total = trace.weighted_total(config);
        if (outcome.traces.empty() || total < best) {
            best = total;
            outcome.best_index = outcome.traces.size();
        }
        outcome.traces.push_back(std::move(trace));
    }
    return outcome;
}

}  // namespace graphrepair
