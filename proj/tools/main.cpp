#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "graphrepair/cra.hpp"
#include "graphrepair/json_io.hpp"
#include "graphrepair/match.hpp"
#include "graphrepair/oracle/partition.hpp"
#include "graphrepair/report_io.hpp"
#include "graphrepair/verify.hpp"

namespace {

using namespace graphrepair;
using nlohmann::json;

// Exit codes: 0 ok, 1 usage, 2 invalid input, 3 broken internal guarantee.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kBadInput = 2;
constexpr int kInternal = 3;

GraphPtr load_graph(const std::string& path) {
    GraphPtr g = graph_from_json(parse_json_file(path));
    auto diags = g->validate();
    if (!diags.empty()) throw InputError(path + ": " + diags.front());
    return g;
}

std::vector<Constraint> load_constraints(const std::string& path) {
    auto [tg, cs] = constraints_file_from_json(parse_json_file(path));
    return cs;
}

std::vector<Rule> load_rules(const std::string& path) {
    auto [tg, rules] = rules_file_from_json(parse_json_file(path));
    return rules;
}

void apply_weights(std::vector<Constraint>& cs, const std::string& weights_path) {
    if (weights_path.empty()) return;
    json j = parse_json_file(weights_path);
    for (auto& c : cs)
        if (j.contains(c.name)) c.weight = j.at(c.name).get<double>();
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty())
        std::fputs(payload.c_str(), stdout);
    else
        write_text_file(out_path, payload);
}

RepairConfig config_weights(const std::vector<Constraint>& cs) {
    RepairConfig config;
    for (const auto& c : cs) config.weights[c.name] = c.weight;
    return config;
}

int cmd_validate(const std::string& graph_path) {
    GraphPtr g = graph_from_json(parse_json_file(graph_path));
    auto diags = g->validate();
    if (diags.empty()) {
        std::printf("valid: %zu nodes, %zu edges\n", g->node_count(), g->edge_count());
        return kOk;
    }
    for (const auto& d : diags) std::printf("%s\n", d.c_str());
    return kBadInput;
}

int cmd_violations(const std::string& graph_path, const std::string& constraints_path) {
    GraphPtr g = load_graph(graph_path);
    auto cs = load_constraints(constraints_path);
    double weighted = 0.0;
    std::printf("%-16s %-5s %8s %8s\n", "constraint", "kind", "weight", "nv");
    for (const auto& c : cs) {
        int nv = count_violations(g, c);
        std::printf("%-16s %-5s %8.3g %8d\n", c.name.c_str(),
                    c.kind == ConstraintKind::Hard ? "hard" : "weak", c.weight, nv);
        if (c.kind == ConstraintKind::Weak) weighted += c.weight * nv;
    }
    std::printf("weighted weak total: %g\n", weighted);
    return kOk;
}

int cmd_derive_ac(const std::string& rules_path, const std::string& constraints_path, bool explain,
                  bool no_cancel, const std::string& out_path) {
    auto rules = load_rules(rules_path);
    auto cs = load_constraints(constraints_path);
    std::vector<Constraint> hard, weak;
    for (const auto& c : cs) (c.kind == ConstraintKind::Hard ? hard : weak).push_back(c);
    std::vector<AcBundle> bundles;
    for (const auto& rule : rules) {
        for (const auto& c : weak) {
            if (explain) {
                auto classes = rule_overlap_classes(rule, c.premise());
                std::fprintf(stderr, "# %s x %s: %zu pre, %zu con classes\n", rule.name.c_str(),
                             c.name.c_str(), classes.pre.size(), classes.con.size());
                for (const auto& o : classes.pre)
                    std::fprintf(stderr, "#   %s\n", describe_overlap(o).c_str());
                for (const auto& o : classes.con)
                    std::fprintf(stderr, "#   %s\n", describe_overlap(o).c_str());
            }
            bundles.push_back(derive_bundle(rule, c, hard, !no_cancel));
            if (explain) {
                for (const auto& sig : bundles.back().pruned)
                    std::fprintf(stderr, "#   pruned (folds to true): %s\n", sig.c_str());
            }
        }
    }
    emit(out_path, dump_json(bundles_to_json(bundles)));
    return kOk;
}

int cmd_rank(const std::string& graph_path, const std::string& rules_path,
             const std::string& constraints_path, const std::string& weights_path, int top) {
    GraphPtr g = load_graph(graph_path);
    auto rules = load_rules(rules_path);
    auto cs = load_constraints(constraints_path);
    apply_weights(cs, weights_path);
    RepairConfig config = config_weights(cs);
    auto ranked = rank_all(g, rules, cs, config);
    std::size_t limit = top > 0 ? std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(top))
                                : ranked.size();
    std::printf("%-4s %-14s %-40s", "rank", "rule", "match");
    for (const auto& c : cs)
        if (c.kind == ConstraintKind::Weak) std::printf(" %12s", (c.name + " rep/imp").c_str());
    std::printf(" %8s\n", "gain");
    for (std::size_t i = 0; i < limit; ++i) {
        const auto& rm = ranked[i];
        std::ostringstream match;
        bool first = true;
        for (const auto& [from, to] : rm.match.node_map) {
            if (!first) match << " ";
            first = false;
            match << from << "=" << to;
        }
        std::printf("%-4zu %-14s %-40s", i + 1, rm.rule_name.c_str(), match.str().c_str());
        for (const auto& pc : rm.per_constraint) std::printf(" %8d/%-3d", pc.repairs, pc.impairments);
        std::printf(" %8g\n", rm.delta == 0.0 ? 0.0 : -rm.delta);
    }
    return kOk;
}

int cmd_repair(const std::string& graph_path, const std::string& rules_path,
               const std::string& constraints_path, const std::string& weights_path, int restarts,
               int budget, std::uint64_t seed, int max_iter, const std::string& out_path,
               const std::string& graph_out) {
    GraphPtr g = load_graph(graph_path);
    auto rules = load_rules(rules_path);
    auto cs = load_constraints(constraints_path);
    apply_weights(cs, weights_path);
    RepairConfig config = config_weights(cs);
    config.restarts = restarts;
    config.initial_impair_budget = budget;
    config.rng_seed = seed;
    config.max_iterations = max_iter;
    RestartOutcome outcome = repair_with_restarts(g, rules, cs, config);
    emit(out_path, dump_json(restart_outcome_to_json(outcome, config)));
    if (!graph_out.empty())
        write_text_file(graph_out, dump_json(graph_to_json(*outcome.best().final_graph)));
    return kOk;
}

int cmd_oracle(int cases, std::uint64_t seed) {
    TheoremSuiteReport report = run_theorem_suite(cases, seed);
    json j;
    j["cases"] = report.cases;
    j["failures"] = report.failures;
    std::fputs(dump_json(j).c_str(), stdout);
    return report.failures.empty() ? kOk : kInternal;
}

int cmd_gen_cra(int classes, std::uint64_t seed, const std::string& features_path,
                const std::string& out_path) {
    GraphPtr g;
    if (!features_path.empty()) {
        FeatureModel fm = parse_feature_model(read_text_file(features_path));
        g = load_feature_model(fm, build_cra_assets(CraVariant::Extended).type_graph);
    } else {
        g = generate_synthetic(classes, seed);
    }
    emit(out_path, dump_json(graph_to_json(*g)));
    return kOk;
}

int cmd_bench(const std::string& sizes_csv, const std::string& csv_path, std::uint64_t seed,
              int restarts, int budget, int max_iter) {
    CraAssets assets = build_cra_assets(CraVariant::Base);
    std::vector<int> sizes;
    std::stringstream ss(sizes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
    std::ostringstream csv;
    csv << "size,restart,finalViolations,steps\n";
    for (int size : sizes) {
        GraphPtr g = generate_synthetic(size, seed);
        RepairConfig config = config_weights(assets.constraints);
        config.restarts = restarts;
        config.initial_impair_budget = budget;
        config.rng_seed = seed;
        config.max_iterations = max_iter;
        RestartOutcome outcome = repair_with_restarts(g, assets.rules, assets.constraints, config);
        for (std::size_t i = 0; i < outcome.traces.size(); ++i)
            csv << size << "," << i << "," << outcome.traces[i].weighted_total(config) << ","
                << outcome.traces[i].steps.size() << "\n";
    }
    if (csv_path.empty())
        std::fputs(csv.str().c_str(), stdout);
    else
        write_text_file(csv_path, csv.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constraint-violation counting, application-condition derivation, match ranking "
                 "and greedy repair for typed graphs"};
    app.require_subcommand(1);

    std::string graph_path, rules_path, constraints_path, weights_path, out_path, graph_out;
    std::string sizes_csv = "25";
    std::string features_path;
    bool explain = false, no_cancel = false;
    int top = 0, restarts = 1, budget = 0, max_iter = 1000, cases = 1000, classes = 25;
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "Check a graph file against its type graph");
    validate->add_option("graph", graph_path)->required();

    auto* violations = app.add_subcommand("violations", "Per-constraint violation counts");
    violations->add_option("graph", graph_path)->required();
    violations->add_option("constraints", constraints_path)->required();

    auto* derive = app.add_subcommand("derive-ac", "Derive application-condition bundles");
    derive->add_option("rules", rules_path)->required();
    derive->add_option("constraints", constraints_path)->required();
    derive->add_flag("--explain", explain, "Dump overlap classes and pruning to stderr");
    derive->add_flag("--no-cancel", no_cancel, "Keep mutually cancelling condition pairs");
    derive->add_option("-o,--out", out_path);

    auto* rank = app.add_subcommand("rank", "Score and rank every applicable match");
    rank->add_option("graph", graph_path)->required();
    rank->add_option("rules", rules_path)->required();
    rank->add_option("constraints", constraints_path)->required();
    rank->add_option("--weights", weights_path);
    rank->add_option("--top", top, "Print only the first N rows");

    auto* repair = app.add_subcommand("repair", "Greedy repair with restarts");
    repair->add_option("graph", graph_path)->required();
    repair->add_option("rules", rules_path)->required();
    repair->add_option("constraints", constraints_path)->required();
    repair->add_option("--weights", weights_path);
    repair->add_option("--restarts", restarts);
    repair->add_option("--budget", budget, "Non-improving moves allowed at run start");
    repair->add_option("--seed", seed);
    repair->add_option("--max-iter", max_iter);
    repair->add_option("-o,--out", out_path);
    repair->add_option("--graph-out", graph_out, "Write the repaired graph here");

    auto* oracle_cmd =
        app.add_subcommand("oracle", "Replay the delta-prediction check on random instances");
    oracle_cmd->add_option("--cases", cases);
    oracle_cmd->add_option("--seed", seed);

    auto* gen =
        app.add_subcommand("gen-cra", "Emit a synthetic class diagram (or bootstrap a feature model)");
    gen->add_option("--classes", classes);
    gen->add_option("--seed", seed);
    gen->add_option("--features", features_path, "Feature-model JSON instead of the synthetic shape");
    gen->add_option("-o,--out", out_path);

    auto* bench = app.add_subcommand("bench", "Repair synthetic models of growing size, emit CSV");
    bench->add_option("--sizes", sizes_csv, "Comma-separated class counts");
    bench->add_option("--csv", out_path);
    bench->add_option("--seed", seed);
    bench->add_option("--restarts", restarts);
    bench->add_option("--budget", budget);
    bench->add_option("--max-iter", max_iter);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(graph_path);
        if (violations->parsed()) return cmd_violations(graph_path, constraints_path);
        if (derive->parsed())
            return cmd_derive_ac(rules_path, constraints_path, explain, no_cancel, out_path);
        if (rank->parsed()) return cmd_rank(graph_path, rules_path, constraints_path, weights_path, top);
        if (repair->parsed())
            return cmd_repair(graph_path, rules_path, constraints_path, weights_path, restarts, budget,
                              seed, max_iter, out_path, graph_out);
        if (oracle_cmd->parsed()) return cmd_oracle(cases, seed);
        if (gen->parsed()) return cmd_gen_cra(classes, seed, features_path, out_path);
        if (bench->parsed()) return cmd_bench(sizes_csv, out_path, seed, restarts, budget, max_iter);
    } catch (const InternalError& e) {
        std::fprintf(stderr, "internal guarantee violated: %s\n", e.what());
        return kInternal;
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kBadInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kBadInput;
    }
    return kUsage;
}
