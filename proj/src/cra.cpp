#include "graphrepair/cra.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <json.hpp>

namespace graphrepair {

namespace {

TypeGraphPtr cra_type_graph() {
    return make_type_graph({"Class", "Method", "Attribute"},
                           {{"contains-method", "Class", "Method"},
                            {"contains-attribute", "Class", "Attribute"},
                            {"uses-attribute", "Method", "Attribute"},
                            {"uses-method", "Method", "Method"}});
}

Rule move_rule(const TypeGraphPtr& tg, bool method) {
    const std::string feature_type = method ? "Method" : "Attribute";
    const std::string contains = method ? "contains-method" : "contains-attribute";
    const std::string feature_id = method ? "m" : "a";
    std::vector<Node> nodes{{"c1", "Class"}, {"c2", "Class"}, {feature_id, feature_type}};
    GraphPtr lhs = TypedGraph::make(tg, nodes, {{"contains", contains, "c1", feature_id}});
    GraphPtr rhs = TypedGraph::make(tg, nodes, {{"contains2", contains, "c2", feature_id}});
    return Rule{method ? "moveMethod" : "moveAttribute", lhs, rhs};
}

Morphism embed_shared_ids(const GraphPtr& from, const GraphPtr& to) {
    Morphism m;
    m.domain = from;
    m.codomain = to;
    for (const auto& n : from->nodes()) m.node_map.emplace(n.id, n.id);
    for (const auto& e : from->edges()) m.edge_map.emplace(e.id, e.id);
    return m;
}

Constraint forbidden(const TypeGraphPtr& tg, std::string name, ConstraintKind kind, GraphPtr premise) {
    Constraint c;
    c.name = std::move(name);
    c.kind = kind;
    c.premise_embedding.domain = empty_graph(tg);
    c.premise_embedding.codomain = premise;
    c.conclusion = Condition::make_false(premise);
    return c;
}

// A feature must not be contained in more than one class.
Constraint single_container(const TypeGraphPtr& tg, const std::string& name, bool method) {
    const std::string feature_type = method ? "Method" : "Attribute";
    const std::string contains = method ? "contains-method" : "contains-attribute";
    GraphPtr premise = TypedGraph::make(
        tg, {{"x1", "Class"}, {"x2", "Class"}, {"f", feature_type}},
        {{"e1", contains, "x1", "f"}, {"e2", contains, "x2", "f"}});
    return forbidden(tg, name, ConstraintKind::Hard, premise);
}

// Same-class method pair must share an attribute of that class.
Constraint shared_attribute_constraint(const TypeGraphPtr& tg) {
    GraphPtr premise = TypedGraph::make(
        tg, {{"c", "Class"}, {"m1", "Method"}, {"m2", "Method"}},
        {{"e1", "contains-method", "c", "m1"}, {"e2", "contains-method", "c", "m2"}});
    GraphPtr extended = TypedGraph::make(
        tg,
        {{"c", "Class"}, {"m1", "Method"}, {"m2", "Method"}, {"a", "Attribute"}},
        {{"e1", "contains-method", "c", "m1"},
         {"e2", "contains-method", "c", "m2"},
         {"e3", "contains-attribute", "c", "a"},
         {"e4", "uses-attribute", "m1", "a"},
         {"e5", "uses-attribute", "m2", "a"}});
    Constraint c;
    c.name = "w1";
    c.kind = ConstraintKind::Weak;
    c.premise_embedding.domain = empty_graph(tg);
    c.premise_embedding.codomain = premise;
    c.conclusion = Condition::exists(embed_shared_ids(premise, extended), Condition::make_true(extended));
    return c;
}

// A method must not use an attribute of another class.
Constraint no_cross_attribute_use(const TypeGraphPtr& tg, const std::string& name) {
    GraphPtr premise = TypedGraph::make(
        tg,
        {{"c1", "Class"}, {"c2", "Class"}, {"m", "Method"}, {"a", "Attribute"}},
        {{"e1", "contains-method", "c1", "m"},
         {"e2", "contains-attribute", "c2", "a"},
         {"e3", "uses-attribute", "m", "a"}});
    return forbidden(tg, name, ConstraintKind::Weak, premise);
}

// Same-class method pair must depend on each other (either direction).
Constraint mutual_dependency_constraint(const TypeGraphPtr& tg) {
    GraphPtr premise = TypedGraph::make(
        tg, {{"c", "Class"}, {"m1", "Method"}, {"m2", "Method"}},
        {{"e1", "contains-method", "c", "m1"}, {"e2", "contains-method", "c", "m2"}});
    auto extend_with_call = [&](const std::string& from, const std::string& to) {
        GraphPtr q = TypedGraph::make(
            tg, {{"c", "Class"}, {"m1", "Method"}, {"m2", "Method"}},
            {{"e1", "contains-method", "c", "m1"},
             {"e2", "contains-method", "c", "m2"},
             {"u", "uses-method", from, to}});
        return Condition::exists(embed_shared_ids(premise, q), Condition::make_true(q));
    };
    Constraint c;
    c.name = "w3";
    c.kind = ConstraintKind::Weak;
    c.premise_embedding.domain = empty_graph(tg);
    c.premise_embedding.codomain = premise;
    c.conclusion = Condition::disjunction(
        premise, {extend_with_call("m1", "m2"), extend_with_call("m2", "m1")});
    return c;
}

// A method must not call a method of another class.
Constraint no_cross_call(const TypeGraphPtr& tg) {
    GraphPtr premise = TypedGraph::make(
        tg,
        {{"c1", "Class"}, {"c2", "Class"}, {"m1", "Method"}, {"m2", "Method"}},
        {{"e1", "contains-method", "c1", "m1"},
         {"e2", "contains-method", "c2", "m2"},
         {"e3", "uses-method", "m1", "m2"}});
    return forbidden(tg, "w4", ConstraintKind::Weak, premise);
}

// Same-class method/attribute pair must be connected by a use.
Constraint same_class_use_constraint(const TypeGraphPtr& tg) {
    GraphPtr premise = TypedGraph::make(
        tg, {{"c", "Class"}, {"m", "Method"}, {"a", "Attribute"}},
        {{"e1", "contains-method", "c", "m"}, {"e2", "contains-attribute", "c", "a"}});
    GraphPtr extended = TypedGraph::make(
        tg, {{"c", "Class"}, {"m", "Method"}, {"a", "Attribute"}},
        {{"e1", "contains-method", "c", "m"},
         {"e2", "contains-attribute", "c", "a"},
         {"u", "uses-attribute", "m", "a"}});
    Constraint c;
    c.name = "w5";
    c.kind = ConstraintKind::Weak;
    c.premise_embedding.domain = empty_graph(tg);
    c.premise_embedding.codomain = premise;
    c.conclusion = Condition::exists(embed_shared_ids(premise, extended), Condition::make_true(extended));
    return c;
}

GraphPtr shopping_fixture(const TypeGraphPtr& tg) {
    std::vector<Node> nodes{
        {"Cart", "Class"},      {"Session", "Class"},   {"Item", "Class"},
        {"print", "Method"},    {"addItem", "Method"},  {"checkout", "Method"},
        {"logout", "Method"},   {"itemTotal", "Method"}, {"itemSingle", "Method"},
        {"items", "Attribute"}, {"username", "Attribute"}, {"cart", "Attribute"},
        {"quantity", "Attribute"}, {"price", "Attribute"}};
    std::vector<Edge> edges{
        {"cm:print", "contains-method", "Cart", "print"},
        {"cm:addItem", "contains-method", "Cart", "addItem"},
        {"cm:checkout", "contains-method", "Cart", "checkout"},
        {"cm:logout", "contains-method", "Session", "logout"},
        {"cm:itemTotal", "contains-method", "Item", "itemTotal"},
        {"cm:itemSingle", "contains-method", "Item", "itemSingle"},
        {"ca:items", "contains-attribute", "Cart", "items"},
        {"ca:username", "contains-attribute", "Session", "username"},
        {"ca:cart", "contains-attribute", "Session", "cart"},
        {"ca:quantity", "contains-attribute", "Item", "quantity"},
        {"ca:price", "contains-attribute", "Item", "price"},
        {"ua:print:items", "uses-attribute", "print", "items"},
        {"ua:print:username", "uses-attribute", "print", "username"},
        {"ua:addItem:items", "uses-attribute", "addItem", "items"},
        {"ua:checkout:username", "uses-attribute", "checkout", "username"},
        {"ua:logout:username", "uses-attribute", "logout", "username"},
        {"ua:itemTotal:quantity", "uses-attribute", "itemTotal", "quantity"},
        {"ua:itemTotal:price", "uses-attribute", "itemTotal", "price"},
        {"ua:itemSingle:quantity", "uses-attribute", "itemSingle", "quantity"},
        {"ua:itemSingle:price", "uses-attribute", "itemSingle", "price"}};
    return TypedGraph::make(tg, std::move(nodes), std::move(edges));
}

}  // namespace

std::vector<Constraint> CraAssets::hard() const {
    std::vector<Constraint> out;
    for (const auto& c : constraints)
        if (c.kind == ConstraintKind::Hard) out.push_back(c);
    return out;
}

std::vector<Constraint> CraAssets::weak() const {
    std::vector<Constraint> out;
    for (const auto& c : constraints)
        if (c.kind == ConstraintKind::Weak) out.push_back(c);
    return out;
}

const Rule& CraAssets::rule(const std::string& name) const {
    for (const auto& r : rules)
        if (r.name == name) return r;
    throw InputError("no rule named '" + name + "'");
}

const Constraint& CraAssets::constraint(const std::string& name) const {
    for (const auto& c : constraints)
        if (c.name == name) return c;
    throw InputError("no constraint named '" + name + "'");
}

CraAssets build_cra_assets(CraVariant variant) {
    CraAssets assets;
    assets.type_graph = cra_type_graph();
    assets.rules = {move_rule(assets.type_graph, true), move_rule(assets.type_graph, false)};
    assets.fixture = shopping_fixture(assets.type_graph);
    if (variant == CraVariant::Base) {
        assets.constraints = {single_container(assets.type_graph, "h1", true),
                              single_container(assets.type_graph, "h2", false),
                              shared_attribute_constraint(assets.type_graph),
                              no_cross_attribute_use(assets.type_graph, "w2")};
    } else {
        assets.constraints = {single_container(assets.type_graph, "h1", true),
                              mutual_dependency_constraint(assets.type_graph),
                              no_cross_call(assets.type_graph),
                              same_class_use_constraint(assets.type_graph),
                              no_cross_attribute_use(assets.type_graph, "w6")};
    }
    return assets;
}

GraphPtr generate_synthetic(int n_classes, std::uint64_t seed) {
    if (n_classes < 2) throw InputError("generate_synthetic: need at least two classes");
    TypeGraphPtr tg = cra_type_graph();
    std::mt19937_64 rng(seed);
    auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    std::vector<Node> nodes;
    std::vector<Edge> edges;
    for (int c = 1; c <= n_classes; ++c) {
        std::string cls = "C" + std::to_string(c);
        nodes.push_back({cls, "Class"});
        for (int k = 1; k <= 5; ++k) {
            std::string m = cls + "M" + std::to_string(k);
            std::string a = cls + "A" + std::to_string(k);
            nodes.push_back({m, "Method"});
            nodes.push_back({a, "Attribute"});
            edges.push_back({"cm:" + m, "contains-method", cls, m});
            edges.push_back({"ca:" + a, "contains-attribute", cls, a});
        }
    }
    for (int c = 1; c <= n_classes; ++c) {
        std::string cls = "C" + std::to_string(c);
        for (int k = 1; k <= 5; ++k) {
            std::string m = cls + "M" + std::to_string(k);
            // Two attributes of the own class.
            std::set<std::size_t> own;
            while (own.size() < 2) own.insert(pick(5));
            for (auto i : own) {
                std::string a = cls + "A" + std::to_string(i + 1);
                edges.push_back({"ua:" + m + ":" + a, "uses-attribute", m, a});
            }
            // Three attributes of other classes, distinct.
            std::set<std::string> other;
            while (other.size() < 3) {
                std::size_t oc = pick(static_cast<std::size_t>(n_classes));
                if (static_cast<int>(oc) + 1 == c) continue;
                std::string a = "C" + std::to_string(oc + 1) + "A" + std::to_string(pick(5) + 1);
                other.insert(a);
            }
            for (const auto& a : other)
                edges.push_back({"ua:" + m + ":" + a, "uses-attribute", m, a});
        }
    }
    return TypedGraph::make(tg, std::move(nodes), std::move(edges));
}

FeatureModel parse_feature_model(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("feature model: ") + e.what());
    }
    if (!j.is_object()) throw InputError("feature model: expected an object");
    FeatureModel fm;
    std::set<std::string> names;
    std::set<std::string> methods;
    for (const auto& f : j.value("features", nlohmann::json::array())) {
        std::string name = f.at("name").get<std::string>();
        std::string kind = f.at("kind").get<std::string>();
        if (kind != "method" && kind != "attribute")
            throw InputError("feature model: feature '" + name + "' has kind '" + kind + "'");
        if (!names.insert(name).second)
            throw InputError("feature model: duplicate feature '" + name + "'");
        if (kind == "method") methods.insert(name);
        fm.features.push_back({name, kind == "method" ? FeatureKind::Method : FeatureKind::Attribute});
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& d : j.value("deps", nlohmann::json::array())) {
        std::string from = d.at("from").get<std::string>();
        std::string to = d.at("to").get<std::string>();
        if (!names.count(from) || !names.count(to))
            throw InputError("feature model: dependency references unknown feature");
        if (!methods.count(from))
            throw InputError("feature model: dependency source '" + from + "' is not a method");
        if (from == to) throw InputError("feature model: self dependency on '" + from + "'");
        if (seen.insert({from, to}).second) fm.deps.emplace_back(from, to);
    }
    return fm;
}

GraphPtr load_feature_model(const FeatureModel& fm, const TypeGraphPtr& tg) {
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::map<std::string, FeatureKind> kind_of;
    std::set<std::string> taken;
    for (const auto& f : fm.features) taken.insert(f.name);
    for (const auto& f : fm.features) {
        kind_of[f.name] = f.kind;
        bool method = f.kind == FeatureKind::Method;
        std::string class_id = "Class_" + f.name;
        while (taken.count(class_id)) class_id += "~";
        taken.insert(class_id);
        nodes.push_back({f.name, method ? "Method" : "Attribute"});
        nodes.push_back({class_id, "Class"});
        edges.push_back({(method ? "cm:" : "ca:") + f.name,
                         method ? "contains-method" : "contains-attribute", class_id, f.name});
    }
    for (const auto& [from, to] : fm.deps) {
        bool to_method = kind_of.at(to) == FeatureKind::Method;
        edges.push_back({(to_method ? "um:" : "ua:") + from + ":" + to,
                         to_method ? "uses-method" : "uses-attribute", from, to});
    }
    return TypedGraph::make(tg, std::move(nodes), std::move(edges));
}

long cra_metric(const GraphPtr& g, const CraAssets& extended_assets) {
    long total = 0;
    for (const auto& c : extended_assets.constraints)
        if (c.kind == ConstraintKind::Weak) total += count_violations(g, c);
    return total;
}

FeatureModel generate_feature_model(int n_features, std::uint64_t seed) {
    if (n_features < 2) throw InputError("generate_feature_model: need at least two features");
    std::mt19937_64 rng(seed);
    FeatureModel fm;
    int methods = (n_features + 1) / 2;
    for (int i = 1; i <= n_features; ++i) {
        bool method = i <= methods;
        fm.features.push_back({(method ? "m" : "a") + std::to_string(method ? i : i - methods),
                               method ? FeatureKind::Method : FeatureKind::Attribute});
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (int i = 0; i < methods; ++i) {
        const std::string& from = fm.features[static_cast<std::size_t>(i)].name;
        int want = 1 + static_cast<int>(rng() % 3);
        int guard = 0;
        while (want > 0 && guard++ < 64) {
            const auto& to = fm.features[static_cast<std::size_t>(rng() % fm.features.size())].name;
            if (to == from) continue;
            if (seen.insert({from, to}).second) {
                fm.deps.emplace_back(from, to);
                --want;
            }
        }
    }
    return fm;
}

}  // namespace graphrepair
