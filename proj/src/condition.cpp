#include "graphrepair/condition.hpp"

#include <algorithm>
#include <sstream>

#include "graphrepair/match.hpp"

namespace graphrepair {

namespace {

void require_same_over(const GraphPtr& a, const GraphPtr& b, const char* what) {
    if (a.get() == b.get()) return;
    if (!a || !b || !graphs_identical(*a, *b)) throw InputError(std::string(what) + ": graph mismatch");
}

}  // namespace

ConditionPtr Condition::build(ConditionKind kind, GraphPtr over, Morphism embedding,
                              ConditionPtr body, std::vector<ConditionPtr> parts) {
    return ConditionPtr(new Condition(kind, std::move(over), std::move(embedding), std::move(body),
                                      std::move(parts)));
}

ConditionPtr Condition::make_true(GraphPtr over) {
    return build(ConditionKind::True, std::move(over), {}, nullptr, {});
}

ConditionPtr Condition::make_false(GraphPtr over) {
    return build(ConditionKind::False, std::move(over), {}, nullptr, {});
}

ConditionPtr Condition::exists(Morphism embedding, ConditionPtr body) {
    if (!embedding.total())
        throw InputError("exists: embedding must be total on its domain");
    if (!embedding.valid()) throw InputError("exists: embedding is not a valid morphism");
    require_same_over(body->over(), embedding.codomain, "exists body");
    GraphPtr over = embedding.domain;
    return build(ConditionKind::Exists, std::move(over), std::move(embedding), std::move(body), {});
}

ConditionPtr Condition::forall(Morphism embedding, ConditionPtr body) {
    if (!embedding.total())
        throw InputError("forall: embedding must be total on its domain");
    if (!embedding.valid()) throw InputError("forall: embedding is not a valid morphism");
    require_same_over(body->over(), embedding.codomain, "forall body");
    GraphPtr over = embedding.domain;
    return build(ConditionKind::ForAll, std::move(over), std::move(embedding), std::move(body), {});
}

ConditionPtr Condition::negation(ConditionPtr inner) {
    GraphPtr over = inner->over();
    return build(ConditionKind::Not, std::move(over), {}, std::move(inner), {});
}

ConditionPtr Condition::disjunction(GraphPtr over, std::vector<ConditionPtr> parts) {
    for (const auto& p : parts) require_same_over(p->over(), over, "disjunction part");
    return build(ConditionKind::Or, std::move(over), {}, nullptr, std::move(parts));
}

ConditionPtr Condition::conjunction(GraphPtr over, std::vector<ConditionPtr> parts) {
    for (const auto& p : parts) require_same_over(p->over(), over, "conjunction part");
    return build(ConditionKind::And, std::move(over), {}, nullptr, std::move(parts));
}

ConditionPtr Condition::implication(ConditionPtr antecedent, ConditionPtr consequent) {
    require_same_over(antecedent->over(), consequent->over(), "implication");
    GraphPtr over = antecedent->over();
    return build(ConditionKind::Implies, std::move(over), {}, nullptr,
                      {std::move(antecedent), std::move(consequent)});
}

ConditionPtr fold_condition(const ConditionPtr& c) {
    switch (c->kind()) {
        case ConditionKind::True:
        case ConditionKind::False:
            return c;
        case ConditionKind::Exists: {
            auto body = fold_condition(c->body());
            if (body->is_false()) return Condition::make_false(c->over());
            if (body.get() == c->body().get()) return c;
            return Condition::exists(c->embedding(), body);
        }
        case ConditionKind::ForAll: {
            auto body = fold_condition(c->body());
            if (body->is_true()) return Condition::make_true(c->over());
            if (body.get() == c->body().get()) return c;
            return Condition::forall(c->embedding(), body);
        }
        case ConditionKind::Not: {
            auto body = fold_condition(c->body());
            if (body->is_true()) return Condition::make_false(c->over());
            if (body->is_false()) return Condition::make_true(c->over());
            if (body->kind() == ConditionKind::Not) return body->body();
            if (body.get() == c->body().get()) return c;
            return Condition::negation(body);
        }
        case ConditionKind::Or: {
            std::vector<ConditionPtr> parts;
            for (const auto& p : c->parts()) {
                auto f = fold_condition(p);
                if (f->is_true()) return Condition::make_true(c->over());
                if (f->is_false()) continue;
                parts.push_back(f);
            }
            if (parts.empty()) return Condition::make_false(c->over());
            if (parts.size() == 1) return parts.front();
            return Condition::disjunction(c->over(), std::move(parts));
        }
        case ConditionKind::And: {
            std::vector<ConditionPtr> parts;
            for (const auto& p : c->parts()) {
                auto f = fold_condition(p);
                if (f->is_false()) return Condition::make_false(c->over());
                if (f->is_true()) continue;
                parts.push_back(f);
            }
            if (parts.empty()) return Condition::make_true(c->over());
            if (parts.size() == 1) return parts.front();
            return Condition::conjunction(c->over(), std::move(parts));
        }
        case ConditionKind::Implies: {
            auto a = fold_condition(c->parts()[0]);
            auto b = fold_condition(c->parts()[1]);
            if (a->is_false() || b->is_true()) return Condition::make_true(c->over());
            if (a->is_true()) return b;
            if (b->is_false()) return fold_condition(Condition::negation(a));
            if (a.get() == c->parts()[0].get() && b.get() == c->parts()[1].get()) return c;
            return Condition::implication(a, b);
        }
    }
    return c;
}

namespace {

void graph_signature(std::ostringstream& os, const TypedGraph& g) {
    os << "[";
    for (const auto& n : g.nodes()) os << n.id << ":" << n.type << ";";
    os << "|";
    for (const auto& e : g.edges()) os << e.id << ":" << e.type << ":" << e.src << ">" << e.tgt << ";";
    os << "]";
}

void signature_rec(std::ostringstream& os, const ConditionPtr& c) {
    switch (c->kind()) {
        case ConditionKind::True: os << "T"; return;
        case ConditionKind::False: os << "F"; return;
        case ConditionKind::Exists:
        case ConditionKind::ForAll:
            os << (c->kind() == ConditionKind::Exists ? "E(" : "A(");
            graph_signature(os, *c->embedding().codomain);
            os << c->embedding().signature() << ",";
            signature_rec(os, c->body());
            os << ")";
            return;
        case ConditionKind::Not:
            os << "!(";
            signature_rec(os, c->body());
            os << ")";
            return;
        case ConditionKind::Or:
        case ConditionKind::And: {
            os << (c->kind() == ConditionKind::Or ? "|(" : "&(");
            bool first = true;
            for (const auto& p : c->parts()) {
                if (!first) os << ",";
                first = false;
                signature_rec(os, p);
            }
            os << ")";
            return;
        }
        case ConditionKind::Implies:
            os << "=>(";
            signature_rec(os, c->parts()[0]);
            os << ",";
            signature_rec(os, c->parts()[1]);
            os << ")";
            return;
    }
}

}  // namespace

std::string condition_signature(const ConditionPtr& c) {
    std::ostringstream os;
    signature_rec(os, c);
    return os.str();
}

bool satisfies(const Morphism& p, const ConditionPtr& c) {
    if (p.domain.get() != c->over().get() && !graphs_identical(*p.domain, *c->over()))
        throw InputError("satisfies: morphism domain differs from the condition's graph");
    switch (c->kind()) {
        case ConditionKind::True:
            return true;
        case ConditionKind::False:
            return false;
        case ConditionKind::Not:
            return !satisfies(p, c->body());
        case ConditionKind::Or: {
            for (const auto& part : c->parts())
                if (satisfies(p, part)) return true;
            return false;
        }
        case ConditionKind::And: {
            for (const auto& part : c->parts())
                if (!satisfies(p, part)) return false;
            return true;
        }
        case ConditionKind::Implies:
            return !satisfies(p, c->parts()[0]) || satisfies(p, c->parts()[1]);
        case ConditionKind::Exists:
        case ConditionKind::ForAll: {
            const Morphism& e = c->embedding();
            // Anchor q on the image of e so that q composed with e equals p.
            Morphism anchor;
            anchor.domain = e.codomain;
            anchor.codomain = p.codomain;
            for (const auto& [x, ex] : e.node_map) anchor.node_map[ex] = p.node_map.at(x);
            for (const auto& [x, ex] : e.edge_map) anchor.edge_map[ex] = p.edge_map.at(x);
            const bool exists = c->kind() == ConditionKind::Exists;
            bool verdict = !exists;
            for_each_monomorphism(e.codomain, p.codomain, &anchor, [&](const Morphism& q) {
                if (satisfies(q, c->body()) == exists) {
                    verdict = exists;
                    return false;
                }
                return true;
            });
            return verdict;
        }
    }
    return false;
}

ConditionPtr Constraint::as_condition() const {
    return Condition::forall(premise_embedding, conclusion);
}

bool Constraint::forbidden_pattern() const {
    return context()->node_count() == 0 && context()->edge_count() == 0 && conclusion->is_false();
}

ViolationSet violations_of(const Morphism& p, const Constraint& c) {
    if (p.domain.get() != c.context().get() && !graphs_identical(*p.domain, *c.context()))
        throw InputError("violations_of: anchor domain differs from the constraint context");
    const Morphism& e = c.premise_embedding;
    Morphism anchor;
    anchor.domain = c.premise();
    anchor.codomain = p.codomain;
    for (const auto& [x, ex] : e.node_map) anchor.node_map[ex] = p.node_map.at(x);
    for (const auto& [x, ex] : e.edge_map) anchor.edge_map[ex] = p.edge_map.at(x);
    ViolationSet vs;
    vs.anchor = p;
    for (auto& q : find_monomorphisms(c.premise(), p.codomain, &anchor))
        if (!satisfies(q, c.conclusion)) vs.witnesses.push_back(std::move(q));
    return vs;
}

int count_violations(const GraphPtr& g, const Constraint& c) {
    if (c.context()->node_count() != 0 || c.context()->edge_count() != 0)
        throw InputError("count_violations: constraint context must be the empty graph");
    int count = 0;
    for_each_monomorphism(c.premise(), g, nullptr, [&](const Morphism& q) {
        if (!satisfies(q, c.conclusion)) ++count;
        return true;
    });
    return count;
}

Constraint normalize_universal(const ConditionPtr& closed, ConstraintKind kind, double weight,
                               std::string name) {
    const GraphPtr& over = closed->over();
    if (over->node_count() != 0 || over->edge_count() != 0)
        throw InputError("normalize_universal: condition must be over the empty graph");
    Constraint c;
    c.name = std::move(name);
    c.kind = kind;
    c.weight = weight;
    if (closed->kind() == ConditionKind::ForAll) {
        c.premise_embedding = closed->embedding();
        c.conclusion = closed->body();
    } else {
        c.premise_embedding = identity_morphism(over);
        c.conclusion = closed;
    }
    return c;
}

bool satisfies_graph(const GraphPtr& g, const Constraint& c) {
    Morphism from_empty;
    from_empty.domain = empty_graph(g->type_graph());
    from_empty.codomain = g;
    return satisfies(from_empty, c.as_condition());
}

}  // namespace graphrepair
