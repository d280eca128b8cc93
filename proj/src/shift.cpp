#include "graphrepair/shift.hpp"

#include <algorithm>
#include <functional>

#include "graphrepair/match.hpp"

namespace graphrepair {

namespace {

// Quantifier transport shared by the Exists and ForAll cases of shift_along.
// Returns one branch per overlap class; Exists joins them with Or, ForAll
// with And.
std::vector<ConditionPtr> shift_quantifier(const Morphism& i_p, const Morphism& e,
                                           const ConditionPtr& body, bool exists) {
    CorrespondenceBase base;
    for (const auto& [x, px] : i_p.node_map) base.node_pairs.emplace_back(px, e.node_map.at(x));
    for (const auto& [x, px] : i_p.edge_map) base.edge_pairs.emplace_back(px, e.edge_map.at(x));
    std::vector<ConditionPtr> branches;
    for (const auto& o : enumerate_overlap_classes(i_p.codomain, e.codomain, &base)) {
        ConditionPtr shifted_body = shift_along(o.right, body);
        branches.push_back(exists ? Condition::exists(o.left, shifted_body)
                                  : Condition::forall(o.left, shifted_body));
    }
    return branches;
}

}  // namespace

ConditionPtr shift_along(const Morphism& i_p, const ConditionPtr& c) {
    if (i_p.domain.get() != c->over().get() && !graphs_identical(*i_p.domain, *c->over()))
        throw InputError("shift_along: condition is not over the morphism's domain");
    const GraphPtr& target = i_p.codomain;
    switch (c->kind()) {
        case ConditionKind::True:
            return Condition::make_true(target);
        case ConditionKind::False:
            return Condition::make_false(target);
        case ConditionKind::Not:
            return fold_condition(Condition::negation(shift_along(i_p, c->body())));
        case ConditionKind::Or:
        case ConditionKind::And: {
            std::vector<ConditionPtr> parts;
            for (const auto& p : c->parts()) parts.push_back(shift_along(i_p, p));
            auto node = c->kind() == ConditionKind::Or ? Condition::disjunction(target, parts)
                                                       : Condition::conjunction(target, parts);
            return fold_condition(node);
        }
        case ConditionKind::Implies:
            return fold_condition(Condition::implication(shift_along(i_p, c->parts()[0]),
                                                         shift_along(i_p, c->parts()[1])));
        case ConditionKind::Exists:
            return fold_condition(
                Condition::disjunction(target, shift_quantifier(i_p, c->embedding(), c->body(), true)));
        case ConditionKind::ForAll:
            return fold_condition(
                Condition::conjunction(target, shift_quantifier(i_p, c->embedding(), c->body(), false)));
    }
    return c;
}

namespace {

ConditionPtr shift_over_rule_rec(const Rule& rule, const ConditionPtr& c, int& step);

// Rewrites the quantified graph backwards: apply the inverted rule at the
// embedding; the comatch becomes the new embedding and the recursion
// continues over the reversed derived rule.
ConditionPtr shift_quantified_over_rule(const Rule& rule, const ConditionPtr& c, int& step) {
    bool exists = c->kind() == ConditionKind::Exists;
    const Morphism& e = c->embedding();
    Rule inverse = rule.inverted();
    Morphism match = e;
    match.domain = inverse.lhs;  // identical graph to rule.rhs
    if (!is_applicable(inverse, match))
        return exists ? Condition::make_false(rule.lhs) : Condition::make_true(rule.lhs);
    Transformation t = apply_rule(inverse, match, step++);
    Rule reversed = t.reversed_derived_rule();
    ConditionPtr body = shift_over_rule_rec(reversed, c->body(), step);
    return exists ? Condition::exists(t.comatch, body) : Condition::forall(t.comatch, body);
}

ConditionPtr shift_over_rule_rec(const Rule& rule, const ConditionPtr& c, int& step) {
    if (c->over().get() != rule.rhs.get() && !graphs_identical(*c->over(), *rule.rhs))
        throw InputError("shift_over_rule: condition is not over the rule's right side");
    const GraphPtr& target = rule.lhs;
    switch (c->kind()) {
        case ConditionKind::True:
            return Condition::make_true(target);
        case ConditionKind::False:
            return Condition::make_false(target);
        case ConditionKind::Not:
            return fold_condition(Condition::negation(shift_over_rule_rec(rule, c->body(), step)));
        case ConditionKind::Or:
        case ConditionKind::And: {
            std::vector<ConditionPtr> parts;
            for (const auto& p : c->parts()) parts.push_back(shift_over_rule_rec(rule, p, step));
            auto node = c->kind() == ConditionKind::Or ? Condition::disjunction(target, parts)
                                                       : Condition::conjunction(target, parts);
            return fold_condition(node);
        }
        case ConditionKind::Implies:
            return fold_condition(
                Condition::implication(shift_over_rule_rec(rule, c->parts()[0], step),
                                       shift_over_rule_rec(rule, c->parts()[1], step)));
        case ConditionKind::Exists:
        case ConditionKind::ForAll:
            return fold_condition(shift_quantified_over_rule(rule, c, step));
    }
    return c;
}

}  // namespace

ConditionPtr shift_over_rule(const Rule& rule, const ConditionPtr& c) {
    int step = 0;
    return shift_over_rule_rec(rule, c, step);
}

namespace {

bool violates_some_hard(const GraphPtr& g, const std::vector<Constraint>& hard) {
    for (const auto& h : hard) {
        if (!h.forbidden_pattern()) continue;
        if (embeds(h.premise(), g)) return true;
    }
    return false;
}

}  // namespace

ConditionPtr simplify_with_hard(const ConditionPtr& c, const std::vector<Constraint>& hard,
                                std::vector<std::string>* warnings) {
    if (warnings) {
        for (const auto& h : hard)
            if (!h.forbidden_pattern())
                warnings->push_back("hard constraint '" + h.name +
                                    "' is not a forbidden pattern; skipped");
    }
    std::function<ConditionPtr(const ConditionPtr&)> walk = [&](const ConditionPtr& c) -> ConditionPtr {
        switch (c->kind()) {
            case ConditionKind::True:
            case ConditionKind::False:
                return c;
            case ConditionKind::Exists:
                if (violates_some_hard(c->embedding().codomain, hard))
                    return Condition::make_false(c->over());
                return Condition::exists(c->embedding(), walk(c->body()));
            case ConditionKind::ForAll:
                if (violates_some_hard(c->embedding().codomain, hard))
                    return Condition::make_true(c->over());
                return Condition::forall(c->embedding(), walk(c->body()));
            case ConditionKind::Not:
                return Condition::negation(walk(c->body()));
            case ConditionKind::Or:
            case ConditionKind::And: {
                std::vector<ConditionPtr> parts;
                for (const auto& p : c->parts()) parts.push_back(walk(p));
                return c->kind() == ConditionKind::Or ? Condition::disjunction(c->over(), parts)
                                                      : Condition::conjunction(c->over(), parts);
            }
            case ConditionKind::Implies:
                return Condition::implication(walk(c->parts()[0]), walk(c->parts()[1]));
        }
        return c;
    };
    return fold_condition(walk(c));
}

namespace {

std::vector<ConditionPtr> flatten_or(const ConditionPtr& c) {
    if (c->kind() == ConditionKind::Or) {
        std::vector<ConditionPtr> out;
        for (const auto& p : c->parts()) {
            auto inner = flatten_or(p);
            out.insert(out.end(), inner.begin(), inner.end());
        }
        return out;
    }
    if (c->is_false()) return {};
    return {c};
}

ConditionPtr rebuild_or(const GraphPtr& over, const std::vector<ConditionPtr>& parts) {
    if (parts.empty()) return Condition::make_false(over);
    if (parts.size() == 1) return parts.front();
    return Condition::disjunction(over, parts);
}

}  // namespace

ConditionPtr simplify_implication(const ConditionPtr& c) {
    switch (c->kind()) {
        case ConditionKind::True:
        case ConditionKind::False:
            return c;
        case ConditionKind::Exists:
            return fold_condition(Condition::exists(c->embedding(), simplify_implication(c->body())));
        case ConditionKind::ForAll:
            return fold_condition(Condition::forall(c->embedding(), simplify_implication(c->body())));
        case ConditionKind::Not:
            return fold_condition(Condition::negation(simplify_implication(c->body())));
        case ConditionKind::Or:
        case ConditionKind::And: {
            std::vector<ConditionPtr> parts;
            for (const auto& p : c->parts()) parts.push_back(simplify_implication(p));
            auto node = c->kind() == ConditionKind::Or ? Condition::disjunction(c->over(), parts)
                                                       : Condition::conjunction(c->over(), parts);
            return fold_condition(node);
        }
        case ConditionKind::Implies: {
            ConditionPtr ante = simplify_implication(c->parts()[0]);
            ConditionPtr cons = simplify_implication(c->parts()[1]);
            std::vector<ConditionPtr> left = flatten_or(ante);
            std::vector<ConditionPtr> right = flatten_or(cons);
            std::vector<ConditionPtr> kept;
            for (const auto& l : left) {
                bool drop = false;
                for (const auto& r : right)
                    if (conditions_equivalent(l, r)) {
                        drop = true;
                        break;
                    }
                if (!drop) kept.push_back(l);
            }
            return fold_condition(Condition::implication(rebuild_or(c->over(), kept), cons));
        }
    }
    return c;
}

namespace {

bool equivalent_rec(const ConditionPtr& a, const ConditionPtr& b, const Morphism& base) {
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case ConditionKind::True:
        case ConditionKind::False:
            return true;
        case ConditionKind::Not:
            return equivalent_rec(a->body(), b->body(), base);
        case ConditionKind::Implies:
            return equivalent_rec(a->parts()[0], b->parts()[0], base) &&
                   equivalent_rec(a->parts()[1], b->parts()[1], base);
        case ConditionKind::Or:
        case ConditionKind::And: {
            if (a->parts().size() != b->parts().size()) return false;
            std::vector<bool> taken(b->parts().size(), false);
            std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
                if (i == a->parts().size()) return true;
                for (std::size_t j = 0; j < b->parts().size(); ++j) {
                    if (taken[j] || !equivalent_rec(a->parts()[i], b->parts()[j], base)) continue;
                    taken[j] = true;
                    if (assign(i + 1)) return true;
                    taken[j] = false;
                }
                return false;
            };
            return assign(0);
        }
        case ConditionKind::Exists:
        case ConditionKind::ForAll: {
            const Morphism& ea = a->embedding();
            const Morphism& eb = b->embedding();
            if (ea.codomain->node_count() != eb.codomain->node_count() ||
                ea.codomain->edge_count() != eb.codomain->edge_count())
                return false;
            // The isomorphism must commute with the embeddings over the base.
            Morphism anchor;
            anchor.domain = ea.codomain;
            anchor.codomain = eb.codomain;
            for (const auto& [x, ax] : ea.node_map)
                anchor.node_map[ax] = eb.node_map.at(base.node_map.at(x));
            for (const auto& [x, ax] : ea.edge_map)
                anchor.edge_map[ax] = eb.edge_map.at(base.edge_map.at(x));
            for (const auto& iso : isomorphisms_extending(ea.codomain, eb.codomain, &anchor))
                if (equivalent_rec(a->body(), b->body(), iso)) return true;
            return false;
        }
    }
    return false;
}

}  // namespace

bool conditions_equivalent(const ConditionPtr& a, const ConditionPtr& b, const Morphism& base) {
    return equivalent_rec(fold_condition(a), fold_condition(b), base);
}

bool conditions_equivalent(const ConditionPtr& a, const ConditionPtr& b) {
    if (a->over().get() != b->over().get() && !graphs_identical(*a->over(), *b->over()))
        return false;
    return conditions_equivalent(a, b, identity_morphism(a->over()));
}

}  // namespace graphrepair
