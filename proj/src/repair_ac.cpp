#include "graphrepair/repair_ac.hpp"

#include <algorithm>

#include "graphrepair/match.hpp"

namespace graphrepair {

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 14695981039346656037ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string graph_key(const TypedGraph& g) {
    std::string s;
    for (const auto& n : g.nodes()) s += n.id + ":" + n.type + ";";
    s += "|";
    for (const auto& e : g.edges()) s += e.id + ":" + e.type + ":" + e.src + ">" + e.tgt + ";";
    return s;
}

}  // namespace

std::uint64_t rule_hash(const Rule& rule) {
    return fnv1a(rule.name + "\x1f" + graph_key(*rule.lhs) + "\x1f" + graph_key(*rule.rhs));
}

std::uint64_t constraint_hash(const Constraint& c) {
    return fnv1a(c.name + "\x1f" + c.premise_embedding.signature() + "\x1f" +
                 graph_key(*c.premise()) + "\x1f" + condition_signature(c.conclusion));
}

std::pair<ConditionPtr, ConditionPtr> induced_pre_post(const Rule& rule, const Overlap& o,
                                                       const ConditionPtr& d,
                                                       const std::vector<Constraint>& hard) {
    ConditionPtr pre = shift_along(o.right, d);
    ConditionPtr post;
    if (o.class_kind == OverlapClassKind::Pre) {
        post = Condition::make_true(o.glue);
    } else {
        if (!o.witness) throw InputError("induced_pre_post: con class lacks its witness");
        // Transport d into the result of the induced transformation, then pull
        // it back over the reversed derived rule PL <- D -> PR.
        Transformation t = apply_rule(rule, o.left);
        Morphism into_result = compose(*o.witness, t.interface_to_result);
        ConditionPtr in_result = shift_along(into_result, d);
        Rule backwards{rule.name + "@" + o.signature(), o.glue, t.result};
        post = shift_over_rule(backwards, in_result);
    }
    pre = simplify_with_hard(pre, hard);
    post = simplify_with_hard(post, hard);
    return {pre, post};
}

namespace {

// Builds the universal condition forall(anchor, body), simplifies it as a
// whole (so an overlap graph that itself violates a hard constraint
// eliminates the entry), and hands back the simplified body; nullopt when
// the entry folded to True.
std::optional<ConditionPtr> simplified_body(const Morphism& anchor, ConditionPtr body,
                                            const std::vector<Constraint>& hard) {
    ConditionPtr whole = fold_condition(Condition::forall(anchor, fold_condition(body)));
    whole = simplify_with_hard(whole, hard);
    whole = fold_condition(simplify_implication(whole));
    if (whole->is_true()) return std::nullopt;
    if (whole->kind() != ConditionKind::ForAll)
        throw InternalError("simplified application condition lost its universal shape");
    return whole->body();
}

std::vector<ApplicationCondition> merge_equivalent(std::vector<ApplicationCondition> acs) {
    std::sort(acs.begin(), acs.end(), [](const ApplicationCondition& a, const ApplicationCondition& b) {
        return a.overlap_signature < b.overlap_signature;
    });
    std::vector<ApplicationCondition> merged;
    for (auto& ac : acs) {
        bool absorbed = false;
        for (auto& m : merged) {
            if (m.kind == ac.kind && acs_equivalent(m, ac)) {
                m.multiplicity += ac.multiplicity;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(std::move(ac));
    }
    return merged;
}

}  // namespace

bool acs_equivalent(const ApplicationCondition& a, const ApplicationCondition& b) {
    ConditionPtr ca = Condition::forall(a.anchor, a.body);
    ConditionPtr cb = Condition::forall(b.anchor, b.body);
    if (!graphs_identical(*ca->over(), *cb->over())) return false;
    return conditions_equivalent(ca, cb, identity_morphism(ca->over()));
}

std::vector<ApplicationCondition> derive_repair_acs(const Rule& rule, const Constraint& c,
                                                    const std::vector<Constraint>& hard,
                                                    std::vector<std::string>* pruned_out) {
    if (c.kind != ConstraintKind::Weak)
        throw InputError("derive_repair_acs: constraint '" + c.name + "' is not weak");
    if (c.context()->node_count() != 0 || c.context()->edge_count() != 0)
        throw InputError("derive_repair_acs: constraint context must be the empty graph");

    std::vector<ApplicationCondition> acs;
    RuleOverlapClasses classes = rule_overlap_classes(rule, c.premise());
    auto handle = [&](const Overlap& o) {
        auto [pre, post] = induced_pre_post(rule, o, c.conclusion, hard);
        ConditionPtr body = Condition::implication(post, pre);
        auto kept = simplified_body(o.left, body, hard);
        if (!kept) {
            if (pruned_out) pruned_out->push_back(o.signature());
            return;
        }
        ApplicationCondition ac;
        ac.anchor = o.left;
        ac.body = *kept;
        ac.kind = AcKind::Repair;
        ac.branch = o.class_kind == OverlapClassKind::Pre ? AcBranch::Premise : AcBranch::Conclusion;
        ac.constraint_name = c.name;
        ac.overlap_signature = o.signature();
        acs.push_back(std::move(ac));
    };
    for (const auto& o : classes.pre) handle(o);
    for (const auto& o : classes.con) handle(o);
    return merge_equivalent(std::move(acs));
}

std::vector<ApplicationCondition> derive_impairment_acs(const Rule& rule, const Constraint& c,
                                                        const std::vector<Constraint>& hard,
                                                        std::vector<std::string>* pruned_out) {
    Rule inverse = rule.inverted();
    std::vector<ApplicationCondition> acs;
    for (auto& inv_ac : derive_repair_acs(inverse, c, hard, pruned_out)) {
        // Transport the whole universal condition back onto the left side.
        ConditionPtr whole = Condition::forall(inv_ac.anchor, inv_ac.body);
        ConditionPtr shifted = shift_over_rule(rule, whole);
        shifted = simplify_with_hard(shifted, hard);
        shifted = fold_condition(simplify_implication(shifted));
        if (shifted->is_true()) {
            if (pruned_out) pruned_out->push_back("<-" + inv_ac.overlap_signature);
            continue;
        }
        if (shifted->kind() != ConditionKind::ForAll)
            throw InternalError("derive_impairment_acs: transported condition lost its universal shape");
        ApplicationCondition ac;
        ac.anchor = shifted->embedding();
        ac.body = shifted->body();
        ac.kind = AcKind::Impairment;
        ac.branch = inv_ac.branch;
        ac.constraint_name = c.name;
        ac.overlap_signature = "<-" + inv_ac.overlap_signature;
        ac.multiplicity = inv_ac.multiplicity;
        acs.push_back(std::move(ac));
    }
    return merge_equivalent(std::move(acs));
}

void cancel_mutual(std::vector<ApplicationCondition>& repair,
                   std::vector<ApplicationCondition>& impairment) {
    for (auto& r : repair) {
        for (auto& v : impairment) {
            if (r.multiplicity == 0 || v.multiplicity == 0) continue;
            if (!acs_equivalent(r, v)) continue;
            int k = std::min(r.multiplicity, v.multiplicity);
            r.multiplicity -= k;
            v.multiplicity -= k;
        }
    }
    auto drop_spent = [](std::vector<ApplicationCondition>& acs) {
        acs.erase(std::remove_if(acs.begin(), acs.end(),
                                 [](const ApplicationCondition& ac) { return ac.multiplicity == 0; }),
                  acs.end());
    };
    drop_spent(repair);
    drop_spent(impairment);
}

AcBundle derive_bundle(const Rule& rule, const Constraint& c, const std::vector<Constraint>& hard,
                       bool cancel) {
    AcBundle b;
    b.rule_name = rule.name;
    b.constraint_name = c.name;
    b.rule_hash = rule_hash(rule);
    b.constraint_hash = constraint_hash(c);
    b.repair = derive_repair_acs(rule, c, hard, &b.pruned);
    b.impairment = derive_impairment_acs(rule, c, hard, &b.pruned);
    if (cancel) cancel_mutual(b.repair, b.impairment);
    return b;
}

}  // namespace graphrepair
