#include "graphrepair/oracle/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace graphrepair::oracle {

long assignment_violations(const std::vector<PartitionFeature>& features,
                           const std::vector<std::pair<std::string, std::string>>& deps,
                           const std::vector<int>& class_of) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < features.size(); ++i) index[features[i].name] = i;
    std::set<std::pair<std::size_t, std::size_t>> dep_set;
    for (const auto& [from, to] : deps) dep_set.insert({index.at(from), index.at(to)});

    long violations = 0;
    for (std::size_t i = 0; i < features.size(); ++i) {
        if (!features[i].is_method) continue;
        for (std::size_t j = 0; j < features.size(); ++j) {
            if (i == j) continue;
            bool same = class_of[i] == class_of[j];
            if (features[j].is_method) {
                // Ordered method pair: same class needs a dependency either way.
                if (same && !dep_set.count({i, j}) && !dep_set.count({j, i})) ++violations;
            } else {
                if (same && !dep_set.count({i, j})) ++violations;
            }
        }
    }
    for (const auto& [from, to] : deps) {
        if (class_of[index.at(from)] != class_of[index.at(to)]) ++violations;
    }
    return violations;
}

OptimalAssignment cra_optimal_assignment(const std::vector<PartitionFeature>& features,
                                         const std::vector<std::pair<std::string, std::string>>& deps,
                                         int max_features) {
    if (static_cast<int>(features.size()) > max_features)
        throw std::invalid_argument("cra_optimal_assignment: feature count exceeds the bound");

    const std::size_t n = features.size();
    std::vector<int> class_of(n, 0);
    OptimalAssignment best;
    bool have_best = false;

    // Restricted growth strings enumerate each set partition exactly once.
    auto evaluate = [&]() {
        long v = assignment_violations(features, deps, class_of);
        if (!have_best || v < best.min_violations) {
            have_best = true;
            best.min_violations = v;
            int blocks = 0;
            for (int c : class_of) blocks = std::max(blocks, c + 1);
            best.classes.assign(static_cast<std::size_t>(blocks), {});
            for (std::size_t i = 0; i < n; ++i)
                best.classes[static_cast<std::size_t>(class_of[i])].push_back(features[i].name);
        }
    };

    if (n == 0) return best;
    std::function<void(std::size_t, int)> walk = [&](std::size_t i, int max_used) {
        if (i == n) {
            evaluate();
            return;
        }
        for (int c = 0; c <= max_used + 1 && c < static_cast<int>(n); ++c) {
            class_of[i] = c;
            walk(i + 1, std::max(max_used, c));
        }
    };
    class_of[0] = 0;
    walk(1, 0);
    return best;
}

}  // namespace graphrepair::oracle
