#pragma once

#include <string>
#include <utility>
#include <vector>

namespace graphrepair::oracle {

struct PartitionFeature {
    std::string name;
    bool is_method = false;
};

// Globally optimal class assignment by exhaustive enumeration of all set
// partitions of the features, scoring each with the assignment metric
// counted directly on the dependency list:
//   - ordered same-class method pairs without a dependency either way,
//   - same-class (method, attribute) pairs the method does not use,
//   - cross-class dependencies, one per dependency.
// Bounded by max_features (Bell numbers grow fast).
struct OptimalAssignment {
    std::vector<std::vector<std::string>> classes;  // feature names per class
    long min_violations = 0;
};

OptimalAssignment cra_optimal_assignment(const std::vector<PartitionFeature>& features,
                                         const std::vector<std::pair<std::string, std::string>>& deps,
                                         int max_features = 10);

// The same metric on one fixed partition, exposed for tests.
long assignment_violations(const std::vector<PartitionFeature>& features,
                           const std::vector<std::pair<std::string, std::string>>& deps,
                           const std::vector<int>& class_of);

}  // namespace graphrepair::oracle
