#pragma once

#include <stdexcept>
#include <string>

namespace graphrepair {

// Bad files, malformed graphs, contract violations at the API boundary.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal guarantee, e.g. a predicted delta that disagrees with
// the recomputed violation count. Deliberately loud.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace graphrepair
