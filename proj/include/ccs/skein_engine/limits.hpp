#pragma once

#include <stdexcept>

namespace ccs {

// Thrown when an exponential algorithm exceeds its configured budget.
// Callers get a hard error, never a silently truncated polynomial.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SkeinLimits {
    // state-sum cap: the bracket sums over 2^n smoothings
    int max_state_sum_crossings = 22;
    // input cap for the two-variable skein recursion
    int max_crossings = 64;
    // recursion budget for the skein tree (nodes visited)
    long long max_nodes = 8000000;
    // braiding move budget for the Seifert-matrix pipeline
    int max_braiding_moves = 2000;
};

}  // namespace ccs
