#pragma once

#include <vector>

namespace debruijn::detail {

struct MisResult {
    int size = 0;
    std::vector<int> witness;
};

/// Exact maximum independent set of a simple graph given as adjacency lists
/// (no self-loops, symmetric). Branch and bound with degree-0/1 reductions,
/// connected-component splitting, max-degree branching and a greedy-matching
/// upper bound. Deterministic.
MisResult max_independent_set(const std::vector<std::vector<int>>& adj);

}  // namespace debruijn::detail
