#pragma once

#include "kindep/graph.hpp"

#include <cstdint>
#include <vector>

namespace kindep {

inline constexpr std::int64_t default_oracle_budget = 10'000'000;

struct ExactResult {
    int alpha_k = 0;
    std::vector<int> witness_set; // sorted, pairwise at distance > k
    std::int64_t nodes_explored = 0;
    // False when the node budget ran out; alpha_k is then only a lower bound.
    bool exact = true;
};

// Maximum independent set of the k-th power graph by branch and bound,
// pruning with greedy clique covers. Deterministic.
ExactResult exact_alpha_k(const Graph& g, int k, std::int64_t budget = default_oracle_budget);

// Largest BFS eccentricity.
int exact_diameter(const Graph& g);

} // namespace kindep
