#pragma once

// Independent reference implementations for the test suites. These are
// deliberately naive: dense matrices, exhaustive enumeration, no sharing of
// code paths with the library beyond the Graph container.

#include "kindep/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace kindep::testing {

// Connected graph on n vertices: a random spanning tree plus each remaining
// pair with probability p.
Graph random_connected(std::mt19937_64& rng, int n, double p);

// Random connected d-regular graph by the pairing model with restarts.
Graph random_regular(std::mt19937_64& rng, int n, int d);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix dense_adjacency(const Graph& g);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
// (A^l)_{uu} for l = 0..max_power by repeated dense products.
std::vector<std::vector<std::int64_t>> dense_diag_powers(const Graph& g, int max_power);

// All-pairs distances by Floyd-Warshall; unreachable pairs stay at n.
std::vector<std::vector<int>> floyd_warshall(const Graph& g);

// alpha_k by enumerating every vertex subset. n <= 20.
int exhaustive_alpha_k(const Graph& g, int k);

// Backtracking isomorphism test for small graphs.
bool isomorphic(const Graph& a, const Graph& b);

// max c.x subject to rows.x <= rhs over free x, by enumerating every vertex
// (choice of |c| tight constraints). Returns the optimum value.
double lp_by_vertices(const std::vector<double>& c, const std::vector<std::vector<double>>& rows,
    const std::vector<double>& rhs);

struct LabelledGraph {
    std::string label;
    Graph graph;
};

// `count` random connected graphs with 2 <= n <= 14, every other one regular,
// followed by every catalog graph with at most 30 vertices. Deterministic in `seed`.
std::vector<LabelledGraph> sweep_corpus(int count, std::uint64_t seed);

} // namespace kindep::testing
