#pragma once

#include "kindep/graph.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kindep {

// Johnson graphs beyond this many vertices are refused.
inline constexpr long long johnson_vertex_limit = 10000;

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph hypercube(int dim);

// Outer cycle 0..n-1, spokes i -- n+i, inner edges n+i -- n+(i+j) mod n.
Graph generalized_petersen(int n, int j);

// Vertices are the s-subsets of {0..v-1}, numbered by colexicographic rank;
// two subsets are adjacent when they share s-1 elements.
Graph johnson(int v, int s);

// K_{k+1,k+1} with a perfect matching removed: left side 0..k, right side
// k+1..2k+1, with i and k+1+i never adjacent.
Graph bipartite_minus_matching(int k);

// Hamiltonian cycle 0..n-1 plus chords i -- i + shifts[i mod |shifts|].
Graph lcf(int n, std::span<const int> shifts);

// Catalog lookup; throws Error{UnknownName}.
Graph named(std::string_view name);
std::vector<std::string> named_catalog();

// `family:arg1,arg2`, e.g. `johnson:14,7`, `gp:10,3`, `bdm:5`, `cycle:6`.
// Throws Error{Parse} on a malformed spec, Error{UnknownName} on an unknown family.
Graph from_generator_spec(std::string_view spec);

} // namespace kindep
