#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace kindep {

struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected, simple, connected graph on vertices 0..n-1.
//
// Edges keep the order in which they were first seen (duplicates dropped),
// so that a graph read from a file writes back the same edge sequence.
class Graph {
public:
    // Throws Error{SelfLoop, IndexOutOfRange, Disconnected, InvalidParameters}.
    static Graph from_edge_list(std::span<const Edge> edges, int n);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    // Sorted ascending.
    std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const noexcept { return max_degree_; }
    bool adjacent(int u, int v) const;

    // Common degree when all vertices have the same degree.
    std::optional<int> regular_degree() const noexcept { return regular_; }

    // Same vertex count and same edge set; edge order is ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    Graph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::optional<int> regular_;
    int max_degree_ = 0;
};

struct DistanceInfo {
    int n = 0;
    std::vector<int> dist; // row-major n x n hop counts
    int diameter = 0;

    int at(int u, int v) const {
        return dist[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    }
};

// BFS from every vertex.
DistanceInfo distances(const Graph& g);

// Vertices adjacent iff 1 <= dist(u, v) <= k.
Graph power_graph(const Graph& g, int k);
Graph power_graph(const Graph& g, const DistanceInfo& dist, int k);

std::optional<int> is_regular(const Graph& g);

bool is_bipartite(const Graph& g);

} // namespace kindep
