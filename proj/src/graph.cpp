#include "kindep/graph.hpp"

#include "kindep/error.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <utility>
#include <string>

namespace kindep {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::LPNumericalFailure: return "LPNumericalFailure";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotWalkRegular: return "NotWalkRegular";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorCode::HypothesesViolated: return "HypothesesViolated";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    }
    return "Unknown";
}

namespace {

std::vector<int> bfs_from(const Graph& g, int source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            auto& dw = dist[static_cast<std::size_t>(w)];
            if (dw < 0) {
                dw = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

} // namespace

Graph Graph::from_edge_list(std::span<const Edge> edges, int n)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidParameters, "graph needs at least one vertex");

    Graph g;
    g.n_ = n;
    g.adj_.resize(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw Error(ErrorCode::IndexOutOfRange,
                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside [0," + std::to_string(n) + ")");
        if (e.u == e.v)
            throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
        g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }

    // Dedup each list, then keep only the first occurrence of each edge.
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
    keyed.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto lo = static_cast<std::uint64_t>(std::min(edges[i].u, edges[i].v));
        auto hi = static_cast<std::uint64_t>(std::max(edges[i].u, edges[i].v));
        keyed.emplace_back((lo << 32) | hi, i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<char> first(edges.size(), 0);
    for (std::size_t i = 0; i < keyed.size(); ++i)
        if (i == 0 || keyed[i].first != keyed[i - 1].first)
            first[keyed[i].second] = 1;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (first[i])
            g.edges_.push_back(edges[i]);

    int dmin = g.degree(0);
    int dmax = dmin;
    for (int v = 1; v < n; ++v) {
        dmin = std::min(dmin, g.degree(v));
        dmax = std::max(dmax, g.degree(v));
    }
    g.max_degree_ = dmax;
    if (dmin == dmax)
        g.regular_ = dmin;

    const auto reach = bfs_from(g, 0);
    if (std::any_of(reach.begin(), reach.end(), [](int d) { return d < 0; }))
        throw Error(ErrorCode::Disconnected, "graph on " + std::to_string(n) + " vertices is not connected");

    return g;
}

bool Graph::adjacent(int u, int v) const
{
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

DistanceInfo distances(const Graph& g)
{
    DistanceInfo info;
    info.n = g.order();
    const auto n = static_cast<std::size_t>(g.order());
    info.dist.resize(n * n);
    for (int s = 0; s < g.order(); ++s) {
        auto row = bfs_from(g, s);
        std::copy(row.begin(), row.end(), info.dist.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(s) * n));
        info.diameter = std::max(info.diameter, *std::max_element(row.begin(), row.end()));
    }
    return info;
}

Graph power_graph(const Graph& g, const DistanceInfo& dist, int k)
{
    if (k < 1)
        throw Error(ErrorCode::InvalidParameters, "power graph needs k >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (dist.at(u, v) <= k)
                edges.push_back({u, v});
    return Graph::from_edge_list(edges, g.order());
}

Graph power_graph(const Graph& g, int k)
{
    if (k == 1)
        return g;
    return power_graph(g, distances(g), k);
}

std::optional<int> is_regular(const Graph& g)
{
    return g.regular_degree();
}

bool is_bipartite(const Graph& g)
{
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> queue{0};
    colour[0] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            auto& cw = colour[static_cast<std::size_t>(w)];
            if (cw < 0) {
                cw = 1 - colour[static_cast<std::size_t>(u)];
                queue.push_back(w);
            } else if (cw == colour[static_cast<std::size_t>(u)]) {
                return false;
            }
        }
    }
    return true;
}

} // namespace kindep
