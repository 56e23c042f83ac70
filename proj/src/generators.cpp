#include "kindep/generators.hpp"

#include "kindep/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <map>
#include <string>

namespace kindep {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorCode::InvalidParameters, what);
}

long long binomial(int n, int r)
{
    if (r < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    long long c = 1;
    for (int i = 1; i <= r; ++i) {
        c = c * (n - r + i) / i;
        if (c > (1LL << 40))
            return c;
    }
    return c;
}

// Colex rank of a sorted subset.
int colex_rank(const std::vector<int>& subset, const std::vector<std::vector<long long>>& binom)
{
    long long r = 0;
    for (std::size_t i = 0; i < subset.size(); ++i)
        r += binom[static_cast<std::size_t>(subset[i])][i + 1];
    return static_cast<int>(r);
}

} // namespace

Graph cycle(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return Graph::from_edge_list(edges, n);
}

Graph path(int n)
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph::from_edge_list(edges, n);
}

Graph complete(int n)
{
    require(n >= 1, "complete graph needs n >= 1");
    require(n <= johnson_vertex_limit, "complete graph too large");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph::from_edge_list(edges, n);
}

Graph complete_bipartite(int a, int b)
{
    require(a >= 1 && b >= 1, "complete bipartite graph needs both sides nonempty");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            edges.push_back({u, a + v});
    return Graph::from_edge_list(edges, a + b);
}

Graph star(int leaves)
{
    return complete_bipartite(1, leaves);
}

Graph hypercube(int dim)
{
    require(dim >= 1 && dim <= 13, "hypercube dimension must be in [1, 13]");
    const int n = 1 << dim;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < dim; ++b)
            if (int v = u ^ (1 << b); u < v)
                edges.push_back({u, v});
    return Graph::from_edge_list(edges, n);
}

Graph generalized_petersen(int n, int j)
{
    require(n >= 3, "generalized Petersen graph needs n >= 3");
    require(j >= 1 && 2 * j < n, "generalized Petersen graph needs 1 <= j < n/2");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        edges.push_back({i, n + i});
        edges.push_back({n + i, n + (i + j) % n});
    }
    return Graph::from_edge_list(edges, 2 * n);
}

Graph johnson(int v, int s)
{
    require(s >= 1 && s <= v, "Johnson graph needs 1 <= s <= v");
    const long long count = binomial(v, s);
    if (count > johnson_vertex_limit)
        throw Error(ErrorCode::SizeLimitExceeded,
            "J(" + std::to_string(v) + "," + std::to_string(s) + ") has " + std::to_string(count) + " vertices");
    const int n = static_cast<int>(count);

    std::vector<std::vector<long long>> binom(static_cast<std::size_t>(v) + 1,
        std::vector<long long>(static_cast<std::size_t>(s) + 2, 0));
    for (int a = 0; a <= v; ++a)
        for (int b = 0; b <= s + 1; ++b)
            binom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = binomial(a, b);

    // Walk subsets in colex order so that the i-th subset has rank i.
    std::vector<int> subset(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i)
        subset[static_cast<std::size_t>(i)] = i;

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(s * (v - s)) / 2);
    std::vector<char> member(static_cast<std::size_t>(v));
    for (int rank = 0; rank < n; ++rank) {
        std::fill(member.begin(), member.end(), 0);
        for (int x : subset)
            member[static_cast<std::size_t>(x)] = 1;
        for (int pos = 0; pos < s; ++pos) {
            for (int y = 0; y < v; ++y) {
                if (member[static_cast<std::size_t>(y)])
                    continue;
                auto other = subset;
                other[static_cast<std::size_t>(pos)] = y;
                std::sort(other.begin(), other.end());
                int r = colex_rank(other, binom);
                if (rank < r)
                    edges.push_back({rank, r});
            }
        }
        // Next subset in colex order.
        int i = 0;
        while (i + 1 < s && subset[static_cast<std::size_t>(i)] + 1 == subset[static_cast<std::size_t>(i) + 1]) {
            subset[static_cast<std::size_t>(i)] = i;
            ++i;
        }
        ++subset[static_cast<std::size_t>(i)];
    }
    return Graph::from_edge_list(edges, n);
}

Graph bipartite_minus_matching(int k)
{
    require(k >= 2, "bipartite-minus-matching needs k >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j)
            if (i != j)
                edges.push_back({i, k + 1 + j});
    return Graph::from_edge_list(edges, 2 * (k + 1));
}

Graph lcf(int n, std::span<const int> shifts)
{
    require(n >= 3 && !shifts.empty(), "LCF notation needs n >= 3 and at least one shift");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    for (int i = 0; i < n; ++i) {
        int shift = shifts[static_cast<std::size_t>(i) % shifts.size()];
        int j = ((i + shift) % n + n) % n;
        edges.push_back({i, j});
    }
    return Graph::from_edge_list(edges, n);
}

namespace {

Graph icosahedron()
{
    // 0 on top, upper ring 1..5, lower ring 6..10, 11 at the bottom.
    std::vector<Edge> edges;
    for (int i = 1; i <= 5; ++i) {
        edges.push_back({0, i});
        edges.push_back({i, i % 5 + 1});
        edges.push_back({5 + i, 5 + i % 5 + 1});
        edges.push_back({11, 5 + i});
        edges.push_back({i, 5 + i});
        edges.push_back({i, 5 + i % 5 + 1});
    }
    return Graph::from_edge_list(edges, 12);
}

using Factory = Graph (*)();

const std::map<std::string, Factory, std::less<>>& catalog()
{
    static const std::map<std::string, Factory, std::less<>> table{
        {"petersen", [] { return generalized_petersen(5, 2); }},
        {"heawood", [] {
             constexpr std::array<int, 2> shifts{5, -5};
             return lcf(14, shifts);
         }},
        {"pappus", [] {
             constexpr std::array<int, 6> shifts{5, 7, -7, 7, -7, -5};
             return lcf(18, shifts);
         }},
        {"desargues", [] { return generalized_petersen(10, 3); }},
        {"mobius-kantor", [] { return generalized_petersen(8, 3); }},
        {"moebius-kantor", [] { return generalized_petersen(8, 3); }},
        {"nauru", [] { return generalized_petersen(12, 5); }},
        {"dodecahedron", [] { return generalized_petersen(10, 2); }},
        {"hexahedron", [] { return hypercube(3); }},
        {"cube", [] { return hypercube(3); }},
        {"icosahedron", icosahedron},
        {"hexagon", [] { return cycle(6); }},
    };
    return table;
}

int parse_int(std::string_view text, std::string_view spec)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error(ErrorCode::Parse, "bad integer '" + std::string(text) + "' in generator spec '" + std::string(spec) + "'");
    return value;
}

} // namespace

Graph named(std::string_view name)
{
    const auto& table = catalog();
    auto it = table.find(name);
    if (it == table.end())
        throw Error(ErrorCode::UnknownName, "no named graph '" + std::string(name) + "'");
    return it->second();
}

std::vector<std::string> named_catalog()
{
    std::vector<std::string> names;
    for (const auto& [name, factory] : catalog())
        names.push_back(name);
    return names;
}

Graph from_generator_spec(std::string_view spec)
{
    const auto colon = spec.find(':');
    const std::string_view family = spec.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string_view::npos) {
        std::string_view rest = spec.substr(colon + 1);
        if (rest.empty())
            throw Error(ErrorCode::Parse, "generator spec '" + std::string(spec) + "' has no arguments after ':'");
        while (true) {
            auto comma = rest.find(',');
            args.push_back(parse_int(rest.substr(0, comma), spec));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
    }

    auto want = [&](std::size_t count) {
        if (args.size() != count)
            throw Error(ErrorCode::Parse, "generator '" + std::string(family) + "' takes " + std::to_string(count) + " argument(s)");
    };

    if (family == "johnson") {
        want(2);
        return johnson(args[0], args[1]);
    }
    if (family == "gp") {
        want(2);
        return generalized_petersen(args[0], args[1]);
    }
    if (family == "bdm") {
        want(1);
        return bipartite_minus_matching(args[0]);
    }
    if (family == "cycle") {
        want(1);
        return cycle(args[0]);
    }
    if (family == "path") {
        want(1);
        return path(args[0]);
    }
    if (family == "complete") {
        want(1);
        return complete(args[0]);
    }
    if (family == "kbip") {
        want(2);
        return complete_bipartite(args[0], args[1]);
    }
    if (family == "star") {
        want(1);
        return star(args[0]);
    }
    if (family == "hypercube") {
        want(1);
        return hypercube(args[0]);
    }
    throw Error(ErrorCode::UnknownName, "unknown generator family '" + std::string(family) + "'");
}

} // namespace kindep
