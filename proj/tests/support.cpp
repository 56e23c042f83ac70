#include "support.hpp"

#include "kindep/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace kindep::testing {

Graph random_connected(std::mt19937_64& rng, int n, double p)
{
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        const int u = order[static_cast<std::size_t>(i)];
        const int v = order[static_cast<std::size_t>(pick(rng))];
        edges.push_back({u, v});
        seen.insert({std::min(u, v), std::max(u, v)});
    }
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!seen.count({u, v}) && coin(rng))
                edges.push_back({u, v});
    return Graph::from_edge_list(edges, n);
}

Graph random_regular(std::mt19937_64& rng, int n, int d)
{
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < d; ++j)
                points.push_back(v);
        std::shuffle(points.begin(), points.end(), rng);
        std::set<std::pair<int, int>> pairs;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < points.size() && ok; i += 2) {
            const int u = std::min(points[i], points[i + 1]);
            const int v = std::max(points[i], points[i + 1]);
            ok = u != v && pairs.insert({u, v}).second;
        }
        if (!ok)
            continue;
        std::vector<Edge> edges;
        for (const auto& [u, v] : pairs)
            edges.push_back({u, v});
        try {
            return Graph::from_edge_list(edges, n);
        } catch (...) {
            // disconnected; retry
        }
    }
    throw std::runtime_error("random_regular: no simple connected pairing found");
}

IntMatrix dense_adjacency(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    IntMatrix a(n, std::vector<std::int64_t>(n, 0));
    for (const auto& e : g.edges()) {
        a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
        a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    }
    return a;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t n = a.size();
    IntMatrix c(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
    return c;
}

std::vector<std::vector<std::int64_t>> dense_diag_powers(const Graph& g, int max_power)
{
    const auto n = static_cast<std::size_t>(g.order());
    const IntMatrix a = dense_adjacency(g);
    IntMatrix power(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        power[i][i] = 1;
    std::vector<std::vector<std::int64_t>> out;
    for (int l = 0; l <= max_power; ++l) {
        std::vector<std::int64_t> diag(n);
        for (std::size_t i = 0; i < n; ++i)
            diag[i] = power[i][i];
        out.push_back(std::move(diag));
        power = multiply(power, a);
    }
    return out;
}

std::vector<std::vector<int>> floyd_warshall(const Graph& g)
{
    const int n = g.order();
    const auto N = static_cast<std::size_t>(n);
    std::vector<std::vector<int>> d(N, std::vector<int>(N, n));
    for (std::size_t i = 0; i < N; ++i)
        d[i][i] = 0;
    for (const auto& e : g.edges())
        d[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = d[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

int exhaustive_alpha_k(const Graph& g, int k)
{
    const int n = g.order();
    if (n > 20)
        throw std::invalid_argument("exhaustive_alpha_k: n too large");
    const auto d = floyd_warshall(g);
    std::vector<std::uint32_t> close(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] <= k)
                close[static_cast<std::size_t>(u)] |= 1u << v;
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best)
            continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if ((mask >> u & 1u) && (close[static_cast<std::size_t>(u)] & mask))
                ok = false;
        if (ok)
            best = size;
    }
    return best;
}

bool isomorphic(const Graph& a, const Graph& b)
{
    const int n = a.order();
    if (n != b.order() || a.size() != b.size())
        return false;
    std::vector<int> da, db;
    for (int v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
        return false;

    // Map a's vertices in BFS order so each new vertex has a mapped neighbour.
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        seen[static_cast<std::size_t>(s)] = 1;
        order.push_back(s);
        for (std::size_t i = order.size() - 1; i < order.size(); ++i)
            for (int w : a.neighbors(order[i]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    order.push_back(w);
                }
    }
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == order.size())
            return true;
        const int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || db[static_cast<std::size_t>(w)] != da[static_cast<std::size_t>(v)])
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                const int u = order[i];
                ok = a.adjacent(u, v) == b.adjacent(map[static_cast<std::size_t>(u)], w);
            }
            if (!ok)
                continue;
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (extend(depth + 1))
                return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return extend(0);
}

namespace {

// Gaussian elimination with partial pivoting; nullopt if singular.
std::optional<std::vector<double>> solve(std::vector<std::vector<double>> m, std::vector<double> b)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col]))
                piv = r;
        if (std::abs(m[piv][col]) < 1e-12)
            return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const double f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        b[i] /= m[i][i];
    return b;
}

} // namespace

double lp_by_vertices(const std::vector<double>& c, const std::vector<std::vector<double>>& rows,
    const std::vector<double>& rhs)
{
    const std::size_t nv = c.size();
    const std::size_t m = rows.size();
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> pick(nv);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
        if (depth == nv) {
            std::vector<std::vector<double>> sub;
            std::vector<double> b;
            for (std::size_t i : pick) {
                sub.push_back(rows[i]);
                b.push_back(rhs[i]);
            }
            const auto x = solve(sub, b);
            if (!x)
                return;
            for (std::size_t i = 0; i < m; ++i) {
                double lhs = 0.0;
                for (std::size_t j = 0; j < nv; ++j)
                    lhs += rows[i][j] * (*x)[j];
                if (lhs > rhs[i] + 1e-9 * std::max(1.0, std::abs(rhs[i])))
                    return;
            }
            double obj = 0.0;
            for (std::size_t j = 0; j < nv; ++j)
                obj += c[j] * (*x)[j];
            best = std::max(best, obj);
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            pick[depth] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
    return best;
}

std::vector<LabelledGraph> sweep_corpus(int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<LabelledGraph> out;
    std::uniform_real_distribution<double> density(0.05, 0.6);
    for (int i = 0; i < count; ++i) {
        if (i % 2 == 1) {
            // Regular: n in [5, 14], degree 2..min(5, n-2), even degree when n is odd.
            std::uniform_int_distribution<int> pick_n(5, 14);
            int n = pick_n(rng);
            std::uniform_int_distribution<int> pick_d(2, std::min(5, n - 2));
            int d = pick_d(rng);
            if ((n * d) % 2 == 1)
                --d;
            out.push_back({"random-regular-" + std::to_string(i), random_regular(rng, n, d)});
        } else {
            std::uniform_int_distribution<int> pick_n(2, 14);
            const int n = pick_n(rng);
            out.push_back({"random-" + std::to_string(i), random_connected(rng, n, density(rng))});
        }
    }
    for (const auto& name : named_catalog()) {
        Graph g = named(name);
        if (g.order() <= 30)
            out.push_back({name, std::move(g)});
    }
    return out;
}

} // namespace kindep::testing
