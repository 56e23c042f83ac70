#include "kindep/spectrum.hpp"

#include "kindep/eigensolver.hpp"
#include "kindep/error.hpp"
#include "kindep/poly.hpp"
#include "kindep/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kindep {

Spectrum Spectrum::from_distinct(std::vector<Eigenvalue> values)
{
    if (values.empty())
        throw Error(ErrorCode::InvalidSpectrum, "spectrum needs at least one eigenvalue");
    std::sort(values.begin(), values.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return a.value > b.value; });
    Spectrum s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].multiplicity < 1)
            throw Error(ErrorCode::InvalidSpectrum, "multiplicities must be positive");
        if (i > 0 && values[i].value == values[i - 1].value)
            throw Error(ErrorCode::InvalidSpectrum, "distinct eigenvalues repeat");
        s.n += values[i].multiplicity;
        s.full.insert(s.full.end(), static_cast<std::size_t>(values[i].multiplicity), values[i].value);
    }
    s.distinct = std::move(values);
    return s;
}

double default_grouping_tolerance(double top_eigenvalue)
{
    return 1e-7 * std::max(1.0, std::abs(top_eigenvalue));
}

std::vector<Eigenvalue> group_spectrum(std::span<const double> descending, double tol)
{
    std::vector<Eigenvalue> groups;
    double sum = 0.0;
    for (std::size_t i = 0; i < descending.size(); ++i) {
        if (i > 0 && descending[i - 1] - descending[i] <= tol) {
            sum += descending[i];
            ++groups.back().multiplicity;
        } else {
            if (!groups.empty())
                groups.back().value = sum / groups.back().multiplicity;
            groups.push_back({descending[i], 1});
            sum = descending[i];
        }
    }
    if (!groups.empty())
        groups.back().value = sum / groups.back().multiplicity;
    return groups;
}

std::vector<double> adjacency_matrix(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<double> a(n * n, 0.0);
    for (const Edge& e : g.edges()) {
        a[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = 1.0;
        a[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = 1.0;
    }
    return a;
}

Spectrum eigendecompose(const Graph& g, std::optional<double> tol)
{
    if (tol && !(*tol > 0.0))
        throw Error(ErrorCode::InvalidParameters, "grouping tolerance must be positive");
    auto eig = symmetric_eigen(adjacency_matrix(g), g.order());

    Spectrum s;
    s.n = g.order();
    s.full.assign(eig.values.rbegin(), eig.values.rend());
    const double group_tol = tol.value_or(default_grouping_tolerance(s.full.front()));
    s.distinct = group_spectrum(s.full, group_tol);
    if (s.distinct.front().multiplicity != 1)
        throw Error(ErrorCode::DegenerateSpectrum,
            "largest eigenvalue grouped with multiplicity " + std::to_string(s.distinct.front().multiplicity)
                + "; grouping tolerance too coarse");
    return s;
}

std::string format_spectrum(const Spectrum& s, int precision)
{
    std::string out;
    for (std::size_t i = 0; i < s.distinct.size(); ++i) {
        if (i)
            out += ", ";
        out += format_real_sig(s.distinct[i].value, precision);
        out += '^';
        out += std::to_string(s.distinct[i].multiplicity);
    }
    return out;
}

std::int64_t DiagonalTable::min(int power) const
{
    auto r = row(power);
    return *std::min_element(r.begin(), r.end());
}

std::int64_t DiagonalTable::max(int power) const
{
    auto r = row(power);
    return *std::max_element(r.begin(), r.end());
}

std::int64_t DiagonalTable::max_sum(int from, int to) const
{
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (int u = 0; u < n_; ++u) {
        std::int64_t total = 0;
        for (int l = from; l <= to; ++l)
            if (__builtin_add_overflow(total, at(l, u), &total))
                throw Error(ErrorCode::SizeLimitExceeded, "diagonal sum overflows 64 bits");
        best = std::max(best, total);
    }
    return best;
}

DiagonalTable diag_powers(const Graph& g, int max_power)
{
    if (max_power < 0)
        throw Error(ErrorCode::InvalidParameters, "power must be non-negative");
    const int n = g.order();
    const auto N = static_cast<std::size_t>(n);
    const int half = (max_power + 1) / 2;
    std::vector<std::int64_t> entries((static_cast<std::size_t>(max_power) + 1) * N, 0);

    // walks[j] = A^j e_u; (A^l)_{uu} = <A^a e_u, A^b e_u> with a + b = l.
    std::vector<std::vector<std::int64_t>> walks(static_cast<std::size_t>(half) + 1, std::vector<std::int64_t>(N, 0));
    auto overflow = [] { throw Error(ErrorCode::SizeLimitExceeded, "closed walk count overflows 64 bits"); };
    for (int u = 0; u < n; ++u) {
        std::fill(walks[0].begin(), walks[0].end(), 0);
        walks[0][static_cast<std::size_t>(u)] = 1;
        for (int j = 1; j <= half; ++j) {
            const auto& prev = walks[static_cast<std::size_t>(j) - 1];
            auto& cur = walks[static_cast<std::size_t>(j)];
            for (int v = 0; v < n; ++v) {
                std::int64_t acc = 0;
                for (int w : g.neighbors(v))
                    if (__builtin_add_overflow(acc, prev[static_cast<std::size_t>(w)], &acc))
                        overflow();
                cur[static_cast<std::size_t>(v)] = acc;
            }
        }
        for (int l = 0; l <= max_power; ++l) {
            const auto& x = walks[static_cast<std::size_t>(l / 2)];
            const auto& y = walks[static_cast<std::size_t>(l - l / 2)];
            std::int64_t dot = 0;
            for (std::size_t v = 0; v < N; ++v) {
                if (x[v] == 0 || y[v] == 0)
                    continue;
                std::int64_t term = 0;
                if (__builtin_mul_overflow(x[v], y[v], &term) || __builtin_add_overflow(dot, term, &dot))
                    overflow();
            }
            entries[static_cast<std::size_t>(l) * N + static_cast<std::size_t>(u)] = dot;
        }
    }
    return DiagonalTable(n, max_power, std::move(entries));
}

bool is_walk_regular(const DiagonalTable& diag, int d)
{
    const int top = std::min(d, diag.max_power());
    for (int l = 0; l <= top; ++l)
        if (diag.min(l) != diag.max(l))
            return false;
    return true;
}

bool is_walk_regular(const Graph& g, const Spectrum& s)
{
    return is_walk_regular(diag_powers(g, s.d()), s.d());
}

PolyStats poly_stats(const DiagonalTable& diag, const Spectrum& s, const Poly& p)
{
    if (p.degree() > diag.max_power())
        throw Error(ErrorCode::InvalidDegree,
            "polynomial degree " + std::to_string(p.degree()) + " exceeds tabulated power " + std::to_string(diag.max_power()));
    PolyStats stats;
    stats.W = -std::numeric_limits<double>::infinity();
    stats.w = std::numeric_limits<double>::infinity();
    for (int u = 0; u < diag.order(); ++u) {
        double value = 0.0;
        for (int l = 0; l <= p.degree(); ++l)
            value += p.coeff(l) * static_cast<double>(diag.at(l, u));
        stats.W = std::max(stats.W, value);
        stats.w = std::min(stats.w, value);
    }
    stats.p_at_top = p(s.top());
    if (s.d() < 1) {
        stats.Lambda = stats.lambda = std::numeric_limits<double>::quiet_NaN();
        return stats;
    }
    stats.Lambda = -std::numeric_limits<double>::infinity();
    stats.lambda = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= s.d(); ++i) {
        const double value = p(s.theta(i));
        stats.Lambda = std::max(stats.Lambda, value);
        stats.lambda = std::min(stats.lambda, value);
    }
    return stats;
}

PolyStats poly_stats(const Graph& g, const Spectrum& s, const Poly& p)
{
    return poly_stats(diag_powers(g, std::max(0, p.degree())), s, p);
}

} // namespace kindep
