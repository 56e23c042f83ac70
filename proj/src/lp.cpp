#include "kindep/lp.hpp"

#include "kindep/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kindep::lp {

namespace {

constexpr double pivot_tol = 1e-11;
constexpr int max_pivots = 50000;

} // namespace

Solution maximize_free(std::span<const double> c, const std::vector<std::vector<double>>& rows, std::span<const double> rhs)
{
    const std::size_t nv = c.size();
    const std::size_t m = rows.size();
    if (rhs.size() != m)
        throw Error(ErrorCode::InvalidParameters, "LP row count and rhs size differ");
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != nv)
            throw Error(ErrorCode::InvalidParameters, "LP row " + std::to_string(i) + " has wrong width");
        if (rhs[i] < 0.0)
            throw Error(ErrorCode::InvalidParameters, "LP needs a non-negative right-hand side");
    }

    // Columns: x+ (nv), x- (nv), slacks (m), rhs.
    const std::size_t cols = 2 * nv + m;
    const std::size_t width = cols + 1;
    std::vector<double> t((m + 1) * width, 0.0);
    auto cell = [&](std::size_t r, std::size_t col) -> double& { return t[r * width + col]; };
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < nv; ++j) {
            cell(i, j) = rows[i][j];
            cell(i, nv + j) = -rows[i][j];
        }
        cell(i, 2 * nv + i) = 1.0;
        cell(i, cols) = rhs[i];
        basis[i] = 2 * nv + i;
    }
    // Objective row holds reduced costs of the minimisation of -c.x.
    for (std::size_t j = 0; j < nv; ++j) {
        cell(m, j) = -c[j];
        cell(m, nv + j) = c[j];
    }

    double cost_scale = 1.0;
    for (double v : c)
        cost_scale = std::max(cost_scale, std::abs(v));

    Solution sol;
    while (true) {
        // Bland: lowest-index column with a negative reduced cost enters.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (cell(m, j) < -pivot_tol * cost_scale) {
                enter = j;
                break;
            }
        }
        if (enter == cols)
            break;

        std::size_t leave = m;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double a = cell(i, enter);
            if (a <= pivot_tol)
                continue;
            const double ratio = cell(i, cols) / a;
            if (leave == m || ratio < best_ratio - pivot_tol
                || (std::abs(ratio - best_ratio) <= pivot_tol && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m)
            throw Error(ErrorCode::LPNumericalFailure, "LP is unbounded");
        if (++sol.pivots > max_pivots)
            throw Error(ErrorCode::LPNumericalFailure, "simplex pivot cap exceeded");

        const double pivot = cell(leave, enter);
        for (std::size_t j = 0; j < width; ++j)
            cell(leave, j) /= pivot;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave)
                continue;
            const double factor = cell(i, enter);
            if (factor == 0.0)
                continue;
            for (std::size_t j = 0; j < width; ++j)
                cell(i, j) -= factor * cell(leave, j);
        }
        basis[leave] = enter;
    }

    std::vector<double> split(cols, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        split[basis[i]] = cell(i, cols);
    sol.x.resize(nv);
    for (std::size_t j = 0; j < nv; ++j)
        sol.x[j] = split[j] - split[nv + j];
    sol.objective = 0.0;
    for (std::size_t j = 0; j < nv; ++j)
        sol.objective += c[j] * sol.x[j];
    if (!std::isfinite(sol.objective))
        throw Error(ErrorCode::LPNumericalFailure, "LP produced a non-finite objective");
    return sol;
}

} // namespace kindep::lp
