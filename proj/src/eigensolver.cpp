#include "kindep/eigensolver.hpp"

#include "kindep/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace kindep {

namespace {

constexpr int max_ql_iterations = 60;

struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off; // off[i] couples i-1 and i; off[0] unused
};

// Householder reduction of the full symmetric matrix `a` (row-major).
// Both triangles are updated so every inner loop runs along a row.
// With `want_vectors`, `a` holds the orthogonal transform on return.
Tridiagonal householder(std::vector<double>& a, int n, bool want_vectors)
{
    const auto N = static_cast<std::size_t>(n);
    auto at = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * N + static_cast<std::size_t>(c)]; };

    std::vector<double> d(N, 0.0);
    std::vector<double> e(N, 0.0);

    for (int i = n - 1; i > 0; --i) {
        const int l = i - 1;
        double h = 0.0;
        double* row_i = &at(i, 0);
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k < i; ++k)
                scale += std::abs(row_i[k]);
            if (scale == 0.0) {
                e[static_cast<std::size_t>(i)] = row_i[l];
            } else {
                for (int k = 0; k < i; ++k) {
                    row_i[k] /= scale;
                    h += row_i[k] * row_i[k];
                }
                double f = row_i[l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[static_cast<std::size_t>(i)] = scale * g;
                h -= f * g;
                row_i[l] = f - g;
                f = 0.0;
                for (int j = 0; j < i; ++j) {
                    if (want_vectors)
                        at(j, i) = row_i[j] / h;
                    const double* row_j = &at(j, 0);
                    double s = 0.0;
                    for (int k = 0; k < i; ++k)
                        s += row_j[k] * row_i[k];
                    e[static_cast<std::size_t>(j)] = s / h;
                    f += e[static_cast<std::size_t>(j)] * row_i[j];
                }
                const double hh = f / (h + h);
                for (int j = 0; j < i; ++j)
                    e[static_cast<std::size_t>(j)] -= hh * row_i[j];
                for (int j = 0; j < i; ++j) {
                    const double fj = row_i[j];
                    const double gj = e[static_cast<std::size_t>(j)];
                    double* row_j = &at(j, 0);
                    for (int k = 0; k < i; ++k)
                        row_j[k] -= fj * e[static_cast<std::size_t>(k)] + gj * row_i[k];
                }
            }
        } else {
            e[static_cast<std::size_t>(i)] = row_i[l];
        }
        d[static_cast<std::size_t>(i)] = h;
    }

    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        if (want_vectors) {
            if (d[static_cast<std::size_t>(i)] != 0.0) {
                for (int j = 0; j < i; ++j) {
                    double g = 0.0;
                    for (int k = 0; k < i; ++k)
                        g += at(i, k) * at(k, j);
                    for (int k = 0; k < i; ++k)
                        at(k, j) -= g * at(k, i);
                }
            }
            d[static_cast<std::size_t>(i)] = at(i, i);
            at(i, i) = 1.0;
            for (int j = 0; j < i; ++j)
                at(j, i) = at(i, j) = 0.0;
        } else {
            d[static_cast<std::size_t>(i)] = at(i, i);
        }
    }
    return {std::move(d), std::move(e)};
}

// Implicit-shift QL on the tridiagonal form; optionally rotates `z`.
void implicit_ql(Tridiagonal& t, int n, std::vector<double>* z)
{
    auto& d = t.diag;
    auto& e = t.off;
    const auto N = static_cast<std::size_t>(n);
    for (int i = 1; i < n; ++i)
        e[static_cast<std::size_t>(i) - 1] = e[static_cast<std::size_t>(i)];
    e[N - 1] = 0.0;

    const double eps = std::numeric_limits<double>::epsilon();
    double norm = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        norm = std::max(norm, std::abs(d[i]) + std::abs(e[i]));
    // Off-diagonals below eps |A| are negligible even next to tiny diagonal entries.
    const double floor = eps * norm;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[static_cast<std::size_t>(m)]) + std::abs(d[static_cast<std::size_t>(m) + 1]);
                if (std::abs(e[static_cast<std::size_t>(m)]) <= eps * dd + floor)
                    break;
            }
            if (m == l)
                break;
            if (iter++ == max_ql_iterations)
                throw Error(ErrorCode::ConvergenceFailure, "QL iteration did not converge for eigenvalue " + std::to_string(l));

            const auto L = static_cast<std::size_t>(l);
            double g = (d[L + 1] - d[L]) / (2.0 * e[L]);
            double r = std::hypot(g, 1.0);
            g = d[static_cast<std::size_t>(m)] - d[L] + e[L] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            int i = m - 1;
            for (; i >= l; --i) {
                const auto I = static_cast<std::size_t>(i);
                const double f = s * e[I];
                const double b = c * e[I];
                r = std::hypot(f, g);
                e[I + 1] = r;
                if (r == 0.0) {
                    d[I + 1] -= p;
                    e[static_cast<std::size_t>(m)] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[I + 1] - p;
                r = (d[I] - g) * s + 2.0 * c * b;
                p = s * r;
                d[I + 1] = g + p;
                g = c * r - b;
                if (z) {
                    auto& zz = *z;
                    for (std::size_t k = 0; k < N; ++k) {
                        const double zf = zz[k * N + I + 1];
                        zz[k * N + I + 1] = s * zz[k * N + I] + c * zf;
                        zz[k * N + I] = c * zz[k * N + I] - s * zf;
                    }
                }
            }
            if (r == 0.0 && i >= l)
                continue;
            d[L] -= p;
            e[L] = g;
            e[static_cast<std::size_t>(m)] = 0.0;
        } while (m != l);
    }
}

} // namespace

SymmetricEigen symmetric_eigen(std::vector<double> matrix, int n, bool want_vectors)
{
    if (n < 1 || matrix.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw Error(ErrorCode::InvalidParameters, "matrix size does not match n");

    SymmetricEigen result;
    result.n = n;
    Tridiagonal t = householder(matrix, n, want_vectors);
    implicit_ql(t, n, want_vectors ? &matrix : nullptr);

    std::vector<std::size_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return t.diag[a] < t.diag[b]; });

    result.values.reserve(order.size());
    for (auto idx : order)
        result.values.push_back(t.diag[idx]);
    if (want_vectors) {
        const auto N = static_cast<std::size_t>(n);
        result.vectors.resize(N * N);
        for (std::size_t row = 0; row < N; ++row)
            for (std::size_t col = 0; col < N; ++col)
                result.vectors[row * N + col] = matrix[row * N + order[col]];
    }
    return result;
}

} // namespace kindep
