#pragma once

#include "kindep/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kindep {

class Poly;

struct Eigenvalue {
    double value = 0.0;
    int multiplicity = 0;
};

// Adjacency spectrum. `distinct` is strictly decreasing (theta_0 first) and
// `full` is the sorted multiset lambda_1 >= ... >= lambda_n.
struct Spectrum {
    int n = 0;
    std::vector<Eigenvalue> distinct;
    std::vector<double> full;

    // Number of distinct eigenvalues minus one.
    int d() const noexcept { return static_cast<int>(distinct.size()) - 1; }
    double theta(int i) const { return distinct[static_cast<std::size_t>(i)].value; }
    int mult(int i) const { return distinct[static_cast<std::size_t>(i)].multiplicity; }
    double top() const { return distinct.front().value; }

    // Builds a spectrum from exactly known distinct eigenvalues.
    static Spectrum from_distinct(std::vector<Eigenvalue> values);
};

// 1e-7 * max(1, |theta_0|).
double default_grouping_tolerance(double top_eigenvalue);

// Merges neighbours closer than `tol`; each group is represented by its mean.
std::vector<Eigenvalue> group_spectrum(std::span<const double> descending, double tol);

// Full adjacency spectrum of a connected graph. Without `tol`, the default
// grouping tolerance is used. Throws Error{ConvergenceFailure} from the
// eigensolver and Error{DegenerateSpectrum} if theta_0 groups as non-simple.
Spectrum eigendecompose(const Graph& g, std::optional<double> tol = std::nullopt);

std::vector<double> adjacency_matrix(const Graph& g);

// `49^1, 35^13, ...`
std::string format_spectrum(const Spectrum& s, int precision = 6);

// Per-vertex closed walk counts: at(l, u) = (A^l)_{uu} for l = 0..max_power,
// exact in 64 bits.
class DiagonalTable {
public:
    DiagonalTable() = default;
    DiagonalTable(int n, int max_power, std::vector<std::int64_t> entries)
        : n_(n), max_power_(max_power), entries_(std::move(entries)) {}

    int order() const noexcept { return n_; }
    int max_power() const noexcept { return max_power_; }
    std::int64_t at(int power, int vertex) const
    {
        return entries_[static_cast<std::size_t>(power) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(vertex)];
    }
    std::span<const std::int64_t> row(int power) const
    {
        return std::span<const std::int64_t>(entries_).subspan(static_cast<std::size_t>(power) * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_));
    }
    std::int64_t min(int power) const;
    std::int64_t max(int power) const;
    // max_u sum_{l=from}^{to} (A^l)_{uu}
    std::int64_t max_sum(int from, int to) const;

private:
    int n_ = 0;
    int max_power_ = 0;
    std::vector<std::int64_t> entries_;
};

// Repeated sparse adjacency products from each vertex; no dense powers.
// Throws Error{SizeLimitExceeded} if a count overflows 64 bits.
DiagonalTable diag_powers(const Graph& g, int max_power);

// diag(A^l) constant over vertices for l = 0..d.
bool is_walk_regular(const Graph& g, const Spectrum& s);
bool is_walk_regular(const DiagonalTable& diag, int d);

struct PolyStats {
    double W = 0.0;        // max_u p(A)_{uu}
    double w = 0.0;        // min_u p(A)_{uu}
    double Lambda = 0.0;   // max over theta_1..theta_d of p
    double lambda = 0.0;   // min over theta_1..theta_d of p
    double p_at_top = 0.0; // p(theta_0)
};

// `diag` must cover deg p. Lambda and lambda are NaN for a one-point spectrum.
PolyStats poly_stats(const DiagonalTable& diag, const Spectrum& s, const Poly& p);
PolyStats poly_stats(const Graph& g, const Spectrum& s, const Poly& p);

} // namespace kindep
