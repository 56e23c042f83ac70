#pragma once

#include "kindep/error.hpp"
#include "kindep/graph.hpp"
#include "kindep/poly.hpp"
#include "kindep/spectrum.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kindep {

struct QuotientMatrix2x2 {
    double b11 = 0.0;
    double b12 = 0.0;
    double b21 = 0.0;
    double b22 = 0.0;
    // Set when built from an actual vertex partition: every vertex of a part
    // sees the same row sums into both parts.
    std::optional<bool> equitable;

    double row_sum(int row) const { return row == 0 ? b11 + b12 : b21 + b22; }
};

// Quotient of p(A) for the partition {U, V \ U} with |U| = r, given the
// diagonal sum of p(A) over U. Both row sums equal p(lambda_1).
QuotientMatrix2x2 hoffman_quotient(double p_top, int n, double r, double diag_sum_over_set);

// Closed form of the same quotient for the optimal degree-2 polynomial at
// r equal to the degree-2 bound.
QuotientMatrix2x2 degree2_quotient(const Spectrum& s, int degree);

// Average block row sums of p(A) for {U, V \ U}, computed from the graph.
QuotientMatrix2x2 realized_quotient(const Graph& g, const Poly& p, std::span<const int> set);

struct Witness {
    Poly poly;
    std::optional<PolyStats> stats;
    std::vector<int> theta_indices;
    std::vector<std::pair<std::string, double>> params;
    std::optional<QuotientMatrix2x2> quotient;

    std::optional<double> param(std::string_view key) const;
};

struct BoundReport {
    std::string name;
    double raw = 0.0;          // NaN when not applicable
    std::int64_t floored = 0;  // floor(raw) within 1e-9 relative, clamped to [1, n]
    bool applicable = false;
    std::string reason;        // why the bound does not apply
    std::optional<ErrorCode> failure;
    Witness witness;
};

// floor(raw + 1e-9 max(1, |raw|)), clamped to [1, n].
std::int64_t floor_bound(double raw, int n);

// Graph, spectrum and the closed-walk table shared by all bounds.
class BoundContext {
public:
    // Tabulates diag(A^l) up to max(max_power, 2); for regular graphs also up
    // to d so that walk-regularity can be decided.
    BoundContext(const Graph& g, const Spectrum& s, int max_power);

    const Graph& graph() const noexcept { return *graph_; }
    const Spectrum& spectrum() const noexcept { return *spectrum_; }
    const DiagonalTable& diag() const noexcept { return diag_; }
    int order() const noexcept { return spectrum_->n; }
    std::optional<int> degree() const noexcept { return graph_->regular_degree(); }
    bool walk_regular() const noexcept { return walk_regular_; }

private:
    const Graph* graph_;
    const Spectrum* spectrum_;
    DiagonalTable diag_;
    bool walk_regular_ = false;
};

BoundReport cvetkovic(const BoundContext& ctx);
BoundReport hoffman(const BoundContext& ctx);
BoundReport fiol_alternating(const BoundContext& ctx, int k);
BoundReport act_cvetkovic(const BoundContext& ctx, int k);
BoundReport act_hoffman(const BoundContext& ctx, int k);
BoundReport gen_cvetkovic(const BoundContext& ctx, const Poly& p);
BoundReport gen_hoffman(const BoundContext& ctx, const Poly& p);
BoundReport degree2(const BoundContext& ctx);
BoundReport cor_pos(const BoundContext& ctx, const Poly& p);

enum class SumConvention {
    // Both power sums run from j = 1, matching W_k.
    FromOne,
    // Sums from j = 0 as typeset alongside W_k over l = 1..k. Undercuts
    // alpha in small cases (k = 1 on the Petersen graph gives 2 < 4).
    AsPrinted,
};
BoundReport general_k(const BoundContext& ctx, int k, SumConvention convention = SumConvention::FromOne);

BoundReport walk_regular(const BoundContext& ctx, int k);
BoundReport antipodal(const BoundContext& ctx, const Poly& P);

// p = r/(Lambda(P) - lambda(P)) P - r lambda(P)/(Lambda(P) - lambda(P)) - 1
Poly antipodal_scaled(const BoundContext& ctx, const Poly& P, int r);
// 1 + Lambda(p)/p(lambda_1) (n - 1), when p and r meet the hypotheses.
BoundReport thm3_raw(const BoundContext& ctx, const Poly& p, int r);

struct DiameterClaim {
    bool applicable = false;
    bool fires = false;
    int max_diameter = 0;   // asserted D <= max_diameter when fires
    double statistic = 0.0; // the quantity compared against the threshold
    std::string reason;
};

// Fires when the degree-2 bound is below 2; then D <= 2.
DiameterClaim diameter_degree2(const BoundContext& ctx);
// Fires when P_k(theta_0) > n - 1; then D <= k.
DiameterClaim diameter_alternating(const BoundContext& ctx, int k);

// Every bound that applies to alpha_k, including the alpha_1 and alpha_2
// bounds for larger k (alpha_k is non-increasing in k).
std::vector<BoundReport> all_bounds(const BoundContext& ctx, int k);

// Smallest floored value among applicable bounds. Ties keep the earlier
// entry of all_bounds.
BoundReport best_bound(const BoundContext& ctx, int k);

} // namespace kindep
