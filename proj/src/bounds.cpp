#include "kindep/bounds.hpp"

#include "kindep/polybasis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kindep {

namespace {

constexpr double rel_tol = 1e-9;
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

double slack(double a, double b = 0.0)
{
    return rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
}

BoundReport not_applicable(std::string name, ErrorCode code, std::string reason)
{
    BoundReport r;
    r.name = std::move(name);
    r.raw = nan;
    r.floored = 0;
    r.applicable = false;
    r.failure = code;
    r.reason = std::move(reason);
    return r;
}

BoundReport make_report(std::string name, double raw, int n, Witness witness)
{
    BoundReport r;
    r.name = std::move(name);
    if (!std::isfinite(raw))
        return not_applicable(r.name, ErrorCode::NotApplicable, "bound evaluates to a non-finite value");
    r.raw = raw;
    r.floored = floor_bound(raw, n);
    r.applicable = true;
    r.witness = std::move(witness);
    return r;
}

// sum_{j=from}^{k} x^j
double power_sum(double x, int from, int k)
{
    double total = 0.0;
    double term = std::pow(x, from);
    for (int j = from; j <= k; ++j) {
        total += term;
        term *= x;
    }
    return total;
}

// p evaluated at every distinct eigenvalue, in order theta_0..theta_d.
std::vector<double> values_on_spectrum(const Spectrum& s, const Poly& p)
{
    std::vector<double> v;
    for (int i = 0; i <= s.d(); ++i)
        v.push_back(p(s.theta(i)));
    return v;
}

std::optional<BoundReport> require_regular(const BoundContext& ctx, const std::string& name)
{
    if (!ctx.degree())
        return not_applicable(name, ErrorCode::NotRegular, "graph is not regular");
    if (ctx.spectrum().d() < 1)
        return not_applicable(name, ErrorCode::InvalidSpectrum, "spectrum has a single eigenvalue");
    return std::nullopt;
}

std::optional<BoundReport> require_power(const BoundContext& ctx, const std::string& name, int degree)
{
    if (degree > ctx.diag().max_power())
        return not_applicable(name, ErrorCode::InvalidDegree,
            "degree " + std::to_string(degree) + " exceeds tabulated walk length " + std::to_string(ctx.diag().max_power()));
    return std::nullopt;
}

} // namespace

std::int64_t floor_bound(double raw, int n)
{
    auto f = static_cast<std::int64_t>(std::floor(raw + rel_tol * std::max(1.0, std::abs(raw))));
    return std::clamp<std::int64_t>(f, 1, n);
}

std::optional<double> Witness::param(std::string_view key) const
{
    for (const auto& [name, value] : params)
        if (name == key)
            return value;
    return std::nullopt;
}

QuotientMatrix2x2 hoffman_quotient(double p_top, int n, double r, double diag_sum_over_set)
{
    QuotientMatrix2x2 q;
    q.b11 = diag_sum_over_set / r;
    q.b12 = p_top - q.b11;
    q.b21 = (r * p_top - diag_sum_over_set) / (n - r);
    q.b22 = p_top - q.b21;
    return q;
}

QuotientMatrix2x2 degree2_quotient(const Spectrum& s, int degree)
{
    const int i = degree2_index(s);
    const double a = s.theta(i);
    const double b = s.theta(i - 1);
    const double delta = degree;
    QuotientMatrix2x2 q;
    q.b11 = delta;
    q.b12 = delta * delta - (a + b + 1.0) * delta;
    q.b21 = delta + a * b;
    q.b22 = delta * delta - (a + b + 1.0) * delta - a * b;
    return q;
}

QuotientMatrix2x2 realized_quotient(const Graph& g, const Poly& p, std::span<const int> set)
{
    const int n = g.order();
    const auto N = static_cast<std::size_t>(n);
    std::vector<char> in_set(N, 0);
    for (int v : set) {
        if (v < 0 || v >= n)
            throw Error(ErrorCode::IndexOutOfRange, "partition vertex out of range");
        in_set[static_cast<std::size_t>(v)] = 1;
    }
    const auto r = static_cast<std::size_t>(std::count(in_set.begin(), in_set.end(), 1));
    if (r == 0 || r == N)
        throw Error(ErrorCode::InvalidParameters, "partition needs both parts nonempty");

    // y = p(A) x by Horner with sparse products.
    auto apply = [&](const std::vector<double>& x) {
        std::vector<double> acc(N, 0.0);
        for (int j = p.degree(); j >= 0; --j) {
            std::vector<double> next(N, 0.0);
            for (int v = 0; v < n; ++v) {
                double s = 0.0;
                for (int w : g.neighbors(v))
                    s += acc[static_cast<std::size_t>(w)];
                next[static_cast<std::size_t>(v)] = s + p.coeff(j) * x[static_cast<std::size_t>(v)];
            }
            acc = std::move(next);
        }
        return acc;
    };
    std::vector<double> ind(N), comp(N);
    for (std::size_t v = 0; v < N; ++v) {
        ind[v] = in_set[v] ? 1.0 : 0.0;
        comp[v] = 1.0 - ind[v];
    }
    const auto into_set = apply(ind);
    const auto into_comp = apply(comp);

    QuotientMatrix2x2 q;
    bool equitable = true;
    std::optional<double> first[2][2];
    for (std::size_t v = 0; v < N; ++v) {
        const int part = in_set[v] ? 0 : 1;
        const double sums[2] = {into_set[v], into_comp[v]};
        for (int t = 0; t < 2; ++t) {
            if (!first[part][t])
                first[part][t] = sums[t];
            else if (std::abs(*first[part][t] - sums[t]) > 1e-9 * std::max(1.0, std::abs(sums[t])))
                equitable = false;
        }
        if (part == 0) {
            q.b11 += sums[0];
            q.b12 += sums[1];
        } else {
            q.b21 += sums[0];
            q.b22 += sums[1];
        }
    }
    q.b11 /= static_cast<double>(r);
    q.b12 /= static_cast<double>(r);
    q.b21 /= static_cast<double>(N - r);
    q.b22 /= static_cast<double>(N - r);
    q.equitable = equitable;
    return q;
}

BoundContext::BoundContext(const Graph& g, const Spectrum& s, int max_power) : graph_(&g), spectrum_(&s)
{
    if (g.order() != s.n)
        throw Error(ErrorCode::InvalidParameters, "spectrum does not belong to this graph");
    const int base = std::max(max_power, 2);
    if (g.regular_degree() && s.d() > base) {
        try {
            diag_ = diag_powers(g, s.d());
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SizeLimitExceeded)
                throw;
        }
    }
    if (diag_.max_power() == 0)
        diag_ = diag_powers(g, base);
    walk_regular_ = g.regular_degree() && diag_.max_power() >= s.d() && is_walk_regular(diag_, s.d());
}

BoundReport cvetkovic(const BoundContext& ctx)
{
    const auto& s = ctx.spectrum();
    const double eps = slack(s.top());
    int nonneg = 0;
    int nonpos = 0;
    for (const auto& ev : s.distinct) {
        if (ev.value >= -eps)
            nonneg += ev.multiplicity;
        if (ev.value <= eps)
            nonpos += ev.multiplicity;
    }
    Witness w;
    w.poly = Poly::x();
    w.params = {{"count_nonnegative", nonneg}, {"count_nonpositive", nonpos}};
    return make_report("cvetkovic", std::min(nonneg, nonpos), ctx.order(), std::move(w));
}

BoundReport hoffman(const BoundContext& ctx)
{
    if (auto bad = require_regular(ctx, "hoffman"))
        return *bad;
    const auto& s = ctx.spectrum();
    const double smallest = s.theta(s.d());
    Witness w;
    w.poly = Poly::x();
    w.theta_indices = {0, s.d()};
    return make_report("hoffman", s.n * (-smallest) / (s.top() - smallest), s.n, std::move(w));
}

BoundReport fiol_alternating(const BoundContext& ctx, int k)
{
    const std::string name = "fiol_alternating";
    if (auto bad = require_regular(ctx, name))
        return *bad;
    const auto& s = ctx.spectrum();
    if (k < 1 || k > s.d() - 1)
        return not_applicable(name, ErrorCode::InvalidDegree, "needs 1 <= k <= d-1");
    Poly P;
    try {
        P = alternating_polynomial(s, k);
    } catch (const Error& e) {
        return not_applicable(name, e.code(), e.what());
    }
    const double top = P(s.top());
    Witness w;
    w.poly = std::move(P);
    w.params = {{"P_k(theta0)", top}};
    return make_report(name, 2.0 * s.n / (top + 1.0), s.n, std::move(w));
}

BoundReport act_cvetkovic(const BoundContext& ctx, int k)
{
    const std::string name = "act_cvetkovic";
    if (k < 1)
        return not_applicable(name, ErrorCode::InvalidDegree, "needs k >= 1");
    if (auto bad = require_power(ctx, name, k))
        return *bad;
    const auto& s = ctx.spectrum();
    const auto wk = static_cast<double>(ctx.diag().min(k));
    const auto Wk = static_cast<double>(ctx.diag().max(k));
    int ge = 0;
    int le = 0;
    for (const auto& ev : s.distinct) {
        const double v = std::pow(ev.value, k);
        if (v >= wk - slack(v, wk))
            ge += ev.multiplicity;
        if (v <= Wk + slack(v, Wk))
            le += ev.multiplicity;
    }
    Witness w;
    w.poly = Poly::monomial(k);
    w.params = {{"w_k", wk}, {"W_k", Wk}, {"count_ge_w", ge}, {"count_le_W", le}};
    return make_report(name, std::min(ge, le), s.n, std::move(w));
}

BoundReport act_hoffman(const BoundContext& ctx, int k)
{
    const std::string name = "act_hoffman";
    if (auto bad = require_regular(ctx, name))
        return *bad;
    if (k < 1)
        return not_applicable(name, ErrorCode::InvalidDegree, "needs k >= 1");
    if (auto bad = require_power(ctx, name, k))
        return *bad;
    const auto& s = ctx.spectrum();
    const double delta = *ctx.degree();
    const double theta = std::max(std::abs(s.theta(1)), std::abs(s.theta(s.d())));
    const auto Wt = static_cast<double>(ctx.diag().max_sum(1, k));
    const double theta_sum = power_sum(theta, 1, k);
    Witness w;
    w.poly = sum_power_poly(k) + Poly::constant(theta_sum);
    w.params = {{"W_tilde", Wt}, {"theta", theta}};
    return make_report(name, s.n * (Wt + theta_sum) / (power_sum(delta, 1, k) + theta_sum), s.n, std::move(w));
}

BoundReport gen_cvetkovic(const BoundContext& ctx, const Poly& p)
{
    const std::string name = "gen_cvetkovic";
    if (auto bad = require_power(ctx, name, p.degree()))
        return *bad;
    const auto& s = ctx.spectrum();
    const auto stats = poly_stats(ctx.diag(), s, p);
    const auto values = values_on_spectrum(s, p);
    int ge = 0;
    int le = 0;
    for (int i = 0; i <= s.d(); ++i) {
        const double v = values[static_cast<std::size_t>(i)];
        if (v >= stats.w - slack(v, stats.w))
            ge += s.mult(i);
        if (v <= stats.W + slack(v, stats.W))
            le += s.mult(i);
    }
    Witness w;
    w.poly = p;
    w.stats = stats;
    w.params = {{"count_ge_w", ge}, {"count_le_W", le}};
    return make_report(name, std::min(ge, le), s.n, std::move(w));
}

BoundReport gen_hoffman(const BoundContext& ctx, const Poly& p)
{
    const std::string name = "gen_hoffman";
    if (auto bad = require_regular(ctx, name))
        return *bad;
    if (auto bad = require_power(ctx, name, p.degree()))
        return *bad;
    const auto& s = ctx.spectrum();
    const auto stats = poly_stats(ctx.diag(), s, p);
    if (!(stats.p_at_top > stats.lambda + slack(stats.p_at_top, stats.lambda)))
        return not_applicable(name, ErrorCode::NotApplicable, "needs p(lambda_1) > lambda(p)");
    const double raw = s.n * (stats.W - stats.lambda) / (stats.p_at_top - stats.lambda);
    Witness w;
    w.poly = p;
    w.stats = stats;
    auto report = make_report(name, raw, s.n, std::move(w));
    if (report.applicable && report.floored < s.n) {
        const auto r = static_cast<double>(report.floored);
        report.witness.quotient = hoffman_quotient(stats.p_at_top, s.n, r, r * stats.W);
    }
    return report;
}

BoundReport degree2(const BoundContext& ctx)
{
    const std::string name = "degree2";
    if (auto bad = require_regular(ctx, name))
        return *bad;
    const auto& s = ctx.spectrum();
    if (s.d() < 2)
        return not_applicable(name, ErrorCode::InvalidSpectrum, "needs d >= 2");
    int i = 0;
    try {
        i = degree2_index(s);
    } catch (const Error& e) {
        return not_applicable(name, e.code(), e.what());
    }
    const double t0 = s.top();
    const double a = s.theta(i);
    const double b = s.theta(i - 1);
    Witness w;
    w.poly = optimal_degree2(s);
    w.theta_indices = {i - 1, i};
    w.quotient = degree2_quotient(s, *ctx.degree());
    return make_report(name, s.n * (t0 + a * b) / ((t0 - a) * (t0 - b)), s.n, std::move(w));
}

BoundReport cor_pos(const BoundContext& ctx, const Poly& p)
{
    const std::string name = "cor_pos";
    if (auto bad = require_regular(ctx, name))
        return *bad;
    if (auto bad = require_power(ctx, name, p.degree()))
        return *bad;
    const auto& s = ctx.spectrum();
    const auto values = values_on_spectrum(s, p);
    const double scale = *std::max_element(values.begin(), values.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
    for (double v : values)
        if (v < -slack(scale))
            return not_applicable(name, ErrorCode::NotApplicable, "p is negative on the spectrum");
    const auto stats = poly_stats(ctx.diag(), s, p);
    if (!(stats.p_at_top > 0.0))
        return not_applicable(name, ErrorCode::NotApplicable, "needs p(lambda_1) > 0");
    Witness w;
    w.poly = p;
    w.stats = stats;
    return make_report(name, s.n * stats.W / stats.p_at_top, s.n, std::move(w));
}

BoundReport general_k(const BoundContext& ctx, int k, SumConvention convention)
{
    const std::string name = "general_k";
    if (auto bad = require_regular(ctx, name))
        return *bad;
    if (k < 1)
        return not_applicable(name, ErrorCode::InvalidDegree, "needs k >= 1");
    if (auto bad = require_power(ctx, name, k))
        return *bad;
    const auto& s = ctx.spectrum();
    const double delta = *ctx.degree();
    const double smallest = s.theta(s.d());
    const auto Wk = static_cast<double>(ctx.diag().max_sum(1, k));
    const int from = convention == SumConvention::FromOne ? 1 : 0;
    Witness w;
    w.poly = sum_power_poly(k);
    w.params = {{"W_k", Wk}};
    double raw = 0.0;
    if (k % 2 == 1) {
        const double low = power_sum(smallest, from, k);
        w.params.emplace_back("lambda(p)", power_sum(smallest, 1, k));
        raw = s.n * (Wk - low) / (power_sum(delta, from, k) - low);
    } else {
        raw = s.n * (Wk + 0.5) / (power_sum(delta, from, k) + 0.5);
    }
    return make_report(name, raw, s.n, std::move(w));
}

BoundReport walk_regular(const BoundContext& ctx, int k)
{
    const std::string name = "walk_regular";
    if (auto bad = require_regular(ctx, name))
        return *bad;
    if (!ctx.walk_regular())
        return not_applicable(name, ErrorCode::NotWalkRegular, "graph is not walk-regular");
    const auto& s = ctx.spectrum();
    if (k < 1 || k > s.d())
        return not_applicable(name, ErrorCode::InvalidDegree, "needs 1 <= k <= d");
    std::optional<PredistanceFamily> family;
    try {
        family = predistance_family(s);
    } catch (const Error& e) {
        return not_applicable(name, e.code(), e.what());
    }
    const auto& q = family->sum_values[static_cast<std::size_t>(k)];
    const double q_top = q[0];
    const double lambda = *std::min_element(q.begin() + 1, q.end());
    const Poly& qk = family->sums[static_cast<std::size_t>(k)];

    Witness w;
    w.poly = qk;
    w.params = {{"q_k(delta)", q_top}, {"lambda(q_k)", lambda}};
    // On a walk-regular graph q_k(A) has constant diagonal (1/n) tr q_k(A) = 1.
    if (qk.degree() <= ctx.diag().max_power()) {
        const double W = poly_stats(ctx.diag(), s, qk).W;
        double scale = 0.0;
        for (int l = 0; l <= qk.degree(); ++l)
            scale += std::abs(qk.coeff(l)) * static_cast<double>(ctx.diag().max(l));
        w.params.emplace_back("W(q_k)", W);
        if (std::abs(W - 1.0) > 1e-8 * scale + 1e-9)
            return not_applicable(name, ErrorCode::NotApplicable, "W(q_k) deviates from 1");
    }
    return make_report(name, s.n * (1.0 - lambda) / (q_top - lambda), s.n, std::move(w));
}

BoundReport antipodal(const BoundContext& ctx, const Poly& P)
{
    const std::string name = "antipodal";
    if (auto bad = require_regular(ctx, name))
        return *bad;
    const auto& s = ctx.spectrum();
    PolyStats stats;
    stats.p_at_top = P(s.top());
    stats.Lambda = -std::numeric_limits<double>::infinity();
    stats.lambda = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= s.d(); ++i) {
        stats.Lambda = std::max(stats.Lambda, P(s.theta(i)));
        stats.lambda = std::min(stats.lambda, P(s.theta(i)));
    }
    stats.W = stats.w = nan;
    if (stats.p_at_top < stats.Lambda - slack(stats.p_at_top, stats.Lambda))
        return not_applicable(name, ErrorCode::NotApplicable, "needs P(lambda_1) >= Lambda(P)");
    if (!(stats.p_at_top > stats.lambda + slack(stats.p_at_top, stats.lambda)))
        return not_applicable(name, ErrorCode::NotApplicable, "needs P(lambda_1) > lambda(P)");
    Witness w;
    w.poly = P;
    w.stats = stats;
    return make_report(name, s.n * (stats.Lambda - stats.lambda) / (stats.p_at_top - stats.lambda), s.n, std::move(w));
}

Poly antipodal_scaled(const BoundContext& ctx, const Poly& P, int r)
{
    const auto& s = ctx.spectrum();
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= s.d(); ++i) {
        hi = std::max(hi, P(s.theta(i)));
        lo = std::min(lo, P(s.theta(i)));
    }
    if (!(hi > lo))
        throw Error(ErrorCode::HypothesesViolated, "P is constant on the nontrivial eigenvalues");
    const double scale = r / (hi - lo);
    return P * scale - Poly::constant(r * lo / (hi - lo) + 1.0);
}

BoundReport thm3_raw(const BoundContext& ctx, const Poly& p, int r)
{
    const std::string name = "thm3_raw";
    if (auto bad = require_regular(ctx, name))
        return *bad;
    const auto& s = ctx.spectrum();
    if (r < 1)
        return not_applicable(name, ErrorCode::HypothesesViolated, "needs r >= 1");
    PolyStats stats;
    stats.p_at_top = p(s.top());
    stats.Lambda = -std::numeric_limits<double>::infinity();
    stats.lambda = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= s.d(); ++i) {
        stats.Lambda = std::max(stats.Lambda, p(s.theta(i)));
        stats.lambda = std::min(stats.lambda, p(s.theta(i)));
    }
    stats.W = stats.w = nan;
    const double eps = slack(stats.p_at_top, stats.Lambda);
    if (!(stats.Lambda > 0.0))
        return not_applicable(name, ErrorCode::HypothesesViolated, "needs Lambda(p) > 0");
    if (!(stats.lambda < 0.0))
        return not_applicable(name, ErrorCode::HypothesesViolated, "needs lambda(p) < 0");
    if (stats.p_at_top < stats.Lambda - eps)
        return not_applicable(name, ErrorCode::HypothesesViolated, "needs p(lambda_1) >= Lambda(p)");
    if (stats.Lambda < std::abs(stats.lambda) * (r - 1) - eps)
        return not_applicable(name, ErrorCode::HypothesesViolated, "needs Lambda(p) >= |lambda(p)| (r-1)");
    Witness w;
    w.poly = p;
    w.stats = stats;
    w.params = {{"r", r}};
    return make_report(name, 1.0 + stats.Lambda / stats.p_at_top * (s.n - 1), s.n, std::move(w));
}

DiameterClaim diameter_degree2(const BoundContext& ctx)
{
    DiameterClaim claim;
    const auto report = degree2(ctx);
    if (!report.applicable) {
        claim.reason = report.reason;
        return claim;
    }
    claim.applicable = true;
    claim.statistic = report.raw;
    claim.max_diameter = 2;
    claim.fires = report.raw < 2.0 - slack(report.raw);
    return claim;
}

DiameterClaim diameter_alternating(const BoundContext& ctx, int k)
{
    DiameterClaim claim;
    if (!ctx.degree()) {
        claim.reason = "graph is not regular";
        return claim;
    }
    const auto& s = ctx.spectrum();
    if (k < 1 || k > s.d() - 1) {
        claim.reason = "needs 1 <= k <= d-1";
        return claim;
    }
    double top = 0.0;
    try {
        top = alternating_polynomial(s, k)(s.top());
    } catch (const Error& e) {
        claim.reason = e.what();
        return claim;
    }
    const double threshold = s.n - 1.0;
    claim.applicable = true;
    claim.statistic = top;
    claim.max_diameter = k;
    claim.fires = top > threshold + slack(threshold);
    return claim;
}

std::vector<BoundReport> all_bounds(const BoundContext& ctx, int k)
{
    std::vector<BoundReport> out;
    out.push_back(cvetkovic(ctx));
    out.push_back(hoffman(ctx));
    out.push_back(act_cvetkovic(ctx, k));
    out.push_back(act_hoffman(ctx, k));
    out.push_back(general_k(ctx, k));
    out.push_back(fiol_alternating(ctx, k));
    if (k >= 2)
        out.push_back(degree2(ctx));
    out.push_back(walk_regular(ctx, k));
    return out;
}

BoundReport best_bound(const BoundContext& ctx, int k)
{
    std::optional<BoundReport> best;
    for (auto& r : all_bounds(ctx, k))
        if (r.applicable && (!best || r.floored < best->floored))
            best = std::move(r);
    if (!best) {
        // alpha_k <= n always holds.
        Witness w;
        return make_report("trivial", ctx.order(), ctx.order(), std::move(w));
    }
    return *best;
}

} // namespace kindep
