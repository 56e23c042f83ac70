#include "kindep/polybasis.hpp"

#include "kindep/error.hpp"
#include "kindep/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace kindep {

double inner_product_G(const Poly& f, const Poly& g, const Spectrum& s)
{
    double acc = 0.0;
    for (int i = 0; i <= s.d(); ++i)
        acc += s.mult(i) * f(s.theta(i)) * g(s.theta(i));
    return acc / s.n;
}

double inner_product_bracket(const Poly& f, const Poly& g, const Spectrum& s)
{
    double acc = 0.0;
    for (int i = 1; i <= s.d(); ++i)
        acc += s.mult(i) * (s.top() - s.theta(i)) * f(s.theta(i)) * g(s.theta(i));
    return acc / s.n;
}

namespace {

struct Tracked {
    Poly poly;
    std::vector<double> values;
};

double weighted_dot(const std::vector<double>& a, const std::vector<double>& b, const Spectrum& s)
{
    double acc = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        acc += s.distinct[j].multiplicity * a[j] * b[j];
    return acc / s.n;
}

void project_out(Tracked& r, const std::vector<Tracked>& basis, const Spectrum& s)
{
    for (const auto& p : basis) {
        const double coef = weighted_dot(r.values, p.values, s) / weighted_dot(p.values, p.values, s);
        r.poly -= p.poly * coef;
        for (std::size_t j = 0; j < r.values.size(); ++j)
            r.values[j] -= coef * p.values[j];
    }
}

} // namespace

PredistanceFamily predistance_family(const Spectrum& s)
{
    const int d = s.d();
    if (d < 1)
        throw Error(ErrorCode::DegenerateSpectrum, "predistance polynomials need at least two distinct eigenvalues");
    const auto points = static_cast<std::size_t>(d) + 1;

    std::vector<Tracked> family;
    family.push_back({Poly::constant(1.0), std::vector<double>(points, 1.0)});
    for (int i = 1; i <= d; ++i) {
        const Tracked& prev = family.back();
        Tracked r{Poly::x() * prev.poly, prev.values};
        for (std::size_t j = 0; j < points; ++j)
            r.values[j] *= s.distinct[j].value;
        const double start_norm = weighted_dot(r.values, r.values, s);

        project_out(r, family, s);
        project_out(r, family, s);

        const double norm = weighted_dot(r.values, r.values, s);
        if (!(norm > 1e-24 * start_norm) || r.values[0] == 0.0)
            throw Error(ErrorCode::DegenerateSpectrum, "Gram-Schmidt lost rank at degree " + std::to_string(i));
        // ||c r||^2 = c r(theta_0)  =>  c = r(theta_0) / ||r||^2, which also makes p_i(theta_0) > 0.
        const double c = r.values[0] / norm;
        r.poly *= c;
        for (double& v : r.values)
            v *= c;
        family.push_back(std::move(r));
    }

    PredistanceFamily out;
    Poly running;
    std::vector<double> running_values(points, 0.0);
    for (auto& p : family) {
        running += p.poly;
        for (std::size_t j = 0; j < points; ++j)
            running_values[j] += p.values[j];
        out.polys.push_back(p.poly);
        out.poly_values.push_back(p.values);
        out.sums.push_back(running);
        out.sum_values.push_back(running_values);
    }
    return out;
}

Poly alternating_polynomial(const Spectrum& s, int k, std::span<const int> constraint_order)
{
    const int d = s.d();
    if (k < 1 || k > d - 1)
        throw Error(ErrorCode::InvalidDegree,
            "alternating polynomial needs 1 <= k <= d-1 (k=" + std::to_string(k) + ", d=" + std::to_string(d) + ")");

    std::vector<int> order(static_cast<std::size_t>(d));
    if (constraint_order.empty()) {
        std::iota(order.begin(), order.end(), 0);
    } else {
        std::vector<int> check(constraint_order.begin(), constraint_order.end());
        std::sort(check.begin(), check.end());
        std::vector<int> expected(static_cast<std::size_t>(d));
        std::iota(expected.begin(), expected.end(), 0);
        if (check != expected)
            throw Error(ErrorCode::InvalidParameters, "constraint order must permute 0..d-1");
        order.assign(constraint_order.begin(), constraint_order.end());
    }

    const double lo = s.theta(d);
    const double hi = s.top();
    const double scale = 2.0 / (hi - lo);
    const double shift = -(hi + lo) / (hi - lo);
    const auto width = static_cast<std::size_t>(k) + 1;

    auto chebyshev_row = [&](double x) {
        const double y = scale * x + shift;
        std::vector<double> row(width);
        row[0] = 1.0;
        if (width > 1)
            row[1] = y;
        for (std::size_t j = 2; j < width; ++j)
            row[j] = 2.0 * y * row[j - 1] - row[j - 2];
        return row;
    };

    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (int idx : order) {
        auto row = chebyshev_row(s.theta(idx + 1));
        rows.push_back(row);
        for (double& v : row)
            v = -v;
        rows.push_back(std::move(row));
        rhs.push_back(1.0);
        rhs.push_back(1.0);
    }
    const auto objective = chebyshev_row(hi);
    const auto sol = lp::maximize_free(objective, rows, rhs);
    return from_chebyshev(sol.x, scale, shift);
}

int degree2_index(const Spectrum& s)
{
    if (s.d() < 2)
        throw Error(ErrorCode::InvalidSpectrum, "degree-2 polynomial needs at least three distinct eigenvalues");
    for (int i = 1; i <= s.d(); ++i)
        if (s.theta(i) <= -1.0 + 1e-9)
            return i;
    throw Error(ErrorCode::InvalidSpectrum, "no eigenvalue <= -1 below theta_0");
}

Poly optimal_degree2(const Spectrum& s)
{
    const int i = degree2_index(s);
    return Poly({0.0, -(s.theta(i) + s.theta(i - 1)), 1.0});
}

} // namespace kindep
