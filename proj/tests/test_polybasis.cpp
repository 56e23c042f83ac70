#include "support.hpp"

#include "kindep/error.hpp"
#include "kindep/generators.hpp"
#include "kindep/lp.hpp"
#include "kindep/poly.hpp"
#include "kindep/polybasis.hpp"
#include "kindep/spectrum.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace kindep;

namespace {

Spectrum johnson_14_7()
{
    return Spectrum::from_distinct({{49, 1}, {35, 13}, {23, 77}, {13, 273}, {5, 637}, {-1, 1001}, {-5, 1001}, {-7, 429}});
}

Spectrum bdm_spectrum(int k)
{
    return Spectrum::from_distinct({{double(k), 1}, {1, k}, {-1, k}, {double(-k), 1}});
}

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::NotApplicable;
}

// LP optimum of the alternating problem by vertex enumeration, posed in the
// scaled monomial basis (x / theta_0)^j.
double alternating_optimum_by_vertices(const Spectrum& s, int k)
{
    const double t0 = s.top();
    auto row = [&](double x) {
        std::vector<double> r;
        for (int j = 0; j <= k; ++j)
            r.push_back(std::pow(x / t0, j));
        return r;
    };
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (int i = 1; i <= s.d(); ++i) {
        auto r = row(s.theta(i));
        rows.push_back(r);
        for (double& v : r)
            v = -v;
        rows.push_back(r);
        rhs.push_back(1.0);
        rhs.push_back(1.0);
    }
    return kindep::testing::lp_by_vertices(row(t0), rows, rhs);
}

} // namespace

TEST_CASE("Poly basics")
{
    const Poly p({1.0, -2.0, 0.0, 3.0});
    CHECK(p.degree() == 3);
    CHECK(p(2.0) == doctest::Approx(1 - 4 + 24));
    CHECK(Poly({1.0, 2.0, 0.0, 0.0}).degree() == 1);
    CHECK(Poly().degree() == -1);
    CHECK(Poly().is_zero());
    CHECK(Poly()(5.0) == 0.0);
    CHECK(Poly::constant(0.0).is_zero());
    CHECK(Poly::x()(7.0) == 7.0);
    CHECK(Poly::monomial(3, 2.0)(2.0) == 16.0);
    CHECK(p.coeff(10) == 0.0);
    CHECK(p.coeff(-1) == 0.0);

    const Poly q({0.0, 1.0});
    CHECK((p + q) == Poly({1.0, -1.0, 0.0, 3.0}));
    CHECK((p - p).is_zero());
    CHECK((q * q) == Poly::monomial(2));
    CHECK((p * 2.0) == Poly({2.0, -4.0, 0.0, 6.0}));
    CHECK((-q) == Poly({0.0, -1.0}));
    CHECK((p * Poly()).is_zero());
    const Poly r = (p + q) * (p - q);
    for (double x : {-1.5, 0.0, 0.7, 3.0})
        CHECK(r(x) == doctest::Approx(p(x) * p(x) - q(x) * q(x)));
}

TEST_CASE("compose_affine")
{
    const Poly p({1.0, -2.0, 0.5, 3.0});
    const Poly c = p.compose_affine(2.0, -1.0);
    for (double x : {-2.0, -0.3, 0.0, 1.0, 4.0})
        CHECK(c(x) == doctest::Approx(p(2.0 * x - 1.0)));
    CHECK(Poly().compose_affine(3.0, 1.0).is_zero());
}

TEST_CASE("Chebyshev polynomials")
{
    CHECK(chebyshev_t(0) == Poly::constant(1.0));
    CHECK(chebyshev_t(1) == Poly::x());
    CHECK(chebyshev_t(2) == Poly({-1.0, 0.0, 2.0}));
    CHECK(chebyshev_t(3) == Poly({0.0, -3.0, 0.0, 4.0}));
    for (int j = 0; j <= 9; ++j)
        for (double t : {0.0, 0.4, 1.1, 2.5})
            CHECK(chebyshev_t(j)(std::cos(t)) == doctest::Approx(std::cos(j * t)).epsilon(1e-12));

    const std::vector<double> cheb{0.5, -1.0, 2.0};
    const Poly p = from_chebyshev(cheb, 0.5, 0.25);
    for (double x : {-3.0, 0.0, 1.0, 2.0}) {
        const double y = 0.5 * x + 0.25;
        CHECK(p(x) == doctest::Approx(0.5 - y + 2.0 * (2 * y * y - 1)));
    }
}

TEST_CASE("sum_power_poly")
{
    CHECK(sum_power_poly(1) == Poly::x());
    CHECK(sum_power_poly(3) == Poly({0.0, 1.0, 1.0, 1.0}));
    // Increasing for odd k, so the minimum over the spectrum sits at theta_d.
    const Spectrum s = johnson_14_7();
    for (int k : {1, 3, 5, 7}) {
        double lo = 1e300;
        for (int i = 1; i <= s.d(); ++i)
            lo = std::min(lo, sum_power_poly(k)(s.theta(i)));
        CHECK(lo == sum_power_poly(k)(s.theta(s.d())));
    }
}

TEST_CASE("format_poly")
{
    CHECK(format_poly(Poly({1.0, -0.5, 2.0})) == "[1, -0.5, 2]");
    CHECK(format_poly(Poly()) == "[]");
}

TEST_CASE("inner products")
{
    const Spectrum s = eigendecompose(named("petersen"));
    CHECK(inner_product_G(Poly::constant(1), Poly::constant(1), s) == doctest::Approx(1));
    CHECK(std::abs(inner_product_G(Poly::x(), Poly::constant(1), s)) < 1e-12);
    CHECK(inner_product_G(Poly::x(), Poly::x(), s) == doctest::Approx(3));

    double expected = 0.0;
    for (int i = 1; i <= s.d(); ++i)
        expected += s.mult(i) * (s.top() - s.theta(i));
    expected /= s.n;
    CHECK(inner_product_bracket(Poly::constant(1), Poly::constant(1), s) == doctest::Approx(expected));
    // Regular with zero trace: sum m_i (theta_0 - theta_i) = n theta_0.
    CHECK(inner_product_bracket(Poly::constant(1), Poly::constant(1), s) == doctest::Approx(3));

    // The theta_0 term has zero weight: a polynomial vanishing at theta_1..theta_d
    // has zero bracket norm whatever its value at theta_0.
    const Spectrum three = Spectrum::from_distinct({{3, 1}, {1, 5}, {-2, 4}});
    const Poly bump = Poly({-1.0, 1.0}) * Poly({2.0, 1.0});
    CHECK(bump(3.0) == doctest::Approx(10));
    CHECK(std::abs(inner_product_bracket(bump, bump, three)) < 1e-12);
}

TEST_CASE("predistance polynomials")
{
    const Spectrum s = johnson_14_7();
    const auto f = predistance_family(s);
    REQUIRE(f.polys.size() == 8);
    CHECK(f.polys[0] == Poly::constant(1.0));
    CHECK(f.polys[1].degree() == 1);
    CHECK(f.polys[1].coeff(1) == doctest::Approx(1.0));
    CHECK(std::abs(f.polys[1].coeff(0)) < 1e-12);

    const double expected_q[] = {1, 50, 491, 1716, 2941, 3382, 3431, 3432};
    for (int i = 0; i <= 7; ++i) {
        CAPTURE(i);
        CHECK(f.q_top(i) == doctest::Approx(expected_q[i]).epsilon(1e-9));
        CHECK(f.p_top(i) > 0);
        CHECK(f.polys[static_cast<std::size_t>(i)].degree() == i);
    }
    const double expected_min[] = {-6, -15, -40, -75, -24, -1};
    for (int k = 1; k <= 6; ++k) {
        const auto& q = f.sum_values[static_cast<std::size_t>(k)];
        CHECK(*std::min_element(q.begin() + 1, q.end()) == doctest::Approx(expected_min[k - 1]).epsilon(1e-9));
    }

    double scale = 0.0;
    for (int i = 0; i <= 7; ++i)
        scale = std::max(scale, f.p_top(i));
    std::vector<Poly> p = f.polys;
    for (int i = 0; i <= 7; ++i) {
        // Value-space norms carry the accurate normalisation.
        double norm = 0.0;
        for (int j = 0; j <= 7; ++j)
            norm += s.mult(j) * f.poly_values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                * f.poly_values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        CHECK(norm / s.n == doctest::Approx(f.p_top(i)).epsilon(1e-8));
        for (int j = 0; j < i; ++j)
            CHECK(std::abs(inner_product_G(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)], s)) <= 1e-8 * scale);
    }

    // Sum polynomials are orthogonal under the bracket product.
    for (int k = 1; k <= 6; ++k)
        CHECK(std::abs(inner_product_bracket(Poly::constant(1), f.sums[static_cast<std::size_t>(k)], s)) <= 1e-8 * 3432);

    CHECK(code_of([] { predistance_family(Spectrum::from_distinct({{0, 1}})); }) == ErrorCode::DegenerateSpectrum);
}

TEST_CASE("predistance polynomials of a regular graph start with 1, x")
{
    for (const char* name : {"petersen", "heawood", "icosahedron"}) {
        const auto f = predistance_family(eigendecompose(named(name)));
        CHECK(f.polys[0] == Poly::constant(1.0));
        CHECK(f.polys[1].coeff(1) == doctest::Approx(1.0));
        CHECK(std::abs(f.polys[1].coeff(0)) < 1e-9);
        // Distance-regular: q_d(theta_0) = n.
        CHECK(f.q_top(static_cast<int>(f.polys.size()) - 1) == doctest::Approx(named(name).order()));
    }
}

TEST_CASE("lp::maximize_free")
{
    // max x + y  s.t.  x <= 2, y <= 3, x + y <= 4, -x <= 0, -y <= 0
    const std::vector<double> c{1.0, 1.0};
    const std::vector<std::vector<double>> rows{{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}};
    const std::vector<double> rhs{2, 3, 4, 0, 0};
    const auto sol = lp::maximize_free(c, rows, rhs);
    CHECK(sol.objective == doctest::Approx(4));
    CHECK(sol.objective == doctest::Approx(kindep::testing::lp_by_vertices(c, rows, rhs)));

    // Free variables can go negative.
    const std::vector<double> c2{-1.0};
    const std::vector<std::vector<double>> rows2{{-1.0}, {1.0}};
    const std::vector<double> rhs2{5.0, 1.0};
    const auto neg = lp::maximize_free(c2, rows2, rhs2);
    CHECK(neg.x[0] == doctest::Approx(-5));

    const std::vector<std::vector<double>> open{{1.0}};
    const std::vector<double> one{1.0};
    CHECK(code_of([&] { lp::maximize_free(c2, open, one); }) == ErrorCode::LPNumericalFailure);
    const std::vector<double> bad{-1.0};
    CHECK(code_of([&] { lp::maximize_free(c2, open, bad); }) == ErrorCode::InvalidParameters);
    const std::vector<std::vector<double>> wide{{1.0, 2.0}};
    CHECK(code_of([&] { lp::maximize_free(c2, wide, one); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("lp::maximize_free against vertex enumeration")
{
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t nv = 2 + static_cast<std::size_t>(trial % 3);
        std::vector<std::vector<double>> rows;
        std::vector<double> rhs;
        // Box rows keep the LP bounded.
        for (std::size_t j = 0; j < nv; ++j) {
            std::vector<double> r(nv, 0.0);
            r[j] = 1.0;
            rows.push_back(r);
            r[j] = -1.0;
            rows.push_back(r);
            rhs.push_back(2.0);
            rhs.push_back(2.0);
        }
        for (int i = 0; i < 4; ++i) {
            std::vector<double> r(nv);
            for (auto& v : r)
                v = u(rng);
            rows.push_back(r);
            rhs.push_back(0.5 + u(rng) * 0.5 + 0.5);
        }
        std::vector<double> c(nv);
        for (auto& v : c)
            v = u(rng);
        const auto sol = lp::maximize_free(c, rows, rhs);
        CHECK(sol.objective == doctest::Approx(kindep::testing::lp_by_vertices(c, rows, rhs)).epsilon(1e-9));
    }
}

TEST_CASE("alternating polynomial")
{
    for (int k = 2; k <= 8; ++k) {
        const Spectrum s = bdm_spectrum(k);
        const Poly P = alternating_polynomial(s, 2);
        CHECK(P(s.top()) == doctest::Approx(2 * k + 1).epsilon(1e-9));
        CHECK(P(s.top()) == doctest::Approx(alternating_optimum_by_vertices(s, 2)).epsilon(1e-9));
    }

    const Spectrum j = johnson_14_7();
    const double expected[] = {5.0 / 3.0, 0.0, 1115.0 / 81.0, 485.0 / 9.0, 8269.0 / 25.0, 3431.0};
    for (int k = 1; k <= 6; ++k) {
        CAPTURE(k);
        const Poly P = alternating_polynomial(j, k);
        CHECK(P.degree() <= k);
        for (int i = 1; i <= j.d(); ++i)
            CHECK(std::abs(P(j.theta(i))) <= 1 + 1e-7);
        const double oracle = alternating_optimum_by_vertices(j, k);
        CHECK(P(j.top()) == doctest::Approx(oracle).epsilon(1e-7));
        if (k != 2)
            CHECK(P(j.top()) == doctest::Approx(expected[k - 1]).epsilon(1e-7));
    }

    CHECK(code_of([&] { alternating_polynomial(j, 0); }) == ErrorCode::InvalidDegree);
    CHECK(code_of([&] { alternating_polynomial(j, 7); }) == ErrorCode::InvalidDegree);
    const std::vector<int> bad_order{0, 1, 1, 3, 4, 5, 6};
    CHECK(code_of([&] { alternating_polynomial(j, 3, bad_order); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("alternating polynomial does not depend on constraint order")
{
    const Spectrum j = johnson_14_7();
    std::mt19937_64 rng(47);
    for (int k = 1; k <= 6; ++k) {
        const Poly base = alternating_polynomial(j, k);
        std::vector<int> order{0, 1, 2, 3, 4, 5, 6};
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(order.begin(), order.end(), rng);
            const Poly other = alternating_polynomial(j, k, order);
            // Compare values on the spectrum; monomial coefficients span many magnitudes.
            for (int i = 0; i <= j.d(); ++i)
                CHECK(other(j.theta(i)) == doctest::Approx(base(j.theta(i))).epsilon(1e-6).scale(1));
        }
    }
}

TEST_CASE("optimal degree-2 polynomial")
{
    CHECK(degree2_index(bdm_spectrum(4)) == 2);
    const Poly p = optimal_degree2(bdm_spectrum(4));
    CHECK(p.coeff(2) == 1.0);
    CHECK(std::abs(p.coeff(1)) < 1e-15);
    CHECK(p.coeff(0) == 0.0);

    const Poly q = optimal_degree2(Spectrum::from_distinct({{3, 1}, {1, 5}, {-2, 4}}));
    CHECK(q == Poly({0.0, 1.0, 1.0}));

    // theta_i within 1e-9 of -1 counts as <= -1.
    const Spectrum near = Spectrum::from_distinct({{3, 1}, {0.5, 3}, {-1.0 + 1e-12, 3}, {-3, 1}});
    CHECK(degree2_index(near) == 2);

    CHECK(code_of([] { optimal_degree2(Spectrum::from_distinct({{5, 1}, {-1, 5}})); }) == ErrorCode::InvalidSpectrum);
}
