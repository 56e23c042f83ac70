#pragma once

#include "kindep/poly.hpp"
#include "kindep/spectrum.hpp"

#include <span>
#include <vector>

namespace kindep {

// <f,g>_G = (1/n) sum_i m_i f(theta_i) g(theta_i)
double inner_product_G(const Poly& f, const Poly& g, const Spectrum& s);

// <f,g>_[G] = (1/n) sum_{i=1..d} m_i (theta_0 - theta_i) f(theta_i) g(theta_i)
// The i = 0 term vanishes, so this is also the sum over 0..d.
double inner_product_bracket(const Poly& f, const Poly& g, const Spectrum& s);

// Predistance polynomials p_0..p_d, orthogonal under <,>_G with
// ||p_i||^2 = p_i(theta_0), and their partial sums q_i = p_0 + ... + p_i.
//
// Values at the distinct eigenvalues are carried alongside the monomial
// coefficients and are the accurate representation; evaluating the
// monomial form at large eigenvalues loses digits through cancellation.
struct PredistanceFamily {
    std::vector<Poly> polys;
    std::vector<Poly> sums;
    std::vector<std::vector<double>> poly_values; // poly_values[i][j] = p_i(theta_j)
    std::vector<std::vector<double>> sum_values;  // sum_values[i][j] = q_i(theta_j)

    double p_top(int i) const { return poly_values[static_cast<std::size_t>(i)][0]; }
    double q_top(int i) const { return sum_values[static_cast<std::size_t>(i)][0]; }
};

// Gram-Schmidt on the Krylov sequence 1, x p_0, x p_1, ... with a second
// projection pass. Throws Error{DegenerateSpectrum} when d < 1 or the
// sequence loses rank numerically.
PredistanceFamily predistance_family(const Spectrum& s);

// Degree-<=k polynomial maximising P(theta_0) subject to |P(theta_i)| <= 1
// for i = 1..d. The LP is posed in the Chebyshev basis of the variable
// mapped from [theta_d, theta_0] onto [-1, 1].
//
// `constraint_order`, when given, is a permutation of 0..d-1 fixing the
// order in which the eigenvalue constraints enter the tableau.
// Throws Error{InvalidDegree} unless 1 <= k <= d-1.
Poly alternating_polynomial(const Spectrum& s, int k, std::span<const int> constraint_order = {});

// Index i of the largest theta_i <= -1 (ties within 1e-9 count as <= -1).
// Throws Error{InvalidSpectrum} if d < 2 or no 1 <= i qualifies.
int degree2_index(const Spectrum& s);

// x^2 - (theta_i + theta_{i-1}) x for i = degree2_index(s).
Poly optimal_degree2(const Spectrum& s);

} // namespace kindep
