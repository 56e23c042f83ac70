#pragma once

#include <span>
#include <string>
#include <vector>

namespace kindep {

// Real polynomial in the monomial basis, c_0 + c_1 x + ... + c_deg x^deg.
// Trailing zero coefficients are dropped, so the zero polynomial has no
// coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<double> coeffs);

    static Poly constant(double c);
    static Poly x();
    static Poly monomial(int degree, double coeff = 1.0);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    double coeff(int i) const noexcept
    {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : 0.0;
    }

    // Horner.
    double operator()(double x) const noexcept;

    // q(x) = p(scale * x + shift)
    Poly compose_affine(double scale, double shift) const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(double s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, double s) { return a *= s; }
    friend Poly operator*(double s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(Poly a) { return a *= -1.0; }
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();

    std::vector<double> coeffs_;
};

// x + x^2 + ... + x^k
Poly sum_power_poly(int k);

// Chebyshev polynomial of the first kind, T_j, in monomial form.
Poly chebyshev_t(int j);

// sum_j cheb[j] * T_j(scale * x + shift), expanded into monomials.
Poly from_chebyshev(std::span<const double> cheb, double scale, double shift);

// `[c0, c1, ...]` with shortest round-trip digits.
std::string format_poly(const Poly& p);

} // namespace kindep
