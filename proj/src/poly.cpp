#include "kindep/poly.hpp"

#include "kindep/error.hpp"
#include "kindep/report.hpp"

#include <algorithm>

namespace kindep {

Poly::Poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0.0)
        coeffs_.pop_back();
}

Poly Poly::constant(double c)
{
    return Poly({c});
}

Poly Poly::x()
{
    return Poly({0.0, 1.0});
}

Poly Poly::monomial(int degree, double coeff)
{
    if (degree < 0)
        throw Error(ErrorCode::InvalidParameters, "monomial degree must be non-negative");
    std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
    c.back() = coeff;
    return Poly(std::move(c));
}

double Poly::operator()(double x) const noexcept
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly Poly::compose_affine(double scale, double shift) const
{
    // Horner in polynomial arithmetic: acc = acc * (scale x + shift) + c_i.
    const Poly inner({shift, scale});
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + Poly::constant(*it);
    return acc;
}

Poly& Poly::operator+=(const Poly& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), 0.0);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), 0.0);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(double s)
{
    for (double& c : coeffs_)
        c *= s;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly sum_power_poly(int k)
{
    if (k < 1)
        throw Error(ErrorCode::InvalidParameters, "sum of powers needs k >= 1");
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 1.0);
    c[0] = 0.0;
    return Poly(std::move(c));
}

Poly chebyshev_t(int j)
{
    if (j < 0)
        throw Error(ErrorCode::InvalidParameters, "Chebyshev index must be non-negative");
    Poly prev = Poly::constant(1.0);
    if (j == 0)
        return prev;
    Poly cur = Poly::x();
    for (int i = 1; i < j; ++i) {
        Poly next = Poly::x() * cur * 2.0 - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly from_chebyshev(std::span<const double> cheb, double scale, double shift)
{
    Poly in_y;
    for (std::size_t j = 0; j < cheb.size(); ++j)
        in_y += chebyshev_t(static_cast<int>(j)) * cheb[j];
    return in_y.compose_affine(scale, shift);
}

std::string format_poly(const Poly& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i)
            out += ", ";
        out += format_real(p.coeffs()[i]);
    }
    out += "]";
    return out;
}

} // namespace kindep
