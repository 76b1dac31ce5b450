#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace sprk {

/// Real polynomial with coefficients stored lowest degree first.
/// Trailing zero coefficients are trimmed, so the leading coefficient of a
/// polynomial of degree >= 1 is always nonzero.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);
    Polynomial(std::initializer_list<double> coeffs) : Polynomial(std::vector<double>(coeffs)) {}

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

    double operator()(double x) const;
    Polynomial derivative() const;
    double max_abs_coeff() const;

    /// Sum of |c_k| |x|^k, i.e. the scale of the rounding error of operator()(x).
    double magnitude_at(double x) const;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(double a, const Polynomial& p);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<double> coeffs_;
};

inline constexpr int kMaxLegendreDegree = 12;

/// Shifted Legendre polynomial on [0,1], normalized so that P*_s(1) = 1.
/// Throws std::invalid_argument for s < 0 or s > kMaxLegendreDegree.
Polynomial shifted_legendre(int s);

/// Ascending simple roots of p in [0,1].
///
/// Scans 1000 equal subintervals for sign changes (and grid points where p
/// vanishes to rounding level), brackets each root by bisection and polishes
/// it with Newton's method. Throws std::runtime_error if polishing does not
/// settle within 100 iterations.
std::vector<double> real_roots_in_unit_interval(const Polynomial& p);

}  // namespace sprk
