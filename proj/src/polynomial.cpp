#include "sprk/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sprk {

namespace {

constexpr int kScanIntervals = 1000;
constexpr int kMaxPolishIters = 100;
constexpr double kPolishTol = 1e-15;
constexpr double kMinRootGap = 1e-10;

double binomial(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return std::round(r);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
{
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0)
        coeffs_.pop_back();
    if (coeffs_.empty())
        coeffs_.push_back(0.0);
}

double Polynomial::operator()(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double Polynomial::magnitude_at(double x) const
{
    double acc = 0.0;
    const double ax = std::abs(x);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * ax + std::abs(*it);
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() == 1)
        return Polynomial{0.0};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

double Polynomial::max_abs_coeff() const
{
    double m = 0.0;
    for (double c : coeffs_)
        m = std::max(m, std::abs(c));
    return m;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q)
{
    std::vector<double> r(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] = p[k] + q[k];
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q)
{
    return p + (-1.0) * q;
}

Polynomial operator*(double a, const Polynomial& p)
{
    std::vector<double> r(p.coeffs_);
    for (double& c : r)
        c *= a;
    return Polynomial(std::move(r));
}

Polynomial shifted_legendre(int s)
{
    if (s < 0 || s > kMaxLegendreDegree)
        throw std::invalid_argument("shifted_legendre: degree " + std::to_string(s) +
                                    " outside [0, " + std::to_string(kMaxLegendreDegree) + "]");
    std::vector<double> c(static_cast<std::size_t>(s) + 1);
    for (int k = 0; k <= s; ++k) {
        const double mag = binomial(s, k) * binomial(s + k, k);
        c[static_cast<std::size_t>(k)] = ((s - k) % 2 == 0) ? mag : -mag;
    }
    return Polynomial(std::move(c));
}

namespace {

// Extended-precision Horner; the monomial form of high-degree Legendre
// combinations cancels badly near interior roots.
long double eval_ld(const Polynomial& p, long double x)
{
    long double acc = 0.0L;
    for (std::size_t k = p.coeffs().size(); k-- > 0;)
        acc = acc * x + static_cast<long double>(p.coeffs()[k]);
    return acc;
}

long double magnitude_ld(const Polynomial& p, long double x)
{
    long double acc = 0.0L;
    for (std::size_t k = p.coeffs().size(); k-- > 0;)
        acc = acc * std::abs(x) + std::abs(static_cast<long double>(p.coeffs()[k]));
    return acc;
}

int sign_ld(long double v) { return (v > 0.0L) - (v < 0.0L); }

// Newton polish inside a bracket [lo, hi] known to contain a root.
double polish_root(const Polynomial& p, const Polynomial& dp, double lo_d, double hi_d)
{
    long double lo = lo_d, hi = hi_d;
    // Shrink the bracket first; Newton then only has to clean up the last bits.
    const int slo = sign_ld(eval_ld(p, lo));
    for (int i = 0; i < 60 && hi - lo > kPolishTol; ++i) {
        const long double mid = 0.5L * (lo + hi);
        const int sm = sign_ld(eval_ld(p, mid));
        if (sm == 0)
            return static_cast<double>(mid);
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    long double x = 0.5L * (lo + hi);
    for (int it = 0; it < kMaxPolishIters; ++it) {
        const long double fx = eval_ld(p, x);
        if (std::abs(fx) <= std::numeric_limits<long double>::epsilon() * magnitude_ld(p, x))
            return static_cast<double>(x);
        const long double d = eval_ld(dp, x);
        if (d == 0.0L)
            break;
        long double next = x - fx / d;
        if (next < lo || next > hi)
            next = 0.5L * (lo + hi);
        if (std::abs(next - x) <= 1e-3L * kPolishTol * std::max(1.0L, std::abs(x)))
            return static_cast<double>(next);
        x = next;
    }
    throw std::runtime_error("real_roots_in_unit_interval: Newton polishing did not converge");
}

}  // namespace

std::vector<double> real_roots_in_unit_interval(const Polynomial& p)
{
    if (p.degree() == 0)
        return {};
    const Polynomial dp = p.derivative();

    std::vector<double> grid(kScanIntervals + 1);
    std::vector<double> vals(kScanIntervals + 1);
    std::vector<bool> is_zero(kScanIntervals + 1);
    for (int k = 0; k <= kScanIntervals; ++k) {
        const double x = static_cast<double>(k) / kScanIntervals;
        grid[k] = x;
        vals[k] = p(x);
        // A grid point counts as a root when p vanishes to evaluation rounding.
        is_zero[k] = std::abs(vals[k]) <= 4.0 * std::numeric_limits<double>::epsilon() * p.magnitude_at(x);
    }

    std::vector<double> roots;
    for (int k = 0; k <= kScanIntervals; ++k) {
        if (is_zero[k]) {
            roots.push_back(grid[k]);
            continue;
        }
        if (k == kScanIntervals || is_zero[k + 1])
            continue;
        if (sign(vals[k]) != sign(vals[k + 1]))
            roots.push_back(polish_root(p, dp, grid[k], grid[k + 1]));
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) <= kMinRootGap; }),
                roots.end());
    return roots;
}

}  // namespace sprk
