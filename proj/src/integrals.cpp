#include "sprk/integrals.hpp"

#include "sprk/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace sprk {

std::array<double, 5> case1_integrals(double t, double y, double yp)
{
    const double s = std::sin(t), c = std::cos(t);
    const double s2 = std::sin(2 * t), c2 = std::cos(2 * t);
    return {
        yp * yp / 2 + y * y / 2,
        yp * c + y * s,
        yp * s - y * c,
        -0.5 * yp * yp * c2 - y * yp * s2 + 0.5 * y * y * c2,
        -0.5 * yp * yp * s2 + y * yp * c2 + 0.5 * y * y * s2,
    };
}

std::array<double, 10> case2_integrals(double t, double f, double g, double fp, double gp)
{
    const double s = std::sin(t), c = std::cos(t);
    const double s2 = std::sin(2 * t), c2 = std::cos(2 * t);
    const double q = fp * fp - gp * gp - f * f + g * g;
    const double cross = fp * gp - f * g;
    const double mixed = f * gp + fp * g;
    return {
        q * s2 - 2 * (f * fp - g * gp) * c2,
        2 * cross * s2 - 2 * mixed * c2,
        q * c2 + 2 * (fp * f - gp * g) * s2,
        2 * cross * c2 + 2 * mixed * s2,
        -2 * fp * c - 2 * f * s,
        -2 * gp * c - 2 * g * s,
        -2 * fp * s + 2 * f * c,
        -2 * gp * s + 2 * g * c,
        fp * fp - gp * gp + f * f - g * g,
        2 * fp * gp + 2 * f * g,
    };
}

double case2_i51_published(double, double f, double g, double fp, double gp)
{
    return fp * fp - gp * gp - f * f + g * g;
}

namespace {

// Shared pieces of the Case III time-dependent quadratic integrals.
struct Case3Terms {
    double x;  // Re(k^2 w^2 - w'^2)
    double y;  // Im(k^2 w^2 - w'^2)
    double u;  // Re(k w w')
    double v;  // Im(k w w')
    double s2, c2, sh2, ch2;
};

Case3Terms case3_terms(double t, double f, double g, double fp, double gp, double a1, double a2)
{
    const double ksq_re = a1 * a1 - a2 * a2;
    const double ab = a1 * a2;
    const double ff = f * f - g * g;
    Case3Terms r{};
    r.x = ksq_re * ff - 4 * ab * f * g - (fp * fp - gp * gp);
    r.y = 2 * ab * ff + 2 * ksq_re * f * g - 2 * fp * gp;
    r.u = a1 * (f * fp - g * gp) - a2 * (f * gp + g * fp);
    r.v = a1 * (f * gp + g * fp) + a2 * (f * fp - gp * g);
    r.s2 = std::sin(2 * a1 * t);
    r.c2 = std::cos(2 * a1 * t);
    r.sh2 = std::sinh(2 * a2 * t);
    r.ch2 = std::cosh(2 * a2 * t);
    return r;
}

}  // namespace

std::array<double, 10> case3_integrals(double t, double f, double g, double fp, double gp, double a1, double a2)
{
    const double ksq_re = a1 * a1 - a2 * a2;
    const double ab = a1 * a2;
    const double sa = std::sin(a1 * t), ca = std::cos(a1 * t);
    const double sh = std::sinh(a2 * t), ch = std::cosh(a2 * t);
    const double p = a1 * f - a2 * g;  // Re(k w)
    const double q = a1 * g + a2 * f;  // Im(k w)
    const auto m = case3_terms(t, f, g, fp, gp, a1, a2);
    return {
        ksq_re * (f * f - g * g) - 4 * ab * f * g + fp * fp - gp * gp,
        2 * ksq_re * f * g + 2 * ab * (f * f - g * g) + 2 * fp * gp,
        fp * sa * ch - gp * ca * sh - p * ca * ch - q * sa * sh,
        gp * sa * ch + fp * ca * sh - q * ca * ch + p * sa * sh,
        fp * ca * ch + gp * sa * sh + p * sa * ch - q * ca * sh,
        gp * ca * ch - fp * sa * sh + q * sa * ch + p * ca * sh,
        0.5 * (m.x * m.s2 * m.ch2 - m.y * m.c2 * m.sh2) + m.u * m.c2 * m.ch2 + m.v * m.s2 * m.sh2,
        0.5 * (m.x * m.c2 * m.sh2 + m.y * m.s2 * m.ch2) + m.v * m.c2 * m.ch2 - m.u * m.s2 * m.sh2,
        0.5 * (m.x * m.c2 * m.ch2 + m.y * m.s2 * m.sh2) + m.v * m.c2 * m.sh2 - m.u * m.s2 * m.ch2,
        0.5 * (-m.x * m.s2 * m.sh2 + m.y * m.c2 * m.ch2) - m.v * m.s2 * m.ch2 - m.u * m.c2 * m.sh2,
    };
}

double case3_i52_published(double t, double f, double g, double fp, double gp, double a1, double a2)
{
    const auto m = case3_terms(t, f, g, fp, gp, a1, a2);
    const double v_printed = a1 * (f * gp + fp * g) - a2 * (f * fp - g * gp);
    return 0.5 * (-m.x * m.s2 * m.sh2 + m.y * m.c2 * m.ch2) - v_printed * m.s2 * m.ch2 - m.u * m.c2 * m.sh2;
}

FirstIntegralSet::FirstIntegralSet(const OscillatorParams& params) : params_(params)
{
    params_.validate();
    if (params_.case_id == CaseId::CaseI) {
        names_ = {"I1", "I2", "I3", "I4", "I5"};
        autonomous_ = {true, false, false, false, false};
        return;
    }
    names_ = {"I11", "I12", "I21", "I22", "I31", "I32", "I41", "I42", "I51", "I52"};
    if (params_.case_id == CaseId::CaseII) {
        autonomous_ = {false, false, false, false, false, false, false, false, true, true};
        published_.push_back({"I51_published", "I51",
                              "printed as f'^2-g'^2-f^2+g^2; conserved form is f'^2-g'^2+f^2-g^2",
                              [](double t, std::span<const double> y) {
                                  return case2_i51_published(t, y[0], y[1], y[2], y[3]);
                              }});
    } else {
        autonomous_ = {true, true, false, false, false, false, false, false, false, false};
        const double a1 = params_.alpha1, a2 = params_.alpha2;
        published_.push_back({"I52_published", "I52",
                              "printed with -alpha2(ff'-gg') in the sin(2a1t)cosh(2a2t) term; conserved form "
                              "has +alpha2(ff'-gg')",
                              [a1, a2](double t, std::span<const double> y) {
                                  return case3_i52_published(t, y[0], y[1], y[2], y[3], a1, a2);
                              }});
    }
}

void FirstIntegralSet::eval_into(double t, std::span<const double> y, std::span<double> out) const
{
    if (y.size() != static_cast<std::size_t>(state_dim(params_.case_id)) || out.size() < names_.size())
        throw std::invalid_argument("FirstIntegralSet: state or output has wrong size");
    switch (params_.case_id) {
    case CaseId::CaseI: {
        const auto v = case1_integrals(t, y[0], y[1]);
        std::copy(v.begin(), v.end(), out.begin());
        break;
    }
    case CaseId::CaseII: {
        const auto v = case2_integrals(t, y[0], y[1], y[2], y[3]);
        std::copy(v.begin(), v.end(), out.begin());
        break;
    }
    case CaseId::CaseIII: {
        const auto v = case3_integrals(t, y[0], y[1], y[2], y[3], params_.alpha1, params_.alpha2);
        std::copy(v.begin(), v.end(), out.begin());
        break;
    }
    }
}

std::vector<double> FirstIntegralSet::eval_all(double t, const State& y) const
{
    std::vector<double> out(names_.size());
    eval_into(t, std::span<const double>(y.data(), static_cast<std::size_t>(y.size())), out);
    return out;
}

std::string_view to_string(ErrorMode m) { return m == ErrorMode::Absolute ? "absolute" : "relative"; }

ErrorMode parse_error_mode(std::string_view name)
{
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (s == "absolute" || s == "abs")
        return ErrorMode::Absolute;
    if (s == "relative" || s == "rel")
        return ErrorMode::Relative;
    throw std::invalid_argument("unknown error mode '" + std::string(name) + "'");
}

double least_squares_slope(std::span<const double> x, std::span<const double> y)
{
    const std::size_t n = std::min(x.size(), y.size());
    if (n < 2)
        return 0.0;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        sxy += dx * (y[i] - my);
        sxx += dx * dx;
    }
    return sxx > 0.0 ? sxy / sxx : 0.0;
}

ErrorSummary summarize(std::span<const double> times, std::span<const double> errors)
{
    ErrorSummary s;
    if (errors.empty())
        return s;
    const std::size_t last = errors.size() - 1;
    const std::size_t mid = last / 2;
    for (std::size_t n = 0; n <= last; ++n) {
        const double e = errors[n];
        s.max_error = std::max(s.max_error, e);
        if (n <= mid)
            s.first_half_max = std::max(s.first_half_max, e);
        if (n >= mid)
            s.second_half_max = std::max(s.second_half_max, e);
    }
    s.final_error = errors[last];
    s.drift_slope = least_squares_slope(times, errors);
    return s;
}

std::vector<ErrorSeries> error_series(const Trajectory& traj, const FirstIntegralSet& set)
{
    const Eigen::MatrixXd values = kernels::integral_values_parallel(set, traj);
    const auto samples = static_cast<std::size_t>(values.rows());
    std::vector<double> times(samples);
    for (std::size_t n = 0; n < samples; ++n)
        times[n] = traj.time(n);

    std::vector<ErrorSeries> out(set.size());
    for (std::size_t k = 0; k < set.size(); ++k) {
        auto& es = out[k];
        es.label = set.names()[k];
        es.autonomous = set.autonomous(k);
        es.errors.resize(samples);
        es.relative_errors.resize(samples);
        const auto col = static_cast<Eigen::Index>(k);
        const double ref = values(0, col);
        const double denom = ref != 0.0 ? std::abs(ref) : 1.0;
        for (std::size_t n = 0; n < samples; ++n) {
            const double e = std::abs(values(static_cast<Eigen::Index>(n), col) - ref);
            es.errors[n] = e;
            es.relative_errors[n] = e / denom;
        }
        es.absolute = summarize(times, es.errors);
        es.relative = summarize(times, es.relative_errors);
    }
    return out;
}

}  // namespace sprk
