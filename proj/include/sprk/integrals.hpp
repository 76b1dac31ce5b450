#pragma once

#include "sprk/irk.hpp"
#include "sprk/models.hpp"

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace sprk {

/// Case I first integrals I1..I5 of y'' = -y.
std::array<double, 5> case1_integrals(double t, double y, double yp);

/// Case II first integrals, ordered I11, I12, I21, I22, I31, I32, I41, I42,
/// I51, I52. I51 is the conserved form f'^2 - g'^2 + f^2 - g^2.
std::array<double, 10> case2_integrals(double t, double f, double g, double fp, double gp);

/// Case II I51 exactly as commonly printed, f'^2 - g'^2 - f^2 + g^2. Not a
/// first integral: d/dt = -4 f f' + 4 g g'.
double case2_i51_published(double t, double f, double g, double fp, double gp);

/// Case III first integrals (same ordering as Case II). I52 carries the
/// corrected sign of the alpha2 term in its sin(2 a1 t) cosh(2 a2 t) part.
std::array<double, 10> case3_integrals(double t, double f, double g, double fp, double gp, double alpha1,
                                       double alpha2);

/// Case III I52 as printed; conserved only when alpha2 = 0.
double case3_i52_published(double t, double f, double g, double fp, double gp, double alpha1, double alpha2);

/// A formula that appears in the literature but failed oracle validation,
/// paired with the label of the integral that replaces it.
struct PublishedVariant {
    std::string label;      // e.g. "I51_published"
    std::string replaces;   // e.g. "I51"
    std::string note;
    std::function<double(double t, std::span<const double> y)> eval;
};

/// All first integrals of one case, evaluable pointwise.
class FirstIntegralSet {
public:
    explicit FirstIntegralSet(const OscillatorParams& params);

    const OscillatorParams& params() const { return params_; }
    CaseId case_id() const { return params_.case_id; }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    /// True for integrals without explicit time dependence.
    bool autonomous(std::size_t k) const { return autonomous_[k]; }
    const std::vector<PublishedVariant>& published_variants() const { return published_; }

    /// Writes size() values into out.
    void eval_into(double t, std::span<const double> y, std::span<double> out) const;
    std::vector<double> eval_all(double t, const State& y) const;

private:
    OscillatorParams params_;
    std::vector<std::string> names_;
    std::vector<bool> autonomous_;
    std::vector<PublishedVariant> published_;
};

enum class ErrorMode { Absolute, Relative };

std::string_view to_string(ErrorMode m);
ErrorMode parse_error_mode(std::string_view s);

struct ErrorSummary {
    double max_error = 0.0;
    double final_error = 0.0;
    double drift_slope = 0.0;      // least-squares slope of e_n against t_n
    double first_half_max = 0.0;   // max over samples n <= N/2
    double second_half_max = 0.0;  // max over samples n >= N/2
};

ErrorSummary summarize(std::span<const double> times, std::span<const double> errors);

/// Least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

/// e_n = |I(t_n, y_n) - I(t_0, y_0)| for one integral along a trajectory.
/// Relative errors divide by |I(t_0, y_0)|, or by 1 when that is zero.
struct ErrorSeries {
    std::string label;
    bool autonomous = false;
    std::vector<double> errors;
    std::vector<double> relative_errors;
    ErrorSummary absolute;
    ErrorSummary relative;

    const std::vector<double>& values(ErrorMode m) const
    {
        return m == ErrorMode::Absolute ? errors : relative_errors;
    }
    const ErrorSummary& summary(ErrorMode m) const { return m == ErrorMode::Absolute ? absolute : relative; }
};

/// One ErrorSeries per integral of the set, in set order.
std::vector<ErrorSeries> error_series(const Trajectory& traj, const FirstIntegralSet& set);

}  // namespace sprk
