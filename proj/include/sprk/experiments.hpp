#pragma once

// Experiment drivers shared by the CLI and the acceptance suite.

#include "sprk/integrals.hpp"
#include "sprk/oracle.hpp"
#include "sprk/tableau.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sprk {

/// Built-in methods: gauss1, gauss2, gauss3, radau1_2, radau2_2, lobatto_2.
ButcherTableau method_tableau(std::string_view name);
const std::vector<std::string>& builtin_methods();

/// Accepted band for the empirical convergence slope, if one is declared.
std::optional<std::pair<double, double>> order_band(std::string_view method);

/// (1, 0) for Case I and (1, 0.5, 0, 0.2) otherwise.
State default_initial_state(CaseId c);
/// 10000 steps, except Case III which defaults to 2000 (T = 20 at h = 0.01).
long default_steps(CaseId c);

// Boundedness thresholds applied to absolute error series.
inline constexpr double kQuadraticInvariantTol = 1e-9;
inline constexpr double kHalfGrowthFactor = 2.0;
inline constexpr double kDriftSlopeTol = 1e-9;
inline constexpr double kOracleConstancyTol = 1e-10;

struct InvariantCheck {
    std::string label;
    bool autonomous = false;
    bool passed = false;
    std::string detail;
};

/// Applies the boundedness assertions to one absolute error series:
/// autonomous integrals need max_error <= kQuadraticInvariantTol; time-dependent
/// ones need second_half_max <= kHalfGrowthFactor * first_half_max and
/// |drift_slope| <= kDriftSlopeTol.
InvariantCheck check_boundedness(const ErrorSeries& series);

struct InvariantRun {
    Trajectory trajectory;
    std::vector<ErrorSeries> series;
    std::vector<InvariantCheck> checks;
    bool all_passed = false;
};

InvariantRun run_invariants(const ButcherTableau& tab, const OscillatorParams& params, const State& y0, double h,
                            long steps, const SolverConfig& cfg = {});

struct ConvergencePoint {
    double h = 0.0;
    long steps = 0;
    double error = 0.0;  // sup-norm distance to the exact state at the horizon
};

struct ConvergenceStudy {
    std::vector<ConvergencePoint> points;
    double slope = 0.0;  // least-squares slope of log(error) against log(h)
};

/// Global error at `horizon` for each step size; horizon / h must be an integer
/// (within 1e-9). The per-h runs execute concurrently.
ConvergenceStudy convergence_study(const ButcherTableau& tab, const OscillatorParams& params, const State& y0,
                                   std::span<const double> step_sizes, double horizon = 1.0,
                                   const SolverConfig& cfg = {});

struct ValidationEntry {
    std::string label;
    bool implemented = true;  // false for published forms kept for comparison
    std::string replaces;     // published forms only
    double max_deviation = 0.0;
    bool passed = false;
};

struct ValidationReport {
    CaseId case_id{};
    double horizon = 0.0;
    int samples = 0;
    std::vector<ValidationEntry> entries;
    bool all_implemented_passed = false;
};

/// Oracle constancy: max |I(t, exact(t)) - I(0, y0)| over `samples` equally
/// spaced times in [0, horizon], for every implemented integral and every
/// published variant.
ValidationReport validate_integrals(const OscillatorParams& params, const State& y0, double horizon,
                                    int samples = 1000);

/// 100 for Case I/II, 20 for Case III.
double default_validation_horizon(CaseId c);

}  // namespace sprk
