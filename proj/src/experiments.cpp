#include "sprk/experiments.hpp"

#include "sprk/kernels.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sprk {

const std::vector<std::string>& builtin_methods()
{
    static const std::vector<std::string> names{"gauss1", "gauss2", "gauss3", "radau1_2", "radau2_2", "lobatto_2"};
    return names;
}

ButcherTableau method_tableau(std::string_view name)
{
    if (name == "gauss1")
        return construct_gauss(1);
    if (name == "gauss2")
        return construct_gauss(2);
    if (name == "gauss3")
        return construct_gauss(3);
    auto two_stage = [](NodeFamily fam) {
        const auto c = nodes(fam, 2);
        return construct_symplectic_2stage(c[0], c[1]);
    };
    if (name == "radau1_2")
        return two_stage(NodeFamily::RadauI);
    if (name == "radau2_2")
        return two_stage(NodeFamily::RadauII);
    if (name == "lobatto_2")
        return two_stage(NodeFamily::LobattoIII);
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::optional<std::pair<double, double>> order_band(std::string_view method)
{
    if (method == "gauss1")
        return std::pair{1.8, 2.2};
    if (method == "gauss2")
        return std::pair{3.8, 4.2};
    if (method == "gauss3")
        return std::pair{5.8, 6.2};
    if (method == "radau1_2" || method == "radau2_2")
        return std::pair{2.8, 3.2};
    return std::nullopt;
}

State default_initial_state(CaseId c)
{
    if (c == CaseId::CaseI)
        return State{{1.0, 0.0}};
    return State{{1.0, 0.5, 0.0, 0.2}};
}

long default_steps(CaseId c) { return c == CaseId::CaseIII ? 2000 : 10000; }

double default_validation_horizon(CaseId c) { return c == CaseId::CaseIII ? 20.0 : 100.0; }

namespace {

std::string fmt(const char* f, double a, double b = 0.0)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

}  // namespace

InvariantCheck check_boundedness(const ErrorSeries& series)
{
    InvariantCheck c;
    c.label = series.label;
    c.autonomous = series.autonomous;
    const auto& s = series.absolute;
    if (series.autonomous) {
        c.passed = s.max_error <= kQuadraticInvariantTol;
        c.detail = fmt("max_error %.3e (limit %.1e)", s.max_error, kQuadraticInvariantTol);
        return c;
    }
    const bool halves = s.second_half_max <= kHalfGrowthFactor * s.first_half_max;
    const bool slope = std::abs(s.drift_slope) <= kDriftSlopeTol;
    c.passed = halves && slope;
    c.detail = fmt("second/first half max ratio %.9g, ", s.first_half_max > 0 ? s.second_half_max / s.first_half_max : 0.0) +
               fmt("drift_slope %.3e", s.drift_slope);
    if (!halves)
        c.detail += " [half-growth > 2]";
    if (!slope)
        c.detail += " [drift slope too large]";
    return c;
}

InvariantRun run_invariants(const ButcherTableau& tab, const OscillatorParams& params, const State& y0, double h,
                            long steps, const SolverConfig& cfg)
{
    if (y0.size() != state_dim(params.case_id))
        throw std::invalid_argument("run_invariants: initial state has wrong dimension");
    InvariantRun run;
    run.trajectory = integrate(tab, vector_field(params), 0.0, y0, h, steps, cfg);
    const FirstIntegralSet set(params);
    run.series = error_series(run.trajectory, set);
    run.all_passed = true;
    for (const auto& s : run.series) {
        run.checks.push_back(check_boundedness(s));
        run.all_passed = run.all_passed && run.checks.back().passed;
    }
    return run;
}

ConvergenceStudy convergence_study(const ButcherTableau& tab, const OscillatorParams& params, const State& y0,
                                   std::span<const double> step_sizes, double horizon, const SolverConfig& cfg)
{
    if (step_sizes.size() < 3)
        throw std::invalid_argument("convergence_study: need at least 3 step sizes");
    const VectorField f = vector_field(params);
    const ExactSolution exact(params, y0);
    const State reference = exact.eval(horizon);

    ConvergenceStudy study;
    study.points.resize(step_sizes.size());
    for (std::size_t i = 0; i < step_sizes.size(); ++i) {
        const double h = step_sizes[i];
        if (!(h > 0.0))
            throw std::invalid_argument("convergence_study: step sizes must be positive");
        const double ratio = horizon / h;
        const long n = std::lround(ratio);
        if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-9 * ratio)
            throw std::invalid_argument("convergence_study: horizon is not a multiple of h = " + std::to_string(h));
        study.points[i].h = h;
        study.points[i].steps = n;
    }

    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(study.points.size()); ++i) {
        auto& p = study.points[static_cast<std::size_t>(i)];
        try {
            const auto traj = integrate(tab, f, 0.0, y0, p.h, p.steps, cfg);
            p.error = (traj.states.back() - reference).lpNorm<Eigen::Infinity>();
        } catch (...) {
#pragma omp critical
            if (!err)
                err = std::current_exception();
        }
    }
    if (err)
        std::rethrow_exception(err);

    std::vector<double> lh, le;
    for (const auto& p : study.points) {
        lh.push_back(std::log(p.h));
        le.push_back(std::log(p.error));
    }
    study.slope = least_squares_slope(lh, le);
    return study;
}

ValidationReport validate_integrals(const OscillatorParams& params, const State& y0, double horizon, int samples)
{
    if (samples < 2 || !(horizon > 0.0))
        throw std::invalid_argument("validate_integrals: need samples >= 2 and a positive horizon");
    const FirstIntegralSet set(params);
    const ExactSolution exact(params, y0);

    std::vector<double> times(static_cast<std::size_t>(samples));
    for (int n = 0; n < samples; ++n)
        times[static_cast<std::size_t>(n)] = horizon * n / (samples - 1);

    const Eigen::MatrixXd values = kernels::integrals_along_flow_parallel(set, exact, times);
    ValidationReport report;
    report.case_id = params.case_id;
    report.horizon = horizon;
    report.samples = samples;
    report.all_implemented_passed = true;
    for (std::size_t k = 0; k < set.size(); ++k) {
        const auto col = values.col(static_cast<Eigen::Index>(k));
        ValidationEntry e;
        e.label = set.names()[k];
        e.max_deviation = (col.array() - col(0)).abs().maxCoeff();
        e.passed = e.max_deviation <= kOracleConstancyTol;
        report.all_implemented_passed = report.all_implemented_passed && e.passed;
        report.entries.push_back(e);
    }

    const Eigen::MatrixXd states = kernels::sample_flow_parallel(exact, times);
    for (const auto& pv : set.published_variants()) {
        ValidationEntry e;
        e.label = pv.label;
        e.implemented = false;
        e.replaces = pv.replaces;
        const auto dim = static_cast<std::size_t>(states.rows());
        const double ref = pv.eval(0.0, std::span<const double>(states.col(0).data(), dim));
        for (int n = 0; n < samples; ++n) {
            const double v = pv.eval(times[static_cast<std::size_t>(n)], std::span<const double>(states.col(n).data(), dim));
            e.max_deviation = std::max(e.max_deviation, std::abs(v - ref));
        }
        e.passed = e.max_deviation <= kOracleConstancyTol;
        report.entries.push_back(e);
    }
    return report;
}

}  // namespace sprk
