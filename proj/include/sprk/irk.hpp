#pragma once

#include "sprk/tableau.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace sprk {

using State = Eigen::VectorXd;

/// First-order system y' = f(t, y) with an analytic Jacobian df/dy.
struct VectorField {
    int dim = 0;
    std::function<State(double t, const State& y)> eval;
    /// May be empty; irk_step then needs SolverConfig::fallback_fixed_point.
    std::function<Eigen::MatrixXd(double t, const State& y)> jacobian;
};

struct SolverConfig {
    /// Newton stops once the sup-norm of the stage increment is below
    /// newton_tol * max(1, |y|_inf).
    double newton_tol = 1e-13;
    int max_newton_iters = 25;
    /// Retry a failed Newton solve with plain fixed-point iteration.
    bool fallback_fixed_point = false;

    void validate() const;
};

struct StepStats {
    int iterations = 0;
    double residual = 0.0;  // sup-norm of Y_i - y - h sum_j a_ij f(Y_j) at exit
    bool used_fixed_point = false;
};

struct StepResult {
    State y;
    StepStats stats;
};

class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, int iterations, double residual, long step_index = -1)
        : std::runtime_error(what), iterations_(iterations), residual_(residual), step_index_(step_index)
    {
    }

    int iterations() const { return iterations_; }
    double residual() const { return residual_; }
    /// Index of the failing step within integrate(), or -1 for a bare irk_step.
    long step_index() const { return step_index_; }

private:
    int iterations_;
    double residual_;
    long step_index_;
};

/// One step of the implicit Runge-Kutta method `tab` from (t, y) with step h.
///
/// The stage system Y_i = y + h sum_j a_ij f(t + c_j h, Y_j) is solved by
/// Newton's method on the stacked s*dim unknown, starting from Y_i = y.
/// h may be negative (integration backwards in time). Throws NonConvergence.
StepResult irk_step(const ButcherTableau& tab, const VectorField& f, double t, const State& y, double h,
                    const SolverConfig& cfg = {});

struct Trajectory {
    double t0 = 0.0;
    double h = 0.0;
    std::vector<State> states;  // states[0] is the initial condition
    int max_iterations = 0;     // largest per-step solver iteration count

    std::size_t steps() const { return states.empty() ? 0 : states.size() - 1; }
    double time(std::size_t k) const { return t0 + static_cast<double>(k) * h; }
};

/// n fixed steps of size h > 0. NonConvergence carries the failing step index.
Trajectory integrate(const ButcherTableau& tab, const VectorField& f, double t0, const State& y0, double h,
                     long n, const SolverConfig& cfg = {});

}  // namespace sprk
