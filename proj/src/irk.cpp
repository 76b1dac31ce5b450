#include "sprk/irk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sprk {

void SolverConfig::validate() const
{
    if (!(newton_tol > 0.0))
        throw std::invalid_argument("SolverConfig: newton_tol must be positive");
    if (max_newton_iters < 1)
        throw std::invalid_argument("SolverConfig: max_newton_iters must be >= 1");
}

namespace {

// Stage derivatives F_j = f(t + c_j h, Y_j), stacked.
Eigen::VectorXd stage_derivatives(const ButcherTableau& tab, const VectorField& f, double t, double h,
                                  const Eigen::VectorXd& stages)
{
    const int s = tab.stages();
    const int n = f.dim;
    Eigen::VectorXd out(s * n);
    for (int j = 0; j < s; ++j) {
        const State fj = f.eval(t + tab.c(j) * h, stages.segment(j * n, n));
        if (fj.size() != n)
            throw std::invalid_argument("VectorField: eval returned wrong dimension");
        out.segment(j * n, n) = fj;
    }
    return out;
}

// G_i = Y_i - y - h sum_j a_ij F_j
Eigen::VectorXd stage_residual(const ButcherTableau& tab, int n, double h, const State& y,
                               const Eigen::VectorXd& stages, const Eigen::VectorXd& derivs)
{
    const int s = tab.stages();
    Eigen::VectorXd g = stages;
    for (int i = 0; i < s; ++i) {
        auto gi = g.segment(i * n, n);
        gi -= y;
        for (int j = 0; j < s; ++j)
            gi -= h * tab.a(i, j) * derivs.segment(j * n, n);
    }
    return g;
}

State combine(const ButcherTableau& tab, int n, double h, const State& y, const Eigen::VectorXd& derivs)
{
    State out = y;
    for (int i = 0; i < tab.stages(); ++i)
        out += h * tab.b(i) * derivs.segment(i * n, n);
    return out;
}

bool newton(const ButcherTableau& tab, const VectorField& f, double t, const State& y, double h,
            const SolverConfig& cfg, Eigen::VectorXd& stages, StepStats& stats)
{
    const int s = tab.stages();
    const int n = f.dim;
    const double scale = std::max(1.0, y.lpNorm<Eigen::Infinity>());
    Eigen::MatrixXd m(s * n, s * n);

    for (int it = 1; it <= cfg.max_newton_iters; ++it) {
        const Eigen::VectorXd derivs = stage_derivatives(tab, f, t, h, stages);
        const Eigen::VectorXd g = stage_residual(tab, n, h, y, stages, derivs);

        // Block (i,j) of dG/dY is delta_ij I - h a_ij J_j.
        m.setIdentity();
        for (int j = 0; j < s; ++j) {
            const Eigen::MatrixXd jj = f.jacobian(t + tab.c(j) * h, stages.segment(j * n, n));
            if (jj.rows() != n || jj.cols() != n)
                throw std::invalid_argument("VectorField: jacobian has wrong shape");
            for (int i = 0; i < s; ++i)
                m.block(i * n, j * n, n, n) -= h * tab.a(i, j) * jj;
        }
        const Eigen::VectorXd delta = m.partialPivLu().solve(-g);
        stats.iterations = it;
        if (!delta.allFinite())
            return false;
        stages += delta;
        if (delta.lpNorm<Eigen::Infinity>() <= cfg.newton_tol * scale)
            return true;
    }
    return false;
}

bool fixed_point(const ButcherTableau& tab, const VectorField& f, double t, const State& y, double h,
                 const SolverConfig& cfg, Eigen::VectorXd& stages, StepStats& stats)
{
    const int s = tab.stages();
    const int n = f.dim;
    const double scale = std::max(1.0, y.lpNorm<Eigen::Infinity>());
    const int max_iters = 50 * cfg.max_newton_iters;
    for (int it = 1; it <= max_iters; ++it) {
        const Eigen::VectorXd derivs = stage_derivatives(tab, f, t, h, stages);
        Eigen::VectorXd next(s * n);
        for (int i = 0; i < s; ++i) {
            auto ni = next.segment(i * n, n);
            ni = y;
            for (int j = 0; j < s; ++j)
                ni += h * tab.a(i, j) * derivs.segment(j * n, n);
        }
        const double change = (next - stages).lpNorm<Eigen::Infinity>();
        stages = std::move(next);
        stats.iterations = it;
        if (!std::isfinite(change))
            return false;
        if (change <= cfg.newton_tol * scale)
            return true;
    }
    return false;
}

}  // namespace

StepResult irk_step(const ButcherTableau& tab, const VectorField& f, double t, const State& y, double h,
                    const SolverConfig& cfg)
{
    cfg.validate();
    if (!(h != 0.0) || !std::isfinite(h))
        throw std::invalid_argument("irk_step: step size must be finite and nonzero");
    if (y.size() != f.dim)
        throw std::invalid_argument("irk_step: state dimension does not match vector field");
    if (!f.jacobian && !cfg.fallback_fixed_point)
        throw std::invalid_argument("irk_step: vector field has no Jacobian and fixed-point fallback is off");

    const int s = tab.stages();
    const int n = f.dim;
    StepResult result;
    Eigen::VectorXd stages = y.replicate(s, 1);

    bool ok = false;
    if (f.jacobian)
        ok = newton(tab, f, t, y, h, cfg, stages, result.stats);
    if (!ok && cfg.fallback_fixed_point) {
        stages = y.replicate(s, 1);
        result.stats.used_fixed_point = true;
        ok = fixed_point(tab, f, t, y, h, cfg, stages, result.stats);
    }

    const Eigen::VectorXd derivs = stage_derivatives(tab, f, t, h, stages);
    const Eigen::VectorXd g = stage_residual(tab, n, h, y, stages, derivs);
    result.stats.residual = g.lpNorm<Eigen::Infinity>();
    if (!ok || !std::isfinite(result.stats.residual))
        throw NonConvergence("irk_step: stage equations did not converge after " +
                                 std::to_string(result.stats.iterations) +
                                 " iterations (residual " + std::to_string(result.stats.residual) +
                                 "); step size too large or bad tableau",
                             result.stats.iterations, result.stats.residual);

    result.y = combine(tab, n, h, y, derivs);
    return result;
}

Trajectory integrate(const ButcherTableau& tab, const VectorField& f, double t0, const State& y0, double h,
                     long n, const SolverConfig& cfg)
{
    if (n < 1)
        throw std::invalid_argument("integrate: need at least one step");
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("integrate: step size must be positive");

    Trajectory traj;
    traj.t0 = t0;
    traj.h = h;
    traj.states.reserve(static_cast<std::size_t>(n) + 1);
    traj.states.push_back(y0);
    for (long k = 0; k < n; ++k) {
        try {
            auto step = irk_step(tab, f, traj.time(static_cast<std::size_t>(k)), traj.states.back(), h, cfg);
            traj.max_iterations = std::max(traj.max_iterations, step.stats.iterations);
            traj.states.push_back(std::move(step.y));
        } catch (const NonConvergence& e) {
            throw NonConvergence(std::string(e.what()) + " at step " + std::to_string(k + 1), e.iterations(),
                                 e.residual(), k + 1);
        }
    }
    return traj;
}

}  // namespace sprk
