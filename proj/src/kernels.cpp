#include "sprk/kernels.hpp"

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sprk::kernels {

namespace {

void integral_row(const FirstIntegralSet& set, double t, const State& y, Eigen::MatrixXd& values, Eigen::Index n)
{
    double buf[16];
    set.eval_into(t, std::span<const double>(y.data(), static_cast<std::size_t>(y.size())),
                  std::span<double>(buf, set.size()));
    for (std::size_t k = 0; k < set.size(); ++k)
        values(n, static_cast<Eigen::Index>(k)) = buf[k];
}

// Collects the first exception thrown inside a parallel region.
class ExceptionSlot {
public:
    template <class Fn>
    void run(Fn&& fn)
    {
        try {
            fn();
        } catch (...) {
            std::lock_guard lock(mu_);
            if (!err_)
                err_ = std::current_exception();
        }
    }
    void rethrow() const
    {
        if (err_)
            std::rethrow_exception(err_);
    }

private:
    std::mutex mu_;
    std::exception_ptr err_;
};

}  // namespace

Eigen::MatrixXd integral_values_serial(const FirstIntegralSet& set, const Trajectory& traj)
{
    const auto samples = static_cast<Eigen::Index>(traj.states.size());
    Eigen::MatrixXd values(samples, static_cast<Eigen::Index>(set.size()));
    for (Eigen::Index n = 0; n < samples; ++n)
        integral_row(set, traj.time(static_cast<std::size_t>(n)), traj.states[static_cast<std::size_t>(n)], values, n);
    return values;
}

Eigen::MatrixXd integral_values_parallel(const FirstIntegralSet& set, const Trajectory& traj)
{
    const auto samples = static_cast<Eigen::Index>(traj.states.size());
    Eigen::MatrixXd values(samples, static_cast<Eigen::Index>(set.size()));
    ExceptionSlot slot;
#pragma omp parallel for schedule(static)
    for (Eigen::Index n = 0; n < samples; ++n)
        slot.run([&] {
            integral_row(set, traj.time(static_cast<std::size_t>(n)), traj.states[static_cast<std::size_t>(n)],
                         values, n);
        });
    slot.rethrow();
    return values;
}

Eigen::MatrixXd sample_flow_serial(const ExactSolution& exact, std::span<const double> times)
{
    const auto samples = static_cast<Eigen::Index>(times.size());
    Eigen::MatrixXd out(exact.initial_state().size(), samples);
    for (Eigen::Index n = 0; n < samples; ++n)
        out.col(n) = exact.eval(times[static_cast<std::size_t>(n)]);
    return out;
}

Eigen::MatrixXd sample_flow_parallel(const ExactSolution& exact, std::span<const double> times)
{
    const auto samples = static_cast<Eigen::Index>(times.size());
    Eigen::MatrixXd out(exact.initial_state().size(), samples);
#pragma omp parallel for schedule(static)
    for (Eigen::Index n = 0; n < samples; ++n)
        out.col(n) = exact.eval(times[static_cast<std::size_t>(n)]);
    return out;
}

Eigen::MatrixXd integrals_along_flow_serial(const FirstIntegralSet& set, const ExactSolution& exact,
                                            std::span<const double> times)
{
    const auto samples = static_cast<Eigen::Index>(times.size());
    Eigen::MatrixXd values(samples, static_cast<Eigen::Index>(set.size()));
    for (Eigen::Index n = 0; n < samples; ++n) {
        const double t = times[static_cast<std::size_t>(n)];
        integral_row(set, t, exact.eval(t), values, n);
    }
    return values;
}

Eigen::MatrixXd integrals_along_flow_parallel(const FirstIntegralSet& set, const ExactSolution& exact,
                                              std::span<const double> times)
{
    const auto samples = static_cast<Eigen::Index>(times.size());
    Eigen::MatrixXd values(samples, static_cast<Eigen::Index>(set.size()));
    ExceptionSlot slot;
#pragma omp parallel for schedule(static)
    for (Eigen::Index n = 0; n < samples; ++n)
        slot.run([&] {
            const double t = times[static_cast<std::size_t>(n)];
            integral_row(set, t, exact.eval(t), values, n);
        });
    slot.rethrow();
    return values;
}

std::vector<Trajectory> integrate_ensemble_serial(const ButcherTableau& tab, const VectorField& f, double t0,
                                                  std::span<const State> initial_states, double h, long n,
                                                  const SolverConfig& cfg)
{
    std::vector<Trajectory> out;
    out.reserve(initial_states.size());
    for (const auto& y0 : initial_states)
        out.push_back(integrate(tab, f, t0, y0, h, n, cfg));
    return out;
}

std::vector<Trajectory> integrate_ensemble_parallel(const ButcherTableau& tab, const VectorField& f, double t0,
                                                    std::span<const State> initial_states, double h, long n,
                                                    const SolverConfig& cfg)
{
    const auto count = static_cast<long>(initial_states.size());
    std::vector<Trajectory> out(initial_states.size());
    ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
        slot.run([&] {
            out[static_cast<std::size_t>(i)] = integrate(tab, f, t0, initial_states[static_cast<std::size_t>(i)], h, n, cfg);
        });
    slot.rethrow();
    return out;
}

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace sprk::kernels
