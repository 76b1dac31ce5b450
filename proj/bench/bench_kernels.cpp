#include "sprk/experiments.hpp"
#include "sprk/kernels.hpp"
#include "sprk/models.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace sprk;

namespace {

const OscillatorParams kParams{CaseId::CaseIII, 1.0, 0.1};

const Trajectory& trajectory()
{
    static const Trajectory traj = integrate(method_tableau("gauss2"), vector_field(kParams), 0.0,
                                             default_initial_state(kParams.case_id), 0.01, 20000);
    return traj;
}

std::vector<double> times(int n)
{
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i)
        t[i] = 20.0 * i / (n - 1);
    return t;
}

std::vector<State> ensemble(int n)
{
    std::vector<State> y0s;
    for (int i = 0; i < n; ++i)
        y0s.push_back(State{{1.0, 0.5 + 0.01 * i, 0.0, 0.2}});
    return y0s;
}

template <auto Kernel>
void integral_values(benchmark::State& state)
{
    const FirstIntegralSet set(kParams);
    const auto& traj = trajectory();
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(set, traj));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(traj.states.size()));
}

template <auto Kernel>
void integrals_along_flow(benchmark::State& state)
{
    const FirstIntegralSet set(kParams);
    const auto sol = exact_flow(kParams, default_initial_state(kParams.case_id));
    const auto t = times(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(set, sol, t));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void ensemble_integration(benchmark::State& state)
{
    const auto tab = method_tableau("gauss2");
    const auto f = vector_field(kParams);
    const auto y0s = ensemble(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(tab, f, 0.0, y0s, 0.01, 1000, SolverConfig{}));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 1000);
}

}  // namespace

BENCHMARK(integral_values<kernels::integral_values_serial>)->Name("integral_values/serial");
BENCHMARK(integral_values<kernels::integral_values_parallel>)->Name("integral_values/parallel");
BENCHMARK(integrals_along_flow<kernels::integrals_along_flow_serial>)
    ->Name("integrals_along_flow/serial")
    ->Arg(1000)
    ->Arg(100000);
BENCHMARK(integrals_along_flow<kernels::integrals_along_flow_parallel>)
    ->Name("integrals_along_flow/parallel")
    ->Arg(1000)
    ->Arg(100000);
BENCHMARK(ensemble_integration<kernels::integrate_ensemble_serial>)->Name("ensemble/serial")->Arg(8);
BENCHMARK(ensemble_integration<kernels::integrate_ensemble_parallel>)->Name("ensemble/parallel")->Arg(8);

BENCHMARK_MAIN();
