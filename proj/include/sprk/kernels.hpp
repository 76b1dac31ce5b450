#pragma once

// Data-parallel kernels. Every *_parallel function has a *_serial twin that
// computes the same thing in a plain loop; the two must agree bit for bit,
// since each output element depends on its own input sample only.

#include "sprk/integrals.hpp"
#include "sprk/oracle.hpp"

#include <span>
#include <vector>

namespace sprk::kernels {

/// values(n, k) = I_k(t_n, y_n) over all samples of the trajectory.
Eigen::MatrixXd integral_values_serial(const FirstIntegralSet& set, const Trajectory& traj);
Eigen::MatrixXd integral_values_parallel(const FirstIntegralSet& set, const Trajectory& traj);

/// Exact states at the given times, one column per sample.
Eigen::MatrixXd sample_flow_serial(const ExactSolution& exact, std::span<const double> times);
Eigen::MatrixXd sample_flow_parallel(const ExactSolution& exact, std::span<const double> times);

/// values(n, k) = I_k(t_n, exact(t_n)); the oracle-constancy workload.
Eigen::MatrixXd integrals_along_flow_serial(const FirstIntegralSet& set, const ExactSolution& exact,
                                            std::span<const double> times);
Eigen::MatrixXd integrals_along_flow_parallel(const FirstIntegralSet& set, const ExactSolution& exact,
                                              std::span<const double> times);

/// Independent fixed-step integrations (one per initial state), each a full
/// sequential integrate() run; only the outer loop is parallel.
std::vector<Trajectory> integrate_ensemble_serial(const ButcherTableau& tab, const VectorField& f, double t0,
                                                  std::span<const State> initial_states, double h, long n,
                                                  const SolverConfig& cfg = {});
std::vector<Trajectory> integrate_ensemble_parallel(const ButcherTableau& tab, const VectorField& f, double t0,
                                                    std::span<const State> initial_states, double h, long n,
                                                    const SolverConfig& cfg = {});

int max_threads();

}  // namespace sprk::kernels
