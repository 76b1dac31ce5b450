#pragma once

#include "sprk/models.hpp"

namespace sprk {

/// Closed-form solution of one oscillator case from a given initial state
/// at t = 0. Same state layout as the models.
class ExactSolution {
public:
    ExactSolution(const OscillatorParams& params, State y0);

    State eval(double t) const;
    State operator()(double t) const { return eval(t); }

    const OscillatorParams& params() const { return params_; }
    const State& initial_state() const { return y0_; }

private:
    OscillatorParams params_;
    State y0_;
};

/// CaseI/II rotate each (position, velocity) block; CaseIII evaluates
/// w(t) = w0 cos(kt) + (w0'/k) sin(kt) in complex arithmetic.
ExactSolution exact_flow(const OscillatorParams& params, const State& y0);

}  // namespace sprk
