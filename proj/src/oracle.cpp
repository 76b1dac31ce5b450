#include "sprk/oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace sprk {

ExactSolution::ExactSolution(const OscillatorParams& params, State y0) : params_(params), y0_(std::move(y0))
{
    params_.validate();
    if (y0_.size() != state_dim(params_.case_id))
        throw std::invalid_argument("exact_flow: initial state has wrong dimension");
}

State ExactSolution::eval(double t) const
{
    State out(y0_.size());
    if (params_.case_id != CaseId::CaseIII) {
        const double c = std::cos(t), s = std::sin(t);
        const int blocks = y0_.size() / 2;
        for (int b = 0; b < blocks; ++b) {
            const double pos = y0_(b), vel = y0_(b + blocks);
            out(b) = pos * c + vel * s;
            out(b + blocks) = -pos * s + vel * c;
        }
        return out;
    }
    using cplx = std::complex<double>;
    const cplx k(params_.alpha1, params_.alpha2);
    const cplx w0(y0_(0), y0_(1));
    const cplx dw0(y0_(2), y0_(3));
    const cplx ckt = std::cos(k * t), skt = std::sin(k * t);
    const cplx w = w0 * ckt + dw0 / k * skt;
    const cplx dw = -k * w0 * skt + dw0 * ckt;
    out << w.real(), w.imag(), dw.real(), dw.imag();
    return out;
}

ExactSolution exact_flow(const OscillatorParams& params, const State& y0) { return ExactSolution(params, y0); }

}  // namespace sprk
