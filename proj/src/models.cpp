#include "sprk/models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace sprk {

std::string_view to_string(CaseId c)
{
    switch (c) {
    case CaseId::CaseI: return "I";
    case CaseId::CaseII: return "II";
    case CaseId::CaseIII: return "III";
    }
    return "?";
}

CaseId parse_case(std::string_view name)
{
    std::string n(name);
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (n.rfind("case", 0) == 0)
        n = n.substr(4);
    if (n == "1" || n == "i")
        return CaseId::CaseI;
    if (n == "2" || n == "ii")
        return CaseId::CaseII;
    if (n == "3" || n == "iii")
        return CaseId::CaseIII;
    throw std::invalid_argument("unknown case '" + std::string(name) + "'");
}

void OscillatorParams::validate() const
{
    if (!std::isfinite(alpha1) || !std::isfinite(alpha2))
        throw std::invalid_argument("OscillatorParams: alpha1/alpha2 must be finite");
    if (case_id == CaseId::CaseIII && alpha1 == 0.0 && alpha2 == 0.0)
        throw std::invalid_argument("OscillatorParams: CaseIII needs k = alpha1 + i alpha2 != 0");
}

int state_dim(CaseId c) { return c == CaseId::CaseI ? 2 : 4; }

std::vector<std::string> state_labels(CaseId c)
{
    if (c == CaseId::CaseI)
        return {"y", "yp"};
    return {"f", "g", "fp", "gp"};
}

Eigen::MatrixXd system_matrix(const OscillatorParams& p)
{
    p.validate();
    if (p.case_id == CaseId::CaseI) {
        Eigen::MatrixXd a(2, 2);
        a << 0, 1,
            -1, 0;
        return a;
    }
    // Real and imaginary parts of k^2; CaseII is k^2 = 1.
    double kr = 1.0, ki = 0.0;
    if (p.case_id == CaseId::CaseIII) {
        kr = p.alpha1 * p.alpha1 - p.alpha2 * p.alpha2;
        ki = 2.0 * p.alpha1 * p.alpha2;
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 4);
    a(0, 2) = 1.0;
    a(1, 3) = 1.0;
    a(2, 0) = -kr;
    a(2, 1) = ki;
    a(3, 0) = -ki;
    a(3, 1) = -kr;
    return a;
}

VectorField vector_field(const OscillatorParams& p)
{
    const Eigen::MatrixXd a = system_matrix(p);
    VectorField f;
    f.dim = static_cast<int>(a.rows());
    f.eval = [a](double, const State& y) -> State { return a * y; };
    f.jacobian = [a](double, const State&) -> Eigen::MatrixXd { return a; };
    return f;
}

}  // namespace sprk
