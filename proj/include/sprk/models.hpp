#pragma once

#include "sprk/irk.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sprk {

/// The three harmonic-oscillator systems y'' = -k^2 y.
///   CaseI    k^2 = 1, y real.               State (y, y').
///   CaseII   k^2 = 1, y = f + ig.           State (f, g, f', g').
///   CaseIII  k = alpha1 + i alpha2, y = f + ig. State (f, g, f', g').
enum class CaseId { CaseI, CaseII, CaseIII };

std::string_view to_string(CaseId c);
/// Accepts "1"/"I"/"case1"/"CaseI" and the analogues for II and III.
CaseId parse_case(std::string_view name);

struct OscillatorParams {
    CaseId case_id = CaseId::CaseI;
    double alpha1 = 1.0;  // ignored for CaseI/CaseII
    double alpha2 = 0.0;  // ignored for CaseI/CaseII

    /// Throws std::invalid_argument when CaseIII has alpha1 = alpha2 = 0.
    void validate() const;
};

int state_dim(CaseId c);
std::vector<std::string> state_labels(CaseId c);

/// Constant matrix A with y' = A y.
Eigen::MatrixXd system_matrix(const OscillatorParams& p);

VectorField vector_field(const OscillatorParams& p);

}  // namespace sprk
