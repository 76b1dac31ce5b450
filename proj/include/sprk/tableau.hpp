#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sprk {

/// Coefficients (a, b, c) of an s-stage Runge-Kutta method.
///
/// Construction validates the shape, that every node lies in [0,1] and that
/// the nodes are strictly increasing. Immutable afterwards.
class ButcherTableau {
public:
    ButcherTableau(Eigen::MatrixXd a, Eigen::VectorXd b, Eigen::VectorXd c);

    int stages() const { return static_cast<int>(b_.size()); }
    const Eigen::MatrixXd& a() const { return a_; }
    const Eigen::VectorXd& b() const { return b_; }
    const Eigen::VectorXd& c() const { return c_; }
    double a(int i, int j) const { return a_(i, j); }
    double b(int i) const { return b_(i); }
    double c(int i) const { return c_(i); }

private:
    Eigen::MatrixXd a_;
    Eigen::VectorXd b_;
    Eigen::VectorXd c_;
};

struct TableauDiagnostics {
    double symplectic_residual = 0.0;  // max_ij |b_i a_ij + b_j a_ji - b_i b_j|
    double weight_sum_residual = 0.0;  // |sum b_i - 1|
    double node_moment_residual = 0.0; // |sum b_i c_i - 1/2|
    double row_sum_residual = 0.0;     // max_i |sum_j a_ij - c_i|
};

TableauDiagnostics diagnostics(const ButcherTableau& t);

enum class NodeFamily { Gauss, RadauI, RadauII, LobattoIII };

std::string_view to_string(NodeFamily f);
/// Accepts "gauss", "radau1", "radau2", "lobatto" (case-insensitive).
NodeFamily parse_node_family(std::string_view name);

/// Quadrature nodes of the given family:
///   Gauss      zeros of P*_s
///   RadauI     zeros of P*_s + P*_{s-1}   (contains 0)
///   RadauII    zeros of P*_s - P*_{s-1}   (contains 1)
///   LobattoIII zeros of P*_s - P*_{s-2}   (contains 0 and 1)
std::vector<double> nodes(NodeFamily family, int s);

/// Two-stage symplectic method from its nodes via the closed-form solution of
/// the symplecticity condition and the order-two conditions.
/// Requires 0 <= c1 < c2 <= 1 and neither node equal to 1/2 (that would make a
/// weight vanish).
ButcherTableau construct_symplectic_2stage(double c1, double c2);

/// s-stage Gauss-Legendre collocation method, 1 <= s <= 6.
ButcherTableau construct_gauss(int s);

/// Explicit Euler, the non-symplectic control case.
ButcherTableau explicit_euler();

// Text format:
//   s=<n>
//   c_i | a_i1 ... a_is        (s lines)
//   b: b_1 ... b_s
// all numbers printed with 17 significant digits.
void write_tableau(std::ostream& os, const ButcherTableau& t);
std::string format_tableau(const ButcherTableau& t);
ButcherTableau read_tableau(std::istream& is);
ButcherTableau parse_tableau(const std::string& text);

}  // namespace sprk
