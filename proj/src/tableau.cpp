#include "sprk/tableau.hpp"

#include "sprk/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sprk {

ButcherTableau::ButcherTableau(Eigen::MatrixXd a, Eigen::VectorXd b, Eigen::VectorXd c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
{
    const auto s = b_.size();
    if (s < 1)
        throw std::invalid_argument("ButcherTableau: need at least one stage");
    if (c_.size() != s || a_.rows() != s || a_.cols() != s)
        throw std::invalid_argument("ButcherTableau: a, b, c dimensions disagree");
    if (!a_.allFinite() || !b_.allFinite() || !c_.allFinite())
        throw std::invalid_argument("ButcherTableau: non-finite coefficient");
    for (Eigen::Index i = 0; i < s; ++i) {
        if (c_(i) < 0.0 || c_(i) > 1.0)
            throw std::invalid_argument("ButcherTableau: node outside [0,1]");
        if (i > 0 && !(c_(i) > c_(i - 1)))
            throw std::invalid_argument("ButcherTableau: nodes must be strictly increasing");
    }
}

TableauDiagnostics diagnostics(const ButcherTableau& t)
{
    const int s = t.stages();
    TableauDiagnostics d;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            d.symplectic_residual = std::max(
                d.symplectic_residual, std::abs(t.b(i) * t.a(i, j) + t.b(j) * t.a(j, i) - t.b(i) * t.b(j)));
    d.weight_sum_residual = std::abs(t.b().sum() - 1.0);
    d.node_moment_residual = std::abs(t.b().dot(t.c()) - 0.5);
    for (int i = 0; i < s; ++i)
        d.row_sum_residual = std::max(d.row_sum_residual, std::abs(t.a().row(i).sum() - t.c(i)));
    return d;
}

std::string_view to_string(NodeFamily f)
{
    switch (f) {
    case NodeFamily::Gauss: return "gauss";
    case NodeFamily::RadauI: return "radau1";
    case NodeFamily::RadauII: return "radau2";
    case NodeFamily::LobattoIII: return "lobatto";
    }
    return "?";
}

NodeFamily parse_node_family(std::string_view name)
{
    std::string n(name);
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (n == "gauss")
        return NodeFamily::Gauss;
    if (n == "radau1" || n == "radaui")
        return NodeFamily::RadauI;
    if (n == "radau2" || n == "radauii")
        return NodeFamily::RadauII;
    if (n == "lobatto" || n == "lobatto3" || n == "lobattoiii")
        return NodeFamily::LobattoIII;
    throw std::invalid_argument("unknown node family '" + n + "'");
}

std::vector<double> nodes(NodeFamily family, int s)
{
    const int min_s = family == NodeFamily::Gauss ? 1 : 2;
    if (s < min_s || s > kMaxLegendreDegree)
        throw std::invalid_argument("nodes: invalid stage count " + std::to_string(s) + " for family " +
                                    std::string(to_string(family)));
    Polynomial p;
    switch (family) {
    case NodeFamily::Gauss: p = shifted_legendre(s); break;
    case NodeFamily::RadauI: p = shifted_legendre(s) + shifted_legendre(s - 1); break;
    case NodeFamily::RadauII: p = shifted_legendre(s) - shifted_legendre(s - 1); break;
    case NodeFamily::LobattoIII: p = shifted_legendre(s) - shifted_legendre(s - 2); break;
    }
    auto roots = real_roots_in_unit_interval(p);
    if (static_cast<int>(roots.size()) != s)
        throw std::runtime_error("nodes: expected " + std::to_string(s) + " roots, found " +
                                 std::to_string(roots.size()));
    return roots;
}

ButcherTableau construct_symplectic_2stage(double c1, double c2)
{
    if (!(c1 >= 0.0 && c2 <= 1.0))
        throw std::invalid_argument("construct_symplectic_2stage: nodes must lie in [0,1]");
    if (!(c1 < c2))
        throw std::invalid_argument("construct_symplectic_2stage: need distinct nodes with c1 < c2");

    const double b2 = (0.5 - c1) / (c2 - c1);
    const double b1 = (0.5 - c2) / (c1 - c2);
    if (std::abs(b1) < 1e-12 || std::abs(b2) < 1e-12)
        throw std::invalid_argument("construct_symplectic_2stage: a node at 1/2 makes a weight vanish");

    const double d = c2 - c1;
    Eigen::MatrixXd a(2, 2);
    a(0, 0) = (1.0 / 8 - c2 / 3 - c2 / 6 + c2 * c2 / 2) / (b1 * d * d);
    a(0, 1) = (1.0 / 8 - c1 / 3 - c2 / 6 + c1 * c2 / 2) / (b1 * (-d) * d);
    a(1, 0) = (1.0 / 8 - c2 / 3 - c1 / 6 + c1 * c2 / 2) / (b2 * d * (-d));
    a(1, 1) = (1.0 / 8 - c1 / 3 - c1 / 6 + c1 * c1 / 2) / (b2 * d * d);
    return ButcherTableau(std::move(a), Eigen::Vector2d(b1, b2), Eigen::Vector2d(c1, c2));
}

ButcherTableau construct_gauss(int s)
{
    if (s < 1 || s > 6)
        throw std::invalid_argument("construct_gauss: stage count must be in 1..6");
    const auto c_nodes = nodes(NodeFamily::Gauss, s);
    const Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(c_nodes.data(), s);

    // vt(k, i) = c_i^k, the transposed Vandermonde matrix.
    Eigen::MatrixXd vt(s, s);
    for (int i = 0; i < s; ++i) {
        double pw = 1.0;
        for (int k = 0; k < s; ++k) {
            vt(k, i) = pw;
            pw *= c(i);
        }
    }
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(vt);
    if (!lu.isInvertible())
        throw std::runtime_error("construct_gauss: singular Vandermonde system");

    // sum_i b_i c_i^(k-1) = 1/k
    Eigen::VectorXd rhs(s);
    for (int k = 0; k < s; ++k)
        rhs(k) = 1.0 / (k + 1);
    const Eigen::VectorXd b = lu.solve(rhs);

    // sum_j a_ij c_j^(k-1) = c_i^k / k
    Eigen::MatrixXd rhs_a(s, s);
    for (int i = 0; i < s; ++i) {
        double pw = c(i);
        for (int k = 0; k < s; ++k) {
            rhs_a(k, i) = pw / (k + 1);
            pw *= c(i);
        }
    }
    const Eigen::MatrixXd a = lu.solve(rhs_a).transpose();
    if (!a.allFinite() || !b.allFinite())
        throw std::runtime_error("construct_gauss: linear solve failed");
    return ButcherTableau(a, b, c);
}

ButcherTableau explicit_euler()
{
    return ButcherTableau(Eigen::MatrixXd::Zero(1, 1), Eigen::VectorXd::Ones(1), Eigen::VectorXd::Zero(1));
}

namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_tableau(std::ostream& os, const ButcherTableau& t)
{
    const int s = t.stages();
    os << "s=" << s << '\n';
    for (int i = 0; i < s; ++i) {
        os << num(t.c(i)) << " |";
        for (int j = 0; j < s; ++j)
            os << ' ' << num(t.a(i, j));
        os << '\n';
    }
    os << "b:";
    for (int i = 0; i < s; ++i)
        os << ' ' << num(t.b(i));
    os << '\n';
}

std::string format_tableau(const ButcherTableau& t)
{
    std::ostringstream os;
    write_tableau(os, t);
    return os.str();
}

ButcherTableau read_tableau(std::istream& is)
{
    auto fail = [](const std::string& what) -> ButcherTableau {
        throw std::runtime_error("tableau text: " + what);
    };
    std::string line;
    if (!std::getline(is, line) || line.rfind("s=", 0) != 0)
        return fail("expected 's=<n>' header");
    int s = 0;
    try {
        s = std::stoi(line.substr(2));
    } catch (const std::exception&) {
        return fail("bad stage count");
    }
    if (s < 1)
        return fail("stage count must be positive");

    Eigen::MatrixXd a(s, s);
    Eigen::VectorXd b(s), c(s);
    for (int i = 0; i < s; ++i) {
        if (!std::getline(is, line))
            return fail("missing row " + std::to_string(i + 1));
        const auto bar = line.find('|');
        if (bar == std::string::npos)
            return fail("row " + std::to_string(i + 1) + " lacks '|'");
        std::istringstream lhs(line.substr(0, bar)), rhs(line.substr(bar + 1));
        if (!(lhs >> c(i)))
            return fail("bad node in row " + std::to_string(i + 1));
        for (int j = 0; j < s; ++j)
            if (!(rhs >> a(i, j)))
                return fail("row " + std::to_string(i + 1) + " has fewer than s coefficients");
        std::string extra;
        if (rhs >> extra)
            return fail("row " + std::to_string(i + 1) + " has more than s coefficients");
    }
    if (!std::getline(is, line) || line.rfind("b:", 0) != 0)
        return fail("expected 'b:' weights line");
    std::istringstream bs(line.substr(2));
    for (int i = 0; i < s; ++i)
        if (!(bs >> b(i)))
            return fail("weights line has fewer than s entries");
    return ButcherTableau(std::move(a), std::move(b), std::move(c));
}

ButcherTableau parse_tableau(const std::string& text)
{
    std::istringstream is(text);
    return read_tableau(is);
}

}  // namespace sprk
