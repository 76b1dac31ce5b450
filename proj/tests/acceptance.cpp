// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "sprk/experiments.hpp"
#include "sprk/integrals.hpp"
#include "sprk/irk.hpp"
#include "sprk/models.hpp"
#include "sprk/oracle.hpp"
#include "sprk/tableau.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace sprk;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            passed = false;
            failures.push_back(what);
        }
    }
};

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return (a - b).cwiseAbs().maxCoeff(); }

ButcherTableau exact_tableau(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double> c)
{
    const int s = static_cast<int>(b.size());
    Eigen::MatrixXd am(s, s);
    Eigen::VectorXd bv(s), cv(s);
    for (int i = 0; i < s; ++i) {
        bv(i) = b[i];
        cv(i) = c[i];
        for (int j = 0; j < s; ++j)
            am(i, j) = a[i][j];
    }
    return ButcherTableau(am, bv, cv);
}

// 1. Constructed two-stage Gauss / Radau I / Radau II against the exact rational tableaux.
void golden_tableaux(Outcome& o)
{
    const double r = std::sqrt(3.0) / 6;
    const struct {
        const char* method;
        ButcherTableau expected;
    } cases[] = {
        {"gauss2", exact_tableau({{0.25, 0.25 - r}, {0.25 + r, 0.25}}, {0.5, 0.5}, {0.5 - r, 0.5 + r})},
        {"radau1_2", exact_tableau({{1.0 / 8, -1.0 / 8}, {7.0 / 24, 3.0 / 8}}, {0.25, 0.75}, {0.0, 2.0 / 3})},
        {"radau2_2", exact_tableau({{3.0 / 8, -1.0 / 24}, {7.0 / 8, 1.0 / 8}}, {0.75, 0.25}, {1.0 / 3, 1.0})},
    };
    for (const auto& c : cases) {
        const auto got = method_tableau(c.method);
        const double dev = std::max({max_abs_diff(got.a(), c.expected.a()), max_abs_diff(got.b(), c.expected.b()),
                                     max_abs_diff(got.c(), c.expected.c())});
        o.detail << ' ' << c.method << "=" << sci(dev);
        o.require(dev <= 1e-13, std::string(c.method) + " deviates");
    }
}

// 2. Symplecticity residual of every constructed tableau; explicit Euler gives 1.
void symplecticity(Outcome& o)
{
    double worst = 0.0;
    for (const auto& name : builtin_methods())
        worst = std::max(worst, diagnostics(method_tableau(name)).symplectic_residual);
    for (int s = 1; s <= 6; ++s)
        worst = std::max(worst, diagnostics(construct_gauss(s)).symplectic_residual);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 100; ++k) {
        double c1 = u(rng), c2 = u(rng);
        if (std::abs(c2 - c1) < 0.05 || std::abs(c1 + c2 - 1.0) < 0.05)
            continue;
        if (c1 > c2)
            std::swap(c1, c2);
        worst = std::max(worst, diagnostics(construct_symplectic_2stage(c1, c2)).symplectic_residual);
    }
    const double euler = diagnostics(explicit_euler()).symplectic_residual;
    o.detail << " max residual " << sci(worst) << ", explicit Euler " << euler;
    o.require(worst <= 1e-12, "residual above 1e-12");
    o.require(euler == 1.0, "explicit Euler residual is not 1");
}

// 3. Every implemented first integral is constant along the exact flow.
void formula_validation(Outcome& o)
{
    const OscillatorParams cases[] = {{CaseId::CaseI}, {CaseId::CaseII}, {CaseId::CaseIII, 1.0, 0.1}};
    int implemented = 0, constant = 0;
    for (const auto& p : cases) {
        const auto rep = validate_integrals(p, default_initial_state(p.case_id), default_validation_horizon(p.case_id),
                                            1000);
        double worst = 0.0;
        for (const auto& e : rep.entries) {
            if (e.implemented) {
                ++implemented;
                constant += e.passed ? 1 : 0;
                worst = std::max(worst, e.max_deviation);
                o.require(e.passed, "case " + std::string(to_string(p.case_id)) + " " + e.label + " not constant");
            } else {
                o.detail << ' ' << e.label << " deviates " << sci(e.max_deviation);
                if (e.label == "I51_published")
                    o.require(!e.passed, "published I51 unexpectedly constant");
            }
        }
        o.detail << " case " << to_string(p.case_id) << " worst " << sci(worst) << ';';
    }
    o.detail << ' ' << constant << '/' << implemented << " constant";
    o.require(implemented == 25, "expected 25 implemented integrals");
}

// 4. Gauss s=2, h=0.01: autonomous integrals conserved, time-dependent ones bounded.
void experiment_reproduction(Outcome& o)
{
    const auto tab = method_tableau("gauss2");
    const OscillatorParams cases[] = {{CaseId::CaseI}, {CaseId::CaseII}, {CaseId::CaseIII, 1.0, 0.1}};
    for (const auto& p : cases) {
        const long steps = default_steps(p.case_id);
        const auto run = run_invariants(tab, p, default_initial_state(p.case_id), 0.01, steps);
        double worst_auto = 0.0, worst_ratio = 0.0, worst_slope = 0.0;
        for (std::size_t k = 0; k < run.series.size(); ++k) {
            const auto& s = run.series[k].absolute;
            if (run.series[k].autonomous) {
                worst_auto = std::max(worst_auto, s.max_error);
            } else {
                if (s.first_half_max > 0.0)
                    worst_ratio = std::max(worst_ratio, s.second_half_max / s.first_half_max);
                worst_slope = std::max(worst_slope, std::abs(s.drift_slope));
            }
            o.require(run.checks[k].passed,
                      "case " + std::string(to_string(p.case_id)) + " " + run.checks[k].label + ": " +
                          run.checks[k].detail);
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, " case %s (n=%ld): autonomous max %s, half ratio max %.6f, |slope| max %s;",
                      std::string(to_string(p.case_id)).c_str(), steps, sci(worst_auto).c_str(), worst_ratio,
                      sci(worst_slope).c_str());
        o.detail << buf;
    }
}

// 5. Empirical orders on Case I against the oracle.
void convergence_orders(Outcome& o)
{
    const std::vector<double> hs{0.1, 0.05, 0.025, 0.0125};
    const OscillatorParams p{CaseId::CaseI};
    for (const char* m : {"gauss2", "radau1_2", "radau2_2", "gauss1"}) {
        const auto study = convergence_study(method_tableau(m), p, State{{1.0, 0.0}}, hs, 1.0);
        const auto band = *order_band(m);
        char buf[96];
        std::snprintf(buf, sizeof buf, " %s slope %.3f (band [%.1f, %.1f]);", m, study.slope, band.first, band.second);
        o.detail << buf;
        o.require(study.slope >= band.first && study.slope <= band.second, std::string(m) + " slope out of band");
    }
}

// 6. Two independent constructions agree; three-stage Gauss weights.
void cross_construction(Outcome& o)
{
    const auto nodes2 = nodes(NodeFamily::Gauss, 2);
    const auto a = construct_gauss(2), b = construct_symplectic_2stage(nodes2[0], nodes2[1]);
    const double dev =
        std::max({max_abs_diff(a.a(), b.a()), max_abs_diff(a.b(), b.b()), max_abs_diff(a.c(), b.c())});
    const Eigen::Vector3d w(5.0 / 18, 4.0 / 9, 5.0 / 18);
    const double wdev = max_abs_diff(construct_gauss(3).b(), w);
    o.detail << " gauss2 constructions differ by " << sci(dev) << ", gauss3 weights by " << sci(wdev);
    o.require(dev <= 1e-13, "two-stage constructions disagree");
    o.require(wdev <= 1e-12, "gauss3 weights");
}

// 7. Case I: I2^2 + I3^2 = 2 I1 and I4^2 + I5^2 = I1^2.
void dependence_identities(Outcome& o)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> t(-100.0, 100.0), y(-5.0, 5.0);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const auto v = case1_integrals(t(rng), y(rng), y(rng));
        worst = std::max(worst, std::abs(v[1] * v[1] + v[2] * v[2] - 2 * v[0]) / (2 * v[0]));
        worst = std::max(worst, std::abs(v[3] * v[3] + v[4] * v[4] - v[0] * v[0]) / (v[0] * v[0]));
    }
    o.detail << " max relative residual " << sci(worst);
    o.require(worst <= 1e-12, "identity residual above 1e-12");
}

// 8. Gauss s=2 against the oracle at T=100, then integrate back to t=0.
void reversibility(Outcome& o)
{
    const auto tab = method_tableau("gauss2");
    const OscillatorParams p{CaseId::CaseI};
    const auto f = vector_field(p);
    const State y0{{1.0, 0.0}};
    const double h = 0.01;
    const long n = 10000;
    const auto traj = integrate(tab, f, 0.0, y0, h, n);
    const double t_end = traj.time(traj.steps());
    const double err = (traj.states.back() - exact_flow(p, y0).eval(t_end)).lpNorm<Eigen::Infinity>();
    State y = traj.states.back();
    double t = t_end;
    for (long k = 0; k < n; ++k) {
        y = irk_step(tab, f, t, y, -h).y;
        t -= h;
    }
    const double back = (y - y0).lpNorm<Eigen::Infinity>();
    o.detail << " oracle error at T=100 " << sci(err) << ", return error " << sci(back);
    o.require(err <= 2e-9, "oracle error above 2e-9");
    o.require(back <= 1e-9, "return error above 1e-9");
}

}  // namespace

int main()
{
    const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
        {"tableau golden values", golden_tableaux},
        {"symplecticity", symplecticity},
        {"first-integral formulas constant along exact flow", formula_validation},
        {"invariant preservation, gauss2 h=0.01", experiment_reproduction},
        {"convergence orders on case I", convergence_orders},
        {"cross-construction consistency", cross_construction},
        {"case I dependence identities", dependence_identities},
        {"oracle agreement and reversibility", reversibility},
    };
    int failed = 0, index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            check(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += o.passed ? 0 : 1;
        std::printf("criterion %d %s: %s (%.2fs)%s\n", index, o.passed ? "PASS" : "FAIL", name, secs,
                    o.detail.str().c_str());
        for (const auto& f : o.failures)
            std::printf("    failed: %s\n", f.c_str());
    }
    std::printf("%d of %d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
