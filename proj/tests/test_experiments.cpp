#include "sprk/experiments.hpp"

#include "sprk/models.hpp"

#include <gtest/gtest.h>

using namespace sprk;

TEST(Methods, BuiltinsResolve)
{
    for (const auto& name : builtin_methods()) {
        const auto tab = method_tableau(name);
        EXPECT_LE(diagnostics(tab).symplectic_residual, 1e-12) << name;
    }
    EXPECT_EQ(method_tableau("gauss3").stages(), 3);
    EXPECT_THROW(method_tableau("rk4"), std::invalid_argument);
}

TEST(Methods, OrderBands)
{
    EXPECT_EQ(order_band("gauss2"), (std::pair{3.8, 4.2}));
    EXPECT_EQ(order_band("radau1_2"), (std::pair{2.8, 3.2}));
    EXPECT_EQ(order_band("radau2_2"), (std::pair{2.8, 3.2}));
    EXPECT_EQ(order_band("gauss1"), (std::pair{1.8, 2.2}));
    EXPECT_FALSE(order_band("lobatto_2").has_value());
}

TEST(Defaults, PerCase)
{
    EXPECT_EQ(default_initial_state(CaseId::CaseI), (State{{1.0, 0.0}}));
    EXPECT_EQ(default_initial_state(CaseId::CaseIII), (State{{1.0, 0.5, 0.0, 0.2}}));
    EXPECT_EQ(default_steps(CaseId::CaseII), 10000);
    EXPECT_EQ(default_steps(CaseId::CaseIII), 2000);
    EXPECT_EQ(default_validation_horizon(CaseId::CaseI), 100.0);
    EXPECT_EQ(default_validation_horizon(CaseId::CaseIII), 20.0);
}

TEST(Boundedness, ChecksFollowThresholds)
{
    ErrorSeries s;
    s.label = "Q";
    s.autonomous = true;
    s.absolute.max_error = 5e-10;
    EXPECT_TRUE(check_boundedness(s).passed);
    s.absolute.max_error = 2e-9;
    EXPECT_FALSE(check_boundedness(s).passed);

    ErrorSeries d;
    d.label = "T";
    d.absolute = {1e-10, 1e-10, 1e-11, 1e-10, 1.9e-10};
    EXPECT_TRUE(check_boundedness(d).passed);
    d.absolute.second_half_max = 2.1e-10;
    EXPECT_FALSE(check_boundedness(d).passed);
    d.absolute.second_half_max = 1e-10;
    d.absolute.drift_slope = -2e-9;
    EXPECT_FALSE(check_boundedness(d).passed);
}

TEST(Invariants, ExplicitEulerFailsQuadraticCheck)
{
    const auto run = run_invariants(explicit_euler(), OscillatorParams{CaseId::CaseI}, State{{1.0, 0.0}}, 0.01, 1000);
    EXPECT_FALSE(run.checks[0].passed);
    EXPECT_FALSE(run.all_passed);
}

TEST(Invariants, GaussTwoKeepsAutonomousIntegrals)
{
    const OscillatorParams p{CaseId::CaseII};
    const auto run = run_invariants(method_tableau("gauss2"), p, default_initial_state(p.case_id), 0.01, 2000);
    ASSERT_EQ(run.series.size(), 10u);
    EXPECT_TRUE(run.checks[8].passed);
    EXPECT_TRUE(run.checks[9].passed);
    EXPECT_EQ(run.trajectory.steps(), 2000);
}

TEST(Convergence, GaussOneIsSecondOrder)
{
    const std::vector<double> hs{0.1, 0.05, 0.025, 0.0125};
    const auto study = convergence_study(method_tableau("gauss1"), OscillatorParams{CaseId::CaseI},
                                         State{{1.0, 0.0}}, hs);
    ASSERT_EQ(study.points.size(), 4u);
    EXPECT_EQ(study.points[3].steps, 80);
    EXPECT_NEAR(study.slope, 2.0, 0.2);
}

TEST(Convergence, GaussThreeIsSixthOrder)
{
    const std::vector<double> hs{0.4, 0.2, 0.1, 0.05};
    const auto study = convergence_study(method_tableau("gauss3"), OscillatorParams{CaseId::CaseIII, 1.0, 0.1},
                                         default_initial_state(CaseId::CaseIII), hs, 2.0);
    EXPECT_NEAR(study.slope, 6.0, 0.2);
}

TEST(Convergence, RejectsBadGrids)
{
    const auto tab = method_tableau("gauss2");
    const OscillatorParams p{CaseId::CaseI};
    const State y0{{1.0, 0.0}};
    EXPECT_THROW(convergence_study(tab, p, y0, std::vector<double>{0.1, 0.05}), std::invalid_argument);
    EXPECT_THROW(convergence_study(tab, p, y0, std::vector<double>{0.1, 0.03, 0.025}), std::invalid_argument);
}

TEST(Validation, ReportsPublishedFormsSeparately)
{
    const auto rep = validate_integrals(OscillatorParams{CaseId::CaseII}, default_initial_state(CaseId::CaseII), 100.0);
    ASSERT_EQ(rep.entries.size(), 11u);
    EXPECT_TRUE(rep.all_implemented_passed);
    const auto& pub = rep.entries.back();
    EXPECT_FALSE(pub.implemented);
    EXPECT_EQ(pub.replaces, "I51");
    EXPECT_FALSE(pub.passed);
}
