#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "cascade/bloch.hpp"
#include "cascade/errors.hpp"
#include "cascade/model.hpp"
#include "param_grid.hpp"

using namespace cascade;
using cascade::testing::plot_point;
using cascade::testing::random_params;

TEST(BlochRhs, VanishesAtClosedFormSteadyState) {
    const auto p = plot_point(0.3, 0.6);
    const auto d = bloch_rhs(BlochState::from_steady(atomic_steady_state(p)), p);
    EXPECT_LE(d.max_norm(), 1e-12);
}

TEST(BlochRhs, GroundStateDrivesCoherence) {
    const auto d = bloch_rhs(BlochState::ground(), plot_point(0.3, 0.6));
    EXPECT_DOUBLE_EQ(d.sigma_c.real(), 0.6);
    EXPECT_EQ(d.eta_a, 0.0);
    EXPECT_EQ(d.eta_b, 0.0);
}

TEST(BlochRhs, LowerCoherenceFeedsUpper) {
    BlochState s;
    s.sigma_b = 1.0;
    const auto d = bloch_rhs(s, plot_point(0.3, 0.6));
    EXPECT_DOUBLE_EQ(d.sigma_a.real(), 0.6);
    EXPECT_DOUBLE_EQ(d.sigma_b.real(), -0.4);
}

TEST(BlochRhs, FixedPointOnRandomGrid) {
    for (const auto& p : random_params(150)) {
        const auto d = bloch_rhs(BlochState::from_steady(atomic_steady_state(p)), p);
        EXPECT_LE(d.max_norm(), 1e-12);
    }
}

TEST(IntegrateToSteady, FigurePointFromGround) {
    const auto p = plot_point(0.3, 0.6);
    const auto traj = integrate_to_steady(p, BlochState::ground(), 1e-10);
    ASSERT_TRUE(traj.converged);
    EXPECT_LE(traj.residual, 1e-10);
    EXPECT_NEAR(traj.final_state().eta_a, 0.20930232558140, 1e-8);
    EXPECT_LE(traj.step, 0.05 / std::max(p.total_decay(), p.epsilon) * (1 + 1e-15));
}

TEST(IntegrateToSteady, UndrivenAtomDecaysToBottom) {
    const auto p = plot_point(0.3, 0.0);
    BlochState init;
    init.eta_a = 0.4;
    init.eta_b = 0.35;
    const auto traj = integrate_to_steady(p, init, 1e-10);
    ASSERT_TRUE(traj.converged);
    const auto& f = traj.final_state();
    EXPECT_NEAR(f.eta_a, 0.0, 1e-9);
    EXPECT_NEAR(f.eta_b, 0.0, 1e-9);
    EXPECT_EQ(std::abs(f.sigma_c), 0.0);
}

TEST(IntegrateToSteady, SteadyInitialStateNeedsNoSteps) {
    const auto p = plot_point(0.3, 0.6);
    const auto traj = integrate_to_steady(p, BlochState::from_steady(atomic_steady_state(p)), 1e-10);
    EXPECT_TRUE(traj.converged);
    EXPECT_EQ(traj.samples.size(), 1u);
}

TEST(IntegrateToSteady, TrajectoryInvariants) {
    const auto p = plot_point(0.0, 1.7);
    const auto traj = integrate_to_steady(p, BlochState::ground(), 1e-10);
    ASSERT_TRUE(traj.converged);
    double previous = -1.0;
    double max_imag = 0.0;
    for (const auto& s : traj.samples) {
        EXPECT_GT(s.time, previous);
        previous = s.time;
        for (double v : {s.eta_a, s.eta_b, s.eta_c()}) {
            EXPECT_GE(v, -1e-9);
            EXPECT_LE(v, 1.0 + 1e-9);
        }
        max_imag = std::max({max_imag, std::abs(s.sigma_a.imag()), std::abs(s.sigma_b.imag()),
                             std::abs(s.sigma_c.imag())});
    }
    EXPECT_LE(max_imag, 1e-10);
}

TEST(IntegrateToSteady, MatchesClosedFormWithinTenTolerances) {
    for (const auto& p : random_params(25, 7)) {
        const double tol = 1e-10;
        const auto traj = integrate_to_steady(p, BlochState::ground(), tol);
        ASSERT_TRUE(traj.converged);
        const auto st = atomic_steady_state(p);
        const auto& f = traj.final_state();
        EXPECT_NEAR(f.sigma_c.real(), st.sigma_c, 10 * tol);
        EXPECT_NEAR(f.eta_a, st.eta_a, 10 * tol);
        EXPECT_NEAR(f.eta_b, st.eta_b, 10 * tol);
    }
}

TEST(IntegrateToSteady, HorizonRaisesNonConvergence) {
    try {
        integrate_to_steady(plot_point(0.3, 0.6), BlochState::ground(), 1e-300);
        FAIL() << "expected NonConvergence";
    } catch (const NonConvergence& e) {
        EXPECT_GT(e.residual(), 0.0);
    }
}

TEST(LinearSolve, AgreesWithClosedForm) {
    const auto p = plot_point(0.3, 0.6);
    const auto a = steady_state_by_linear_solve(p);
    const auto b = atomic_steady_state(p);
    EXPECT_NEAR(a.sigma_c, b.sigma_c, 1e-12);
    EXPECT_NEAR(a.eta_a, b.eta_a, 1e-12);
    EXPECT_NEAR(a.eta_b, b.eta_b, 1e-12);
    EXPECT_NEAR(a.eta_c, b.eta_c, 1e-12);
    EXPECT_NEAR(a.sigma_a, 0.0, 1e-12);
    EXPECT_NEAR(a.sigma_b, 0.0, 1e-12);
}

TEST(LinearSolve, UndrivenAtom) {
    const auto a = steady_state_by_linear_solve(plot_point(0.3, 0.0));
    EXPECT_NEAR(a.eta_c, 1.0, 1e-15);
    EXPECT_NEAR(a.eta_a, 0.0, 1e-15);
    EXPECT_NEAR(a.sigma_c, 0.0, 1e-15);
}

TEST(LinearSolve, SolidCurveOptimumPopulation) {
    const auto a = steady_state_by_linear_solve(plot_point(0.0, 0.37));
    EXPECT_NEAR(a.eta_a, 0.207204480, 1e-9);
}

TEST(LinearSolve, RandomGrid) {
    for (const auto& p : random_params(150)) {
        const auto a = steady_state_by_linear_solve(p);
        const auto b = atomic_steady_state(p);
        EXPECT_NEAR(a.sigma_c, b.sigma_c, 1e-12);
        EXPECT_NEAR(a.eta_a, b.eta_a, 1e-12);
        EXPECT_NEAR(a.eta_c, b.eta_c, 1e-12);
    }
}

TEST(TrajectoryCsv, HeaderAndRowCount) {
    const auto traj = integrate_to_steady(plot_point(0.3, 0.6));
    std::ostringstream out;
    write_trajectory_csv(out, traj);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "time,sigma_a_re,sigma_a_im,sigma_b_re,sigma_b_im,sigma_c_re,sigma_c_im,eta_a,eta_b");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8);
    }
    EXPECT_EQ(rows, traj.samples.size());
}
