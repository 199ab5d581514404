#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "cascade/errors.hpp"
#include "cascade/model.hpp"
#include "param_grid.hpp"

using namespace cascade;
using cascade::testing::plot_point;
using cascade::testing::random_params;

TEST(DeriveParams, PlotSetInversion) {
    const auto p = derive_params(0.316227766, 0.8, 0.758946638, 0.3);
    EXPECT_NEAR(p.gamma_c, 0.5, 1e-9);
    EXPECT_NEAR(p.epsilon, 0.6, 1e-9);
    EXPECT_DOUBLE_EQ(p.gamma, 0.3);
}

TEST(DeriveParams, ZeroDrive) {
    const auto p = derive_params(1.0, 4.0, 0.0, 0.0);
    EXPECT_DOUBLE_EQ(p.gamma_c, 1.0);
    EXPECT_DOUBLE_EQ(p.epsilon, 0.0);
}

TEST(DeriveParams, UnitRates) {
    const auto p = derive_params(1.0, 1.0, 1.0, 0.0);
    EXPECT_DOUBLE_EQ(p.gamma_c, 4.0);
    EXPECT_DOUBLE_EQ(p.epsilon, 2.0);
}

TEST(DeriveParams, DerivedRatesHoldExactly) {
    const double g = 0.37, kappa = 1.3, eta = 0.91;
    const auto p = derive_params(g, kappa, eta, 0.2);
    EXPECT_EQ(p.gamma_c, 4.0 * g * g / kappa);
    EXPECT_EQ(p.epsilon, 2.0 * g * eta / kappa);
}

TEST(DeriveParams, RejectsNonPositiveKappaNamingField) {
    try {
        derive_params(1.0, 0.0, 1.0, 0.0);
        FAIL() << "expected InvalidParameter";
    } catch (const InvalidParameter& e) {
        EXPECT_EQ(e.field(), "kappa");
    }
}

TEST(DeriveParams, RejectsNonPositiveGNamingField) {
    try {
        derive_params(-0.1, 1.0, 1.0, 0.0);
        FAIL() << "expected InvalidParameter";
    } catch (const InvalidParameter& e) {
        EXPECT_EQ(e.field(), "g");
    }
}

TEST(DeriveParams, RejectsNegativeEtaAndGamma) {
    EXPECT_THROW(derive_params(1.0, 1.0, -1.0, 0.0), InvalidParameter);
    EXPECT_THROW(derive_params(1.0, 1.0, 1.0, -0.1), InvalidParameter);
    EXPECT_THROW(derive_params(1.0, 1.0, std::numeric_limits<double>::quiet_NaN(), 0.0), InvalidParameter);
}

TEST(ParamsFromPlotSet, FigureParameters) {
    const auto p = params_from_plot_set(0.5, 0.8, 0.3, 0.6);
    EXPECT_NEAR(p.g, 0.31622776601684, 1e-12);
    EXPECT_NEAR(p.eta, 0.75894663844041, 1e-12);
}

TEST(ParamsFromPlotSet, ZeroDrive) {
    const auto p = params_from_plot_set(1.0, 4.0, 0.0, 0.0);
    EXPECT_DOUBLE_EQ(p.g, 1.0);
    EXPECT_DOUBLE_EQ(p.eta, 0.0);
}

TEST(ParamsFromPlotSet, SolidCurveOptimum) {
    const auto p = params_from_plot_set(0.5, 0.8, 0.0, 0.37);
    EXPECT_NEAR(p.g, 0.316227766, 1e-9);
    EXPECT_NEAR(p.eta, 0.468017093705, 1e-11);
}

TEST(ParamsFromPlotSet, RejectsBadRates) {
    EXPECT_THROW(params_from_plot_set(0.0, 0.8, 0.3, 0.6), InvalidParameter);
    EXPECT_THROW(params_from_plot_set(0.5, -0.8, 0.3, 0.6), InvalidParameter);
    EXPECT_THROW(params_from_plot_set(0.5, 0.8, -0.3, 0.6), InvalidParameter);
    EXPECT_THROW(params_from_plot_set(0.5, 0.8, 0.3, -0.6), InvalidParameter);
}

TEST(ParamsFromPlotSet, RoundTripThroughDeriveParams) {
    for (const auto& p : random_params(200)) {
        const auto q = derive_params(p.g, p.kappa, p.eta, p.gamma);
        EXPECT_NEAR(q.gamma_c, p.gamma_c, 1e-12 * std::max(1.0, p.gamma_c));
        EXPECT_NEAR(q.epsilon, p.epsilon, 1e-12 * std::max(1.0, p.epsilon));
        EXPECT_EQ(q.kappa, p.kappa);
        EXPECT_EQ(q.gamma, p.gamma);
    }
}

TEST(AtomicSteadyState, FigurePoint) {
    const auto st = atomic_steady_state(plot_point(0.3, 0.6));
    EXPECT_NEAR(st.sigma_c, 0.27906976744186, 1e-12);
    EXPECT_NEAR(st.eta_a, 0.20930232558140, 1e-12);
    EXPECT_NEAR(st.eta_c, 0.58139534883721, 1e-12);
    EXPECT_EQ(st.sigma_a, 0.0);
    EXPECT_EQ(st.sigma_b, 0.0);
}

TEST(AtomicSteadyState, UndrivenAtomSitsInBottomLevel) {
    const auto st = atomic_steady_state(plot_point(0.3, 0.0));
    EXPECT_EQ(st.sigma_c, 0.0);
    EXPECT_EQ(st.eta_a, 0.0);
    EXPECT_EQ(st.eta_b, 0.0);
    EXPECT_EQ(st.eta_c, 1.0);
}

TEST(AtomicSteadyState, StrongDriveEqualizesPopulations) {
    const auto st = atomic_steady_state(plot_point(0.3, 1e6));
    EXPECT_NEAR(st.eta_a, 1.0 / 3.0, 1e-10);
    EXPECT_NEAR(st.eta_b, 1.0 / 3.0, 1e-10);
    EXPECT_NEAR(st.eta_c, 1.0 / 3.0, 1e-10);
}

TEST(AtomicSteadyState, InvariantsOnRandomGrid) {
    for (const auto& p : random_params(200)) {
        const auto st = atomic_steady_state(p);
        EXPECT_NEAR(st.eta_a + st.eta_b + st.eta_c, 1.0, 1e-12);
        EXPECT_EQ(st.eta_a, st.eta_b);
        EXPECT_EQ(st.sigma_a, 0.0);
        EXPECT_EQ(st.sigma_b, 0.0);
        EXPECT_GE(st.sigma_c, 0.0);
        for (double v : {st.eta_a, st.eta_b, st.eta_c}) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    }
}

TEST(AtomicSteadyState, CoherenceVanishesAtBothEnds) {
    EXPECT_LT(atomic_steady_state(plot_point(0.3, 1e-9)).sigma_c, 1e-8);
    EXPECT_LT(atomic_steady_state(plot_point(0.3, 1e9)).sigma_c, 1e-8);
    EXPECT_GT(atomic_steady_state(plot_point(0.3, 0.5)).sigma_c, 0.25);
}

TEST(AtomicSteadyState, BottomPopulationFallsMonotonically) {
    double previous = 1.0;
    for (int i = 1; i <= 2000; ++i) {
        const double eta_c = atomic_steady_state(plot_point(0.3, 0.01 * i)).eta_c;
        EXPECT_LT(eta_c, previous);
        EXPECT_GT(eta_c, 1.0 / 3.0);
        previous = eta_c;
    }
}

TEST(Validate, RejectsHandBuiltNonsense) {
    SystemParams p = plot_point(0.3, 0.6);
    p.gamma_c = 0.0;
    EXPECT_THROW(atomic_steady_state(p), InvalidParameter);
    p = plot_point(0.3, 0.6);
    p.kappa = std::numeric_limits<double>::infinity();
    EXPECT_THROW(validate(p), InvalidParameter);
}
