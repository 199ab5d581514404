#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>
#include <sstream>

#include "cascade/errors.hpp"
#include "cascade/fock_oracle.hpp"
#include "cascade/model.hpp"
#include "cascade/single_mode.hpp"

using namespace cascade;

namespace {

FockConfig dims(std::size_t b, std::size_t a1, std::size_t a2) {
    FockConfig c;
    c.dim_b = b;
    c.dim_a1 = a1;
    c.dim_a2 = a2;
    return c;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Eigen::MatrixXcd random_hermitian(Eigen::Index n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> d;
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = {d(rng), d(rng)};
    }
    return a + a.adjoint();
}

// Good-cavity point: gamma_c = 0.01, kappa = 1, gamma = 0, epsilon = 0.01 (g = 0.05, eta = 0.1).
class GoodCavity : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        params_ = new SystemParams(params_from_plot_set(0.01, 1.0, 0.0, 0.01));
        run_ = new OracleRun(steady_run(*params_, FockConfig{}));
        report_ = new ComparisonReport(compare_with_analytic(*params_, FockConfig{}, *run_));
    }
    static void TearDownTestSuite() {
        delete report_;
        delete run_;
        delete params_;
    }
    static SystemParams* params_;
    static OracleRun* run_;
    static ComparisonReport* report_;
};

SystemParams* GoodCavity::params_ = nullptr;
OracleRun* GoodCavity::run_ = nullptr;
ComparisonReport* GoodCavity::report_ = nullptr;

}  // namespace

TEST_F(GoodCavity, ParametersAreTheIntendedOnes) {
    EXPECT_NEAR(params_->g, 0.05, 1e-15);
    EXPECT_NEAR(params_->eta, 0.1, 1e-15);
    EXPECT_NEAR(report_->kappa_over_g(), 20.0, 1e-12);
}

TEST_F(GoodCavity, PopulationsWithinTwoPercent) {
    const auto st = atomic_steady_state(*params_);
    const auto& m = run_->moments;
    EXPECT_NEAR(st.eta_a, 0.25, 1e-15);
    EXPECT_LT(rel(m.eta_a, st.eta_a), 0.02);
    EXPECT_LT(rel(m.eta_b, st.eta_b), 0.02);
    EXPECT_LT(rel(m.eta_c, st.eta_c), 0.02);
}

TEST_F(GoodCavity, PhotonNumberWithinFivePercent) {
    const double n_bar = mean_photon_number(*params_).n_bar;
    EXPECT_NEAR(n_bar, 0.0325, 1e-15);
    EXPECT_LT(rel(run_->moments.n_b, n_bar), 0.05);
}

TEST_F(GoodCavity, MatchesIndependentDensityMatrixSolution) {
    // Steady state of the same truncated model from a sparse direct solve.
    const auto& m = run_->moments;
    EXPECT_NEAR(m.eta_a, 0.252836, 2e-6);
    EXPECT_NEAR(m.n_b, 0.032444, 2e-6);
    EXPECT_NEAR(m.sigma_c.real(), 0.25206, 2e-5);
    EXPECT_NEAR(m.mean_b.real(), 0.174794, 2e-6);
    EXPECT_NEAR(m.mean_b_sq.real(), 0.029964, 2e-6);
    EXPECT_NEAR(m.n_a1, 0.0025148, 2e-7);
}

TEST_F(GoodCavity, ComparisonPasses) {
    EXPECT_EQ(report_->verdict, Verdict::pass);
    for (const auto& f : report_->fields) EXPECT_TRUE(f.pass) << f.name << " rel_dev " << f.rel_dev;
    EXPECT_EQ(report_->fields.size(), 9u);
}

TEST_F(GoodCavity, TracePreservedAlongRun) {
    EXPECT_LE(run_->max_trace_error, 1e-8);
    EXPECT_LE(run_->moments.trace_error, 1e-8);
}

TEST_F(GoodCavity, StaysHermitian) {
    EXPECT_LE(run_->max_asymmetry, 1e-10);
}

TEST_F(GoodCavity, FinalStateIsPositive) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(run_->rho, Eigen::EigenvaluesOnly);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-8);
}

TEST_F(GoodCavity, PopulationsInRangeAndNoLeak) {
    const auto& m = run_->moments;
    for (double p : {m.eta_a, m.eta_b, m.eta_c}) {
        EXPECT_GE(p, -1e-10);
        EXPECT_LE(p, 1.0 + 1e-10);
    }
    EXPECT_LE(m.top_level_population, FockConfig{}.leak_tolerance);
    EXPECT_TRUE(run_->converged);
    EXPECT_LE(run_->residual, 1e-9);
    EXPECT_LE(std::abs(m.sigma_c.imag()), 1e-12);
}

TEST_F(GoodCavity, TextReportNamesVerdictAndLimits) {
    std::ostringstream out;
    write_comparison_text(out, *report_);
    const auto text = out.str();
    EXPECT_NE(text.find("verdict: pass"), std::string::npos);
    EXPECT_NE(text.find("normally ordered"), std::string::npos);
    EXPECT_NE(text.find("outside_adiabatic_regime"), std::string::npos);
    std::ostringstream csv;
    write_comparison_csv(csv, *report_);
    EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "field,oracle,analytic,abs_dev,rel_dev,tolerance,pass");
}

TEST(UndrivenControl, StaysInGroundStateExactly) {
    const auto p = derive_params(0.05, 1.0, 0.0, 0.0);
    const auto m = steady_moments(p, dims(4, 3, 3));
    EXPECT_NEAR(m.eta_c, 1.0, 1e-8);
    EXPECT_NEAR(m.n_b, 0.0, 1e-8);
    EXPECT_NEAR(m.n_a1, 0.0, 1e-8);
    EXPECT_NEAR(m.n_a2, 0.0, 1e-8);
}

TEST(UndrivenControl, ComparisonHasZeroDeviations) {
    const auto r = compare_with_analytic(derive_params(0.05, 1.0, 0.0, 0.1), dims(4, 3, 3));
    EXPECT_EQ(r.verdict, Verdict::pass);
    for (const auto& f : r.fields) EXPECT_LE(f.abs_dev, 1e-8) << f.name;
}

TEST(UndrivenControl, ExcitedStateRelaxesToGround) {
    CavityRates rates{0.5, 1.0, 0.0, 0.2};
    const FockConfig cfg = dims(3, 2, 2);
    const Liouvillian l = build_generator(rates, cfg);
    const auto n = static_cast<Eigen::Index>(l.dimension());
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(n, n);
    const auto top = static_cast<Eigen::Index>(l.basis().index(Level::a, 2, 1, 1));
    rho(top, top) = 1.0;
    Eigen::MatrixXd k1, k2, k3, k4;
    const double dt = cfg.resolved_dt(rates);
    for (int step = 0; step < 20000; ++step) {
        l.apply_symmetric(rho, k1);
        l.apply_symmetric(rho + 0.5 * dt * k1, k2);
        l.apply_symmetric(rho + 0.5 * dt * k2, k3);
        l.apply_symmetric(rho + dt * k3, k4);
        rho += dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    EXPECT_LE((rho - l.ground_state()).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(DecoupledAtom, CavityRelaxesToCoherentState) {
    const CavityRates rates{0.0, 1.0, 0.2, 0.1};
    const Liouvillian l = build_generator(rates, dims(8, 2, 2));
    const auto run = evolve_to_steady(l, dims(8, 2, 2));
    ASSERT_TRUE(run.converged);
    EXPECT_NEAR(run.moments.n_b, 0.16, 1e-7);
    EXPECT_NEAR(run.moments.mean_b.real(), 0.4, 1e-7);
    EXPECT_NEAR(run.moments.mean_b_sq.real(), 0.16, 1e-7);
    EXPECT_NEAR(run.moments.eta_c, 1.0, 1e-8);
    EXPECT_NEAR(run.moments.n_a1, 0.0, 1e-8);
}

TEST(Generator, PreservesHermiticityAndTrace) {
    const CavityRates rates{0.3, 0.8, 0.7, 0.25};
    const Liouvillian l = build_generator(rates, dims(3, 2, 2));
    const auto n = static_cast<Eigen::Index>(l.dimension());
    for (unsigned seed : {1u, 2u, 3u}) {
        const Eigen::MatrixXcd rho = random_hermitian(n, seed);
        Eigen::MatrixXcd out;
        l.apply(rho, out);
        const double scale = rho.cwiseAbs().maxCoeff();
        EXPECT_LE((out - out.adjoint()).cwiseAbs().maxCoeff(), 1e-12 * scale);
        EXPECT_LE(std::abs(out.trace()), 1e-12 * scale * static_cast<double>(n));
    }
}

TEST(Generator, SymmetricPathMatchesGeneralPath) {
    const CavityRates rates{0.3, 0.8, 0.7, 0.25};
    const Liouvillian l = build_generator(rates, dims(4, 3, 2));
    const Eigen::MatrixXd rho = random_hermitian(static_cast<Eigen::Index>(l.dimension()), 9).real();
    Eigen::MatrixXd a, b;
    l.apply(rho, a);
    l.apply_symmetric(rho, b);
    EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Generator, HamiltonianIsHermitianAndGroundIsFixedWithoutDrive) {
    const Liouvillian l = build_generator(CavityRates{0.3, 0.8, 0.0, 0.25}, dims(3, 2, 2));
    const Eigen::MatrixXcd h = l.hamiltonian();
    EXPECT_LE((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    Eigen::MatrixXd out;
    l.apply(l.ground_state(), out);
    EXPECT_EQ(out.cwiseAbs().maxCoeff(), 0.0);
}

TEST(Basis, IndexAndLabelsAgree) {
    const FockBasis basis(4, 3, 2);
    EXPECT_EQ(basis.size(), 72u);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto l = basis.labels(k);
        EXPECT_EQ(basis.index(l.level, l.nb, l.n1, l.n2), k);
    }
    EXPECT_EQ(basis.index(Level::c, 0, 0, 0), 2u * 24u);
}

TEST(Config, RejectsOversizedOrDegenerateDimensions) {
    const auto p = params_from_plot_set(0.5, 0.8, 0.3, 0.6);
    EXPECT_THROW(build_generator(p, dims(40, 10, 10)), ConfigError);
    EXPECT_THROW(build_generator(p, dims(6, 1, 3)), ConfigError);
}

TEST(Config, RejectsCoarseStep) {
    const CavityRates rates{0.3, 0.8, 0.7, 0.25};
    FockConfig c;
    EXPECT_NEAR(c.resolved_dt(rates), 0.025, 1e-15);
    c.dt = 0.03;
    EXPECT_THROW(c.resolved_dt(rates), InvalidParameter);
    c.dt = 0.01;
    EXPECT_EQ(c.resolved_dt(rates), 0.01);
}

TEST(Errors, ShortHorizonIsNonConvergence) {
    FockConfig c = dims(4, 3, 3);
    c.t_end = 1.0;
    try {
        steady_run(params_from_plot_set(0.5, 2.0, 0.2, 0.5), c);
        FAIL() << "expected NonConvergence";
    } catch (const NonConvergence& e) {
        EXPECT_GT(e.residual(), 1e-9);
    }
}

TEST(Errors, SmallTruncationIsLeakage) {
    const CavityRates strong{0.0, 1.0, 1.0, 0.1};
    const Liouvillian l = build_generator(strong, dims(3, 2, 2));
    const auto run = evolve_to_steady(l, dims(3, 2, 2));
    EXPECT_FALSE(run.truncation_ok);
    try {
        steady_run(params_from_plot_set(0.5, 2.0, 0.2, 3.0), dims(3, 3, 3));
        FAIL() << "expected TruncationError";
    } catch (const TruncationError& e) {
        EXPECT_GT(e.top_level_population(), 1e-4);
    }
}

TEST(AdiabaticLimit, DeviationShrinksWithCavityDamping) {
    // Fixed gamma_c = 0.01, gamma = 0, epsilon = 0.01; kappa / g = r needs kappa = r^2 gamma_c / 4.
    FockConfig c = dims(5, 2, 2);
    c.leak_tolerance = 1e-2;
    double previous = 1.0;
    for (double r : {5.0, 10.0, 20.0, 40.0}) {
        const auto p = params_from_plot_set(0.01, r * r * 0.01 / 4.0, 0.0, 0.01);
        EXPECT_NEAR(p.kappa / p.g, r, 1e-9);
        const auto run = evolve_to_steady(build_generator(p, c), c);
        ASSERT_TRUE(run.converged) << "r = " << r;
        const double dev = rel(run.moments.eta_a, atomic_steady_state(p).eta_a);
        EXPECT_LT(dev, previous) << "r = " << r;
        previous = dev;
    }
    EXPECT_LT(previous, 0.005);
}

TEST(Truncation, LargerDimensionsBarelyMoveMoments) {
    const auto p = params_from_plot_set(0.5, 2.0, 0.2, 0.2);
    const FockConfig base = dims(5, 3, 3);
    const auto ref = steady_run(p, base).moments;
    for (const FockConfig& bigger : {dims(7, 3, 3), dims(5, 5, 3), dims(5, 3, 5)}) {
        const auto m = steady_run(p, bigger).moments;
        const double bound = 10.0 * base.leak_tolerance;
        EXPECT_LT(std::abs(m.eta_a - ref.eta_a), bound);
        EXPECT_LT(std::abs(m.eta_c - ref.eta_c), bound);
        EXPECT_LT(std::abs(m.n_b - ref.n_b), bound);
        EXPECT_LT(std::abs(m.n_a1 - ref.n_a1), bound);
        EXPECT_LT(std::abs(m.n_a2 - ref.n_a2), bound);
        EXPECT_LT(std::abs(m.mean_b.real() - ref.mean_b.real()), bound);
        EXPECT_LT(std::abs(m.sigma_c.real() - ref.sigma_c.real()), bound);
    }
}
