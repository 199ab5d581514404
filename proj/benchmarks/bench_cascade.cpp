#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "cascade/bloch.hpp"
#include "cascade/fock_oracle.hpp"
#include "cascade/model.hpp"
#include "cascade/single_mode.hpp"
#include "cascade/superposed.hpp"
#include "cascade/sweep.hpp"

namespace {

using namespace cascade;

const SystemParams plot_point = params_from_plot_set(0.5, 0.8, 0.3, 0.6);

void BM_ClosedForms(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(quadrature_report(plot_point));
        benchmark::DoNotOptimize(superposed_report(plot_point));
    }
}
BENCHMARK(BM_ClosedForms);

void BM_FigureSweep(benchmark::State& state) {
    SweepSpec spec;
    spec.gammas = {0.0, 0.3};
    spec.quantities = {Quantity::n_bar, Quantity::s_plus, Quantity::s_minus};
    for (auto _ : state) benchmark::DoNotOptimize(sweep(spec));
}
BENCHMARK(BM_FigureSweep)->Unit(benchmark::kMicrosecond);

void BM_Maximize(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(maximize(BaseRates{}, Quantity::s_plus, {0.0, 3.0}));
}
BENCHMARK(BM_Maximize);

void BM_BlochIntegration(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(integrate_to_steady(plot_point));
}
BENCHMARK(BM_BlochIntegration)->Unit(benchmark::kMicrosecond);

void BM_BlochLinearSolve(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(steady_state_by_linear_solve(plot_point));
}
BENCHMARK(BM_BlochLinearSolve);

void BM_LiouvillianApply(benchmark::State& state) {
    FockConfig config;
    config.dim_b = static_cast<std::size_t>(state.range(0));
    config.dim_a1 = config.dim_a2 = static_cast<std::size_t>(state.range(1));
    const Liouvillian generator = build_generator(plot_point, config);
    const Eigen::Index n = static_cast<Eigen::Index>(generator.dimension());
    Eigen::MatrixXd rho = Eigen::MatrixXd::Random(n, n);
    rho = (rho + rho.transpose()).eval();
    Eigen::MatrixXd out(n, n);
    for (auto _ : state) {
        generator.apply_symmetric(rho, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.counters["dimension"] = static_cast<double>(n);
}
BENCHMARK(BM_LiouvillianApply)->Args({6, 3})->Args({10, 4})->Args({16, 5})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
