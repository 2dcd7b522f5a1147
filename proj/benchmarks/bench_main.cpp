#include "seqbound/measurement.hpp"
#include "seqbound/oracle.hpp"
#include "seqbound/quadrature.hpp"
#include "seqbound/spectrum.hpp"

#include <benchmark/benchmark.h>

using namespace seqbound;

static void GaussLegendre(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre(static_cast<int>(state.range(0))));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(GaussLegendre)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void NystromEigenvalues(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(all_eigenvalues(1.0, static_cast<int>(state.range(0))));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(NystromEigenvalues)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

static void Lambda0Converged(benchmark::State& state) {
    const double xi = static_cast<double>(state.range(0)) / 4.0;
    for (auto _ : state) benchmark::DoNotOptimize(lambda0(xi));
}
BENCHMARK(Lambda0Converged)->DenseRange(1, 32, 8);

static void PowerIteration(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(power_iteration_lambda0(1.0, static_cast<int>(state.range(0))));
}
BENCHMARK(PowerIteration)->RangeMultiplier(2)->Range(256, 2048);

static void ConditionalProbability(benchmark::State& state) {
    const StateGrid psi = random_state(-0.5, 0.5, static_cast<std::size_t>(state.range(0)), 7);
    const Window wq(0.0, 1.0), wk(0.0, 2.0 * 3.141592653589793);
    for (auto _ : state) benchmark::DoNotOptimize(conditional_probability(psi, wq, wk));
}
BENCHMARK(ConditionalProbability)->RangeMultiplier(2)->Range(32, 512);

static void RayleighQuotient(benchmark::State& state) {
    const StateGrid psi = random_state(-0.5, 0.5, static_cast<std::size_t>(state.range(0)), 7);
    const Window wq(0.0, 1.0), wk(0.0, 2.0 * 3.141592653589793);
    for (auto _ : state) benchmark::DoNotOptimize(rayleigh_quotient(psi, wq, wk));
}
BENCHMARK(RayleighQuotient)->RangeMultiplier(2)->Range(32, 256);

BENCHMARK_MAIN();
