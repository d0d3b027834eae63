#include "weingarten/continuation.hpp"
#include "weingarten/dirichlet.hpp"
#include "weingarten/geometry.hpp"
#include "weingarten/radial_solver.hpp"
#include "weingarten/residual.hpp"

#include <benchmark/benchmark.h>

using namespace weingarten;

namespace {

SolverConfig config(double R, int n) {
    SolverConfig c;
    c.R = R;
    c.n = n;
    return c;
}

void BM_FixedPointSphere(benchmark::State& state) {
    const auto c = config(0.5, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fixed_point_solve({1.0, 1.0}, Phi::constant(3.0), Branch::Plus, c));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FixedPointSphere)->RangeMultiplier(4)->Range(128, 8192)->Complexity();

void BM_FixedPointIdentity(benchmark::State& state) {
    const auto c = config(0.5, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fixed_point_solve({1.0, 1.0}, Phi::identity(), Branch::Plus, c));
    }
}
BENCHMARK(BM_FixedPointIdentity)->Arg(512)->Arg(4096);

void BM_Continuation(benchmark::State& state) {
    const auto start = fixed_point_solve({1.0, 0.0}, Phi::constant(1.0), Branch::Plus, config(0.5, 512));
    for (auto _ : state) {
        benchmark::DoNotOptimize(continue_ode(start, 1.9, 1e-3, 1e3));
    }
}
BENCHMARK(BM_Continuation);

void BM_OdeResidual(benchmark::State& state) {
    const auto sol = fixed_point_solve({1.0, 1.0}, Phi::constant(3.0), Branch::Plus, config(0.5, 4096));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ode_residual(sol.params, sol.phi, sol));
    }
}
BENCHMARK(BM_OdeResidual);

void BM_Residual2d(benchmark::State& state) {
    const auto sol = fixed_point_solve({1.0, 1.0}, Phi::constant(3.0), Branch::Plus, config(0.5, 2048));
    const int grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(functional_residual_2d(sol.params, sol.phi, sol, grid, 1e-3));
    }
}
BENCHMARK(BM_Residual2d)->Arg(32)->Arg(64);

void BM_Revolve(benchmark::State& state) {
    const auto sol = fixed_point_solve({1.0, 1.0}, Phi::constant(3.0), Branch::Plus, config(0.5, 512));
    for (auto _ : state) {
        benchmark::DoNotOptimize(revolve_to_mesh(sol, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_Revolve)->Arg(64)->Arg(256);

void BM_Contraction(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            estimate_contraction({1.0, 1.0}, Phi::identity(), Branch::Plus, 0.1, 256, 32, 7));
    }
}
BENCHMARK(BM_Contraction);

} // namespace

BENCHMARK_MAIN();
