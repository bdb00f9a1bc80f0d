#include <benchmark/benchmark.h>

#include "caustica/action_angle.hpp"
#include "caustica/dynamics.hpp"
#include "caustica/geometry.hpp"
#include "caustica/modes.hpp"
#include "caustica/variational.hpp"

using namespace caustica;

namespace {

Boundary perturbed_table()
{
    return Boundary(BoundarySpec{EllipsePose{0.3}, PerturbationSeries::harmonic(7, false, 1e-4)});
}

void BM_BilliardStepEllipse(benchmark::State& state)
{
    const Boundary b(EllipsePose{0.3});
    PhasePoint p{0.1, 0.7};
    for (auto _ : state) {
        p = billiard_step(b, p);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_BilliardStepEllipse);

void BM_BilliardStepPerturbed(benchmark::State& state)
{
    const Boundary b = perturbed_table();
    PhasePoint p{0.1, 0.7};
    for (auto _ : state) {
        p = billiard_step(b, p);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_BilliardStepPerturbed);

void BM_BuildChart(benchmark::State& state)
{
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_chart(EllipsePose{0.3}, q));
}
BENCHMARK(BM_BuildChart)->Arg(3)->Arg(10)->Arg(40);

void BM_DeformedMode(benchmark::State& state)
{
    const ModeGrid grid(EllipsePose{0.3}, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(deformed_mode(grid, 7));
}
BENCHMARK(BM_DeformedMode)->Arg(512)->Arg(2048);

void BM_Reexpress(benchmark::State& state)
{
    const Boundary b = perturbed_table();
    const EllipsePose target{0.31};
    for (auto _ : state) benchmark::DoNotOptimize(reexpress(b, target));
}
BENCHMARK(BM_Reexpress)->Unit(benchmark::kMillisecond);

void BM_MaxPerimeterPolygon(benchmark::State& state)
{
    const Boundary b = perturbed_table();
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(max_perimeter_polygon(b, q, 0.05));
}
BENCHMARK(BM_MaxPerimeterPolygon)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
