// Serial reference kernels against their OpenMP counterparts.

#include "knotcol/certificates.hpp"
#include "knotcol/coloring.hpp"
#include "knotcol/enumerate.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace knotcol;

void BM_EnumerateClasses_Serial(benchmark::State& state) {
    const auto p = state.range(0);
    const auto k = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(serial::enumerate_classes(p, k));
}

void BM_EnumerateClasses_Parallel(benchmark::State& state) {
    const auto p = state.range(0);
    const auto k = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(p, k));
}

void BM_Candidates_Serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(serial::candidates(state.range(0), 5));
}

void BM_Candidates_Parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(candidates(state.range(0), 5));
}

void BM_MinColors_Serial(benchmark::State& state) {
    const Diagram& d = catalog_diagram("6_3");
    for (auto _ : state) benchmark::DoNotOptimize(serial::min_colors_diagram(d, 13));
}

void BM_MinColors_Parallel(benchmark::State& state) {
    const Diagram& d = catalog_diagram("6_3");
    for (auto _ : state) benchmark::DoNotOptimize(min_colors_diagram(d, 13));
}

void BM_StarCampaign_Serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(serial::star_campaign(1, static_cast<std::uint64_t>(state.range(0)), 8));
}

void BM_StarCampaign_Parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(star_campaign(1, static_cast<std::uint64_t>(state.range(0)), 8));
}

}  // namespace

BENCHMARK(BM_EnumerateClasses_Serial)->Args({13, 5})->Args({17, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateClasses_Parallel)->Args({13, 5})->Args({17, 6})->Args({31, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Candidates_Serial)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Candidates_Parallel)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinColors_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinColors_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StarCampaign_Serial)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StarCampaign_Parallel)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
