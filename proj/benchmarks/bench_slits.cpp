#include "holonoise/holo_model.hpp"
#include "holonoise/slit_demo.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace holonoise;

void BM_BlurredPattern(benchmark::State& state) {
    SlitSetup s = SlitSetup::planck(1.0, transverse_uncertainty(1.0));
    s.n_angles = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(information_blurred_pattern(s));
    }
}
BENCHMARK(BM_BlurredPattern)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_SeparationSweep(benchmark::State& state) {
    const SlitSetup s = SlitSetup::planck(1.0, 0.0);
    const double b = transverse_uncertainty(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(separation_sweep(s, b / 30, b * 30, 61));
    }
}
BENCHMARK(BM_SeparationSweep)->Unit(benchmark::kMillisecond);

} // namespace
