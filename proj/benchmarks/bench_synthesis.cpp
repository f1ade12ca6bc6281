#include "holonoise/holo_model.hpp"
#include "holonoise/synthesis.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace holonoise;

void BM_SynthesizeCommon(benchmark::State& state) {
    const HolographicModel model(40.0);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(synthesize_common(model, 5e7, n, seed++));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SynthesizeCommon)->RangeMultiplier(4)->Range(1 << 14, 1 << 22)->Unit(benchmark::kMillisecond);

void BM_WhiteNoise(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(white_noise(2e-18, 5e7, n, 1, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WhiteNoise)->Arg(1 << 18)->Arg(1 << 22)->Unit(benchmark::kMillisecond);

void BM_SynthesizePair(benchmark::State& state) {
    ExperimentConfig c;
    c.n_samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(synthesize_pair(c));
    }
}
BENCHMARK(BM_SynthesizePair)->Arg(1 << 18)->Arg(1 << 22)->Unit(benchmark::kMillisecond);

} // namespace
