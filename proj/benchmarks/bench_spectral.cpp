#include "holonoise/detection.hpp"
#include "holonoise/spectral.hpp"
#include "holonoise/synthesis.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace holonoise;

const TimeSeriesPair& pair_of(std::size_t n) {
    static TimeSeriesPair cached;
    if (cached.ch1.size() != n) {
        ExperimentConfig c;
        c.n_samples = n;
        cached = synthesize_pair(c);
    }
    return cached;
}

void BM_WelchCsd(benchmark::State& state) {
    const auto& p = pair_of(1u << 20);
    const WelchParams params{static_cast<std::size_t>(state.range(0)), 0.5, Window::Hann};
    for (auto _ : state) {
        benchmark::DoNotOptimize(welch_csd(p, params));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.ch1.size()));
}
BENCHMARK(BM_WelchCsd)->Arg(1024)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);

void BM_Xcorr(benchmark::State& state) {
    const auto& p = pair_of(1u << 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(xcorr(p, 1e-6));
    }
}
BENCHMARK(BM_Xcorr)->Unit(benchmark::kMillisecond);

void BM_NullSignificance(benchmark::State& state) {
    const auto& p = pair_of(1u << 20);
    const auto est = welch_csd(p, {4096, 0.5, Window::Hann});
    const Band band = default_band(HolographicModel(40.0), p.sample_rate, 4096);
    for (auto _ : state) {
        benchmark::DoNotOptimize(null_significance(est, band));
    }
}
BENCHMARK(BM_NullSignificance)->Unit(benchmark::kMillisecond);

} // namespace
