#include <benchmark/benchmark.h>

#include "subjam/dsp.hpp"
#include "subjam/link.hpp"
#include "subjam/planner.hpp"
#include "subjam/scenario.hpp"

using namespace subjam;

static void BM_GenerateWhiteNoise(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto buf = dsp::generate_white_noise({7, n, 48000.0});
        benchmark::DoNotOptimize(buf.samples.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_GenerateWhiteNoise)->Range(1 << 12, 1 << 18);

static void BM_FmModulate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto audio = dsp::generate_white_noise({7, n, 400e3});
    for (auto _ : state) {
        auto iq = dsp::fm_modulate(audio, 75e3);
        benchmark::DoNotOptimize(iq.samples.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_FmModulate)->Range(1 << 12, 1 << 18);

static void BM_PowerSpectrum(benchmark::State& state) {
    const auto n_fft = static_cast<std::size_t>(state.range(0));
    const auto noise = dsp::generate_white_noise({7, 1 << 18, 48000.0});
    for (auto _ : state) {
        auto spec = dsp::power_spectrum(noise, n_fft, dsp::Window::Hann);
        benchmark::DoNotOptimize(spec.power_db.data());
    }
}
BENCHMARK(BM_PowerSpectrum)->Range(256, 8192);

static void BM_RunScenario(benchmark::State& state) {
    const auto cfg = scenario::default_config();
    const auto env = planner::environment_for_carrier(cfg, 307e6);
    for (auto _ : state) {
        auto transcript =
            link::run_scenario(cfg.link, {{0, true}}, env, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(transcript.data());
    }
}
BENCHMARK(BM_RunScenario)->Range(64, 4096);

static void BM_PlanAndVerify(benchmark::State& state) {
    const auto cfg = scenario::default_config();
    for (auto _ : state) {
        bool all = true;
        for (const auto& p : planner::plan(cfg, 614e6)) all &= planner::verify_plan(p, cfg);
        benchmark::DoNotOptimize(all);
    }
}
BENCHMARK(BM_PlanAndVerify);

BENCHMARK_MAIN();
