// Serial vs OpenMP comparison for the DSP kernels. The two paths are
// bit-identical (asserted in the unit tests); this target measures the
// speedup on realistic workload sizes.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wf/eeg/features.hpp"
#include "wf/kernels/resample.hpp"
#include "wf/kernels/spectrum.hpp"
#include "wf/kernels/stft.hpp"
#include "wf/va/features.hpp"

namespace {

std::vector<double> random_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<double> out(n);
  for (double& v : out) {
    v = static_cast<double>(gen() >> 11) * 0x1.0p-52 - 1.0;
  }
  return out;
}

void bench_band_power(benchmark::State& state, wf::kernels::Exec exec) {
  const auto window = random_signal(wf::eeg::kWindowSamples, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wf::eeg::band_power(window, 8.0, 30.0, exec));
  }
}

void bench_stft(benchmark::State& state, wf::kernels::Exec exec) {
  const auto window = random_signal(wf::va::kWindowSamples, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wf::kernels::stft_magnitudes(window, wf::kernels::StftSpec{}, exec));
  }
}

void bench_va_builtin(benchmark::State& state, wf::kernels::Exec exec) {
  const auto window = random_signal(wf::va::kWindowSamples, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wf::va::builtin_heuristic(window, exec));
  }
}

void bench_resample(benchmark::State& state, wf::kernels::Exec exec) {
  const auto block = random_signal(48000, 17);  // 1 s at 48 kHz
  for (auto _ : state) {
    wf::kernels::SincResampler rs(48000, 30000, exec);
    benchmark::DoNotOptimize(rs.process(block));
  }
}

}  // namespace

BENCHMARK_CAPTURE(bench_band_power, serial, wf::kernels::Exec::serial);
BENCHMARK_CAPTURE(bench_band_power, parallel, wf::kernels::Exec::parallel);
BENCHMARK_CAPTURE(bench_stft, serial, wf::kernels::Exec::serial);
BENCHMARK_CAPTURE(bench_stft, parallel, wf::kernels::Exec::parallel);
BENCHMARK_CAPTURE(bench_va_builtin, serial, wf::kernels::Exec::serial);
BENCHMARK_CAPTURE(bench_va_builtin, parallel, wf::kernels::Exec::parallel);
BENCHMARK_CAPTURE(bench_resample, serial, wf::kernels::Exec::serial);
BENCHMARK_CAPTURE(bench_resample, parallel, wf::kernels::Exec::parallel);

BENCHMARK_MAIN();
