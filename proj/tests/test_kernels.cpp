#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <random>

#include "oracles.hpp"
#include "wf/kernels/fft.hpp"
#include "wf/kernels/resample.hpp"
#include "wf/kernels/spectrum.hpp"
#include "wf/kernels/stft.hpp"

using wf::kernels::Exec;

namespace {

std::vector<double> random_frame(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<double> out(n);
  for (double& v : out) v = oracle::uniform(gen, -1.0, 1.0);
  return out;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         (a.empty() ||
          std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

}  // namespace

TEST_CASE("power spectrum matches the direct-DFT oracle") {
  const auto frame = random_frame(1000, 42);
  const auto spectrum = wf::kernels::power_spectrum(frame);
  for (std::size_t k : {0u, 1u, 10u, 40u, 250u, 500u}) {
    const double expected = oracle::dft_bin_power(frame, k);
    CHECK(spectrum[k] == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("serial and parallel spectra are bit-identical") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto frame = random_frame(1000, seed);
    const auto serial = wf::kernels::power_spectrum(frame, Exec::serial);
    const auto parallel = wf::kernels::power_spectrum(frame, Exec::parallel);
    CHECK(bitwise_equal(serial, parallel));
  }
}

TEST_CASE("radix-2 FFT agrees with the direct DFT") {
  const auto frame = random_frame(2048, 7);
  const auto mag = wf::kernels::magnitude_spectrum(frame);
  REQUIRE(mag.size() == 1025);
  for (std::size_t k : {0u, 1u, 17u, 512u, 1024u}) {
    const double expected = std::sqrt(oracle::dft_bin_power(frame, k));
    CHECK(mag[k] == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("fft rejects non-power-of-two sizes") {
  std::vector<std::complex<double>> buf(1000);
  CHECK_THROWS_AS(wf::kernels::fft_radix2(buf), std::invalid_argument);
}

TEST_CASE("stft frame count and serial/parallel equivalence") {
  const auto signal = random_frame(150000, 11);
  const auto serial =
      wf::kernels::stft_magnitudes(signal, wf::kernels::StftSpec{}, Exec::serial);
  const auto parallel = wf::kernels::stft_magnitudes(
      signal, wf::kernels::StftSpec{}, Exec::parallel);
  CHECK(serial.frames == 1 + (150000 - 2048) / 512);
  CHECK(serial.bins == 1025);
  CHECK(bitwise_equal(serial.mag, parallel.mag));
}

TEST_CASE("stft on short input yields no frames") {
  const auto signal = random_frame(1024, 3);
  const auto sg = wf::kernels::stft_magnitudes(signal, wf::kernels::StftSpec{});
  CHECK(sg.frames == 0);
}

TEST_CASE("resampler produces round(len * ratio) samples per block") {
  wf::kernels::SincResampler rs(48000, 30000);
  const auto out = rs.process(std::vector<double>(4800, 0.25));
  CHECK(out.size() == 3000);

  // Cumulative rounding stays exact over odd block sizes.
  wf::kernels::SincResampler rs2(44100, 30000);
  std::mt19937_64 gen(5);
  std::uint64_t consumed = 0, emitted = 0;
  for (int i = 0; i < 50; ++i) {
    const auto len = static_cast<std::size_t>(100 + (gen() % 700));
    consumed += len;
    emitted += rs2.process(std::vector<double>(len, 0.1)).size();
    CHECK(emitted ==
          static_cast<std::uint64_t>(std::llround(double(consumed) * 30000.0 / 44100.0)));
  }
}

TEST_CASE("resampler is the identity at 30 kHz") {
  wf::kernels::SincResampler rs(30000, 30000);
  const auto in = random_frame(1500, 13);
  const auto out = rs.process(in);
  CHECK(bitwise_equal(in, out));
}

TEST_CASE("resampler rejects upsampling") {
  CHECK_THROWS_AS(wf::kernels::SincResampler(22050, 30000),
                  std::invalid_argument);
}

TEST_CASE("44.1k -> 30k preserves the RMS of a band-limited tone within 1%") {
  const auto in = oracle::sine(44100, 1000.0, 44100.0, 0.5);
  wf::kernels::SincResampler rs(44100, 30000);
  auto out = rs.process(in);
  REQUIRE(out.size() == 30000);

  auto rms = [](std::span<const double> x, std::size_t from, std::size_t to) {
    double sq = 0.0;
    for (std::size_t i = from; i < to; ++i) sq += x[i] * x[i];
    return std::sqrt(sq / double(to - from));
  };
  // Skip the filter edges: the delay line pads the first ~1 ms with zeros.
  const double in_rms = rms(in, 4410, 39690);
  const double out_rms = rms(out, 3000, 27000);
  CHECK(out_rms == doctest::Approx(in_rms).epsilon(0.01));
}

TEST_CASE("resampler keeps a 1 kHz tone at 1 kHz after rate conversion") {
  const auto in = oracle::sine(44100, 1000.0, 44100.0, 0.5);
  wf::kernels::SincResampler rs(44100, 30000);
  const auto out = rs.process(in);
  // 3000-point window -> 1 Hz bins at 30 kHz; peak must sit in bin 100.
  std::vector<double> window(out.begin() + 6000, out.begin() + 9000);
  double best = -1.0;
  std::size_t best_bin = 0;
  for (std::size_t k = 50; k <= 200; ++k) {
    const double p = oracle::dft_bin_power(window, k);
    if (p > best) {
      best = p;
      best_bin = k;
    }
  }
  CHECK(best_bin == 100);  // 100 * 30000 / 3000 = 1000 Hz
}

TEST_CASE("serial and parallel resampling are bit-identical") {
  const auto in = random_frame(44100, 17);
  wf::kernels::SincResampler serial(44100, 30000, Exec::serial);
  wf::kernels::SincResampler parallel(44100, 30000, Exec::parallel);
  CHECK(bitwise_equal(serial.process(in), parallel.process(in)));
}
