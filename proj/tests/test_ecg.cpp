#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "wf/ecg/pipeline.hpp"
#include "wf/ingest/synthetic.hpp"

using namespace wf::ecg;

namespace {

// Raised-cosine R-wave stand-ins on a flat baseline.
std::vector<double> pulse_train(std::size_t ticks, double period_ms,
                                double amp = 800.0, double noise_sigma = 0.0,
                                std::uint64_t seed = 1) {
  std::vector<double> out(ticks, 0.0);
  wf::ingest::GaussianRng rng(seed);
  const double half_width = 12.0;  // ms == ticks at 1000 Hz
  for (std::size_t t = 0; t < ticks; ++t) {
    const double k = std::round(double(t) / period_ms);
    const double d = double(t) - k * period_ms;
    if (std::abs(d) <= half_width) {
      out[t] = amp * 0.5 *
               (1.0 + std::cos(std::numbers::pi * d / half_width));
    }
    if (noise_sigma > 0.0) out[t] += noise_sigma * rng.next();
  }
  return out;
}

void feed_pipeline(EcgPipeline& pipe, const std::vector<double>& samples) {
  std::uint64_t done = 0;
  while (done < samples.size()) {
    const std::size_t len =
        std::min<std::size_t>(50, samples.size() - static_cast<std::size_t>(done));
    wf::ingest::SampleBlock block;
    block.start_tick = done;
    block.channel_count = 1;
    block.frames = len;
    block.data.assign(samples.begin() + static_cast<std::ptrdiff_t>(done),
                      samples.begin() + static_cast<std::ptrdiff_t>(done + len));
    pipe.consume(block);
    done += len;
  }
}

const std::vector<double> kGoldenRr{800, 810, 790, 805, 800, 795, 800, 805};

}  // namespace

TEST_CASE("golden RR series matches the definitional oracle") {
  const auto si = baevsky_si(kGoldenRr);
  REQUIRE(si.has_value());
  const double expected = oracle::baevsky(kGoldenRr);
  CHECK(*si == doctest::Approx(expected).epsilon(1e-12));
  // frozen from the oracle: AMo 75%, Mo 0.825 s, MxDMn 0.020 s
  CHECK(*si == doctest::Approx(2272.7272727272725).epsilon(1e-12));
}

TEST_CASE("constant RR series stays finite through the MxDMn floor") {
  const std::vector<double> rr(8, 800.0);
  const auto si = baevsky_si(rr);
  REQUIRE(si.has_value());
  CHECK(std::isfinite(*si));
  // AMo 100%, Mo 0.825 s, floor 0.016 s
  CHECK(*si == doctest::Approx(100.0 / (2.0 * 0.825 * 0.016)).epsilon(1e-12));
  CHECK(*si == doctest::Approx(oracle::baevsky(rr)).epsilon(1e-12));
}

TEST_CASE("widening the RR spread strictly decreases SI") {
  const std::vector<double> narrow{800, 805, 810, 800, 805, 700, 900};
  const std::vector<double> wide{800, 805, 810, 800, 805, 650, 950};
  const auto si_narrow = baevsky_si(narrow);
  const auto si_wide = baevsky_si(wide);
  REQUIRE(si_narrow.has_value());
  REQUIRE(si_wide.has_value());
  CHECK(*si_wide < *si_narrow);
}

TEST_CASE("SI is order-free over the window") {
  std::vector<double> rr{820, 640, 780, 910, 745, 802, 698, 850, 776};
  const auto base = baevsky_si(rr);
  std::mt19937_64 gen(5);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(rr.begin(), rr.end(), gen);
    CHECK(baevsky_si(rr) == base);  // bit-identical
  }
}

TEST_CASE("scaling all RR by 3 scales SI by exactly 1/9 on aligned series") {
  // values within +/-8 ms of a bin center stay in one bin after scaling,
  // and 3 * (bin center) is again a bin center
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> rr;
    for (int i = 0; i < 12; ++i) {
      const int bin = 4 + static_cast<int>(gen() % 5);  // centers 525..725
      const double center = 300.0 + 50.0 * bin + 25.0;
      rr.push_back(center + oracle::uniform(gen, -8.0, 8.0));
    }
    std::vector<double> scaled;
    for (double v : rr) scaled.push_back(3.0 * v);

    const auto base = baevsky_si(rr);
    const auto tripled = baevsky_si(scaled);
    REQUIRE(base.has_value());
    REQUIRE(tripled.has_value());
    CHECK(*tripled == doctest::Approx(*base / 9.0).epsilon(1e-12));
  }
}

TEST_CASE("engine SI equals the brute-force oracle on random series") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> rr;
    const int n = 5 + static_cast<int>(gen() % 40);
    for (int i = 0; i < n; ++i) rr.push_back(oracle::uniform(gen, 350.0, 1900.0));
    const auto si = baevsky_si(rr);
    REQUIRE(si.has_value());
    CHECK(*si == doctest::Approx(oracle::baevsky(rr)).epsilon(1e-9));
  }
}

TEST_CASE("fewer than min_intervals yields no SI") {
  CHECK_FALSE(baevsky_si(std::vector<double>{800, 810, 790, 805}).has_value());
  CHECK_FALSE(baevsky_si(std::vector<double>{}).has_value());
}

TEST_CASE("normalize_si: midpoint, asymptotes, monotonicity") {
  CHECK(normalize_si(150.0, 150.0, 1.0) == doctest::Approx(0.5));
  CHECK(normalize_si(1e9, 150.0, 1.0) > 0.999);
  CHECK(normalize_si(1e-9, 150.0, 1.0) < 0.001);
  double prev = 0.0;
  for (double si = 10.0; si < 5000.0; si *= 1.7) {
    const double norm = normalize_si(si, 150.0, 1.0);
    CHECK(norm > prev);
    prev = norm;
  }
  // golden composition
  const double golden = oracle::baevsky(kGoldenRr);
  CHECK(normalize_si(golden, 150.0, 1.0) ==
        doctest::Approx(oracle::logistic(std::log(golden) - std::log(150.0)))
            .epsilon(1e-12));
}

TEST_CASE("detector recovers an 800 ms impulse train") {
  RPeakDetector detector;
  const auto peaks = detector.process(pulse_train(15000, 800.0));
  REQUIRE(peaks.size() >= 12);
  for (std::size_t i = 1; i < peaks.size(); ++i) {
    CHECK(peaks[i] - peaks[i - 1] == 800);
  }
}

TEST_CASE("detector emits nothing on flatline input") {
  RPeakDetector zero_detector;
  CHECK(zero_detector.process(std::vector<double>(10000, 0.0)).empty());
  RPeakDetector dc_detector;  // constant offset, no edges after the start
  CHECK(dc_detector.process(std::vector<double>(10000, 3.5)).empty());
}

TEST_CASE("refractory: peaks are never closer than 250 ms") {
  RPeakDetector detector;
  const auto peaks = detector.process(pulse_train(12000, 100.0, 600.0));
  REQUIRE(!peaks.empty());
  for (std::size_t i = 1; i < peaks.size(); ++i) {
    CHECK(peaks[i] - peaks[i - 1] >= 250);
  }
}

TEST_CASE("pipeline cadence: 60 s of ECG yields exactly 120 emissions") {
  EcgPipeline pipe;
  feed_pipeline(pipe, pulse_train(60000, 800.0, 800.0, 5.0, 3));
  const auto out = pipe.drain();
  REQUIRE(out.size() == 120);
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(out[i].end_tick == (i + 1) * 500);
  }
  CHECK(out.back().valid);
  CHECK(out.back().si_raw ==
        doctest::Approx(oracle::baevsky(std::vector<double>(18, 800.0))));
}

TEST_CASE("warm-up emissions impute the neutral prior") {
  EcgPipeline pipe;
  feed_pipeline(pipe, pulse_train(3000, 800.0));
  const auto out = pipe.drain();
  REQUIRE(out.size() == 6);
  for (const auto& si : out) {
    CHECK(si.imputed);
    CHECK_FALSE(si.valid);
    CHECK(si.si_norm == doctest::Approx(0.25));
  }
  CHECK(pipe.device_active());
}

TEST_CASE("flatline ECG deactivates the device after the persistence run") {
  EcgPipeline pipe;
  feed_pipeline(pipe, pulse_train(20000, 800.0, 800.0, 4.0, 9));
  CHECK(pipe.device_active());

  feed_pipeline(pipe, std::vector<double>(5999, 0.0));
  CHECK(pipe.device_active());  // 11 full flat updates so far
  feed_pipeline(pipe, std::vector<double>(1, 0.0));
  CHECK_FALSE(pipe.device_active());  // 12th flat update closes the run

  // once the trailing 15 s holds fewer than 5 intervals, values impute
  feed_pipeline(pipe, std::vector<double>(12000, 0.0));
  const auto out = pipe.drain();
  CHECK(out.back().imputed);
  CHECK_FALSE(out.back().valid);
}

TEST_CASE("RR history is limited to the trailing 15 s") {
  EcgPipeline pipe;
  feed_pipeline(pipe, pulse_train(60000, 600.0));
  // 15 s / 0.6 s ~ 25 intervals in the window
  CHECK(pipe.plausible_intervals() <= 26);
  CHECK(pipe.plausible_intervals() >= 23);
}
