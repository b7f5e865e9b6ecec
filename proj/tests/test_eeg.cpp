#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "wf/eeg/pipeline.hpp"

using namespace wf::eeg;

namespace {

wf::ingest::SampleBlock make_block(
    std::uint64_t start, std::size_t frames,
    const std::function<double(int, std::uint64_t)>& value) {
  wf::ingest::SampleBlock block;
  block.start_tick = start;
  block.channel_count = kElectrodes;
  block.frames = frames;
  block.data.resize(kElectrodes * frames);
  for (int c = 0; c < kElectrodes; ++c) {
    for (std::size_t i = 0; i < frames; ++i) {
      block.channel(c)[i] = value(c, start + i);
    }
  }
  return block;
}

void feed(EegPipeline& pipe, std::uint64_t ticks,
          const std::function<double(int, std::uint64_t)>& value,
          std::uint64_t start = 0) {
  std::uint64_t done = 0;
  std::uint64_t block_idx = start / 12;  // only affects 12/13 alternation
  while (done < ticks) {
    const std::size_t len = std::min<std::uint64_t>(
        wf::ingest::block_len(kSampleRateHz, block_idx++), ticks - done);
    pipe.consume(make_block(start + done, len, value));
    done += len;
  }
}

EegWindow window_of(const std::vector<double>& electrode) {
  EegWindow w;
  for (auto& ch : w.samples) ch = electrode;
  w.end_tick = electrode.size();
  return w;
}

}  // namespace

TEST_CASE("band power: 10 Hz sine lands almost entirely in alpha") {
  const auto sine = oracle::sine(kWindowSamples, 10.0, 250.0, 1.0);
  const double alpha = band_power(sine, 8.0, 13.0);
  const double total = oracle::total_power(sine, 250.0);
  CHECK(alpha / total >= 0.99);

  const double beta = band_power(sine, 13.0, 30.0);
  CHECK(beta / total <= 0.01);
}

TEST_CASE("band power: zero window has zero power") {
  const std::vector<double> zeros(kWindowSamples, 0.0);
  CHECK(band_power(zeros, 8.0, 13.0) == 0.0);
}

TEST_CASE("band power: 20 Hz sine leaks under 1% into alpha") {
  const auto sine = oracle::sine(kWindowSamples, 20.0, 250.0, 1.0);
  const double alpha = band_power(sine, 8.0, 13.0);
  const double total = oracle::total_power(sine, 250.0);
  CHECK(alpha / total <= 0.01);
}

TEST_CASE("band power rejects bands beyond Nyquist") {
  const std::vector<double> zeros(kWindowSamples, 0.0);
  CHECK_THROWS_AS(band_power(zeros, 8.0, 126.0), std::invalid_argument);
  CHECK_THROWS_AS(band_power(zeros, -1.0, 13.0), std::invalid_argument);
  CHECK_THROWS_AS(band_power(zeros, 13.0, 13.0), std::invalid_argument);
}

TEST_CASE("band power agrees with the independent DFT-summation oracle") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> window(kWindowSamples);
    for (auto& v : window) v = oracle::uniform(gen, -50.0, 50.0);
    const double engine = band_power(window, 8.0, 13.0);
    const double expected = oracle::band_power(window, 8.0, 13.0, 250.0);
    CHECK(engine == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("attention formula: symmetry and the 1/3 split") {
  std::array<BandPowers, kElectrodes> powers{};
  std::array<bool, kElectrodes> usable{true, true, true, true};
  for (auto& p : powers) p = {2.5, 2.5};
  auto r = attention_relaxation(powers, usable, 1000);
  REQUIRE(r.has_value());
  CHECK(r->attention == doctest::Approx(0.5));
  CHECK(r->relaxation == doctest::Approx(0.5));

  for (auto& p : powers) p = {1.0, 3.0};
  r = attention_relaxation(powers, usable, 1500);
  REQUIRE(r.has_value());
  CHECK(r->attention == doctest::Approx(0.75));
  CHECK(r->attention + r->relaxation == 1.0);  // exact complement
}

TEST_CASE("pure 10 Hz input on all electrodes relaxes the subject") {
  EegPipeline pipe;
  feed(pipe, 1000, [](int, std::uint64_t t) {
    return 40.0 * std::sin(2.0 * std::numbers::pi * 10.0 * double(t) / 250.0);
  });
  const auto emitted = pipe.drain();
  REQUIRE(emitted.size() == 1);
  CHECK(emitted[0].relaxation >= 0.95);
  CHECK(emitted[0].valid);
}

TEST_CASE("aggregation equals the sum-of-OK-electrodes formula") {
  // excluding an electrode equals aggregating only the remaining ones
  std::mt19937_64 gen(77);
  std::array<BandPowers, kElectrodes> powers{};
  for (auto& p : powers) {
    p.alpha = oracle::uniform(gen, 0.1, 5.0);
    p.beta = oracle::uniform(gen, 0.1, 5.0);
  }
  const std::array<bool, kElectrodes> excluded{true, false, true, true};
  const auto with_exclusion = attention_relaxation(powers, excluded, 0);

  std::array<BandPowers, kElectrodes> remaining{};
  remaining[0] = powers[0];
  remaining[2] = powers[2];
  remaining[3] = powers[3];
  const std::array<bool, kElectrodes> mask{true, false, true, true};
  const auto direct = attention_relaxation(remaining, mask, 0);
  REQUIRE(with_exclusion.has_value());
  REQUIRE(direct.has_value());
  CHECK(with_exclusion->attention == direct->attention);
}

TEST_CASE("imputation copies history and is idempotent") {
  AttentionRelaxation prior;
  prior.attention = 0.7;
  prior.relaxation = 0.3;
  prior.valid = true;
  prior.imputed = false;

  const auto a = impute_previous(prior, 2000);
  CHECK(a.attention == 0.7);
  CHECK(a.imputed);
  CHECK_FALSE(a.valid);

  const auto b = impute_previous(prior, 2500);
  CHECK(b.attention == a.attention);
  CHECK(b.relaxation == a.relaxation);

  const auto neutral = impute_previous(std::nullopt, 1000);
  CHECK(neutral.attention == 0.5);
  CHECK(neutral.relaxation == 0.5);
  CHECK(neutral.imputed);
}

TEST_CASE("artifact tracker: transient, dead, device deactivation, recovery") {
  ArtifactTracker tracker;  // theta 1 uV, t_dead 3

  std::vector<double> live(kWindowSamples);
  for (std::size_t i = 0; i < live.size(); ++i) {
    live[i] = 30.0 * std::sin(0.3 * double(i));
  }
  const std::vector<double> flat(kWindowSamples, 0.0);

  EegWindow normal = window_of(live);
  CHECK(tracker.update(normal).electrodes[0] == ElectrodeState::ok);

  EegWindow one_flat = window_of(live);
  one_flat.samples[2] = flat;
  auto status = tracker.update(one_flat);
  CHECK(status.electrodes[2] == ElectrodeState::transient_artifact);
  CHECK(status.electrodes[0] == ElectrodeState::ok);
  CHECK(status.device_active);

  EegWindow all_flat = window_of(flat);
  tracker.update(all_flat);
  tracker.update(all_flat);
  status = tracker.update(all_flat);
  CHECK(status.electrodes[0] == ElectrodeState::dead);
  // electrode 2 was already flat one window earlier
  CHECK(status.electrodes[2] == ElectrodeState::dead);
  CHECK_FALSE(status.device_active);

  status = tracker.update(normal);
  CHECK(status.electrodes[0] == ElectrodeState::ok);
  CHECK(status.device_active);
}

TEST_CASE("pipeline excludes flat electrodes from the aggregate") {
  auto tone = [](int, std::uint64_t t) {
    return 25.0 * std::sin(2.0 * std::numbers::pi * 21.0 * double(t) / 250.0) +
           10.0 * std::sin(2.0 * std::numbers::pi * 9.0 * double(t) / 250.0);
  };
  EegPipeline full_pipe;
  feed(full_pipe, 1000, tone);
  const auto full_out = full_pipe.drain();
  REQUIRE(full_out.size() == 1);

  // same signal but electrode 1 flat: aggregation over the remaining three
  EegPipeline degraded;
  feed(degraded, 1000, [&](int c, std::uint64_t t) {
    return c == 1 ? 0.0 : tone(c, t);
  });
  const auto degraded_out = degraded.drain();
  REQUIRE(degraded_out.size() == 1);
  CHECK(degraded.status().electrodes[1] == ElectrodeState::transient_artifact);
  // identical electrodes: ratio of sums over 3 equals ratio over 4
  CHECK(degraded_out[0].attention ==
        doctest::Approx(full_out[0].attention).epsilon(1e-12));
  CHECK(degraded_out[0].valid);
}

TEST_CASE("all-flat windows impute the previous value") {
  EegPipeline pipe;
  feed(pipe, 1000, [](int, std::uint64_t t) {
    return 20.0 * std::sin(2.0 * std::numbers::pi * 10.0 * double(t) / 250.0);
  });
  const auto first = pipe.drain();
  REQUIRE(first.size() == 1);

  feed(pipe, 2000, [](int, std::uint64_t) { return 0.0; }, 1000);
  const auto rest = pipe.drain();
  REQUIRE(rest.size() == 4);
  // the 1500-tick window still straddles live samples and stays valid
  CHECK(rest[0].valid);
  // fully flat windows copy the last valid emission, repeatedly
  for (std::size_t i = 1; i < rest.size(); ++i) {
    CHECK(rest[i].imputed);
    CHECK_FALSE(rest[i].valid);
    CHECK(rest[i].attention == rest[0].attention);
  }
}

TEST_CASE("sliding cadence: 60 s yields 29 windows on an arithmetic grid") {
  EegPipeline pipe;
  feed(pipe, 60 * kSampleRateHz,
       [](int, std::uint64_t t) { return std::sin(0.07 * double(t)); });
  const auto out = pipe.drain();
  REQUIRE(out.size() == 29);
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(out[i].end_tick == 1000 + 500 * i);
  }
}
